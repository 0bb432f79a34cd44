#include "bergetool/census.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "bergetool/canonical.hpp"
#include "bergetool/detectors.hpp"
#include "bergetool/errors.hpp"

namespace berge {

namespace {

std::vector<Edge> all_candidate_edges(int n, int r) {
    std::vector<Edge> out;
    if (n < r) return out;
    std::vector<int> idx(static_cast<size_t>(r));
    std::iota(idx.begin(), idx.end(), 1);
    while (true) {
        out.emplace_back(idx.begin(), idx.end());
        int i = r - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - (r - 1 - i)) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

void check_query(const ExtremalQuery& q, const SearchConfig& cfg) {
    if (q.n < 0 || q.r < 2) throw InvalidParams("census needs n >= 0, r >= 2");
    if (q.variant == Variant::cycles && q.k < 2)
        throw InvalidParams("cycle threshold must be at least 2");
    if (q.variant == Variant::paths && q.k < 1)
        throw InvalidParams("path length must be at least 1");
    if (cfg.workers < 1) throw InvalidParams("workers must be at least 1");
    if (q.multi) {
        if (cfg.multiplicity_cap < 1)
            throw InvalidParams("multiplicity cap must be at least 1");
        // k copies of one edge already close a Berge cycle of length k
        if (cfg.multiplicity_cap > q.k - 1)
            throw InvalidParams("multiplicity cap above k-1 is never free");
    }
}

// adding an edge can only create forbidden structure through that edge
bool stays_free(const Hypergraph& h, const ExtremalQuery& q, EdgeIndex added) {
    if (q.variant == Variant::cycles)
        return !find_berge_cycle_at_least_using(h, q.k, added);
    return !find_berge_path_using(h, q.k, added);
}

std::optional<long long> formula_value(const ExtremalQuery& q,
                                       const SearchConfig& cfg) {
    if (q.multi && cfg.multiplicity_cap != q.k - 1) return std::nullopt;
    try {
        return extremal_value(q);
    } catch (const UnsupportedRegime&) {
        return std::nullopt;
    } catch (const InvalidParams&) {
        return std::nullopt;
    }
}

struct SearchSpace {
    ExtremalQuery q;
    std::vector<Edge> candidates;
    int cap = 1;        // copies allowed per candidate
    int max_edges = 0;  // 0 = unbounded

    int ncand() const { return static_cast<int>(candidates.size()); }
};

// One DFS node per free edge set reached, extending lexicographically.
struct Walker {
    const SearchSpace& sp;
    long long budget;  // <0 = unlimited
    long long explored = 0;
    bool exhausted_budget = false;
    Hypergraph current;
    std::function<void(const Hypergraph&)> on_node;

    Walker(const SearchSpace& sp_, long long budget_)
        : sp(sp_), budget(budget_) {
        current.r = sp.q.r;
        current.n = sp.q.n;
        current.simple = !sp.q.multi;
    }

    void dfs(int last, int last_count) {
        if (budget >= 0 && explored >= budget) {
            exhausted_budget = true;
            return;
        }
        ++explored;
        on_node(current);
        if (sp.max_edges > 0 && current.edge_count() >= sp.max_edges) return;
        for (int next = std::max(last, 0); next < sp.ncand(); ++next) {
            if (next == last && last_count >= sp.cap) continue;
            current.edges.push_back(sp.candidates[static_cast<size_t>(next)]);
            if (stays_free(current, sp.q, current.edge_count() - 1))
                dfs(next, next == last ? last_count + 1 : 1);
            current.edges.pop_back();
            if (exhausted_budget) return;
        }
    }

    // resume from a seed (used by parallel work items)
    void run_from(const std::vector<int>& seed) {
        current.edges.clear();
        int last = -1, last_count = 0;
        for (int c : seed) {
            current.edges.push_back(sp.candidates[static_cast<size_t>(c)]);
            last_count = (c == last) ? last_count + 1 : 1;
            last = c;
        }
        dfs(last, last_count);
    }
};

struct ItemResult {
    int value = -1;
    std::optional<Hypergraph> witness;  // canonical
    long long explored = 0;
    bool exhaustive = true;
};

// merge by (max value, then lexicographically least canonical witness)
void merge_into(ItemResult& acc, const ItemResult& part) {
    acc.explored += part.explored;
    acc.exhaustive = acc.exhaustive && part.exhaustive;
    if (part.value > acc.value) {
        acc.value = part.value;
        acc.witness = part.witness;
    } else if (part.value == acc.value && part.witness) {
        if (!acc.witness || part.witness->edges < acc.witness->edges)
            acc.witness = part.witness;
    }
}

// Tracks the best value inside one work item; canonicalizes its pool of
// maximum-value raw edge sets only once, at the end.
struct ItemCollector {
    int value = -1;
    std::vector<std::vector<Edge>> pool;

    void see(const Hypergraph& h) {
        int e = h.edge_count();
        if (e > value) {
            value = e;
            pool.clear();
            pool.push_back(h.edges);
        } else if (e == value) {
            pool.push_back(h.edges);
        }
    }

    ItemResult finish(const SearchSpace& sp, long long explored, bool exhaustive) {
        ItemResult res;
        res.value = value;
        res.explored = explored;
        res.exhaustive = exhaustive;
        Hypergraph g;
        g.r = sp.q.r;
        g.n = sp.q.n;
        g.simple = !sp.q.multi;
        std::optional<Hypergraph> best;
        for (auto& edges : pool) {
            g.edges = edges;
            Hypergraph canon = g.n <= kCanonVertexLimit ? canonical_form(g) : g;
            if (!best || canon.edges < best->edges) best = std::move(canon);
        }
        res.witness = best;
        return res;
    }
};

std::vector<std::vector<int>> depth_two_seeds(const SearchSpace& sp) {
    std::vector<std::vector<int>> seeds;
    Hypergraph g;
    g.r = sp.q.r;
    g.n = sp.q.n;
    g.simple = !sp.q.multi;
    for (int a = 0; a < sp.ncand(); ++a) {
        g.edges.assign(1, sp.candidates[static_cast<size_t>(a)]);
        if (!stays_free(g, sp.q, 0)) continue;
        for (int b = a; b < sp.ncand(); ++b) {
            if (b == a && sp.cap < 2) continue;
            g.edges.resize(1);
            g.edges.push_back(sp.candidates[static_cast<size_t>(b)]);
            if (stays_free(g, sp.q, 1)) seeds.push_back({a, b});
        }
    }
    return seeds;
}

SearchSpace make_space(const ExtremalQuery& q, const SearchConfig& cfg) {
    SearchSpace sp;
    sp.q = q;
    sp.candidates = all_candidate_edges(q.n, q.r);
    sp.cap = q.multi ? cfg.multiplicity_cap : 1;
    sp.max_edges = cfg.max_edges;
    return sp;
}

}  // namespace

long long capped_multi_bound(int n, int r, int k, int m) {
    long long best = 0;
    for (long long a = 0; a * r < n; ++a)
        for (long long b = 0; a * r + b * (r - 1) < n; ++b)
            best = std::max(best, a * (k - 1) + b * m);
    return best;
}

CensusResult turan_census(const ExtremalQuery& q, const SearchConfig& cfg) {
    check_query(q, cfg);
    SearchSpace sp = make_space(q, cfg);

    CensusResult result;
    result.query = q;
    result.formula = formula_value(q, cfg);

    // depth 0 and 1 are handled inline; subtrees rooted at depth 2 become
    // independent work items with a fixed per-item budget
    ItemCollector shallow;
    Hypergraph g;
    g.r = q.r;
    g.n = q.n;
    g.simple = !q.multi;
    shallow.see(g);
    long long shallow_nodes = 1;
    std::vector<std::vector<int>> seeds;
    if (sp.max_edges == 0 || sp.max_edges >= 2) seeds = depth_two_seeds(sp);
    for (int a = 0; a < sp.ncand(); ++a) {
        g.edges.assign(1, sp.candidates[static_cast<size_t>(a)]);
        if (stays_free(g, q, 0)) {
            shallow.see(g);
            ++shallow_nodes;
        }
    }
    ItemResult accum = shallow.finish(sp, shallow_nodes, true);

    long long per_item_budget = -1;
    if (cfg.max_nodes > 0 && !seeds.empty())
        per_item_budget =
            std::max<long long>(1, cfg.max_nodes / static_cast<long long>(seeds.size()));

    std::mutex merge_mutex;
    std::atomic<size_t> next_seed{0};
    auto work = [&]() {
        while (true) {
            size_t idx = next_seed.fetch_add(1);
            if (idx >= seeds.size()) break;
            Walker walker(sp, per_item_budget);
            ItemCollector collector;
            walker.on_node = [&](const Hypergraph& node) { collector.see(node); };
            walker.run_from(seeds[idx]);
            ItemResult part =
                collector.finish(sp, walker.explored, !walker.exhausted_budget);
            std::lock_guard<std::mutex> lock(merge_mutex);
            merge_into(accum, part);
        }
    };

    if (cfg.workers <= 1 || seeds.size() <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        int nthreads = std::min<int>(cfg.workers, static_cast<int>(seeds.size()));
        pool.reserve(static_cast<size_t>(nthreads));
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    result.value = accum.value;
    result.explored = accum.explored;
    result.exhaustive = accum.exhaustive;
    if (accum.witness) result.witness_graph = *accum.witness;
    return result;
}

void for_each_free(const ExtremalQuery& q, const SearchConfig& cfg,
                   const std::function<void(const Hypergraph&)>& visit) {
    check_query(q, cfg);
    SearchSpace sp = make_space(q, cfg);
    Walker walker(sp, cfg.max_nodes > 0 ? cfg.max_nodes : -1);
    walker.on_node = visit;
    walker.run_from({});
    if (walker.exhausted_budget) throw Error("node budget exhausted during sweep");
}

std::vector<Hypergraph> enumerate_extremal(const ExtremalQuery& q,
                                           const SearchConfig& cfg) {
    check_query(q, cfg);
    if (q.n > kCanonVertexLimit)
        throw CanonLimitExceeded("enumeration requires n <= " +
                                 std::to_string(kCanonVertexLimit));
    long long target = extremal_value(q);
    SearchConfig bounded = cfg;
    bounded.max_edges = static_cast<int>(target);
    std::set<std::vector<Edge>> classes;
    for_each_free(q, bounded, [&](const Hypergraph& node) {
        if (node.edge_count() == static_cast<int>(target))
            classes.insert(canonical_form(node).edges);
    });
    std::vector<Hypergraph> out;
    for (const auto& edges : classes) {
        Hypergraph g;
        g.r = q.r;
        g.n = q.n;
        g.simple = !q.multi;
        g.edges = edges;
        out.push_back(std::move(g));
    }
    return out;
}

namespace {

// exact longest cycle in a labeled simple graph, exhaustive DFS anchored at
// the cycle's minimum vertex
int graph_longest_cycle(int n, const std::vector<std::vector<int>>& adj) {
    int best = 0;
    std::vector<char> used(static_cast<size_t>(n + 1), 0);
    std::vector<int> path;
    int anchor = 0;
    std::function<void(int)> dfs = [&](int cur) {
        for (int w : adj[static_cast<size_t>(cur)]) {
            if (w == anchor && static_cast<int>(path.size()) >= 3)
                best = std::max(best, static_cast<int>(path.size()));
            if (w <= anchor || used[static_cast<size_t>(w)]) continue;
            used[static_cast<size_t>(w)] = 1;
            path.push_back(w);
            dfs(w);
            path.pop_back();
            used[static_cast<size_t>(w)] = 0;
        }
    };
    for (anchor = 1; anchor <= n; ++anchor) {
        used.assign(used.size(), 0);
        used[static_cast<size_t>(anchor)] = 1;
        path.assign(1, anchor);
        dfs(anchor);
    }
    return best;
}

}  // namespace

JacksonResult jackson_check(const BipartiteGraph& g, int r) {
    if (r < 2) throw InvalidParams("r must be at least 2");
    for (const auto& nb : g.b_neighbors)
        for (int a : nb)
            if (a < 1 || a > g.a_count)
                throw NotBipartite("neighborhood label " + std::to_string(a) +
                                   " leaves the A side");
    JacksonResult res;
    long long threshold =
        static_cast<long long>((g.a_count - 1) / (r - 1)) * (r - 1);
    bool degrees_ok = true;
    for (const auto& nb : g.b_neighbors) {
        std::set<int> uniq(nb.begin(), nb.end());
        if (static_cast<int>(uniq.size()) < r) degrees_ok = false;
    }
    if (!degrees_ok || g.b_count() <= threshold) {
        res.verdict = JacksonResult::Verdict::premise_fails;
        return res;
    }
    int n = g.a_count + g.b_count();
    std::vector<std::vector<int>> adj(static_cast<size_t>(n + 1));
    for (int b = 0; b < g.b_count(); ++b) {
        int bv = g.a_count + 1 + b;
        for (int a : g.b_neighbors[static_cast<size_t>(b)]) {
            adj[static_cast<size_t>(a)].push_back(bv);
            adj[static_cast<size_t>(bv)].push_back(a);
        }
    }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    int longest = graph_longest_cycle(n, adj);
    if (longest >= 2 * r) {
        res.verdict = JacksonResult::Verdict::cycle_found;
        res.cycle_length = longest;
    } else {
        res.verdict = JacksonResult::Verdict::counterexample;
        res.cycle_length = longest;
    }
    return res;
}

JacksonResult jackson_check_edges(const std::vector<std::pair<int, int>>& edges,
                                  const std::vector<int>& part_a,
                                  const std::vector<int>& part_b, int r) {
    std::set<int> aset(part_a.begin(), part_a.end());
    std::set<int> bset(part_b.begin(), part_b.end());
    for (int v : part_a)
        if (bset.count(v)) throw NotBipartite("parts overlap");
    std::map<int, int> a_index, b_index;
    int ai = 0;
    for (int v : part_a) a_index[v] = ++ai;
    int bi = -1;
    for (int v : part_b) b_index[v] = ++bi;
    BipartiteGraph g;
    g.a_count = static_cast<int>(part_a.size());
    g.b_neighbors.resize(part_b.size());
    for (auto [u, v] : edges) {
        int a = 0, b = -1;
        if (aset.count(u) && bset.count(v)) {
            a = a_index[u];
            b = b_index[v];
        } else if (aset.count(v) && bset.count(u)) {
            a = a_index[v];
            b = b_index[u];
        } else {
            throw NotBipartite("edge does not cross the bipartition");
        }
        g.b_neighbors[static_cast<size_t>(b)].push_back(a);
    }
    return jackson_check(g, r);
}

}  // namespace berge
