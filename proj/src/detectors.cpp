#include "bergetool/detectors.hpp"

#include <algorithm>
#include <functional>

#include "bergetool/errors.hpp"

namespace berge {

namespace {

bool edge_has(const Edge& e, Vertex v) {
    return std::binary_search(e.begin(), e.end(), v);
}

// Cycle search anchored at v0 = minimum vertex of the cycle. Extends from the
// vertex endpoint, edges in index order, vertices in label order; closes as
// soon as the threshold is met.
struct CycleSearch {
    const Hypergraph& h;
    int k;
    std::vector<std::vector<EdgeIndex>> inc;
    std::vector<char> used_v, used_e;
    std::vector<Vertex> seq_v;
    std::vector<EdgeIndex> seq_e;
    Vertex v0 = 0;
    std::optional<BergeCycle> found;

    CycleSearch(const Hypergraph& h_, int k_)
        : h(h_), k(k_), inc(incidence_lists(h_)),
          used_v(static_cast<size_t>(h_.n + 1), 0),
          used_e(h_.edges.size(), 0) {}

    bool dfs(Vertex cur) {
        for (EdgeIndex ei : inc[static_cast<size_t>(cur)]) {
            if (used_e[static_cast<size_t>(ei)]) continue;
            const Edge& e = h.edge(ei);
            if (static_cast<int>(seq_e.size()) + 1 >= k && !seq_e.empty() &&
                edge_has(e, v0)) {
                BergeCycle c;
                c.vertices = seq_v;
                c.edge_indices = seq_e;
                c.edge_indices.push_back(ei);
                found = std::move(c);
                return true;
            }
            used_e[static_cast<size_t>(ei)] = 1;
            for (Vertex w : e) {
                if (w <= v0 || used_v[static_cast<size_t>(w)]) continue;
                used_v[static_cast<size_t>(w)] = 1;
                seq_v.push_back(w);
                seq_e.push_back(ei);
                if (dfs(w)) return true;
                seq_e.pop_back();
                seq_v.pop_back();
                used_v[static_cast<size_t>(w)] = 0;
            }
            used_e[static_cast<size_t>(ei)] = 0;
        }
        return false;
    }

    std::optional<BergeCycle> run() {
        for (v0 = 1; v0 <= h.n; ++v0) {
            used_v[static_cast<size_t>(v0)] = 1;
            seq_v.assign(1, v0);
            seq_e.clear();
            if (dfs(v0)) return found;
            used_v[static_cast<size_t>(v0)] = 0;
        }
        return std::nullopt;
    }

    // Cycle pinned to use `use` as its first edge.
    std::optional<BergeCycle> run_using(EdgeIndex use) {
        const Edge& first = h.edge(use);
        for (Vertex a : first) {
            for (Vertex b : first) {
                if (b == a) continue;
                v0 = a;
                used_v.assign(used_v.size(), 0);
                used_e.assign(used_e.size(), 0);
                used_v[static_cast<size_t>(a)] = 1;
                used_v[static_cast<size_t>(b)] = 1;
                used_e[static_cast<size_t>(use)] = 1;
                seq_v = {a, b};
                seq_e = {use};
                if (dfs_any(b)) return found;
            }
        }
        return std::nullopt;
    }

    // As dfs() but without the min-vertex anchor (v0 is fixed by the caller).
    bool dfs_any(Vertex cur) {
        for (EdgeIndex ei : inc[static_cast<size_t>(cur)]) {
            if (used_e[static_cast<size_t>(ei)]) continue;
            const Edge& e = h.edge(ei);
            if (static_cast<int>(seq_e.size()) + 1 >= k && edge_has(e, v0)) {
                BergeCycle c;
                c.vertices = seq_v;
                c.edge_indices = seq_e;
                c.edge_indices.push_back(ei);
                found = std::move(c);
                return true;
            }
            used_e[static_cast<size_t>(ei)] = 1;
            for (Vertex w : e) {
                if (w == v0 || used_v[static_cast<size_t>(w)]) continue;
                used_v[static_cast<size_t>(w)] = 1;
                seq_v.push_back(w);
                seq_e.push_back(ei);
                if (dfs_any(w)) return true;
                seq_e.pop_back();
                seq_v.pop_back();
                used_v[static_cast<size_t>(w)] = 0;
            }
            used_e[static_cast<size_t>(ei)] = 0;
        }
        return false;
    }
};

struct PathSearch {
    const Hypergraph& h;
    int k;
    std::optional<Vertex> target;
    EdgeIndex must_use = -1;
    std::vector<std::vector<EdgeIndex>> inc;
    std::vector<char> used_v, used_e;
    std::vector<Vertex> seq_v;
    std::vector<EdgeIndex> seq_e;
    std::optional<BergePath> found;

    PathSearch(const Hypergraph& h_, int k_)
        : h(h_), k(k_), inc(incidence_lists(h_)),
          used_v(static_cast<size_t>(h_.n + 1), 0),
          used_e(h_.edges.size(), 0) {}

    bool dfs(Vertex cur) {
        if (static_cast<int>(seq_e.size()) == k) {
            if (target && cur != *target) return false;
            if (must_use >= 0 && !used_e[static_cast<size_t>(must_use)]) return false;
            BergePath p;
            p.vertices = seq_v;
            p.edge_indices = seq_e;
            found = std::move(p);
            return true;
        }
        for (EdgeIndex ei : inc[static_cast<size_t>(cur)]) {
            if (used_e[static_cast<size_t>(ei)]) continue;
            used_e[static_cast<size_t>(ei)] = 1;
            for (Vertex w : h.edge(ei)) {
                if (used_v[static_cast<size_t>(w)]) continue;
                used_v[static_cast<size_t>(w)] = 1;
                seq_v.push_back(w);
                seq_e.push_back(ei);
                if (dfs(w)) return true;
                seq_e.pop_back();
                seq_v.pop_back();
                used_v[static_cast<size_t>(w)] = 0;
            }
            used_e[static_cast<size_t>(ei)] = 0;
        }
        return false;
    }

    std::optional<BergePath> run(std::optional<Vertex> start) {
        Vertex lo = start ? *start : 1;
        Vertex hi = start ? *start : h.n;
        for (Vertex v = lo; v <= hi; ++v) {
            used_v.assign(used_v.size(), 0);
            used_e.assign(used_e.size(), 0);
            used_v[static_cast<size_t>(v)] = 1;
            seq_v.assign(1, v);
            seq_e.clear();
            if (dfs(v)) return found;
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<BergePath> find_berge_path(
    const Hypergraph& h, int k,
    std::optional<std::pair<Vertex, Vertex>> endpoints) {
    if (k < 1) throw InvalidParams("path length threshold must be at least 1");
    PathSearch search(h, k);
    std::optional<Vertex> start;
    if (endpoints) {
        start = endpoints->first;
        search.target = endpoints->second;
    }
    return search.run(start);
}

std::optional<BergePath> find_berge_path_using(const Hypergraph& h, int k,
                                               EdgeIndex use) {
    if (k < 1) throw InvalidParams("path length threshold must be at least 1");
    PathSearch search(h, k);
    search.must_use = use;
    return search.run(std::nullopt);
}

std::optional<BergeCycle> find_berge_cycle_at_least(const Hypergraph& h, int k) {
    if (k < 2) throw InvalidParams("cycle length threshold must be at least 2");
    CycleSearch search(h, k);
    return search.run();
}

std::optional<BergeCycle> find_berge_cycle_at_least_using(const Hypergraph& h,
                                                          int k, EdgeIndex use) {
    if (k < 2) throw InvalidParams("cycle length threshold must be at least 2");
    CycleSearch search(h, k);
    return search.run_using(use);
}

LongestCycleResult longest_berge_cycle(const Hypergraph& h) {
    int upper = std::min(h.edge_count(), h.n);
    for (int k = upper; k >= 2; --k) {
        // no cycle of length >= k+1 exists once we get here, so any hit has
        // length exactly k
        if (auto c = find_berge_cycle_at_least(h, k)) return {k, std::move(c)};
    }
    return {};
}

SemiPath maximum_semi_path(const Hypergraph& h, int k) {
    if (h.edge_count() == 0)
        throw EmptyHypergraph("semi-paths need at least one hyperedge");
    if (k < 2) throw InvalidParams("k must be at least 2");

    auto inc = incidence_lists(h);
    std::vector<char> used_v(static_cast<size_t>(h.n + 1), 0);
    std::vector<char> used_e(h.edges.size(), 0);
    std::vector<EdgeIndex> seq_e;
    std::vector<Vertex> seq_v;

    SemiPath best;
    int best_tail = 0;  // |e1 \ U| of best
    bool have_best = false;

    auto tail_size = [&](const std::vector<EdgeIndex>& es,
                         const std::vector<Vertex>& vs) {
        int ell = std::min<int>(k - 1, static_cast<int>(es.size()));
        const Edge& e1 = h.edge(es[0]);
        int in_u = 0;
        for (int j = 0; j < ell; ++j)
            if (edge_has(e1, vs[static_cast<size_t>(j)])) ++in_u;
        return static_cast<int>(e1.size()) - in_u;
    };

    auto consider = [&]() {
        int t = static_cast<int>(seq_e.size());
        int tail = tail_size(seq_e, seq_v);
        if (have_best) {
            int bt = best.length();
            if (t < bt) return;
            if (t == bt) {
                if (tail > best_tail) return;
                if (tail == best_tail) {
                    if (seq_e > best.edge_indices) return;
                    if (seq_e == best.edge_indices && seq_v >= best.vertices) return;
                }
            }
        }
        best.edge_indices = seq_e;
        best.vertices = seq_v;
        best_tail = tail;
        have_best = true;
    };

    std::function<void(Vertex)> dfs = [&](Vertex cur) {
        consider();
        for (EdgeIndex ei : inc[static_cast<size_t>(cur)]) {
            if (used_e[static_cast<size_t>(ei)]) continue;
            const Edge& e = h.edge(ei);
            used_e[static_cast<size_t>(ei)] = 1;
            for (Vertex w : e) {
                if (used_v[static_cast<size_t>(w)]) continue;
                used_v[static_cast<size_t>(w)] = 1;
                seq_e.push_back(ei);
                seq_v.push_back(w);
                dfs(w);
                seq_v.pop_back();
                seq_e.pop_back();
                used_v[static_cast<size_t>(w)] = 0;
            }
            used_e[static_cast<size_t>(ei)] = 0;
        }
    };

    for (EdgeIndex e1 = 0; e1 < h.edge_count(); ++e1) {
        used_e[static_cast<size_t>(e1)] = 1;
        for (Vertex v1 : h.edge(e1)) {
            used_v[static_cast<size_t>(v1)] = 1;
            seq_e.assign(1, e1);
            seq_v.assign(1, v1);
            dfs(v1);
            used_v[static_cast<size_t>(v1)] = 0;
        }
        used_e[static_cast<size_t>(e1)] = 0;
    }
    return best;
}

}  // namespace berge
