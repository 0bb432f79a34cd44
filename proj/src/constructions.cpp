#include "bergetool/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "bergetool/errors.hpp"

namespace berge {

Hypergraph r_star(int n, int r) {
    if (r < 2) throw InvalidParams("r must be at least 2");
    if (n < r) throw InvalidParams("r-star needs n >= r");
    Hypergraph h;
    h.r = r;
    h.n = n;
    h.simple = true;
    Edge center(static_cast<size_t>(r - 1));
    std::iota(center.begin(), center.end(), 1);
    for (Vertex i = r; i <= n; ++i) {
        Edge e = center;
        e.push_back(i);
        h.edges.push_back(std::move(e));
    }
    return h;
}

BlockTreeTemplate BlockTreeTemplate::chain(int block_count, int s) {
    BlockTreeTemplate t;
    t.block_count = block_count;
    for (int j = 2; j <= block_count; ++j) t.attachments.emplace_back(j - 1, s);
    return t;
}

namespace {

// k-1 lexicographically smallest r-subsets of an ascending (r+1)-set: drop
// the largest element first, then the next largest, and so on.
std::vector<Edge> lex_first_subsets(const std::vector<Vertex>& block, int r,
                                    int count) {
    std::vector<Edge> out;
    int s = static_cast<int>(block.size());
    for (int c = 0; c < count; ++c) {
        Edge e;
        int skip = s - 1 - c;
        for (int j = 0; j < s; ++j)
            if (j != skip) e.push_back(block[static_cast<size_t>(j)]);
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

Hypergraph block_tree(const BlockTreeTemplate& tmpl, int s, int r, int k) {
    if (r < 2) throw InvalidParams("r must be at least 2");
    if (s != r && s != r + 1) throw InvalidParams("block size must be r or r+1");
    if (tmpl.block_count < 1) throw InvalidParams("need at least one block");
    if (static_cast<int>(tmpl.attachments.size()) != tmpl.block_count - 1)
        throw InvalidParams("template needs one attachment per block after the first");
    if (s == r + 1) {
        // one distinct r-subset per edge; a single edge cannot span s vertices
        if (k < 3) throw InvalidParams("blocks of r+1 vertices need k >= 3");
        if (k - 1 > r + 1)
            throw InvalidParams("at most r+1 distinct r-subsets are available");
    } else {
        if (k < 2) throw InvalidParams("k must be at least 2");
    }

    Hypergraph h;
    h.r = r;
    h.simple = (s == r + 1);

    std::vector<std::vector<Vertex>> blocks;
    int next_label = 1;
    for (int j = 1; j <= tmpl.block_count; ++j) {
        std::vector<Vertex> block;
        if (j == 1) {
            for (int c = 0; c < s; ++c) block.push_back(next_label++);
        } else {
            auto [parent, slot] = tmpl.attachments[static_cast<size_t>(j - 2)];
            if (parent < 1 || parent >= j)
                throw InvalidParams("attachment parent must be an earlier block");
            if (slot < 1 || slot > s)
                throw InvalidParams("attachment slot out of range");
            block.push_back(blocks[static_cast<size_t>(parent - 1)]
                                  [static_cast<size_t>(slot - 1)]);
            for (int c = 1; c < s; ++c) block.push_back(next_label++);
            std::sort(block.begin(), block.end());
        }
        if (s == r + 1) {
            for (Edge& e : lex_first_subsets(block, r, k - 1))
                h.edges.push_back(std::move(e));
        } else {
            for (int c = 0; c < k - 1; ++c) h.edges.push_back(block);
        }
        blocks.push_back(std::move(block));
    }
    h.n = next_label - 1;
    return h;
}

namespace {

long long floor_div(long long a, long long b) { return a / b; }

bool positive_multiple(long long n, long long r) { return n > 0 && n % r == 0; }

struct Regime {
    long long value;
    const char* tag;
};

Regime evaluate(const ExtremalQuery& q) {
    if (q.n < 1 || q.r < 2 || q.k < 2)
        throw InvalidParams("extremal query needs n >= 1, r >= 2, k >= 2");
    long long n = q.n, r = q.r, k = q.k;
    if (q.variant == Variant::cycles && !q.multi) {
        if (k >= 4 && k < r)
            return {floor_div(n - 1, r) * (k - 1) + (positive_multiple(n, r) ? 1 : 0),
                    "cycles-k-below-r"};
        if (k == r && r >= 3)
            return {std::max(floor_div(n - 1, r) * (r - 1), n - r + 1),
                    "cycles-k-equals-r"};
    } else if (q.variant == Variant::cycles && q.multi) {
        if (k >= 2 && k <= r)
            return {floor_div(n - 1, r - 1) * (k - 1), "cycles-multi"};
    } else if (q.variant == Variant::paths && !q.multi) {
        if (k >= 4 && k <= r)
            return {floor_div(n, r + 1) * (k - 1) +
                        (positive_multiple(n + 1, r + 1) ? 1 : 0),
                    "paths-simple"};
    } else if (q.variant == Variant::paths && q.multi) {
        if (k >= 2 && k <= r)
            return {floor_div(n, r) * (k - 1), "paths-multi"};
    }
    std::ostringstream msg;
    msg << "no covered formula for n=" << q.n << " r=" << q.r << " k=" << q.k
        << " variant=" << (q.variant == Variant::cycles ? "cycles" : "paths")
        << (q.multi ? " multi" : " simple");
    throw UnsupportedRegime(msg.str());
}

}  // namespace

long long extremal_value(const ExtremalQuery& q) { return evaluate(q).value; }

std::string extremal_regime(const ExtremalQuery& q) { return evaluate(q).tag; }

Hypergraph apex_extend(const Hypergraph& h) {
    Hypergraph out;
    out.r = h.r + 1;
    out.n = h.n + 1;
    out.simple = h.simple;
    for (const Edge& e : h.edges) {
        Edge widened = e;
        widened.push_back(h.n + 1);
        out.edges.push_back(std::move(widened));
    }
    return out;
}

namespace {

bool covers_all_vertices(const Hypergraph& h) {
    std::vector<char> seen(static_cast<size_t>(h.n + 1), 0);
    for (const Edge& e : h.edges)
        for (Vertex v : e) seen[static_cast<size_t>(v)] = 1;
    for (Vertex v = 1; v <= h.n; ++v)
        if (!seen[static_cast<size_t>(v)]) return false;
    return true;
}

bool shadow_connected(const Hypergraph& h) {
    if (h.n <= 1) return true;
    std::vector<std::vector<Vertex>> adj(static_cast<size_t>(h.n + 1));
    for (auto [a, b] : two_shadow(h).pairs) {
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }
    std::vector<char> seen(static_cast<size_t>(h.n + 1), 0);
    std::vector<Vertex> stack = {1};
    seen[1] = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : adj[static_cast<size_t>(v)])
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                stack.push_back(w);
            }
    }
    for (Vertex v = 1; v <= h.n; ++v)
        if (!seen[static_cast<size_t>(v)]) return false;
    return true;
}

std::optional<std::vector<Vertex>> star_center(const Hypergraph& h) {
    if (h.edges.empty()) return std::nullopt;
    std::vector<Vertex> common = h.edges[0];
    for (const Edge& e : h.edges) {
        std::vector<Vertex> next;
        std::set_intersection(common.begin(), common.end(), e.begin(), e.end(),
                              std::back_inserter(next));
        common = std::move(next);
    }
    if (static_cast<int>(common.size()) < h.r - 1) return std::nullopt;
    // a full-edge intersection only happens when e(H) = 1; take the least center
    std::vector<Vertex> center(common.begin(), common.begin() + (h.r - 1));
    std::set<Vertex> privates;
    for (const Edge& e : h.edges) {
        std::vector<Vertex> rest;
        std::set_difference(e.begin(), e.end(), center.begin(), center.end(),
                            std::back_inserter(rest));
        if (rest.size() != 1) return std::nullopt;
        if (!privates.insert(rest[0]).second) return std::nullopt;  // repeated edge
    }
    return center;
}

}  // namespace

Recognition recognize(const Hypergraph& h) {
    Recognition rec;
    if (h.edges.empty() || !covers_all_vertices(h)) return rec;

    if (auto center = star_center(h)) {
        rec.kind = Recognition::Kind::r_star;
        rec.center = *center;
        return rec;
    }

    if (!shadow_connected(h)) return rec;
    BlockDecomposition dec = shadow_blocks(h);
    if (dec.blocks.empty()) return rec;
    size_t s = dec.blocks[0].size();
    // blocks of a tree of uniform blocks span r or r+1 vertices each
    if (s != static_cast<size_t>(h.r) && s != static_cast<size_t>(h.r) + 1)
        return rec;
    for (const auto& b : dec.blocks)
        if (b.size() != s) return rec;
    // each hyperedge is a shadow clique, so it lies inside exactly one block
    std::vector<int> induced(dec.blocks.size(), 0);
    int assigned = 0;
    for (const Edge& e : h.edges) {
        for (size_t i = 0; i < dec.blocks.size(); ++i) {
            if (std::includes(dec.blocks[i].begin(), dec.blocks[i].end(), e.begin(),
                              e.end())) {
                ++induced[i];
                ++assigned;
                break;
            }
        }
    }
    if (assigned != h.edge_count()) return rec;
    int mu = induced[0];
    for (int c : induced)
        if (c != mu) return rec;
    if (mu < 1) return rec;

    rec.kind = Recognition::Kind::block_tree;
    rec.s = static_cast<int>(s);
    rec.mu = mu;
    rec.block_count = static_cast<int>(dec.blocks.size());
    return rec;
}

std::string to_line(const Recognition& rec) {
    std::ostringstream out;
    switch (rec.kind) {
        case Recognition::Kind::r_star: {
            out << "kind=r-star center={";
            for (size_t i = 0; i < rec.center.size(); ++i) {
                if (i) out << ',';
                out << rec.center[i];
            }
            out << '}';
            break;
        }
        case Recognition::Kind::block_tree:
            out << "kind=block-tree s=" << rec.s << " mu=" << rec.mu
                << " blocks=" << rec.block_count;
            break;
        case Recognition::Kind::other:
            out << "kind=other";
            break;
    }
    return out.str();
}

}  // namespace berge
