#include "bergetool/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace berge {

std::vector<std::string> validate(const Hypergraph& h) {
    std::vector<std::string> out;
    if (h.r < 2) out.push_back("uniformity r must be at least 2");
    if (h.n < 0) out.push_back("vertex count must be nonnegative");
    for (size_t i = 0; i < h.edges.size(); ++i) {
        const Edge& e = h.edges[i];
        const std::string where = "edge " + std::to_string(i + 1);
        if (static_cast<int>(e.size()) != h.r) {
            out.push_back(where + ": expected " + std::to_string(h.r) +
                          " labels, got " + std::to_string(e.size()));
            continue;
        }
        bool ordered = true;
        for (size_t j = 1; j < e.size(); ++j)
            if (e[j] <= e[j - 1]) ordered = false;
        if (!ordered) {
            out.push_back(where + ": labels not strictly ascending");
            continue;
        }
        if (e.front() < 1 || e.back() > h.n)
            out.push_back(where + ": label out of range 1.." + std::to_string(h.n));
    }
    if (h.simple) {
        std::map<Edge, size_t> seen;
        for (size_t i = 0; i < h.edges.size(); ++i) {
            auto [it, fresh] = seen.emplace(h.edges[i], i);
            if (!fresh)
                out.push_back("edge " + std::to_string(i + 1) +
                              ": duplicate of edge " + std::to_string(it->second + 1) +
                              " under simple flag");
        }
    }
    return out;
}

bool is_valid(const Hypergraph& h) { return validate(h).empty(); }

ShadowGraph two_shadow(const Hypergraph& h) {
    std::set<std::pair<Vertex, Vertex>> pairs;
    for (const Edge& e : h.edges)
        for (size_t a = 0; a < e.size(); ++a)
            for (size_t b = a + 1; b < e.size(); ++b)
                pairs.emplace(e[a], e[b]);
    ShadowGraph g;
    g.n = h.n;
    g.pairs.assign(pairs.begin(), pairs.end());
    return g;
}

IncidenceGraph incidence_graph(const Hypergraph& h) {
    IncidenceGraph g;
    g.vertex_count = h.n;
    g.edge_count = h.edge_count();
    for (EdgeIndex i = 0; i < h.edge_count(); ++i)
        for (Vertex v : h.edge(i)) g.adjacency.emplace_back(v, i);
    return g;
}

namespace {

// Tarjan biconnected components on the simple shadow graph. Edge stack
// yields one component per block; a bridge becomes a two-vertex block.
struct BlockFinder {
    int n;
    const std::vector<std::vector<Vertex>>& adj;
    std::vector<int> depth, low;
    std::vector<std::pair<Vertex, Vertex>> stack;
    std::vector<std::set<Vertex>> blocks;
    std::set<Vertex> cuts;

    BlockFinder(int n_, const std::vector<std::vector<Vertex>>& adj_)
        : n(n_), adj(adj_), depth(n_ + 1, -1), low(n_ + 1, 0) {}

    void pop_block(const std::pair<Vertex, Vertex>& until) {
        std::set<Vertex> block;
        while (true) {
            auto e = stack.back();
            stack.pop_back();
            block.insert(e.first);
            block.insert(e.second);
            if (e == until) break;
        }
        blocks.push_back(std::move(block));
    }

    void dfs(Vertex u, Vertex parent, int d) {
        depth[u] = low[u] = d;
        int children = 0;
        for (Vertex w : adj[u]) {
            if (w == parent) {
                parent = 0;  // skip the tree edge once; parallel pairs cannot occur
                continue;
            }
            if (depth[w] == -1) {
                ++children;
                stack.push_back({u, w});
                dfs(w, u, d + 1);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= depth[u]) {
                    if (depth[u] > 0 || children > 1) cuts.insert(u);
                    pop_block({u, w});
                }
            } else if (depth[w] < depth[u]) {
                stack.push_back({u, w});
                low[u] = std::min(low[u], depth[w]);
            }
        }
    }

    void run() {
        for (Vertex v = 1; v <= n; ++v)
            if (depth[v] == -1 && !adj[v].empty()) dfs(v, 0, 0);
    }
};

}  // namespace

BlockDecomposition shadow_blocks(const Hypergraph& h) {
    ShadowGraph shadow = two_shadow(h);
    std::vector<std::vector<Vertex>> adj(h.n + 1);
    for (auto [a, b] : shadow.pairs) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());

    BlockFinder finder(h.n, adj);
    finder.run();

    BlockDecomposition dec;
    for (auto& b : finder.blocks)
        dec.blocks.emplace_back(b.begin(), b.end());
    std::sort(dec.blocks.begin(), dec.blocks.end());
    dec.cut_vertices.assign(finder.cuts.begin(), finder.cuts.end());
    for (Vertex c : dec.cut_vertices) {
        std::vector<int> ids;
        for (size_t i = 0; i < dec.blocks.size(); ++i)
            if (std::binary_search(dec.blocks[i].begin(), dec.blocks[i].end(), c))
                ids.push_back(static_cast<int>(i));
        dec.block_tree_adjacency.emplace_back(c, std::move(ids));
    }
    return dec;
}

std::vector<EdgeIndex> hyperedge_neighborhood(const Hypergraph& h,
                                              const std::vector<Vertex>& s) {
    std::vector<char> in_s(h.n + 1, 0);
    for (Vertex v : s)
        if (v >= 1 && v <= h.n) in_s[v] = 1;
    std::vector<EdgeIndex> out;
    for (EdgeIndex i = 0; i < h.edge_count(); ++i)
        for (Vertex v : h.edge(i))
            if (in_s[v]) {
                out.push_back(i);
                break;
            }
    return out;
}

std::vector<std::vector<EdgeIndex>> incidence_lists(const Hypergraph& h) {
    std::vector<std::vector<EdgeIndex>> inc(h.n + 1);
    for (EdgeIndex i = 0; i < h.edge_count(); ++i)
        for (Vertex v : h.edge(i)) inc[v].push_back(i);
    return inc;
}

}  // namespace berge
