#pragma once

#include <string>
#include <utility>
#include <vector>

namespace berge {

using Vertex = int;      // 1-based label
using EdgeIndex = int;   // 0-based position in Hypergraph::edges
using Edge = std::vector<Vertex>;  // strictly ascending, exactly r labels

/// r-uniform multi-hypergraph over labels 1..n. Edge order is significant
/// only because certificates reference edges by position; repeated rows
/// encode multiplicity (multi mode). Isolated vertices are legal: n may
/// exceed the support of the edge list.
struct Hypergraph {
    int r = 2;
    int n = 0;
    bool simple = true;
    std::vector<Edge> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }
    const Edge& edge(EdgeIndex i) const { return edges[static_cast<size_t>(i)]; }

    bool operator==(const Hypergraph& other) const = default;
};

/// All invariant violations, empty when valid. Violations are data, not
/// failures: callers decide whether to reject.
std::vector<std::string> validate(const Hypergraph& h);
bool is_valid(const Hypergraph& h);

struct ShadowGraph {
    int n = 0;
    std::vector<std::pair<Vertex, Vertex>> pairs;  // a < b, sorted
};

/// 2-shadow: every vertex pair covered by some hyperedge. Idempotent with
/// respect to edge multiplicity.
ShadowGraph two_shadow(const Hypergraph& h);

struct IncidenceGraph {
    int vertex_count = 0;  // left part, labels 1..n
    int edge_count = 0;    // right part, edge indices 0..e-1
    std::vector<std::pair<Vertex, EdgeIndex>> adjacency;  // (v, i) iff v in edge i
};

IncidenceGraph incidence_graph(const Hypergraph& h);

/// Biconnected blocks of the simple shadow graph. Blocks are vertex sets
/// (an isolated shadow edge is its own block); vertices isolated in the
/// shadow appear in no block. Output is normalized: each block sorted,
/// blocks in lexicographic order, cut vertices ascending.
struct BlockDecomposition {
    std::vector<std::vector<Vertex>> blocks;
    std::vector<Vertex> cut_vertices;
    // cut vertex -> ascending ids of the blocks containing it
    std::vector<std::pair<Vertex, std::vector<int>>> block_tree_adjacency;
};

BlockDecomposition shadow_blocks(const Hypergraph& h);

/// Indices of edges meeting S; copies of a repeated edge count separately.
std::vector<EdgeIndex> hyperedge_neighborhood(const Hypergraph& h,
                                              const std::vector<Vertex>& s);

/// Per-vertex ascending lists of incident edge indices (index 0 unused).
std::vector<std::vector<EdgeIndex>> incidence_lists(const Hypergraph& h);

}  // namespace berge
