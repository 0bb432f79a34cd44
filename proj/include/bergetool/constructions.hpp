#pragma once

#include <string>
#include <vector>

#include "bergetool/hypergraph.hpp"

namespace berge {

/// n-vertex r-star: center {1..r-1}, edges {1..r-1, i} for i = r..n.
Hypergraph r_star(int n, int r);

/// Tree-of-blocks blueprint. Block 1 is implicit; block j >= 2 attaches to
/// an earlier block at one of its vertex slots (both 1-based). The shared
/// vertex is the parent's slot-th smallest vertex.
struct BlockTreeTemplate {
    int block_count = 1;
    std::vector<std::pair<int, int>> attachments;  // (parent, slot) for blocks 2..a

    static BlockTreeTemplate chain(int block_count, int s);
};

/// Materialize a block tree: a blocks of s vertices each, consecutive blocks
/// sharing exactly the designated cut vertex. Block edges: for s = r+1 the
/// k-1 lexicographically first r-subsets of the block; for s = r, k-1
/// parallel copies of the block (multi mode). Totals: a(s-1)+1 vertices,
/// a(k-1) edges.
Hypergraph block_tree(const BlockTreeTemplate& tmpl, int s, int r, int k);

enum class Variant { cycles, paths };

struct ExtremalQuery {
    int n = 0;
    int r = 2;
    int k = 2;
    Variant variant = Variant::cycles;
    bool multi = false;
};

/// Closed-form extremal edge count for the covered regimes:
///   cycles/simple, 4 <= k < r:   floor((n-1)/r)(k-1) + [r | n]
///   cycles/simple, k = r >= 3:   max{ floor((n-1)/r)(r-1), n-r+1 }
///   cycles/multi,  2 <= k <= r:  floor((n-1)/(r-1))(k-1)
///   paths/simple,  4 <= k <= r:  floor(n/(r+1))(k-1) + [r+1 | n+1]
///   paths/multi,   2 <= k <= r:  floor(n/r)(k-1)
/// Multi formulas presume per-edge multiplicity at most k-1 (forced for
/// cycles, assumed for paths). Throws UnsupportedRegime outside these.
long long extremal_value(const ExtremalQuery& q);

/// Short tag naming which formula regime applies; throws like extremal_value.
std::string extremal_regime(const ExtremalQuery& q);

/// Add vertex n+1 to every edge: (r+1)-uniform on n+1 vertices, same edge
/// count and order.
Hypergraph apex_extend(const Hypergraph& h);

struct Recognition {
    enum class Kind { r_star, block_tree, other };
    Kind kind = Kind::other;
    std::vector<Vertex> center;  // r_star only
    int s = 0;                   // block_tree: vertices per block
    int mu = 0;                  // block_tree: edges per block
    int block_count = 0;
};

/// Label-independent classification. A star needs a common (r-1)-set with
/// distinct private vertices; a block tree needs a connected shadow covering
/// all n vertices with uniform blocks each inducing the same edge count.
/// Star takes precedence when both shapes match. No canonicalization is
/// involved, so there is no vertex-count limit.
Recognition recognize(const Hypergraph& h);

std::string to_line(const Recognition& rec);

}  // namespace berge
