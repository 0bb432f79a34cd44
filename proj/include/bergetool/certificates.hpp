#pragma once

#include <string>
#include <vector>

#include "bergetool/hypergraph.hpp"

namespace berge {

/// Alternating sequence v0, e_{i1}, v1, ..., e_{it}, vt: distinct vertices,
/// distinct edge positions, v_{j-1} and v_j both in edge i_j. Length t.
struct BergePath {
    std::vector<Vertex> vertices;        // t+1 entries
    std::vector<EdgeIndex> edge_indices; // t entries
    int length() const { return static_cast<int>(edge_indices.size()); }
};

/// Cyclic alternating sequence v0, e_{i1}, v1, ..., v_{t-1}, e_{it} closing
/// back at v0; indices mod t. Length t >= 2.
struct BergeCycle {
    std::vector<Vertex> vertices;        // t entries
    std::vector<EdgeIndex> edge_indices; // t entries
    int length() const { return static_cast<int>(edge_indices.size()); }
};

/// Alternating sequence starting with a hyperedge and ending in a vertex:
/// e_{i1}, v1, ..., e_{it}, vt with v1 in e_{i1} and v_{j-1}, v_j in e_{ij}.
struct SemiPath {
    std::vector<EdgeIndex> edge_indices; // t entries
    std::vector<Vertex> vertices;        // t entries
    int length() const { return static_cast<int>(edge_indices.size()); }
};

/// Pure re-check of the alternating-sequence conditions against h.
/// Throws IndexOutOfRange when a certificate references an edge index
/// beyond e(h); any other defect just yields false.
bool verify_certificate(const Hypergraph& h, const BergePath& p);
bool verify_certificate(const Hypergraph& h, const BergeCycle& c);
bool verify_certificate(const Hypergraph& h, const SemiPath& s);

// One-line serializations; edge indices are emitted 1-based.
//   path t: v0 (i1) v1 ... (it) vt
//   cycle t: v0 (i1) v1 ... (it)
//   semipath t: (i1) v1 ... (it) vt
std::string to_line(const BergePath& p);
std::string to_line(const BergeCycle& c);
std::string to_line(const SemiPath& s);

/// Reversing a Berge path yields a Berge path.
BergePath reversed(const BergePath& p);

}  // namespace berge
