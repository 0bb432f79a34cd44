#pragma once

#include <optional>
#include <utility>

#include "bergetool/certificates.hpp"
#include "bergetool/hypergraph.hpp"

namespace berge {

/// Exact exponential backtracking with visited-vertex and used-edge pruning.
/// Branch order is fixed (edges by index, vertices by label), so returned
/// certificates are deterministic and absence is a proof at desk scale.

/// Berge path of length exactly k; when endpoints are given they are pinned
/// as v0 and vt.
std::optional<BergePath> find_berge_path(
    const Hypergraph& h, int k,
    std::optional<std::pair<Vertex, Vertex>> endpoints = std::nullopt);

/// Berge cycle of length >= k (k >= 2). k = 2 means two distinct hyperedges
/// sharing two vertices; parallel copies qualify.
std::optional<BergeCycle> find_berge_cycle_at_least(const Hypergraph& h, int k);

/// Constrained variants used for incremental checks: the certificate must
/// use the given edge position.
std::optional<BergeCycle> find_berge_cycle_at_least_using(const Hypergraph& h,
                                                          int k, EdgeIndex use);
std::optional<BergePath> find_berge_path_using(const Hypergraph& h, int k,
                                               EdgeIndex use);

struct LongestCycleResult {
    int length = 0;  // 0 when Berge-acyclic
    std::optional<BergeCycle> cycle;
};

LongestCycleResult longest_berge_cycle(const Hypergraph& h);

/// Maximum-length semi-path; among maxima one minimizing |e1 \ U| where U is
/// the first min(k-1, t) vertices; remaining ties broken lexicographically
/// (edge index sequence, then vertex sequence). Throws EmptyHypergraph when
/// e(h) = 0.
SemiPath maximum_semi_path(const Hypergraph& h, int k);

}  // namespace berge
