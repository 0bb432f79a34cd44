#pragma once

#include "bergetool/hypergraph.hpp"

namespace berge {

/// Exhaustive canonicalization limit. Full permutation search is adequate at
/// desk scale and is the documented scalability boundary of this library.
inline constexpr int kCanonVertexLimit = 10;

/// Lexicographically least relabeling of the edge multiset over all
/// permutations of 1..n, edges sorted. Constant on isomorphism classes and
/// idempotent. Throws CanonLimitExceeded when n > kCanonVertexLimit.
Hypergraph canonical_form(const Hypergraph& h);

}  // namespace berge
