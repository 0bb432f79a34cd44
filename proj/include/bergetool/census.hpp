#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bergetool/constructions.hpp"
#include "bergetool/hypergraph.hpp"

namespace berge {

struct SearchConfig {
    long long max_nodes = 0;   // 0 = unlimited; split evenly across work items
    int workers = 1;
    int multiplicity_cap = 1;  // multi mode; must be <= k-1
    int max_edges = 0;         // 0 = unlimited; cap the search depth
};

struct CensusResult {
    ExtremalQuery query;
    int value = 0;
    Hypergraph witness_graph;  // canonical form, lexicographically least
    long long explored = 0;    // free sets visited
    bool exhaustive = true;    // false once any work item exhausts its budget
    // closed-form value when the query is in a covered regime
    std::optional<long long> formula;
};

/// Depth-first search over edge sets of the complete r-graph on n labeled
/// vertices (with repetition up to multiplicity_cap in multi mode). Branches
/// extend only with edges >= the last added edge, and a branch is cut as soon
/// as the new edge completes a forbidden configuration (a Berge cycle of
/// length >= k, or a Berge path of length exactly k in the paths variant;
/// forbidding length k excludes all longer paths). Work items are split at
/// fixed depth 2 and merged by (max value, then lexicographically least
/// canonical witness) - an associative, commutative merge, so value and
/// witness are schedule-independent. When max_edges is set to c and the
/// result is v < c, v certifies the extremal value (freeness is closed under
/// edge removal); v = c only certifies a lower bound.
CensusResult turan_census(const ExtremalQuery& q, const SearchConfig& cfg);

/// All F-free graphs with exactly extremal_value(q) edges, deduplicated by
/// canonical form. Requires n <= the canonicalization limit.
std::vector<Hypergraph> enumerate_extremal(const ExtremalQuery& q,
                                           const SearchConfig& cfg);

/// Sequential visit of every F-free graph in the search space (the workers
/// field is ignored here).
void for_each_free(const ExtremalQuery& q, const SearchConfig& cfg,
                   const std::function<void(const Hypergraph&)>& visit);

/// Upper bound max{a(k-1) + b*m : a*r + b*(r-1) < n} over a, b >= 0, valid
/// for multiplicity-capped graphs in the k < r cycles regime.
long long capped_multi_bound(int n, int r, int k, int m);

/// Bipartite graph given as neighborhoods of the B part over A = {1..a_count}.
struct BipartiteGraph {
    int a_count = 0;
    std::vector<std::vector<int>> b_neighbors;
    int b_count() const { return static_cast<int>(b_neighbors.size()); }
};

struct JacksonResult {
    enum class Verdict { premise_fails, cycle_found, counterexample };
    Verdict verdict = Verdict::premise_fails;
    int cycle_length = 0;
};

/// Checks the long-cycle guarantee for bipartite graphs: when every B-vertex
/// has degree >= r and |B| > floor((|A|-1)/(r-1))(r-1), an exact search must
/// find a cycle of length >= 2r. A counterexample verdict is a fatal
/// inconsistency. Throws NotBipartite when a neighborhood label leaves A.
JacksonResult jackson_check(const BipartiteGraph& g, int r);

/// Edge-list entry point; validates that every edge crosses the bipartition
/// (NotBipartite otherwise) before delegating.
JacksonResult jackson_check_edges(const std::vector<std::pair<int, int>>& edges,
                                  const std::vector<int>& part_a,
                                  const std::vector<int>& part_b, int r);

}  // namespace berge
