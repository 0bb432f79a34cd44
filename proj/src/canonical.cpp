#include "bergetool/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "bergetool/errors.hpp"

namespace berge {

Hypergraph canonical_form(const Hypergraph& h) {
    if (h.n > kCanonVertexLimit)
        throw CanonLimitExceeded("canonicalization limit is n <= " +
                                 std::to_string(kCanonVertexLimit) + ", got n = " +
                                 std::to_string(h.n));
    std::vector<Vertex> perm(static_cast<size_t>(h.n));
    std::iota(perm.begin(), perm.end(), 1);  // perm[old-1] = new label

    std::vector<Edge> best;
    bool have_best = false;
    std::vector<Edge> relabeled(h.edges.size());
    do {
        for (size_t i = 0; i < h.edges.size(); ++i) {
            Edge e;
            e.reserve(h.edges[i].size());
            for (Vertex v : h.edges[i]) e.push_back(perm[static_cast<size_t>(v - 1)]);
            std::sort(e.begin(), e.end());
            relabeled[i] = std::move(e);
        }
        std::sort(relabeled.begin(), relabeled.end());
        if (!have_best || relabeled < best) {
            best = relabeled;
            have_best = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    Hypergraph out = h;
    if (have_best) out.edges = std::move(best);
    return out;
}

}  // namespace berge
