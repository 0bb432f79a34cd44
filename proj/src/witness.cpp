#include "bergetool/witness.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "bergetool/detectors.hpp"
#include "bergetool/errors.hpp"

namespace berge {

namespace {

using VSet = std::vector<Vertex>;  // sorted, unique

VSet to_set(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool vs_contains(const VSet& a, Vertex v) {
    return std::binary_search(a.begin(), a.end(), v);
}

VSet vs_union(const VSet& a, const VSet& b) {
    VSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VSet vs_inter(const VSet& a, const VSet& b) {
    VSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

VSet vs_diff(const VSet& a, const VSet& b) {
    VSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
    return out;
}

bool vs_disjoint(const VSet& a, const VSet& b) { return vs_inter(a, b).empty(); }

std::string braces(const std::vector<int>& xs, int offset = 0) {
    std::ostringstream out;
    out << '{';
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ',';
        out << xs[i] + offset;
    }
    out << '}';
    return out.str();
}

// Internal signal: the guided construction hit a state the structural
// argument rules out. Converted into the exhaustive fallback by the caller.
struct Diverge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Guided construction. Works on a maximum semi-path P with the |e1 \ U|
// tie-break; every vertex admitted into a candidate set is justified by a
// materialized rearrangement of P (re-verified) plus a direct check of its
// hyperedge neighborhood against the defining edges F.
// ---------------------------------------------------------------------------
struct Guide {
    const Hypergraph& h;
    int k, m, r;
    std::vector<std::string>& trace;

    SemiPath P;
    int t = 0, ell = 0, d = 1;
    std::vector<EdgeIndex> Fseq;  // first ell edge positions of P, path order
    std::vector<Vertex> Useq;     // first ell vertices of P, path order
    std::set<EdgeIndex> Fset;
    VSet Uset;

    Guide(const Hypergraph& h_, int k_, int m_, std::vector<std::string>& trace_)
        : h(h_), k(k_), m(m_), r(h_.r), trace(trace_) {}

    [[noreturn]] void diverge(const std::string& why) const { throw Diverge(why); }

    void note(const std::string& line) { trace.push_back("lemma: " + line); }

    EdgeIndex edge_at(const SemiPath& base, int pos) const {
        return base.edge_indices[static_cast<size_t>(pos - 1)];
    }
    Vertex vert_at(const SemiPath& base, int pos) const {
        return base.vertices[static_cast<size_t>(pos - 1)];
    }
    const Edge& eset(int pos) const { return h.edge(edge_at(P, pos)); }
    VSet tail(int pos) const {  // e_pos \ U
        return vs_diff(eset(pos), Uset);
    }

    bool nh_within_F(Vertex v) const {
        for (EdgeIndex i : hyperedge_neighborhood(h, {v}))
            if (!Fset.count(i)) return false;
        return true;
    }

    // -- rotation builders (pure list surgery; certify_* validates) ---------

    // f_i, w_{i-1}, ..., f_2, w_1, f_1, w_i, f_{i+1}, w_{i+1}, ..., f_T, w_T
    SemiPath rot_start_at(const SemiPath& base, int i) const {
        SemiPath out;
        for (int p = i; p >= 2; --p) {
            out.edge_indices.push_back(edge_at(base, p));
            out.vertices.push_back(vert_at(base, p - 1));
        }
        out.edge_indices.push_back(edge_at(base, 1));
        out.vertices.push_back(vert_at(base, i));
        for (int p = i + 1; p <= base.length(); ++p) {
            out.edge_indices.push_back(edge_at(base, p));
            out.vertices.push_back(vert_at(base, p));
        }
        return out;
    }

    // slot-c vertex replaced by z (used inside the parallel-copy prefix)
    SemiPath rot_exchange(const SemiPath& base, int c, Vertex z) const {
        SemiPath out = base;
        out.vertices[static_cast<size_t>(c - 1)] = z;
        return out;
    }

    // f_{j-1}, w_{j-2}, ..., f_2, w_1, f_1, x, f_j, w_j, ..., f_T, w_T
    // (x lies in f_1 and f_j and off the path); drops w_{j-1}
    SemiPath rot_reentry(const SemiPath& base, int j, Vertex x) const {
        SemiPath out;
        for (int p = j - 1; p >= 2; --p) {
            out.edge_indices.push_back(edge_at(base, p));
            out.vertices.push_back(vert_at(base, p - 1));
        }
        out.edge_indices.push_back(edge_at(base, 1));
        out.vertices.push_back(x);
        for (int p = j; p <= base.length(); ++p) {
            out.edge_indices.push_back(edge_at(base, p));
            out.vertices.push_back(vert_at(base, p));
        }
        return out;
    }

    // descent f_{a-1}..f_{b+1}, re-entry through f_1, climb to f_b, jump via u
    // into f_a, then the untouched tail; drops w_{a-1}
    SemiPath rot_p1(const SemiPath& base, int a, int b, Vertex u) const {
        SemiPath out;
        for (int p = a - 1; p >= b + 1; --p) {
            out.edge_indices.push_back(edge_at(base, p));
            out.vertices.push_back(vert_at(base, p - 1));
        }
        for (int p = 1; p <= b; ++p) {
            out.edge_indices.push_back(edge_at(base, p));
            out.vertices.push_back(p == b ? u : vert_at(base, p));
        }
        for (int p = a; p <= base.length(); ++p) {
            out.edge_indices.push_back(edge_at(base, p));
            out.vertices.push_back(vert_at(base, p));
        }
        return out;
    }

    // ascent f_{b+1}..f_{a-1}, jump via u from f_a back down through
    // f_b..f_1, exiting at w_a into the tail; drops w_b
    SemiPath rot_p2(const SemiPath& base, int a, int b, Vertex u) const {
        SemiPath out;
        for (int p = b + 1; p <= a - 1; ++p) {
            out.edge_indices.push_back(edge_at(base, p));
            out.vertices.push_back(vert_at(base, p));
        }
        out.edge_indices.push_back(edge_at(base, a));
        out.vertices.push_back(u);
        for (int p = b; p >= 1; --p) {
            out.edge_indices.push_back(edge_at(base, p));
            out.vertices.push_back(p == 1 ? vert_at(base, a) : vert_at(base, p - 1));
        }
        for (int p = a + 1; p <= base.length(); ++p) {
            out.edge_indices.push_back(edge_at(base, p));
            out.vertices.push_back(vert_at(base, p));
        }
        return out;
    }

    // adjacent crossing pair (a = b+1): descent to f_2, then f_1 holding w_b,
    // f_b jumping via u into f_{b+1}; drops w_{b-1}
    SemiPath rot_adjacent(const SemiPath& base, int b, Vertex u) const {
        SemiPath out;
        for (int p = b - 1; p >= 2; --p) {
            out.edge_indices.push_back(edge_at(base, p));
            out.vertices.push_back(vert_at(base, p - 1));
        }
        out.edge_indices.push_back(edge_at(base, 1));
        out.vertices.push_back(vert_at(base, b));
        out.edge_indices.push_back(edge_at(base, b));
        out.vertices.push_back(u);
        for (int p = b + 1; p <= base.length(); ++p) {
            out.edge_indices.push_back(edge_at(base, p));
            out.vertices.push_back(vert_at(base, p));
        }
        return out;
    }

    // star case with a parallel-copy prefix: w0 takes the first slot, the
    // defining vertices shift down once, v_{ell-1} is dropped
    SemiPath rot_copy_shift(Vertex w0) const {
        SemiPath out;
        out.edge_indices.push_back(edge_at(P, 1));
        out.vertices.push_back(w0);
        for (int p = 2; p <= ell; ++p) {
            out.edge_indices.push_back(edge_at(P, p));
            out.vertices.push_back(p == ell ? vert_at(P, ell) : vert_at(P, p - 1));
        }
        for (int p = ell + 1; p <= t; ++p) {
            out.edge_indices.push_back(edge_at(P, p));
            out.vertices.push_back(vert_at(P, p));
        }
        return out;
    }

    // -- certification -------------------------------------------------------

    void certify_shape(const SemiPath& rot, const std::string& name) const {
        if (!verify_certificate(h, rot))
            throw Diverge(name + ": rearranged semi-path is not valid");
        if (rot.length() != t)
            throw Diverge(name + ": rearranged semi-path lost maximality");
        std::set<EdgeIndex> first(rot.edge_indices.begin(),
                                  rot.edge_indices.begin() + ell);
        if (first != Fset)
            throw Diverge(name + ": rearrangement changed the defining edges");
    }

    // rotation exposing `dropped` as a non-path vertex of its first edge
    void certify_drop(const SemiPath& rot, Vertex dropped, const std::string& name) {
        certify_shape(rot, name);
        const Edge& first = h.edge(rot.edge_indices[0]);
        if (!std::binary_search(first.begin(), first.end(), dropped))
            throw Diverge(name + ": dropped vertex left the first edge");
        for (Vertex v : rot.vertices)
            if (v == dropped)
                throw Diverge(name + ": vertex was not actually dropped");
        if (!nh_within_F(dropped))
            throw Diverge(name + ": neighborhood of v=" + std::to_string(dropped) +
                          " escapes the defining edges");
        note(name + ": v=" + std::to_string(dropped) + " confined to F");
    }

    // rotation putting an edge first so its whole tail is confined
    void certify_tail(const SemiPath& rot, const VSet& tp, const std::string& name) {
        certify_shape(rot, name);
        const Edge& first = h.edge(rot.edge_indices[0]);
        for (Vertex w : tp) {
            if (!std::binary_search(first.begin(), first.end(), w))
                throw Diverge(name + ": tail vertex left the first edge");
            if (!nh_within_F(w))
                throw Diverge(name + ": neighborhood of v=" + std::to_string(w) +
                              " escapes the defining edges");
        }
        note(name + ": tail of first edge confined to F");
    }

    std::vector<EdgeIndex> neighborhood(const VSet& s) const {
        return hyperedge_neighborhood(h, s);
    }

    Witness make_case_i(const VSet& s) const {
        Witness w;
        w.tag = Witness::Case::I;
        w.set = s;
        w.incident = neighborhood(s);
        return w;
    }

    Witness make_case_ii(const VSet& s) {
        Witness w;
        w.tag = Witness::Case::II;
        w.set = s;
        w.incident = neighborhood(s);
        if (static_cast<int>(w.incident.size()) > k - 1)
            diverge("case ii set meets more than k-1 edges");
        return w;
    }

    // -- main flow -----------------------------------------------------------

    Witness run() {
        if (h.edge_count() == 0) {
            note("edgeless graph, any r-1 vertices meet no edge");
            VSet s(static_cast<size_t>(r - 1));
            std::iota(s.begin(), s.end(), 1);
            return make_case_i(s);
        }

        P = maximum_semi_path(h, k);
        t = P.length();
        ell = std::min(k - 1, t);
        Fseq.assign(P.edge_indices.begin(), P.edge_indices.begin() + ell);
        Useq.assign(P.vertices.begin(), P.vertices.begin() + ell);
        Fset.clear();
        Fset.insert(Fseq.begin(), Fseq.end());
        Uset = to_set(Useq);

        d = 1;
        while (d < t && h.edge(edge_at(P, d + 1)) == eset(1)) ++d;
        if (d > ell) diverge("parallel-copy prefix exceeds the defining window");

        {
            std::ostringstream line;
            line << "maximum semi-path t=" << t << " l=" << ell << " d=" << d
                 << " F=" << braces(Fseq, 1) << " U=" << braces(Useq);
            note(line.str());
        }

        // positions of defining vertices lying in e_1
        std::vector<int> ipos;
        for (int p = 1; p <= ell; ++p)
            if (vs_contains(VSet(eset(1)), vert_at(P, p))) ipos.push_back(p);
        for (int c = 0; c < std::min<int>(d, static_cast<int>(ipos.size())); ++c)
            if (ipos[static_cast<size_t>(c)] != c + 1)
                diverge("copy prefix vertices missing from e_1");
        if (static_cast<int>(ipos.size()) < d)
            diverge("copy prefix vertices missing from e_1");

        if (static_cast<int>(ipos.size()) == d) return copy_prefix_case();
        return accumulate_case(ipos);
    }

    // e_1 meets U only in its own copies: either the copies are the whole
    // neighborhood of e_1 \ {v_d}, or a defining edge past the prefix meets
    // it and a size-r set emerges.
    Witness copy_prefix_case() {
        note("e_1 meets U only in the copy prefix");
        Vertex vd = vert_at(P, d);
        VSet tail1 = tail(1);
        if (tail1.empty()) diverge("first edge has empty tail");
        Vertex z0 = tail1[0];
        VSet S = vs_diff(VSet(eset(1)), VSet{vd});

        for (Vertex z : S) {
            if (vs_contains(tail1, z)) {
                if (!nh_within_F(z))
                    diverge("tail vertex of e_1 escapes the defining edges");
            } else {
                int c = 0;
                for (int p = 1; p < d; ++p)
                    if (vert_at(P, p) == z) c = p;
                if (c == 0) diverge("defining vertex of e_1 outside the copy prefix");
                certify_drop(rot_exchange(P, c, z0), z, "copy-exchange");
            }
        }
        note("first-edge-tail: N(e_1 minus v_d) confined to F");

        if (m >= k - 1) return make_case_i(S);

        for (int j = d + 1; j <= ell; ++j) {
            for (Vertex w : S) {
                if (!vs_contains(VSet(eset(j)), w)) continue;
                SemiPath base = P;
                if (!vs_contains(tail1, w)) {
                    int c = 0;
                    for (int p = 1; p < d; ++p)
                        if (vert_at(P, p) == w) c = p;
                    base = rot_exchange(P, c, z0);
                }
                certify_drop(rot_reentry(base, j, w), vert_at(P, j - 1),
                             "copy-prefix-reentry");
                return make_case_ii(vs_union(S, VSet{vert_at(P, j - 1)}));
            }
        }

        // every incident edge is one of the d parallel copies
        Witness w = make_case_i(S);
        if (static_cast<int>(w.incident.size()) != d)
            diverge("copy-prefix neighborhood is not exactly the copies");
        for (EdgeIndex i : w.incident)
            if (h.edge(i) != eset(1)) diverge("stray edge in copy-prefix neighborhood");
        return w;
    }

    // Grow the confined set A from e_1's tail, one defining edge at a time.
    Witness accumulate_case(const std::vector<int>& ipos) {
        int s = static_cast<int>(ipos.size()) - 1;
        VSet A = tail(1);
        for (Vertex w : A)
            if (!nh_within_F(w)) diverge("tail vertex of e_1 escapes the defining edges");
        note("first-edge-tail: A starts as e_1 minus U, confined to F");

        std::vector<char> intersecting(static_cast<size_t>(s + 1), 0);
        for (int c = 1; c <= s; ++c) {
            int p = ipos[static_cast<size_t>(c)];
            VSet tp = tail(p);
            if (vs_disjoint(tp, A)) {
                certify_tail(rot_start_at(P, p), tp, "rotated-start");
                A = vs_union(A, tp);
            } else {
                intersecting[static_cast<size_t>(c)] = 1;
                int q = -1;
                Vertex u = 0;
                for (int cc = 0; cc < c && q < 0; ++cc) {
                    VSet inter = vs_inter(tail(ipos[static_cast<size_t>(cc)]), tp);
                    if (!inter.empty()) {
                        q = cc;
                        u = inter[0];
                    }
                }
                if (q < 0) diverge("intersecting step without a crossing partner");
                certify_drop(rot_p1(P, p, ipos[static_cast<size_t>(q)], u),
                             vert_at(P, p - 1), "crossing-pair");
                A = vs_union(A, vs_union(tp, VSet{vert_at(P, p - 1)}));
            }
        }
        note("accumulated A=" + braces(A) + " confined to F");

        if (m >= k - 1) {
            if (static_cast<int>(A.size()) < r - 1) diverge("A smaller than r-1");
            return make_case_i(VSet(A.begin(), A.begin() + (r - 1)));
        }
        if (static_cast<int>(A.size()) >= r)
            return make_case_ii(VSet(A.begin(), A.begin() + r));
        if (static_cast<int>(A.size()) != r - 1) diverge("A smaller than r-1");

        int jp = -1;
        for (int c = std::max(d, 1); c <= s; ++c)
            if (intersecting[static_cast<size_t>(c)]) {
                jp = c;
                break;
            }
        if (jp >= 0) return crossing_case(ipos, jp, A);
        return star_case(A);
    }

    Witness crossing_case(const std::vector<int>& ipos, int jp, const VSet& A) {
        int pj = ipos[static_cast<size_t>(jp)];
        VSet tpj = tail(pj);

        std::vector<int> partners;
        for (int q = d - 1; q < jp; ++q)
            if (!vs_disjoint(tail(ipos[static_cast<size_t>(q)]), tpj))
                partners.push_back(q);
        if (partners.empty()) diverge("first crossing step has no partner");

        for (int q : partners) {
            int pq = ipos[static_cast<size_t>(q)];
            if (pq < pj - 1) {
                Vertex u = vs_inter(tail(pq), tpj)[0];
                Vertex target = vert_at(P, pq);
                certify_drop(rot_p2(P, pj, pq, u), target, "crossing-pair-low");
                if (vs_contains(A, target)) diverge("crossing-pair vertex already in A");
                return make_case_ii(vs_union(A, VSet{target}));
            }
        }

        int q = partners[0];
        int pq = ipos[static_cast<size_t>(q)];
        if (pq != pj - 1) diverge("crossing partner neither low nor adjacent");
        Vertex u = vs_inter(tail(pq), tpj)[0];
        if (pq > d) {
            Vertex target = vert_at(P, pq - 1);
            certify_drop(rot_adjacent(P, pq, u), target, "adjacent-pair");
            if (vs_contains(A, target)) diverge("adjacent-pair vertex already in A");
            return make_case_ii(vs_union(A, VSet{target}));
        }
        return shared_tail_case(ipos, A);
    }

    // e_{d+1} shares the whole tail of e_1; a second accumulation ranging over
    // e_1's defining vertices plus one vertex private to e_{d+1} reaches size r.
    Witness shared_tail_case(const std::vector<int>& ipos, const VSet& /*A*/) {
        note("shared-tail: e_{d+1} repeats the tail of e_1");
        if (tail(d + 1) != tail(1)) diverge("shared-tail structure violated");
        VSet xs = vs_diff(vs_inter(VSet(eset(d + 1)), Uset), VSet(eset(1)));
        if (xs.empty()) diverge("no defining vertex private to e_{d+1}");
        Vertex vx = xs[0];
        int x = 0;
        for (int p = 1; p <= ell; ++p)
            if (vert_at(P, p) == vx) x = p;
        if (x < d + 2) diverge("private defining vertex inside the copy prefix");

        SemiPath Pt = rot_start_at(P, d + 1);
        certify_shape(Pt, "first-copy-swap");
        note("first-copy-swap: e_{d+1} moved to the front");

        std::vector<int> J = ipos;
        J.push_back(x);
        std::sort(J.begin(), J.end());

        VSet B = tail(1);
        for (size_t ci = 1; ci < J.size(); ++ci) {
            int p = J[ci];
            VSet tp = tail(p);
            if (vs_disjoint(tp, B)) {
                if (p == x)
                    certify_tail(rot_start_at(Pt, x), tp, "rotated-start-swapped");
                else
                    certify_tail(rot_start_at(P, p), tp, "rotated-start");
                B = vs_union(B, tp);
            } else {
                int pp = -1;
                Vertex u = 0;
                for (size_t cc = 0; cc < ci && pp < 0; ++cc) {
                    VSet inter = vs_inter(tail(J[cc]), tp);
                    if (!inter.empty()) {
                        pp = J[cc];
                        u = inter[0];
                    }
                }
                if (pp < 0) diverge("second accumulation lost its partner");
                Vertex target = vert_at(P, p - 1);
                if (pp == x)
                    certify_drop(rot_p1(Pt, p, x, u), target, "crossing-pair-swapped");
                else
                    certify_drop(rot_p1(P, p, pp, u), target, "crossing-pair");
                B = vs_union(B, vs_union(tp, VSet{target}));
            }
        }
        note("accumulated B=" + braces(B) + " confined to F");
        if (static_cast<int>(B.size()) < r) diverge("second accumulation stalled below r");
        return make_case_ii(VSet(B.begin(), B.begin() + r));
    }

    // Every defining edge is U plus one private vertex: either a size-r set
    // still emerges, or the defining edges extend to an r-star split off by
    // the edge at position r.
    Witness star_case(const VSet& A) {
        if (k != r) diverge("disjoint tails outside the k = r regime");
        if (ell != r - 1 || static_cast<int>(Uset.size()) != r - 1)
            diverge("defining window is not r-1 distinct vertices");

        std::vector<Vertex> priv(static_cast<size_t>(ell + 1), 0);
        for (int p = 1; p <= ell; ++p) {
            VSet tp = tail(p);
            if (tp.size() != 1 || !std::includes(eset(p).begin(), eset(p).end(),
                                                 Uset.begin(), Uset.end()))
                diverge("defining edge is not U plus one vertex");
            priv[static_cast<size_t>(p)] = tp[0];
        }
        for (int p = 2; p <= d; ++p)
            if (priv[static_cast<size_t>(p)] != priv[1]) diverge("copy prefix disagrees");
        for (int p = d; p <= ell; ++p)
            for (int pp = p + 1; pp <= ell; ++pp)
                if (priv[static_cast<size_t>(p)] == priv[static_cast<size_t>(pp)])
                    diverge("private vertices collide");
        note("star-structure: every defining edge is U plus one private vertex");

        if (d > 1) {
            Vertex target = vert_at(P, ell - 1);
            certify_drop(rot_copy_shift(priv[1]), target, "copy-shift");
            if (vs_contains(A, target)) diverge("copy-shift vertex already in A");
            return make_case_ii(vs_union(A, VSet{target}));
        }

        Vertex vlast = vert_at(P, ell);
        if (t == ell) {
            if (!nh_within_F(vlast))
                diverge("path end escapes the defining edges despite maximality");
            note("path-end: t = l so N(v_l) stays in F by maximality");
            if (vs_contains(A, vlast)) diverge("path end already in A");
            return make_case_ii(vs_union(A, VSet{vlast}));
        }

        EdgeIndex er = edge_at(P, r);
        VSet u_minus = vs_diff(Uset, VSet{vlast});
        std::vector<EdgeIndex> star;
        for (EdgeIndex i : hyperedge_neighborhood(h, u_minus))
            if (i != er) star.push_back(i);

        for (EdgeIndex i : star) {
            VSet tph = vs_diff(VSet(h.edge(i)), Uset);
            if (static_cast<int>(tph.size()) < 2) continue;
            note("wide-branch-edge: an incident edge leaves U twice");
            VSet S;
            for (int p = 1; p <= ell - 1; ++p) {
                Vertex up = priv[static_cast<size_t>(p)];
                auto nb = hyperedge_neighborhood(h, {up});
                if (nb.size() != 1 || nb[0] != edge_at(P, p))
                    diverge("defining private vertex is not degree one");
                S = vs_union(S, VSet{up});
            }
            for (Vertex w : tph) {
                auto nb = hyperedge_neighborhood(h, {w});
                if (nb.size() != 1 || nb[0] != i)
                    diverge("branch tail vertex meets a second edge");
            }
            S = vs_union(S, VSet{tph[0], tph[1]});
            if (static_cast<int>(S.size()) != r) diverge("wide-branch set is not size r");
            return make_case_ii(S);
        }

        // all incident edges are U plus a private vertex: an r-star
        Witness w;
        w.tag = Witness::Case::III;
        w.removed_edge = er;
        w.center = Uset;
        w.shared = vlast;
        VSet privates;
        for (EdgeIndex i : star) {
            VSet tph = vs_diff(VSet(h.edge(i)), Uset);
            if (tph.size() != 1) diverge("star edge tail is not a single vertex");
            if (vs_contains(privates, tph[0])) diverge("star private vertices collide");
            privates = vs_union(privates, tph);
            w.star_edges.push_back(i);
        }
        if (static_cast<int>(w.star_edges.size()) < r - 1)
            diverge("star has fewer than r-1 edges");
        std::sort(w.star_edges.begin(), w.star_edges.end());
        VSet vstar = vs_union(Uset, privates);
        VSet all(static_cast<size_t>(h.n));
        std::iota(all.begin(), all.end(), 1);
        w.k_vertices = vs_union(VSet{vlast}, vs_diff(all, vstar));
        note("star-decomposition: removing the edge at position r splits off an r-star");
        return w;
    }
};

// ---------------------------------------------------------------------------
// Exhaustive fallback: scan candidate sets outright. Only reached when the
// guided construction diverges, which the acceptance suite treats as a bug.
// ---------------------------------------------------------------------------

bool next_subset(std::vector<int>& idx, int n) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[static_cast<size_t>(i)] < n - (k - i)) {
            ++idx[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

std::optional<Witness> exhaustive_small_set(const Hypergraph& h, int k, int m,
                                            int size) {
    if (h.n < size) return std::nullopt;
    std::vector<int> idx(static_cast<size_t>(size));
    std::iota(idx.begin(), idx.end(), 0);
    do {
        VSet s;
        for (int i : idx) s.push_back(i + 1);
        auto nb = hyperedge_neighborhood(h, s);
        if (size == h.r - 1) {
            if (static_cast<int>(nb.size()) > m) continue;
            if (m < k - 1) {
                bool copies = true;
                for (EdgeIndex i : nb)
                    if (h.edge(i) != h.edge(nb[0]) ||
                        !std::includes(h.edge(i).begin(), h.edge(i).end(), s.begin(),
                                       s.end()))
                        copies = false;
                if (!copies) continue;
            }
            Witness w;
            w.tag = Witness::Case::I;
            w.set = s;
            w.incident = nb;
            return w;
        }
        if (static_cast<int>(nb.size()) <= k - 1) {
            Witness w;
            w.tag = Witness::Case::II;
            w.set = s;
            w.incident = nb;
            return w;
        }
    } while (next_subset(idx, h.n));
    return std::nullopt;
}

std::optional<Witness> exhaustive_star_split(const Hypergraph& h, int k, int m) {
    if (k != h.r || m >= k - 1) return std::nullopt;
    int r = h.r;
    for (EdgeIndex removed = 0; removed < h.edge_count(); ++removed) {
        std::vector<int> idx(static_cast<size_t>(r - 1));
        std::iota(idx.begin(), idx.end(), 0);
        do {
            VSet center;
            for (int i : idx) center.push_back(i + 1);
            std::vector<EdgeIndex> star;
            VSet privates;
            bool ok = true;
            for (EdgeIndex i = 0; i < h.edge_count() && ok; ++i) {
                if (i == removed) continue;
                const Edge& e = h.edge(i);
                if (!std::includes(e.begin(), e.end(), center.begin(), center.end()))
                    continue;
                VSet rest = vs_diff(VSet(e), center);
                if (rest.size() != 1 || vs_contains(privates, rest[0])) {
                    ok = false;
                    break;
                }
                star.push_back(i);
                privates = vs_union(privates, rest);
            }
            if (!ok || static_cast<int>(star.size()) < r - 1) continue;
            VSet vstar = vs_union(center, privates);
            std::set<EdgeIndex> in_star(star.begin(), star.end());
            for (Vertex shared : center) {
                bool fits = true;
                for (EdgeIndex i = 0; i < h.edge_count() && fits; ++i) {
                    if (i == removed || in_star.count(i)) continue;
                    for (Vertex v : h.edge(i))
                        if (v != shared && vs_contains(vstar, v)) fits = false;
                }
                VSet erest = vs_diff(vs_inter(VSet(h.edge(removed)), vstar), center);
                if (!erest.empty()) fits = false;
                if (!fits) continue;
                VSet all(static_cast<size_t>(h.n));
                std::iota(all.begin(), all.end(), 1);
                VSet kset = vs_union(VSet{shared}, vs_diff(all, vstar));
                if (static_cast<int>(kset.size()) < 2) continue;
                Witness w;
                w.tag = Witness::Case::III;
                w.removed_edge = removed;
                w.center = center;
                w.star_edges = star;
                w.shared = shared;
                w.k_vertices = kset;
                return w;
            }
        } while (next_subset(idx, h.n));
    }
    return std::nullopt;
}

Witness exhaustive_witness(const Hypergraph& h, int k, int m) {
    if (auto w = exhaustive_small_set(h, k, m, h.r - 1)) return *w;
    if (auto w = exhaustive_small_set(h, k, m, h.r)) return *w;
    if (auto w = exhaustive_star_split(h, k, m)) return *w;
    throw Error("no structural witness exists; the hypotheses do not hold");
}

}  // namespace

std::string to_line(const Witness& w) {
    auto vset = [](const std::vector<Vertex>& xs) {
        std::ostringstream out;
        out << '{';
        for (size_t i = 0; i < xs.size(); ++i) {
            if (i) out << ',';
            out << xs[i];
        }
        out << '}';
        return out.str();
    };
    auto eset = [](const std::vector<EdgeIndex>& xs) {
        std::ostringstream out;
        out << '{';
        for (size_t i = 0; i < xs.size(); ++i) {
            if (i) out << ',';
            out << xs[i] + 1;
        }
        out << '}';
        return out.str();
    };
    std::ostringstream out;
    switch (w.tag) {
        case Witness::Case::I:
            out << "witness I S=" << vset(w.set) << " edges=" << eset(w.incident);
            break;
        case Witness::Case::II:
            out << "witness II S=" << vset(w.set) << " edges=" << eset(w.incident);
            break;
        case Witness::Case::III:
            out << "witness III e=" << w.removed_edge + 1 << " center=" << vset(w.center)
                << " star_edges=" << eset(w.star_edges) << " shared=" << w.shared
                << " K=" << vset(w.k_vertices);
            break;
    }
    return out.str();
}

std::pair<bool, std::vector<std::string>> verify_witness(const Hypergraph& h,
                                                         int k, int m,
                                                         const Witness& w) {
    std::vector<std::string> viol;
    auto check_index = [&](EdgeIndex i) {
        if (i < 0 || i >= h.edge_count())
            throw IndexOutOfRange("edge index " + std::to_string(i + 1) +
                                  " exceeds e(H) = " + std::to_string(h.edge_count()));
    };
    auto labels_ok = [&](const VSet& s) {
        for (Vertex v : s)
            if (v < 1 || v > h.n) return false;
        return std::is_sorted(s.begin(), s.end()) &&
               std::adjacent_find(s.begin(), s.end()) == s.end();
    };

    if (w.tag == Witness::Case::I || w.tag == Witness::Case::II) {
        for (EdgeIndex i : w.incident) check_index(i);
        int want = w.tag == Witness::Case::I ? h.r - 1 : h.r;
        if (static_cast<int>(w.set.size()) != want)
            viol.push_back("set size is not " + std::to_string(want));
        if (!labels_ok(w.set)) viol.push_back("set is not a sorted vertex set");
        auto nb = hyperedge_neighborhood(h, w.set);
        if (nb != w.incident)
            viol.push_back("incident list does not equal the hyperedge neighborhood");
        int bound = w.tag == Witness::Case::I ? m : k - 1;
        if (static_cast<int>(nb.size()) > bound)
            viol.push_back("neighborhood larger than " + std::to_string(bound));
        if (w.tag == Witness::Case::I && m < k - 1 && !nb.empty()) {
            const Edge& base = h.edge(nb[0]);
            for (EdgeIndex i : nb)
                if (h.edge(i) != base) {
                    viol.push_back("incident edges are not parallel copies");
                    break;
                }
            if (!std::includes(base.begin(), base.end(), w.set.begin(), w.set.end()))
                viol.push_back("set is not contained in the copied edge");
        }
        return {viol.empty(), viol};
    }

    // case III
    check_index(w.removed_edge);
    for (EdgeIndex i : w.star_edges) check_index(i);
    if (k != h.r) viol.push_back("case III requires k = r");
    if (m >= k - 1) viol.push_back("case III requires m < k-1");
    if (static_cast<int>(w.center.size()) != h.r - 1 || !labels_ok(w.center))
        viol.push_back("center is not an (r-1)-set");
    if (static_cast<int>(w.star_edges.size()) < h.r - 1)
        viol.push_back("star has fewer than r-1 edges");
    std::set<EdgeIndex> star(w.star_edges.begin(), w.star_edges.end());
    if (star.size() != w.star_edges.size()) viol.push_back("star edges repeat");
    if (star.count(w.removed_edge)) viol.push_back("removed edge inside the star");
    VSet privates;
    for (EdgeIndex i : w.star_edges) {
        const Edge& e = h.edge(i);
        if (!std::includes(e.begin(), e.end(), w.center.begin(), w.center.end())) {
            viol.push_back("star edge misses the center");
            continue;
        }
        VSet rest = vs_diff(VSet(e), w.center);
        if (rest.size() != 1 || vs_contains(privates, rest[0]))
            viol.push_back("star private vertices are not distinct");
        else
            privates = vs_union(privates, rest);
    }
    if (!vs_contains(w.center, w.shared))
        viol.push_back("shared vertex is not in the center");
    VSet vstar = vs_union(w.center, privates);
    if (!labels_ok(w.k_vertices)) viol.push_back("K is not a sorted vertex set");
    if (static_cast<int>(w.k_vertices.size()) < 2)
        viol.push_back("K has fewer than 2 vertices");
    VSet overlap = vs_inter(vstar, w.k_vertices);
    if (overlap != VSet{w.shared})
        viol.push_back("star and K overlap in more than the shared vertex");
    VSet all(static_cast<size_t>(h.n));
    std::iota(all.begin(), all.end(), 1);
    if (vs_union(vstar, w.k_vertices) != all)
        viol.push_back("star and K do not cover every vertex");
    VSet erest = vs_diff(vs_inter(VSet(h.edge(w.removed_edge)), vstar), w.center);
    if (!erest.empty())
        viol.push_back("removed edge meets the star outside its center");
    for (EdgeIndex i = 0; i < h.edge_count(); ++i) {
        if (i == w.removed_edge || star.count(i)) continue;
        for (Vertex v : h.edge(i))
            if (v != w.shared && vs_contains(vstar, v)) {
                viol.push_back("edge " + std::to_string(i + 1) +
                               " meets the star away from the shared vertex");
                break;
            }
    }
    return {viol.empty(), viol};
}

WitnessReport find_witness(const Hypergraph& h, int k, int m) {
    if (k > h.r || k < 2)
        throw UnsupportedRegime("witnesses cover 2 <= k <= r, got k = " +
                                std::to_string(k) + ", r = " + std::to_string(h.r));
    if (h.n <= h.r)
        throw TooFewVertices("need n > r, got n = " + std::to_string(h.n));
    if (m < 1) throw InvalidParams("multiplicity bound must be at least 1");
    std::map<Edge, int> mult;
    for (const Edge& e : h.edges)
        if (++mult[e] > m)
            throw MultiplicityExceeded("an edge has multiplicity above " +
                                       std::to_string(m));
    if (auto c = find_berge_cycle_at_least(h, k))
        throw PreconditionViolated("input has a Berge cycle of length >= " +
                                       std::to_string(k),
                                   to_line(*c));

    WitnessReport rep;
    try {
        Guide guide(h, k, m, rep.trace);
        rep.witness = guide.run();
        auto [ok, viol] = verify_witness(h, k, m, rep.witness);
        if (!ok) throw Diverge("guided witness rejected: " + viol.front());
    } catch (const Diverge& dv) {
        rep.trace.push_back(std::string("lemma: divergence - ") + dv.what());
        rep.fallback_used = true;
        rep.witness = exhaustive_witness(h, k, m);
    }
    return rep;
}

}  // namespace berge
