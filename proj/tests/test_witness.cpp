#include <doctest.h>

#include <algorithm>
#include <functional>

#include "bergetool/constructions.hpp"
#include "bergetool/detectors.hpp"
#include "bergetool/errors.hpp"
#include "bergetool/witness.hpp"
#include "oracles.hpp"

using namespace berge;

namespace {

Hypergraph make(int r, int n, std::vector<Edge> edges, bool simple = true) {
    Hypergraph h;
    h.r = r;
    h.n = n;
    h.simple = simple;
    h.edges = std::move(edges);
    return h;
}

bool trace_mentions(const WitnessReport& rep, const std::string& needle) {
    for (const auto& line : rep.trace)
        if (line.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("a star splits as case III") {
    auto star = r_star(7, 3);
    auto rep = find_witness(star, 3, 1);
    CHECK_FALSE(rep.fallback_used);
    REQUIRE(rep.witness.tag == Witness::Case::III);
    auto [ok, viol] = verify_witness(star, 3, 1, rep.witness);
    CHECK(ok);
    CHECK(viol.empty());
    CHECK(rep.witness.center == std::vector<int>{1, 2});
    CHECK(rep.witness.star_edges.size() == 4);
    CHECK(rep.witness.k_vertices.size() == 2);

    // no small set qualifies, so case III is forced
    CHECK_FALSE(oracle::small_set_exists(star, 2, 1));
    CHECK_FALSE(oracle::small_set_exists(star, 3, 2));

    // the illustrative split removing the last star edge also verifies
    Witness manual;
    manual.tag = Witness::Case::III;
    manual.removed_edge = 4;  // {1,2,7}
    manual.center = {1, 2};
    manual.star_edges = {0, 1, 2, 3};
    manual.shared = 1;
    manual.k_vertices = {1, 7};
    CHECK(verify_witness(star, 3, 1, manual).first);
}

TEST_CASE("two overlapping triples give a size-r set") {
    auto h = make(3, 5, {{1, 2, 3}, {1, 2, 4}});
    auto rep = find_witness(h, 3, 1);
    CHECK_FALSE(rep.fallback_used);
    REQUIRE(rep.witness.tag == Witness::Case::II);
    CHECK(verify_witness(h, 3, 1, rep.witness).first);
    CHECK(rep.witness.set == std::vector<int>{2, 3, 4});
    CHECK(rep.witness.incident.size() == 2);
    // the other documented size-3 set also verifies
    Witness alt;
    alt.tag = Witness::Case::II;
    alt.set = {1, 3, 4};
    alt.incident = {0, 1};
    CHECK(verify_witness(h, 3, 1, alt).first);
}

TEST_CASE("witness preconditions are enforced") {
    CHECK_THROWS_AS(find_witness(make(3, 5, {{1, 2, 3}}), 4, 1), UnsupportedRegime);
    CHECK_THROWS_AS(find_witness(make(3, 3, {{1, 2, 3}}), 3, 1), TooFewVertices);
    CHECK_THROWS_AS(
        find_witness(make(3, 5, {{1, 2, 3}, {1, 2, 3}}, false), 3, 1),
        MultiplicityExceeded);
    auto cyclic = make(3, 6, {{1, 2, 3}, {3, 4, 5}, {1, 5, 6}});
    CHECK_THROWS_AS(find_witness(cyclic, 3, 1), PreconditionViolated);
    try {
        find_witness(cyclic, 3, 1);
    } catch (const PreconditionViolated& e) {
        CHECK(e.certificate.rfind("cycle", 0) == 0);
    }
}

TEST_CASE("m = k-1 always yields a small set") {
    auto copies = make(3, 4, {{1, 2, 3}, {1, 2, 3}}, false);
    auto rep = find_witness(copies, 3, 2);
    CHECK_FALSE(rep.fallback_used);
    REQUIRE(rep.witness.tag == Witness::Case::I);
    CHECK(rep.witness.set.size() == 2);
    CHECK(rep.witness.incident.size() == 2);
    CHECK(verify_witness(copies, 3, 2, rep.witness).first);
    CHECK(trace_mentions(rep, "copy-exchange"));

    // linear graphs are the k = 2 regime
    auto linear = make(3, 5, {{1, 2, 3}, {3, 4, 5}});
    auto rep2 = find_witness(linear, 2, 1);
    CHECK_FALSE(rep2.fallback_used);
    REQUIRE(rep2.witness.tag == Witness::Case::I);
    CHECK(rep2.witness.incident.size() <= 1);
    CHECK(verify_witness(linear, 2, 1, rep2.witness).first);
}

TEST_CASE("edgeless input yields an untouched small set") {
    auto rep = find_witness(make(3, 5, {}), 3, 1);
    CHECK_FALSE(rep.fallback_used);
    CHECK(rep.witness.tag == Witness::Case::I);
    CHECK(rep.witness.incident.empty());
    CHECK(verify_witness(make(3, 5, {}), 3, 1, rep.witness).first);
}

TEST_CASE("a defining edge meeting the first edge twice reroutes the path") {
    auto h = make(3, 6, {{1, 2, 3}, {1, 2, 4}, {4, 5, 6}});
    auto rep = find_witness(h, 3, 1);
    CHECK_FALSE(rep.fallback_used);
    CHECK(trace_mentions(rep, "copy-prefix-reentry"));
    REQUIRE(rep.witness.tag == Witness::Case::II);
    CHECK(verify_witness(h, 3, 1, rep.witness).first);
}

TEST_CASE("an incident edge leaving the defining vertices twice still yields a set") {
    auto h = make(3, 8, {{1, 2, 3}, {1, 2, 4}, {2, 5, 6}, {1, 7, 8}});
    auto rep = find_witness(h, 3, 1);
    CHECK_FALSE(rep.fallback_used);
    CHECK(trace_mentions(rep, "wide-branch-edge"));
    REQUIRE(rep.witness.tag == Witness::Case::II);
    CHECK(verify_witness(h, 3, 1, rep.witness).first);
}

TEST_CASE("verify_witness rejects tampered witnesses") {
    auto star = r_star(7, 3);
    auto rep = find_witness(star, 3, 1);
    REQUIRE(rep.witness.tag == Witness::Case::III);

    Witness shrunk = rep.witness;
    shrunk.k_vertices = {shrunk.shared};
    auto [ok1, viol1] = verify_witness(star, 3, 1, shrunk);
    CHECK_FALSE(ok1);
    CHECK_FALSE(viol1.empty());

    // claiming case I on a pair meeting m+1 edges fails the cardinality check
    Witness overfull;
    overfull.tag = Witness::Case::I;
    overfull.set = {1, 3};
    overfull.incident = hyperedge_neighborhood(star, {1, 3});
    CHECK_FALSE(verify_witness(star, 3, 1, overfull).first);

    // a stale incident list is caught
    Witness stale;
    stale.tag = Witness::Case::II;
    stale.set = {3, 4, 5};
    stale.incident = {0};
    CHECK_FALSE(verify_witness(star, 3, 1, stale).first);

    Witness bad_index;
    bad_index.tag = Witness::Case::I;
    bad_index.set = {3, 4};
    bad_index.incident = {9};
    CHECK_THROWS_AS(verify_witness(star, 3, 1, bad_index), IndexOutOfRange);
}

TEST_CASE("witness serialization") {
    auto h = make(3, 5, {{1, 2, 3}, {1, 2, 4}});
    auto rep = find_witness(h, 3, 1);
    CHECK(to_line(rep.witness) == "witness II S={2,3,4} edges={1,2}");
    auto star_rep = find_witness(r_star(7, 3), 3, 1);
    CHECK(to_line(star_rep.witness) ==
          "witness III e=3 center={1,2} star_edges={1,2,4,5} shared=2 K={2,5}");
}

TEST_CASE("small-set witnesses support the vertex-removal induction step") {
    // removing S and its incident edges leaves a free graph on n - |S|
    // vertices, so e(H) - |incident| is bounded by the extremal value there
    auto sweep = [&](int n, int r, int k, bool multi, int cap) {
        std::vector<Edge> cands;
        std::function<void(int, Edge&)> build = [&](int lo, Edge& cur) {
            if (static_cast<int>(cur.size()) == r) {
                cands.push_back(cur);
                return;
            }
            for (int v = lo; v <= n; ++v) {
                cur.push_back(v);
                build(v + 1, cur);
                cur.pop_back();
            }
        };
        Edge cur;
        build(1, cur);
        std::function<void(size_t, Hypergraph&)> grow = [&](size_t start,
                                                            Hypergraph& h) {
            if (h.n > h.r) {
                auto rep = find_witness(h, k, multi ? cap : 1);
                if (rep.witness.tag != Witness::Case::III) {
                    int removed = static_cast<int>(rep.witness.set.size());
                    long long rest = h.edge_count() -
                                     static_cast<int>(rep.witness.incident.size());
                    ExtremalQuery q{h.n - removed, r, k, Variant::cycles, multi};
                    CHECK(rest <= extremal_value(q));
                }
            }
            for (size_t i = start; i < cands.size(); ++i) {
                if (std::count(h.edges.begin(), h.edges.end(), cands[i]) >= cap)
                    continue;
                h.edges.push_back(cands[i]);
                if (!find_berge_cycle_at_least(h, k).has_value()) grow(i, h);
                h.edges.pop_back();
            }
        };
        Hypergraph h = make(r, n, {}, !multi);
        grow(0, h);
    };
    sweep(5, 3, 3, false, 1);
    sweep(6, 3, 3, false, 1);
    sweep(5, 3, 3, true, 2);
}

TEST_CASE("guided construction stays sound across dense sweeps") {
    // every simple BC>=3-free 3-graph on 5 vertices, k = r = 3
    std::vector<Edge> cands;
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b)
            for (int c = b + 1; c <= 5; ++c) cands.push_back({a, b, c});
    int graphs = 0;
    std::function<void(size_t, Hypergraph&)> grow = [&](size_t start, Hypergraph& h) {
        ++graphs;
        auto rep = find_witness(h, 3, 1);
        CHECK_FALSE(rep.fallback_used);
        CHECK(verify_witness(h, 3, 1, rep.witness).first);
        for (size_t i = start; i < cands.size(); ++i) {
            h.edges.push_back(cands[i]);
            if (!find_berge_cycle_at_least(h, 3).has_value()) grow(i + 1, h);
            h.edges.pop_back();
        }
    };
    Hypergraph h = make(3, 5, {});
    grow(0, h);
    CHECK(graphs == 66);
}
