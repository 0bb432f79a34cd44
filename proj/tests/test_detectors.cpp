#include <doctest.h>

#include <algorithm>

#include "bergetool/constructions.hpp"
#include "bergetool/detectors.hpp"
#include "bergetool/errors.hpp"
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

int incidence_cycle_oracle(const Hypergraph& h) {
    // vertices 1..n, edge-nodes n+1..n+e
    std::vector<std::pair<int, int>> edges;
    for (auto [v, i] : incidence_graph(h).adjacency)
        edges.emplace_back(v, h.n + 1 + i);
    return oracle::graph_longest_cycle(h.n + h.edge_count(), edges);
}

}  // namespace

TEST_CASE("find_berge_path finds exact lengths with optional endpoints") {
    auto star5 = make(3, 5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}});
    auto p3 = find_berge_path(star5, 3);
    REQUIRE(p3.has_value());
    CHECK(p3->length() == 3);
    CHECK(verify_certificate(star5, *p3));
    CHECK_FALSE(find_berge_path(star5, 4).has_value());

    auto block = make(3, 4, {{1, 2, 3}, {1, 2, 4}});
    auto joined = find_berge_path(block, 2, std::pair{3, 4});
    REQUIRE(joined.has_value());
    CHECK(joined->vertices.front() == 3);
    CHECK(joined->vertices.back() == 4);
    CHECK(verify_certificate(block, *joined));

    // endpoints are path vertices, hence distinct
    CHECK_FALSE(find_berge_path(block, 2, std::pair{3, 3}).has_value());
}

TEST_CASE("berge path reversal stays valid") {
    auto h = make(3, 6, {{1, 2, 3}, {3, 4, 5}, {4, 5, 6}});
    auto p = find_berge_path(h, 3);
    REQUIRE(p.has_value());
    CHECK(verify_certificate(h, reversed(*p)));
}

TEST_CASE("find_berge_cycle_at_least certifies presence and absence") {
    auto triangle = make(3, 6, {{1, 2, 3}, {3, 4, 5}, {1, 5, 6}});
    auto c = find_berge_cycle_at_least(triangle, 3);
    REQUIRE(c.has_value());
    CHECK(c->length() >= 3);
    CHECK(verify_certificate(triangle, *c));

    // a star has r-1 vertices of degree above one, so nothing of length >= r
    CHECK_FALSE(find_berge_cycle_at_least(r_star(7, 3), 3).has_value());

    auto copies = make(3, 3, {{1, 2, 3}, {1, 2, 3}}, false);
    auto two = find_berge_cycle_at_least(copies, 2);
    REQUIRE(two.has_value());
    CHECK(two->length() == 2);
    CHECK(verify_certificate(copies, *two));
}

TEST_CASE("cycle monotonicity in the threshold") {
    auto h = make(3, 6, {{1, 2, 3}, {3, 4, 5}, {1, 5, 6}});
    REQUIRE(find_berge_cycle_at_least(h, 3).has_value());
    CHECK(find_berge_cycle_at_least(h, 2).has_value());
}

TEST_CASE("longest_berge_cycle lengths") {
    CHECK(longest_berge_cycle(r_star(7, 3)).length == 2);
    CHECK(longest_berge_cycle(make(3, 3, {{1, 2, 3}})).length == 0);
    CHECK(longest_berge_cycle(make(4, 5, {{1, 2, 3, 4}, {1, 2, 3, 5}})).length == 2);
    auto res = longest_berge_cycle(make(3, 6, {{1, 2, 3}, {3, 4, 5}, {1, 5, 6}}));
    CHECK(res.length == 3);
    REQUIRE(res.cycle.has_value());
    CHECK(verify_certificate(make(3, 6, {{1, 2, 3}, {3, 4, 5}, {1, 5, 6}}), *res.cycle));
}

TEST_CASE("adding an edge never shortens the longest cycle") {
    auto h = make(3, 6, {{1, 2, 3}, {3, 4, 5}});
    int before = longest_berge_cycle(h).length;
    h.edges.push_back({1, 4, 6});
    CHECK(longest_berge_cycle(h).length >= before);
}

TEST_CASE("berge cycles correspond to incidence-graph cycles of doubled length") {
    // full grid: every simple 3-graph on 4 vertices
    std::vector<Edge> cands = {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
    for (int mask = 0; mask < 16; ++mask) {
        Hypergraph h;
        h.r = 3;
        h.n = 4;
        for (int b = 0; b < 4; ++b)
            if (mask & (1 << b)) h.edges.push_back(cands[static_cast<size_t>(b)]);
        int berge_len = longest_berge_cycle(h).length;
        int graph_len = incidence_cycle_oracle(h);
        CHECK(2 * berge_len == graph_len);
    }
}

TEST_CASE("maximum_semi_path lengths and tie-breaks") {
    auto star7 = r_star(7, 3);
    auto sp = maximum_semi_path(star7, 3);
    CHECK(sp.length() == 3);
    CHECK(verify_certificate(star7, sp));

    auto single = maximum_semi_path(make(3, 3, {{1, 2, 3}}), 3);
    CHECK(single.length() == 1);
    CHECK(single.edge_indices == std::vector<int>{0});
    CHECK(single.vertices == std::vector<int>{1});

    auto two = maximum_semi_path(make(3, 5, {{1, 2, 3}, {3, 4, 5}}), 3);
    CHECK(two.length() == 2);

    CHECK_THROWS_AS(maximum_semi_path(make(3, 3, {}), 3), EmptyHypergraph);
}

TEST_CASE("maximum_semi_path minimizes the first-edge tail") {
    // both edges are eligible first; starting inside the overlap puts two
    // defining vertices into e_1
    auto h = make(3, 5, {{1, 2, 3}, {1, 2, 4}});
    auto sp = maximum_semi_path(h, 3);
    REQUIRE(sp.length() == 2);
    CHECK(sp.edge_indices == std::vector<int>{0, 1});
    CHECK(sp.vertices == std::vector<int>{1, 2});
}

TEST_CASE("certificate serialization is stable") {
    auto h = make(3, 5, {{1, 2, 3}, {1, 2, 4}});
    BergePath p{{3, 1, 4}, {0, 1}};
    CHECK(verify_certificate(h, p));
    CHECK(to_line(p) == "path 2: 3 (1) 1 (2) 4");
    BergeCycle c{{1, 2}, {0, 1}};
    CHECK(verify_certificate(h, c));
    CHECK(to_line(c) == "cycle 2: 1 (1) 2 (2)");
    SemiPath s{{0, 1}, {1, 2}};
    CHECK(verify_certificate(h, s));
    CHECK(to_line(s) == "semipath 2: (1) 1 (2) 2");
}

TEST_CASE("verify_certificate rejects broken certificates") {
    auto h = make(3, 6, {{1, 2, 3}, {3, 4, 5}, {1, 5, 6}});
    BergeCycle good{{1, 3, 5}, {0, 1, 2}};
    REQUIRE(verify_certificate(h, good));

    BergeCycle swapped = good;
    std::swap(swapped.vertices[0], swapped.vertices[1]);
    CHECK_FALSE(verify_certificate(h, swapped));

    BergePath reused{{1, 3, 2}, {0, 0}};
    CHECK_FALSE(verify_certificate(h, reused));

    BergeCycle outside{{1, 3, 5}, {0, 1, 7}};
    CHECK_THROWS_AS(verify_certificate(h, outside), IndexOutOfRange);
}

TEST_CASE("detectors return verifiable certificates across a small grid") {
    std::vector<Edge> cands = {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
    for (int mask = 1; mask < 16; ++mask) {
        Hypergraph h;
        h.r = 3;
        h.n = 4;
        for (int b = 0; b < 4; ++b)
            if (mask & (1 << b)) h.edges.push_back(cands[static_cast<size_t>(b)]);
        if (auto c = find_berge_cycle_at_least(h, 2)) CHECK(verify_certificate(h, *c));
        if (auto p = find_berge_path(h, 2)) CHECK(verify_certificate(h, *p));
        CHECK(verify_certificate(h, maximum_semi_path(h, 3)));
    }
}
