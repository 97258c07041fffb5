#include <doctest.h>

#include <random>

#include <json.hpp>

#include "assoc/distance.hpp"
#include "assoc/error.hpp"
#include "assoc/families.hpp"
#include "oracle.hpp"

using namespace assoc;

TEST_CASE("engine agrees with BFS on every pair up to the heptagon") {
    for (int n = 3; n <= 7; ++n) {
        const oracle::Graph g(n);
        for (std::size_t i = 0; i < g.nodes.size(); ++i) {
            const auto ref = oracle::bfs(g.adj, static_cast<int>(i));
            const Triangulation u = oracle::to_library(n, g.nodes[i]);
            for (std::size_t j = 0; j < g.nodes.size(); ++j) {
                const Triangulation v = oracle::to_library(n, g.nodes[j]);
                const SearchReport r = flip_distance(u, v);
                CHECK(r.distance == ref[j]);
                CHECK(r.witness.valid());
                CHECK(r.witness.front() == u);
                CHECK(r.witness.back() == v);
                CHECK(static_cast<int>(r.witness.length()) == r.distance);
            }
        }
    }
}

TEST_CASE("every search configuration gives the same distance") {
    std::mt19937_64 rng(12);
    const oracle::Graph g(8);
    for (int k = 0; k < 300; ++k) {
        const int i = static_cast<int>(rng() % g.nodes.size());
        const int j = static_cast<int>(rng() % g.nodes.size());
        const int truth = oracle::bfs(g.adj, i)[j];
        const Triangulation u = oracle::to_library(8, g.nodes[i]);
        const Triangulation v = oracle::to_library(8, g.nodes[j]);
        for (int mask = 0; mask < 8; ++mask) {
            SearchOptions o;
            o.decompose = mask & 1;
            o.reduce = mask & 2;
            o.restrict_common = mask & 4;
            CHECK(flip_distance(u, v, o).distance == truth);
        }
        CHECK(flip_distance(v, u).distance == truth);
    }
}

TEST_CASE("bounds bracket the distance") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 200; ++k) {
        const int n = 6 + k % 8;
        const Triangulation u = uniform_random(n, rng());
        const Triangulation v = uniform_random(n, rng());
        const int d = distance(u, v);
        CHECK(interior_difference(u, v) <= d);
        CHECK(d <= fan_upper_bound(u, v));
        CHECK(d <= 2 * n - 10 + (n < 13 ? 4 : 0));
        const FlipPath route = fan_route(u, v);
        CHECK(route.valid());
        CHECK(route.back() == v);
        CHECK(static_cast<int>(route.length()) == fan_upper_bound(u, v));
    }
    CHECK(fan_upper_bound(fan(9, 2), fan(9, 2)) == 0);
    CHECK_THROWS_AS(fan_upper_bound(fan(6, 0), fan(7, 0)), InvalidInput);
}

TEST_CASE("decomposition cuts along common edges") {
    const Triangulation u = fan(7, 0);
    const Triangulation v = fan(7, 3);
    const auto parts = decompose(u, v);
    REQUIRE(parts.size() == 2);
    std::vector<std::vector<int>> cells;
    for (const Component& c : parts) cells.push_back(c.vertices);
    std::sort(cells.begin(), cells.end());
    CHECK(cells[0] == std::vector<int>{0, 1, 2, 3});
    CHECK(cells[1] == std::vector<int>{0, 3, 4, 5, 6});

    int sum = 0;
    for (const Component& c : parts) sum += distance(c.pair.first, c.pair.second);
    CHECK(sum == distance(u, v));

    CHECK(decompose(fan(6, 0), fan(6, 0)).size() == 4);
}

TEST_CASE("forced flips introduce target edges") {
    const Triangulation u = fan(6, 0);
    const Triangulation v = fan(6, 1);
    const ForcedReduction r = reduce_forced(u, v);
    CHECK(r.applied() == 3);
    CHECK(r.reduced == v);
    for (const Flip& f : r.flips) CHECK(v.has_interior(f.introduced));

    const ForcedReduction none = reduce_forced(family_A(12).first, family_A(12).second);
    CHECK(none.applied() == 0);
}

TEST_CASE("reductions are reported") {
    const SearchReport r = flip_distance(fan(7, 0), fan(7, 3));
    CHECK(r.distance == 3);
    CHECK_FALSE(r.reductions.empty());
    CHECK(r.reductions.front().kind == ReductionKind::split);
    CHECK(r.reductions.front().edge == Edge(0, 3));
}

TEST_CASE("budget exhaustion reports a bracket") {
    SearchOptions tight;
    tight.budget.max_nodes = 50;
    const TriangulationPair a = family_A(13);
    try {
        flip_distance(a.first, a.second, tight);
        FAIL("expected a ResourceError");
    } catch (const ResourceError& e) {
        REQUIRE(e.lower_bound());
        REQUIRE(e.upper_bound());
        CHECK(*e.lower_bound() <= 16);
        CHECK(*e.upper_bound() >= 16);
        CHECK(*e.lower_bound() >= interior_difference(a.first, a.second));
    }
}

TEST_CASE("A pairs at desk scale") {
    for (int n = 9; n <= 14; ++n) CHECK(distance(family_A(n).first, family_A(n).second) == 2 * n - 10);
}

TEST_CASE("report formats") {
    const SearchReport r = flip_distance(family_A(6).first, family_A(6).second);
    const std::string text = to_text(r);
    CHECK(text.starts_with("distance 4\nexpanded "));
    CHECK(text.find("\nwitness ") != std::string::npos);
    const auto j = nlohmann::json::parse(to_json(r));
    CHECK(j["distance"] == 4);
    CHECK(j["witness"].size() == 4);
    CHECK(j["witness"][0]["removed"].size() == 2);

    const SearchReport zero = flip_distance(fan(5, 0), fan(5, 0));
    CHECK(to_text(zero) == "distance 0\nexpanded 0\nwitness\nreductions 0\n");
}
