#include <doctest.h>

#include <random>

#include "assoc/deletion.hpp"
#include "assoc/error.hpp"
#include "assoc/flipgraph.hpp"
#include "oracle.hpp"

using namespace assoc;

TEST_CASE("deletion agrees with the oracle on every small triangulation") {
    for (int n = 4; n <= 8; ++n) {
        for (const oracle::Tri& t : oracle::triangulations(n)) {
            const Triangulation lib = oracle::to_library(n, t);
            for (int a = 0; a < n; ++a) {
                const auto [smaller, record] = delete_vertex(lib, a);
                CHECK(smaller.size() == n - 1);
                CHECK(oracle::from_library(smaller) == oracle::delete_vertex(n, t, a));
                CHECK(record.deleted == a);
                CHECK(record.successor == (a + 1) % n);
                CHECK(record.merged_link == oracle::link(n, t, a));
            }
        }
    }
}

TEST_CASE("deletion preconditions") {
    const Triangulation tri = Triangulation::from_interior(3, std::span<const Edge>{});
    CHECK_THROWS_AS(delete_vertex(tri, 0), SizeError);
    CHECK_THROWS_AS(delete_vertex(fan(6, 0), 6), InvalidInput);
    CHECK_THROWS_AS(delete_vertex(fan(6, 0), -1), InvalidInput);
}

TEST_CASE("deleting the last vertex wraps onto 0") {
    // Vertex 5 of the hexagon fan at 0 merges into 0, leaving the pentagon fan at 0.
    const auto [t, record] = delete_vertex(fan(6, 0), 5);
    CHECK(t == fan(5, 0));
    CHECK(record.successor == 0);
}

TEST_CASE("labeled triangulations keep the original labels") {
    LabeledTriangulation t(fan(8, 3));
    t = t.deleted(5).deleted(1);
    CHECK(t.labels() == std::vector<int>{0, 2, 3, 4, 6, 7});
    CHECK(t.position(6) == 4);
    CHECK_THROWS_AS(t.position(5), InvalidInput);
    CHECK(t.has_interior(3, 6));
    CHECK(t.link(6, 7) == 3);
    CHECK(t.relabeled(3, 3) == fan(6, 3));
    CHECK(t.relabeled(3, 0) == fan(6, 0));
    CHECK(t.relabeled(0, 1) == fan(6, 3));
}

TEST_CASE("delete_seq deletes memberwise in original labels") {
    const TriangulationPair p(fan(7, 0), fan(7, 3));
    const int vs[] = {5, 6};
    const TriangulationPair q = delete_seq(p, vs);
    CHECK(q.first == delete_vertex(delete_vertex(fan(7, 0), 5).first, 5).first);
    CHECK(q.second.size() == 5);
}

TEST_CASE("incidence is a link change") {
    const Triangulation u = fan(6, 0);
    const Triangulation v = u.flip(Edge(0, 2)).first;  // introduces 1-3
    CHECK(is_incident(u, v, Edge(1, 2)));
    CHECK(is_incident(u, v, Edge(0, 1)));
    CHECK_FALSE(is_incident(u, v, Edge(3, 4)));
    CHECK_THROWS_AS(is_incident(u, u, Edge(0, 1)), InvalidInput);
    CHECK_THROWS_AS(is_incident(u, fan(6, 3), Edge(0, 1)), InvalidInput);
}

TEST_CASE("projected paths lose exactly their incident flips") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 5 + trial % 6;
        FlipPath p(uniform_random(n, rng()));
        for (int s = 0; s < 12; ++s) {
            const auto edges = p.back().interior();
            p.push(edges[rng() % edges.size()]);
        }
        const int a = static_cast<int>(rng() % n);
        int incident = 0;
        for (std::size_t s = 0; s + 1 < p.steps().size(); ++s) {
            const auto before = oracle::from_library(p.steps()[s]);
            const auto after = oracle::from_library(p.steps()[s + 1]);
            incident += oracle::link(n, before, a) != oracle::link(n, after, a) ? 1 : 0;
        }
        const FlipPath q = project_path(p, a);
        CHECK(q.valid());
        CHECK(static_cast<int>(q.length()) == 12 - incident);
        CHECK(q.back() == delete_vertex(p.back(), a).first);
    }
}

TEST_CASE("theta matches geodesic enumeration") {
    for (int n = 4; n <= 6; ++n) {
        const oracle::Graph g(n);
        for (std::size_t i = 0; i < g.nodes.size(); ++i) {
            for (std::size_t j = 0; j < g.nodes.size(); ++j) {
                const TriangulationPair p(oracle::to_library(n, g.nodes[i]), oracle::to_library(n, g.nodes[j]));
                for (int a = 0; a < n; ++a) {
                    CHECK(theta(p, a) == oracle::theta(g, static_cast<int>(i), static_cast<int>(j), a));
                }
            }
        }
    }
    CHECK_THROWS_AS(theta({fan(5, 0), fan(5, 1)}, 5), InvalidInput);
}

TEST_CASE("the contracted hexagon graph is a 5-cycle") {
    for (int a = 0; a < 6; ++a) {
        const QuotientGraph q = quotient_graph(6, a);
        CHECK(q.nodes.size() == 5);
        CHECK(q.edge_count() == 5);
        for (const auto& nb : q.adjacency) CHECK(nb.size() == 2);
        // Connected: walking the cycle visits every node.
        int prev = -1, cur = 0, steps = 0;
        do {
            const int next = q.adjacency[cur][0] != prev ? q.adjacency[cur][0] : q.adjacency[cur][1];
            prev = cur;
            cur = next;
            ++steps;
        } while (cur != 0 && steps < 10);
        CHECK(steps == 5);
    }
    CHECK_THROWS_AS(quotient_graph(3, 0), SizeError);
}

TEST_CASE("contraction reproduces the smaller flip graph") {
    for (int n = 5; n <= 8; ++n) {
        const oracle::Graph smaller(n - 1);
        for (int a = 0; a < n; a += 2) {
            const QuotientGraph q = quotient_graph(n, a);
            REQUIRE(q.nodes.size() == smaller.nodes.size());
            std::size_t edges = 0;
            for (const auto& nb : smaller.adj) edges += nb.size();
            CHECK(q.edge_count() == edges / 2);
            for (std::size_t i = 0; i < q.nodes.size(); ++i) {
                const auto t = oracle::from_library(Triangulation::from_key(n - 1, q.nodes[i]));
                const int oi = smaller.index.at(t);
                std::vector<oracle::Tri> expect, got;
                for (int j : smaller.adj[oi]) expect.push_back(smaller.nodes[j]);
                for (int j : q.adjacency[i]) {
                    got.push_back(oracle::from_library(Triangulation::from_key(n - 1, q.nodes[j])));
                }
                std::sort(expect.begin(), expect.end());
                std::sort(got.begin(), got.end());
                CHECK(got == expect);
            }
        }
    }
}

TEST_CASE("quotient adjacency text lists every node") {
    const QuotientGraph q = quotient_graph(5, 0);
    const std::string text = q.to_adjacency_text();
    CHECK(std::count(text.begin(), text.end(), '\n') == 2);
}
