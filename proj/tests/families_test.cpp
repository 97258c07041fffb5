#include <doctest.h>

#include "assoc/deletion.hpp"
#include "assoc/error.hpp"
#include "assoc/families.hpp"
#include "assoc/verify.hpp"
#include "oracle.hpp"

using namespace assoc;

namespace {

int oracle_distance(const oracle::Graph& g, const TriangulationPair& p) {
    const int u = g.index.at(oracle::from_library(p.first));
    const int v = g.index.at(oracle::from_library(p.second));
    return oracle::bfs(g.adj, u)[v];
}

}  // namespace

TEST_CASE("zigzags alternate for every size") {
    CHECK(zigzag(8).interior() == std::vector<Edge>{Edge(0, 5), Edge(0, 6), Edge(1, 4), Edge(1, 5), Edge(2, 4)});
    for (int n = 4; n <= kMaxVertices; ++n) {
        CAPTURE(n);
        CHECK(is_zigzag(zigzag(n)));
    }
    CHECK_FALSE(is_zigzag(zigzag(3)));
    CHECK_FALSE(is_zigzag(fan(7, 0)));
    CHECK_THROWS_AS(zigzag(2), SizeError);
}

TEST_CASE("comb teeth count interior degree") {
    CHECK(comb_teeth(fan(9, 4), 4) == 6);
    CHECK(comb_teeth(fan(9, 4), 5) == 0);
    CHECK_THROWS_AS(comb_teeth(fan(9, 4), 9), InvalidInput);
}

TEST_CASE("family names") {
    const FamilyId id = parse_family("B:12");
    CHECK(id.tag == Family::B);
    CHECK(id.n == 12);
    CHECK(to_string(id) == "B:12");
    CHECK_THROWS_AS(parse_family("B:6"), SizeError);
    CHECK_THROWS_AS(parse_family("A:2"), SizeError);
    CHECK_THROWS_AS(parse_family("A:40"), SizeError);
    CHECK_THROWS_AS(parse_family("Q:7"), InvalidInput);
    CHECK_THROWS_AS(parse_family("A7"), InvalidInput);
    CHECK_THROWS_AS(parse_family("A:7x"), InvalidInput);
    CHECK(family(parse_family("Z:9")).first == zigzag(9));
}

TEST_CASE("small A pairs") {
    CHECK(family_A(6).first == Triangulation::from_interior(6, std::vector<Edge>{Edge(1, 5), Edge(2, 4), Edge(2, 5)}));
    CHECK(family_A(6).second == Triangulation::from_interior(6, std::vector<Edge>{Edge(0, 3), Edge(0, 4), Edge(1, 3)}));

    // Exact distances from the oracle's BFS.
    const int expected[] = {0, 1, 2, 4, 5, 7, 8};
    for (int n = 3; n <= 9; ++n) {
        const oracle::Graph g(n);
        CHECK(oracle_distance(g, family_A(n)) == expected[n - 3]);
    }
}

TEST_CASE("published flip paths join the A pair members") {
    const Edge six[] = {Edge(1, 5), Edge(2, 5), Edge(2, 4), Edge(0, 2)};
    CHECK(apply_flips(family_A(6).first, six).back() == family_A(6).second);
    const Edge eight[] = {Edge(2, 4), Edge(2, 5), Edge(2, 6), Edge(1, 6), Edge(0, 6), Edge(3, 6), Edge(3, 5)};
    CHECK(apply_flips(family_A(8).first, eight).back() == family_A(8).second);
}

TEST_CASE("small B, C and D pairs against the oracle") {
    for (int n = 7; n <= 9; ++n) {
        const oracle::Graph g(n);
        CHECK(oracle_distance(g, family_B(n)) >= 2 * n - 11);
        CHECK(oracle_distance(g, family_C(n)) >= 2 * n - 11);
    }
    const oracle::Graph g8(8);
    CHECK(oracle_distance(g8, family_B(8)) == 5);
    CHECK(oracle_distance(g8, family_C(8)) == 5);

    const int d_expected[] = {0, 1, 2, 3, 4, 6, 8};
    for (int n = 3; n <= 9; ++n) CHECK(oracle_distance(oracle::Graph(n), family_D(n)) == d_expected[n - 3]);
}

TEST_CASE("link structure of the A and B pairs") {
    for (int n = 8; n <= 20; ++n) {
        CAPTURE(n);
        const TriangulationPair a = family_A(n);
        CHECK(a.first.link(Edge(1, 2)) == 6);
        CHECK(a.second.link(Edge(1, 2)) == 3);
    }
    for (int n = 12; n <= 16; ++n) {
        CAPTURE(n);
        const TriangulationPair b = family_B(n);
        CHECK(b.first.link(Edge(3, 4)) == 6);
        CHECK(b.second.link(Edge(3, 4)) == n - 1);
        CHECK(b.second.link(Edge(4, 5)) == n - 2);
        CHECK(b.second.link(Edge(5, 6)) == n - 3);
        CHECK(family_C(n).first == b.first.flip(Edge(4, 6)).first);
        CHECK(family_C(n).second == b.second);
    }
}

TEST_CASE("deleting from A pairs gives smaller A pairs") {
    for (int n = 4; n <= 20; ++n) {
        const int one[] = {1};
        CHECK(pair_dihedral_class(delete_seq(family_A(n), one)) == pair_dihedral_class(family_A(n - 1)));
    }
    for (int n = 6; n <= 20; ++n) {
        const int two[] = {3, 1};
        CHECK(pair_dihedral_class(delete_seq(family_A(n), two)) == pair_dihedral_class(family_A(n - 2)));
    }
    for (int n = 12; n <= 18; ++n) {
        const int five[] = {4, 5, 0, 1, 2};
        const int four[] = {4, 0, 1, 2};
        CHECK(pair_dihedral_class(delete_seq(family_B(n), five)) == pair_dihedral_class(family_A(n - 5)));
        CHECK(pair_dihedral_class(delete_seq(family_C(n), four)) == pair_dihedral_class(family_A(n - 4)));
    }
}

TEST_CASE("the D pair carries the witness flip lists") {
    for (int n = 20; n <= 24; ++n) {
        CAPTURE(n);
        const FlipLists lists = prop11_lists(n);
        REQUIRE(lists.first.size() == 14);
        REQUIRE(lists.second.size() == 17);
        const TriangulationPair d = family_D(n);
        for (const Edge& e : lists.first) CHECK(d.first.has_interior(e));
        int present = 0;
        for (const Edge& e : lists.second) present += d.second.has_interior(e) ? 1 : 0;
        // One edge of the second list only appears after an earlier flip.
        CHECK(present == 16);
        CHECK_FALSE(d.second.has_interior(Edge(5, n - 7)));
        CHECK(crosses(n, Edge(4, n - 8), Edge(5, n - 7)));
        CHECK_NOTHROW(apply_flips(d.first, lists.first));
        const FlipPath v = apply_flips(d.second, lists.second);
        CHECK(v.steps()[11].has_interior(Edge(5, n - 7)));
    }
}
