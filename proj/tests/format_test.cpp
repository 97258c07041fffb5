#include <doctest.h>

#include "assoc/error.hpp"
#include "assoc/format.hpp"
#include "assoc/polygon.hpp"

using namespace assoc;

TEST_CASE("text form") {
    const Triangulation f = fan(5, 0);
    CHECK(to_text(f) == "n=5;interior=0-2,0-3");
    CHECK(parse_text(" n=5;interior=0-2,0-3\n") == f);
    CHECK(to_text(Triangulation::from_interior(3, std::span<const Edge>{})) == "n=3;interior=");
    CHECK(parse_text("n=3;interior=").size() == 3);
}

TEST_CASE("json form") {
    const Triangulation f = fan(5, 0);
    CHECK(to_json(f) == R"({"n":5,"interior":[[0,2],[0,3]]})");
    CHECK(parse_json(R"({"interior":[[0,3],[0,2]],"n":5})") == f);
}

TEST_CASE("round trips for random triangulations") {
    for (int n = 3; n <= kMaxVertices; ++n) {
        const Triangulation t = uniform_random(n, 1000 + n);
        CHECK(parse_text(to_text(t)) == t);
        CHECK(parse_json(to_json(t)) == t);
        CHECK(parse_triangulation(to_text(t)) == t);
        CHECK(parse_triangulation("  " + to_json(t)) == t);
    }
}

TEST_CASE("malformed input is rejected") {
    for (const char* bad : {"", "n=5", "n=5;edges=0-2,0-3", "n=5;interior=0-2,", "n=5;interior=2-0,0-3",
                            "n=5;interior=0-2,1-3", "n=5;interior=0-2", "n=x;interior=0-2,0-3",
                            "n=5;interior=0-2,0-3,0-3", "n=40;interior="}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_triangulation(bad), InvalidInput);
    }
    for (const char* bad : {"{", R"({"n":5})", R"({"n":5,"interior":[[0,2]]})", R"({"n":"5","interior":[]})",
                            R"({"n":5,"interior":[[0,2,3],[0,3]]})", "[1,2]"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_json(bad), InvalidInput);
    }
}
