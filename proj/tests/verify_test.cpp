#include <doctest.h>

#include <json.hpp>

#include "assoc/error.hpp"
#include "assoc/verify.hpp"

using namespace assoc;

TEST_CASE("flip lists are instantiated per polygon size") {
    const FlipLists l = prop11_lists(20);
    REQUIRE(l.first.size() == 14);
    REQUIRE(l.second.size() == 17);
    CHECK(l.first.front() == Edge(2, 19));
    CHECK(l.first.back() == Edge(9, 13));
    CHECK(l.second.front() == Edge(2, 14));
    CHECK(l.second.back() == Edge(6, 11));
}

TEST_CASE("witness paths for the D pair") {
    CHECK_THROWS_AS(prop11_witness(19), SizeError);
    for (int n = 20; n <= 26; ++n) {
        const CheckResult r = prop11_witness(n);
        CAPTURE(r.observed);
        CHECK(r.status == CheckStatus::pass);
    }
}

TEST_CASE("small tables all pass") {
    VerifyOptions o;
    o.diameter_max_n = 10;
    const auto results = check_small_tables(o);
    for (const CheckResult& r : results) {
        CAPTURE(r.name);
        CAPTURE(r.observed);
        CHECK(r.status == CheckStatus::pass);
    }
    // 6 A values, 8 B/C values, 8 diameters, 7 mismatch rows, 11 D values.
    CHECK(results.size() == 40);
}

TEST_CASE("unobserved hypotheses are skipped, not passed") {
    const auto results = check_recursion(10, {});
    bool saw_vacuous = false;
    for (const CheckResult& r : results) {
        CHECK(r.status != CheckStatus::fail);
        if (r.name == "recursion.one_step.n09") {
            CHECK(r.status == CheckStatus::skipped_vacuous);
            saw_vacuous = true;
        }
    }
    CHECK(saw_vacuous);
}

TEST_CASE("tight budgets become skips") {
    VerifyOptions o;
    o.budget.max_nodes = 20;
    o.diameter_max_n = 9;
    const auto results = check_small_tables(o);
    int budget_skips = 0;
    for (const CheckResult& r : results) {
        CHECK(r.status != CheckStatus::fail);
        budget_skips += r.status == CheckStatus::skipped_budget ? 1 : 0;
    }
    CHECK(budget_skips > 0);
}

TEST_CASE("reports") {
    std::vector<CheckResult> rs{{"b", CheckStatus::fail, "1", "2", "x"},
                                {"a", CheckStatus::pass, "1", "1", "y"},
                                {"c", CheckStatus::skipped_vacuous, "", "", "z"}};
    rs = sorted(rs);
    CHECK(rs.front().name == "a");
    CHECK(exit_code(rs) == 1);
    const std::string text = report_text(rs);
    CHECK(text.find("fail b: expected 1, observed 2\n") != std::string::npos);
    CHECK(text.ends_with("summary: 1 pass, 1 fail, 1 skipped\n"));
    const auto j = nlohmann::json::parse(report_json(rs));
    CHECK(j["checks"].size() == 3);
    CHECK(j["checks"][2]["status"] == "skipped-hypothesis");
    CHECK(j["failures"] == 1);

    std::vector<CheckResult> many(300, CheckResult{"f", CheckStatus::fail, "", "", ""});
    CHECK(exit_code(many) == 125);
    CHECK(to_string(CheckStatus::skipped_budget) == "skipped-budget");
}
