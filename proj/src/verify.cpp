#include "assoc/verify.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string_view>

#include <json.hpp>

#include "assoc/deletion.hpp"
#include "assoc/distance.hpp"
#include "assoc/families.hpp"
#include "assoc/flipgraph.hpp"

namespace assoc {

namespace detail {
extern const std::string_view kDPairFlips;
}

namespace {

std::string padded(int n) { return (n < 10 ? "n0" : "n") + std::to_string(n); }

CheckResult result(std::string name, bool ok, std::string expected, std::string observed, std::string basis) {
    return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(expected),
            std::move(observed), std::move(basis)};
}

CheckResult skipped(std::string name, CheckStatus why, std::string expected, std::string observed,
                    std::string basis) {
    return {std::move(name), why, std::move(expected), std::move(observed), std::move(basis)};
}

// Exact distances of named pairs, computed once per run.
class PairDistances {
public:
    explicit PairDistances(const Budget& budget) : budget_(budget) {}

    std::optional<int> get(Family tag, int n) {
        const auto key = std::make_pair(static_cast<int>(tag), n);
        if (const auto it = cache_.find(key); it != cache_.end()) return it->second;
        std::optional<int> d;
        try {
            const TriangulationPair p = family(FamilyId{tag, n});
            d = distance(p.first, p.second, budget_);
        } catch (const ResourceError&) {
        }
        cache_[key] = d;
        return d;
    }

private:
    Budget budget_;
    std::map<std::pair<int, int>, std::optional<int>> cache_;
};

std::optional<int> try_theta(const TriangulationPair& p, int a, const Budget& budget) {
    try {
        return theta(p, a, budget);
    } catch (const ResourceError&) {
        return std::nullopt;
    }
}

std::string show(std::optional<int> v) { return v ? std::to_string(*v) : "unknown"; }

// A check whose input distance did not fit the budget is a skip, not a failure.
CheckResult unless_unknown(std::optional<int> value, CheckResult r) {
    if (!value) {
        r.status = CheckStatus::skipped_budget;
        r.observed = "budget exhausted";
    }
    return r;
}

// Outcome counter for exhaustive or sampled property runs.
struct Tally {
    std::size_t cases = 0;
    std::size_t hypotheses = 0;
    std::size_t violations = 0;
    std::string first_violation;

    void fail(const std::string& what) {
        if (violations++ == 0) first_violation = what;
    }

    CheckResult finish(std::string name, std::string basis, bool implication = false) const {
        std::string observed = std::to_string(violations) + " violations in " + std::to_string(cases) + " cases";
        if (implication) observed += " (" + std::to_string(hypotheses) + " with the hypothesis)";
        if (violations) observed += "; first: " + first_violation;
        if (implication && hypotheses == 0) {
            return skipped(std::move(name), CheckStatus::skipped_vacuous, "0 violations", observed, std::move(basis));
        }
        return result(std::move(name), violations == 0, "0 violations", observed, std::move(basis));
    }
};

std::string describe(const Triangulation& u, const Triangulation& v) {
    std::string s = "U={";
    for (const Edge& e : u.interior()) s += to_string(e) + " ";
    s += "} V={";
    for (const Edge& e : v.interior()) s += to_string(e) + " ";
    return s + "}";
}

class Tables {
public:
    explicit Tables(const Budget& budget) : budget_(budget) {}
    const AllPairs& at(int n) {
        auto& slot = tables_[n];
        if (!slot) slot = std::make_unique<AllPairs>(n, budget_);
        return *slot;
    }

private:
    Budget budget_;
    std::map<int, std::unique_ptr<AllPairs>> tables_;
};

int key_flip_count(const CanonicalKey& x, const CanonicalKey& y) {
    int c = 0;
    for (std::size_t w = 0; w < kKeyWords; ++w) c += std::popcount(x.words()[w] & ~y.words()[w]);
    return c;
}

}  // namespace

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped_budget: return "skipped-budget";
        case CheckStatus::skipped_vacuous: return "skipped-hypothesis";
    }
    return "unknown";
}

// --- Distance tables -----------------------------------------------------------------

std::vector<CheckResult> check_small_tables(const VerifyOptions& options) {
    std::vector<CheckResult> out;
    PairDistances dist(options.budget);

    const int a_small[] = {0, 1, 2, 4, 5, 7};
    for (int n = 3; n <= 8; ++n) {
        const auto d = dist.get(Family::A, n);
        out.push_back(unless_unknown(d, result("a_pair.distance." + padded(n), d == a_small[n - 3],
                                               std::to_string(a_small[n - 3]), show(d),
                                               "exact distance of the A pair on small polygons")));
    }

    for (int n = 8; n <= 11; ++n) {
        for (Family tag : {Family::B, Family::C}) {
            const auto d = dist.get(tag, n);
            const bool exact = n == 8;
            const bool ok = d && (exact ? *d == 5 : *d >= 2 * n - 11);
            const std::string name = std::string(tag == Family::B ? "b_pair" : "c_pair") + ".distance." + padded(n);
            out.push_back(unless_unknown(d, result(name, ok, exact ? "5" : ">= " + std::to_string(2 * n - 11),
                                                   show(d), "distance of the auxiliary pair is at least 2n-11")));
        }
    }

    const int diameters[] = {0, 1, 2, 4, 5, 7, 9, 11, 12, 15};
    std::map<int, int> diam;
    DiameterOptions dopt;
    dopt.budget = options.budget;
    dopt.threads = options.threads;
    for (int n = 3; n <= std::min(options.diameter_max_n, 12); ++n) {
        try {
            const DiameterRow row = diameter(n, dopt);
            diam[n] = row.diameter;
            out.push_back(result("diameter." + padded(n), row.diameter == diameters[n - 3],
                                 std::to_string(diameters[n - 3]), std::to_string(row.diameter),
                                 "flip-graph diameter for dimension " + std::to_string(n - 3)));
        } catch (const ResourceError& e) {
            out.push_back(skipped("diameter." + padded(n), CheckStatus::skipped_budget,
                                  std::to_string(diameters[n - 3]), e.what(), "flip-graph diameter"));
        }
    }
    if (options.stretch) {
        for (int n = 13; n <= 15; ++n) {
            try {
                const DiameterRow row = diameter(n, dopt);
                out.push_back(result("diameter." + padded(n), row.diameter == row.two_d_minus_4,
                                     std::to_string(row.two_d_minus_4), std::to_string(row.diameter),
                                     "flip-graph diameter equals 2d-4"));
            } catch (const ResourceError& e) {
                out.push_back(skipped("diameter." + padded(n), CheckStatus::skipped_budget,
                                      std::to_string(2 * (n - 3) - 4), e.what(), "flip-graph diameter equals 2d-4"));
            }
        }
    }

    for (int d = 1; d <= 9; ++d) {
        const int n = d + 3;
        if (!diam.contains(n)) continue;
        const auto delta = dist.get(Family::A, n);
        const bool gap = d == 6 || d == 7 || d == 9;
        const int expected = diam[n] - (gap ? 1 : 0);
        out.push_back(unless_unknown(
            delta, result("a_pair.versus_diameter.d" + std::to_string(d), delta == expected,
                          std::to_string(expected) + (gap ? " (diameter - 1)" : " (diameter)"), show(delta),
                          "the A pair realizes the diameter except in dimensions 6, 7 and 9")));
    }

    for (int n = 3; n <= 13; ++n) {
        const auto d = dist.get(Family::D, n);
        out.push_back(d ? result("d_pair.distance." + padded(n), true, "recorded", std::to_string(*d),
                                 "exact distance of the D pair, recorded as data")
                        : skipped("d_pair.distance." + padded(n), CheckStatus::skipped_budget, "recorded",
                                  "budget exhausted", "exact distance of the D pair"));
    }
    return out;
}

// --- Recursive inequality --------------------------------------------------------------

std::vector<CheckResult> check_recursion(int n_max, const VerifyOptions& options) {
    std::vector<CheckResult> out;
    PairDistances dist(options.budget);
    auto A = [&](int n) { return dist.get(Family::A, n); };

    for (int n = 9; n <= n_max; ++n) {
        const auto d = A(n);
        if (!d) {
            out.push_back(skipped("a_pair.distance." + padded(n), CheckStatus::skipped_budget,
                                  std::to_string(2 * n - 10), "budget exhausted", "distance of the A pair is 2n-10"));
            continue;
        }
        out.push_back(result("a_pair.distance." + padded(n), *d == 2 * n - 10, std::to_string(2 * n - 10),
                             std::to_string(*d), "distance of the A pair is 2n-10"));
    }

    for (int n = 13; n <= n_max; ++n) {
        const auto d = A(n), d1 = A(n - 1), d2 = A(n - 2), d5 = A(n - 5), d6 = A(n - 6);
        const std::string name = "recursion.min_bound." + padded(n);
        const std::string basis = "d(A_n) >= min(d(A_n-1)+2, d(A_n-2)+4, d(A_n-5)+10, d(A_n-6)+12)";
        if (!d || !d1 || !d2 || !d5 || !d6) {
            out.push_back(skipped(name, CheckStatus::skipped_budget, "inequality", "budget exhausted", basis));
            continue;
        }
        const int rhs = std::min({*d1 + 2, *d2 + 4, *d5 + 10, *d6 + 12});
        out.push_back(result(name, *d >= rhs, ">= " + std::to_string(rhs), std::to_string(*d), basis));
    }

    for (int n = 8; n <= n_max; ++n) {
        const auto d = A(n), d1 = A(n - 1), d2 = A(n - 2);
        const auto b1 = dist.get(Family::B, n - 1), c1 = dist.get(Family::C, n - 1);
        const std::string basis4 = "d(A_n) >= min(d(A_n-1)+2, d(A_n-2)+4, d(B_n-1)+3, d(C_n-1)+3)";
        if (d && d1 && d2 && b1 && c1) {
            const int rhs = std::min({*d1 + 2, *d2 + 4, *b1 + 3, *c1 + 3});
            out.push_back(result("recursion.four_way_min." + padded(n), *d >= rhs, ">= " + std::to_string(rhs),
                                 std::to_string(*d), basis4));
        } else {
            out.push_back(skipped("recursion.four_way_min." + padded(n), CheckStatus::skipped_budget, "inequality",
                                  "budget exhausted", basis4));
        }

        const TriangulationPair a = family_A(n);
        const auto t1 = try_theta(a, 1, options.budget);
        const auto t3 = try_theta(a, 3, options.budget);
        const std::string thetas = "theta(A_n,1)=" + show(t1) + " theta(A_n,3)=" + show(t3);

        const std::string basis7 = "theta(A_n,1) >= 2 implies d(A_n) >= d(A_n-1)+2";
        if (!t1 || !d || !d1) {
            out.push_back(skipped("recursion.one_step." + padded(n), CheckStatus::skipped_budget, "implication",
                                  thetas, basis7));
        } else if (*t1 >= 2) {
            out.push_back(result("recursion.one_step." + padded(n), *d >= *d1 + 2, ">= " + std::to_string(*d1 + 2),
                                 std::to_string(*d) + "; " + thetas, basis7));
        } else {
            out.push_back(skipped("recursion.one_step." + padded(n), CheckStatus::skipped_vacuous, "implication",
                                  thetas, basis7));
        }

        const std::string basis8 = "theta(A_n,3) >= 3 implies d(A_n) >= d(A_n-2)+4";
        if (!t3 || !d || !d2) {
            out.push_back(skipped("recursion.two_step." + padded(n), CheckStatus::skipped_budget, "implication",
                                  thetas, basis8));
        } else if (*t3 >= 3) {
            out.push_back(result("recursion.two_step." + padded(n), *d >= *d2 + 4, ">= " + std::to_string(*d2 + 4),
                                 std::to_string(*d) + "; " + thetas, basis8));
        } else {
            out.push_back(skipped("recursion.two_step." + padded(n), CheckStatus::skipped_vacuous, "implication",
                                  thetas, basis8));
        }

        const std::string basis9 =
            "theta(A_n,1) <= 1 and theta(A_n,3) <= 2 imply some P in {B_n-1, C_n-1} with d(P) = d(A_n)-3 and "
            "theta(P,3) <= 1";
        if (!t1 || !t3 || !d) {
            out.push_back(skipped("recursion.bc_reduction." + padded(n), CheckStatus::skipped_budget, "implication",
                                  thetas, basis9));
        } else if (*t1 <= 1 && *t3 <= 2) {
            bool found = false;
            bool unknown = false;
            std::string seen;
            for (Family tag : {Family::B, Family::C}) {
                const auto dp = dist.get(tag, n - 1);
                const auto tp = try_theta(family(FamilyId{tag, n - 1}), 3, options.budget);
                seen += std::string(tag == Family::B ? " B:" : " C:") + show(dp) + "/theta3=" + show(tp);
                if (!dp || !tp) unknown = true;
                if (dp && tp && *dp == *d - 3 && *tp <= 1) found = true;
            }
            if (!found && unknown) {
                out.push_back(skipped("recursion.bc_reduction." + padded(n), CheckStatus::skipped_budget,
                                      "implication", thetas + ";" + seen, basis9));
            } else {
                out.push_back(result("recursion.bc_reduction." + padded(n), found,
                                     "d(P) = " + std::to_string(*d - 3) + ", theta(P,3) <= 1", thetas + ";" + seen,
                                     basis9));
            }
        } else {
            out.push_back(skipped("recursion.bc_reduction." + padded(n), CheckStatus::skipped_vacuous,
                                  "implication", thetas, basis9));
        }
    }

    for (int n = 12; n < n_max; ++n) {
        const TriangulationPair b = family_B(n);
        const TriangulationPair c = family_C(n);
        const auto db = dist.get(Family::B, n), dc = dist.get(Family::C, n);
        const auto tb = try_theta(b, 3, options.budget);
        const auto tc = try_theta(c, 3, options.budget);

        const std::string basis_deletions = "theta(B_n,3) <= 1 implies d(B_n) >= d(B_n - 4 - 5)+4";
        const std::string basis_b = "theta(B_n,3) <= 1 implies d(B_n) >= d(A_n-5)+9";
        const std::string basis_c = "theta(C_n,3) <= 1 implies d(C_n) >= d(A_n-4)+7";
        const std::string tbs = "theta(B_n,3)=" + show(tb);
        const std::string tcs = "theta(C_n,3)=" + show(tc);

        if (!tb || !db) {
            out.push_back(skipped("recursion.b_two_deletions." + padded(n), CheckStatus::skipped_budget,
                                  "implication", tbs, basis_deletions));
            out.push_back(skipped("recursion.b_bound." + padded(n), CheckStatus::skipped_budget, "implication", tbs,
                                  basis_b));
        } else if (*tb <= 1) {
            const int vs[] = {4, 5};
            const TriangulationPair r = delete_seq(b, vs);
            std::optional<int> dr;
            try {
                dr = distance(r.first, r.second, options.budget);
            } catch (const ResourceError&) {
            }
            out.push_back(unless_unknown(dr, result("recursion.b_two_deletions." + padded(n), dr && *db >= *dr + 4,
                                                    ">= " + show(dr ? std::optional<int>(*dr + 4) : std::nullopt),
                                                    std::to_string(*db) + "; " + tbs, basis_deletions)));
            const auto da = A(n - 5);
            out.push_back(unless_unknown(da, result("recursion.b_bound." + padded(n), da && *db >= *da + 9,
                                                    ">= " + show(da ? std::optional<int>(*da + 9) : std::nullopt),
                                                    std::to_string(*db) + "; " + tbs, basis_b)));
        } else {
            out.push_back(skipped("recursion.b_two_deletions." + padded(n), CheckStatus::skipped_vacuous,
                                  "implication", tbs, basis_deletions));
            out.push_back(skipped("recursion.b_bound." + padded(n), CheckStatus::skipped_vacuous, "implication", tbs,
                                  basis_b));
        }

        if (!tc || !dc) {
            out.push_back(skipped("recursion.c_bound." + padded(n), CheckStatus::skipped_budget, "implication", tcs,
                                  basis_c));
        } else if (*tc <= 1) {
            const auto da = A(n - 4);
            out.push_back(unless_unknown(da, result("recursion.c_bound." + padded(n), da && *dc >= *da + 7,
                                                    ">= " + show(da ? std::optional<int>(*da + 7) : std::nullopt),
                                                    std::to_string(*dc) + "; " + tcs, basis_c)));
        } else {
            out.push_back(skipped("recursion.c_bound." + padded(n), CheckStatus::skipped_vacuous, "implication", tcs,
                                  basis_c));
        }
    }
    return out;
}

// --- Explicit witness paths for the D pair -------------------------------------------------

FlipLists prop11_lists(int n) {
    auto endpoint = [n](std::string_view s) {
        int k = 0;
        const bool symbolic = s.starts_with("n-");
        if (symbolic) s.remove_prefix(2);
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), k);
        if (ec != std::errc{} || ptr != s.data() + s.size()) throw std::logic_error("malformed flip-list data");
        return symbolic ? n - k : k;
    };
    FlipLists lists;
    std::istringstream in{std::string(detail::kDPairFlips)};
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line.front() == '#') continue;
        std::istringstream tokens(line);
        std::string tag, item;
        tokens >> tag;
        std::vector<Edge>* target = tag == "first" ? &lists.first : tag == "second" ? &lists.second : nullptr;
        if (!target) throw std::logic_error("unknown flip-list tag '" + tag + "'");
        while (tokens >> item) {
            const auto comma = item.find(',');
            if (comma == std::string::npos) throw std::logic_error("malformed flip-list edge '" + item + "'");
            target->emplace_back(endpoint(std::string_view(item).substr(0, comma)),
                                 endpoint(std::string_view(item).substr(comma + 1)));
        }
    }
    return lists;
}

CheckResult prop11_witness(int n) {
    if (n < 20) throw SizeError("the D-pair witness paths need n >= 20");
    const std::string name = "d_pair.witness." + padded(n);
    const std::string basis = "14 + 17 explicit flips reduce the D pair on n vertices to the D pair on n-16";
    const FlipLists lists = prop11_lists(n);
    const TriangulationPair d = family_D(n);

    FlipPath u(d.first), v(d.second);
    try {
        u = apply_flips(d.first, lists.first);
    } catch (const FlipSequenceError& e) {
        return result(name, false, "all flips valid", std::string("first list: ") + e.what(), basis);
    }
    try {
        v = apply_flips(d.second, lists.second);
    } catch (const FlipSequenceError& e) {
        return result(name, false, "all flips valid", std::string("second list: ") + e.what(), basis);
    }
    if (u.length() != 14 || v.length() != 17) {
        return result(name, false, "14 and 17 flips",
                      std::to_string(u.length()) + " and " + std::to_string(v.length()), basis);
    }

    const auto shared = common_interior(u.steps()[7], v.steps()[7]).size();
    if (shared != 7) {
        return result(name, false, "7 common edges after 7 flips each", std::to_string(shared), basis);
    }

    const Triangulation& uf = u.back();
    const Triangulation& vf = v.back();
    const int lo = 8, hi = n - 9;
    auto inside = [&](const Edge& e) { return e.a >= lo && e.b <= hi; };
    for (const Triangulation* t : {&uf, &vf}) {
        for (const Edge& e : t->interior()) {
            if (!inside(e) && !(uf.has_interior(e) && vf.has_interior(e))) {
                return result(name, false, "edges outside [8, n-9] shared", "unshared edge " + to_string(e), basis);
            }
        }
    }
    if (!uf.has_interior(Edge(lo, hi)) || !vf.has_interior(Edge(lo, hi))) {
        return result(name, false, "edge 8-(n-9) shared", "missing", basis);
    }
    auto restrict = [&](const Triangulation& t) {
        std::vector<Edge> edges;
        for (const Edge& e : t.interior()) {
            if (inside(e) && e != Edge(lo, hi)) edges.emplace_back(e.a - lo, e.b - lo);
        }
        return Triangulation::from_interior(hi - lo + 1, edges);
    };
    const TriangulationPair restricted(restrict(uf), restrict(vf));
    const TriangulationPair smaller = family_D(n - 16);
    if (pair_dihedral_class(restricted) != pair_dihedral_class(smaller)) {
        return result(name, false, "restriction isomorphic to D_" + std::to_string(n - 16), "not isomorphic", basis);
    }
    return result(name, true, "d(D_n) <= d(D_n-16) + 31",
                  "14 + 17 flips replayed; 7 shared edges at step 7; restriction isomorphic to D_" +
                      std::to_string(n - 16),
                  basis);
}

// --- Property suite ---------------------------------------------------------------------

namespace {

void run_properties(std::vector<CheckResult>& out, int n_max, std::uint64_t seed, const VerifyOptions& options) {
    std::mt19937_64 rng(seed);
    Tables tables(options.budget);
    const int exhaustive8 = std::min(8, n_max);

    // Deleting a vertex costs at least theta flips.
    {
        Tally t;
        for (int n = 4; n <= exhaustive8; ++n) {
            const AllPairs& big = tables.at(n);
            const AllPairs& small = tables.at(n - 1);
            const FlipGraph& g = big.graph();
            for (std::size_t i = 0; i < g.size(); ++i) {
                for (std::size_t j = i; j < g.size(); ++j) {
                    for (int a = 0; a < n; ++a) {
                        ++t.cases;
                        const int th = big.theta(i, j, a);
                        const Triangulation du = delete_vertex(g.at(i), a).first;
                        const Triangulation dv = delete_vertex(g.at(j), a).first;
                        if (big.distance(i, j) < small.distance(du, dv) + th) {
                            t.fail(describe(g.at(i), g.at(j)) + " a=" + std::to_string(a));
                        }
                    }
                }
            }
        }
        for (int n = 9; n <= std::min(10, n_max); ++n) {
            for (int k = 0; k < 1000; ++k) {
                const Triangulation u = uniform_random(n, rng());
                const Triangulation v = uniform_random(n, rng());
                const int a = static_cast<int>(rng() % n);
                ++t.cases;
                const auto th = try_theta({u, v}, a, options.budget);
                if (!th) continue;
                const Triangulation du = delete_vertex(u, a).first;
                const Triangulation dv = delete_vertex(v, a).first;
                if (distance(u, v, options.budget) < distance(du, dv, options.budget) + *th) {
                    t.fail(describe(u, v) + " a=" + std::to_string(a));
                }
            }
        }
        out.push_back(t.finish("property.deletion_inequality",
                               "d(P) >= d(P - a) + theta(P, a); exhaustive n <= 8, 10^3 samples each at n = 9, 10"));
    }

    // theta from the geodesic DAG agrees with the table route.
    {
        Tally t;
        for (int n = 4; n <= exhaustive8; ++n) {
            const AllPairs& table = tables.at(n);
            const FlipGraph& g = table.graph();
            for (std::size_t i = 0; i < g.size(); ++i) {
                for (std::size_t j = 0; j < g.size(); ++j) {
                    const GeodesicDag dag = geodesic_dag(g.at(i), g.at(j), options.budget);
                    for (int a = 0; a < n; ++a) {
                        ++t.cases;
                        if (dag.max_incident_flips(a) != table.theta(i, j, a)) {
                            t.fail(describe(g.at(i), g.at(j)) + " a=" + std::to_string(a));
                        }
                    }
                }
            }
        }
        out.push_back(t.finish("property.theta_routes_agree", "DAG and distance-table theta coincide, n <= 8"));
    }

    // Projection of random paths.
    {
        Tally t;
        for (int k = 0; k < 10000; ++k) {
            const int n = 5 + k % 5;
            FlipPath p(uniform_random(n, rng()));
            const int len = static_cast<int>(rng() % (2 * n + 1));
            for (int s = 0; s < len; ++s) {
                const auto edges = p.back().interior();
                p.push(edges[rng() % edges.size()]);
            }
            const int a = static_cast<int>(rng() % n);
            int incident = 0;
            for (const Flip& f : p.flips()) incident += flip_incident(n, f, a) ? 1 : 0;
            int recount = 0;
            for (std::size_t s = 0; s + 1 < p.steps().size(); ++s) {
                recount += is_incident(p.steps()[s], p.steps()[s + 1], Edge(a, (a + 1) % n)) ? 1 : 0;
            }
            const FlipPath q = project_path(p, a);
            ++t.cases;
            const bool ok = incident == recount && q.valid() &&
                            static_cast<int>(q.length()) == len - incident &&
                            q.front() == delete_vertex(p.front(), a).first &&
                            q.back() == delete_vertex(p.back(), a).first;
            if (!ok) t.fail("n=" + std::to_string(n) + " a=" + std::to_string(a) + " len=" + std::to_string(len));
        }
        out.push_back(t.finish("property.projection_length",
                               "deleting a shortens a path by its incident flips; 10^4 random paths, n = 5..9"));
    }

    // Table-based prefix properties.
    {
        Tally forced, single, twice;
        for (int n = 4; n <= exhaustive8; ++n) {
            const AllPairs& table = tables.at(n);
            const FlipGraph& g = table.graph();
            const int dn = diagonal_count(n);
            for (std::size_t i = 0; i < g.size(); ++i) {
                for (std::size_t j = 0; j < g.size(); ++j) {
                    const int total = table.distance(i, j);
                    std::vector<std::size_t> geo;
                    for (std::size_t x = 0; x < g.size(); ++x) {
                        if (table.distance(i, x) + table.distance(x, j) == total) geo.push_back(x);
                    }
                    auto on_geodesic_with = [&](const CanonicalKey& need) {
                        for (std::size_t x : geo) {
                            if (key_flip_count(need, g.keys()[x]) == 0) return true;
                        }
                        return false;
                    };
                    const Triangulation u = g.at(i);
                    const Triangulation v = g.at(j);
                    for (std::uint32_t y : g.neighbors(i)) {
                        const Edge in1 = diagonal_at(n, [&] {
                            for (int bit = 0; bit < dn; ++bit) {
                                if (g.keys()[y].test(bit) && !g.keys()[i].test(bit)) return bit;
                            }
                            return 0;
                        }());
                        CanonicalKey need1;
                        need1.set(diagonal_index(n, in1));
                        if (v.has_interior(in1)) {
                            ++forced.cases;
                            ++forced.hypotheses;
                            if (table.distance(y, j) != total - 1) forced.fail(describe(u, v));
                        }
                        ++single.cases;
                        if (on_geodesic_with(need1)) {
                            ++single.hypotheses;
                            if (table.distance(y, j) != total - 1) single.fail(describe(u, v));
                        }
                        for (std::uint32_t z : g.neighbors(y)) {
                            CanonicalKey need2 = need1;
                            for (int bit = 0; bit < dn; ++bit) {
                                if (g.keys()[z].test(bit) && !g.keys()[y].test(bit)) need2.set(bit);
                            }
                            ++twice.cases;
                            if (on_geodesic_with(need2)) {
                                ++twice.hypotheses;
                                if (table.distance(z, j) != total - 2) twice.fail(describe(u, v));
                            }
                        }
                    }
                }
            }
        }
        out.push_back(forced.finish("property.forced_flip",
                                    "a flip introducing an edge of V starts a geodesic; exhaustive n <= 8", true));
        out.push_back(single.finish(
            "property.prefix_one_flip",
            "a flip introducing an edge of a geodesic triangulation starts a geodesic; exhaustive n <= 8", true));
        out.push_back(twice.finish(
            "property.prefix_two_flips",
            "a prefix whose introduced edges all lie in a geodesic triangulation extends to a geodesic; n <= 8",
            true));
    }

    // The library's prefix check on sampled larger pairs.
    {
        Tally t;
        for (int n = 9; n <= std::min(10, n_max); ++n) {
            for (int k = 0; k < 1000; ++k) {
                const Triangulation u = uniform_random(n, rng());
                const Triangulation v = uniform_random(n, rng());
                FlipPath prefix(u);
                const int len = 1 + static_cast<int>(rng() % 3);
                for (int s = 0; s < len; ++s) {
                    // Prefer flips towards v so the hypothesis is observed often.
                    std::vector<Edge> good;
                    prefix.back().for_each_flip([&](Edge removed, Edge introduced) {
                        if (v.has_interior(introduced)) good.push_back(removed);
                    });
                    const auto all = prefix.back().interior();
                    prefix.push(!good.empty() && rng() % 4 ? good[rng() % good.size()] : all[rng() % all.size()]);
                }
                ++t.cases;
                const PrefixCheck c = check_prefix_theorem(u, v, prefix, options.budget);
                if (c.hypothesis) {
                    ++t.hypotheses;
                    if (!c.holds) t.fail(describe(u, v));
                }
            }
        }
        out.push_back(t.finish("property.prefix_sampled", "prefix property via geodesic DAGs; 10^3 samples each at n = 9, 10", true));
    }

    // Common edges persist along geodesics.
    {
        Tally t;
        for (int n = 4; n <= exhaustive8; ++n) {
            const FlipGraph& g = tables.at(n).graph();
            for (std::size_t i = 0; i < g.size(); ++i) {
                for (std::size_t j = 0; j < g.size(); ++j) {
                    const Triangulation u = g.at(i), v = g.at(j);
                    const GeodesicDag dag = geodesic_dag(u, v, options.budget);
                    const auto common = common_interior(u, v);
                    for (const auto& layer : dag.layers) {
                        for (const CanonicalKey& key : layer) {
                            ++t.cases;
                            for (const Edge& e : common) {
                                if (!key.test(diagonal_index(n, e))) {
                                    t.fail(describe(u, v));
                                    break;
                                }
                            }
                        }
                    }
                }
            }
        }
        out.push_back(t.finish("property.common_edges_persist",
                               "every triangulation on a geodesic contains the common edges; exhaustive n <= 8"));
    }

    // Two-link configurations.
    {
        Tally crossing, adjacent;
        for (int n = 4; n <= exhaustive8; ++n) {
            const AllPairs& table = tables.at(n);
            const FlipGraph& g = table.graph();
            for (std::size_t i = 0; i < g.size(); ++i) {
                const Triangulation u = g.at(i);
                for (std::size_t j = 0; j < g.size(); ++j) {
                    const Triangulation v = g.at(j);
                    std::vector<int> th(n);
                    for (int a = 0; a < n; ++a) th[a] = -1;
                    auto theta_at = [&](int a) {
                        if (th[a] < 0) th[a] = table.theta(i, j, a);
                        return th[a];
                    };
                    for (int a = 0; a < n; ++a) {
                        const int b = (a + 1) % n;
                        const int x = u.link(Edge(a, b)), xv = v.link(Edge(a, b));
                        for (int c = 0; c < n; ++c) {
                            if (c == a) continue;
                            const int d = (c + 1) % n;
                            const int y = u.link(Edge(c, d)), yv = v.link(Edge(c, d));
                            ++crossing.cases;
                            if (Edge(a, x) != Edge(c, y) && crosses(n, Edge(a, x), Edge(d, yv)) &&
                                crosses(n, Edge(c, y), Edge(b, xv))) {
                                ++crossing.hypotheses;
                                if (theta_at(a) < 2 && theta_at(c) < 2) {
                                    crossing.fail(describe(u, v) + " a=" + std::to_string(a) +
                                                  " c=" + std::to_string(c));
                                }
                            }
                        }
                        const int c = (a + 2) % n;
                        const int y = u.link(Edge(b, c));
                        ++adjacent.cases;
                        const int four[] = {a, c, x, y};
                        bool distinct = true;
                        for (int p = 0; p < 4; ++p) {
                            for (int q = p + 1; q < 4; ++q) distinct &= four[p] != four[q];
                        }
                        if (distinct && v.contains(Edge(a, c))) {
                            ++adjacent.hypotheses;
                            if (theta_at(a) < 2 && theta_at(b) < 2) {
                                adjacent.fail(describe(u, v) + " a=" + std::to_string(a));
                            }
                        }
                    }
                }
            }
        }
        out.push_back(crossing.finish("property.crossing_links",
                                      "crossing link edges force theta >= 2 at a or c; exhaustive n <= 8", true));
        out.push_back(adjacent.finish("property.adjacent_links",
                                      "a chord {a, a+2} of V over distinct U-links forces theta >= 2 at a or a+1; "
                                      "exhaustive n <= 8",
                                      true));
    }

    // Three deletions gain five flips.
    {
        Tally t;
        for (int n = 6; n <= std::min(9, n_max); ++n) {
            const AllPairs& table = tables.at(n);
            const AllPairs& small = tables.at(n - 3);
            const FlipGraph& g = table.graph();
            for (std::size_t i = 0; i < g.size(); ++i) {
                const Triangulation u = g.at(i);
                for (std::size_t j = 0; j < g.size(); ++j) {
                    const Triangulation v = g.at(j);
                    for (int a = 0; a < n; ++a) {
                        const int b = (a + 1) % n, c = (a + 2) % n, d = (a + 3) % n, e = (a + 4) % n;
                        ++t.cases;
                        if (!v.contains(Edge(a, e)) || !v.contains(Edge(b, e)) || !v.contains(Edge(c, e))) continue;
                        const int six[] = {a, b, e, u.link(Edge(b, c)), u.link(Edge(c, d)), u.link(Edge(d, e))};
                        bool distinct = true;
                        for (int p = 0; p < 6; ++p) {
                            for (int q = p + 1; q < 6; ++q) distinct &= six[p] != six[q];
                        }
                        if (!distinct) continue;
                        ++t.hypotheses;
                        const int vs[] = {b, c, d};
                        const TriangulationPair r = delete_seq({u, v}, vs);
                        if (table.distance(i, j) < small.distance(r.first, r.second) + 5) {
                            t.fail(describe(u, v) + " a=" + std::to_string(a));
                        }
                    }
                }
            }
        }
        out.push_back(t.finish("property.three_deletions",
                               "d(P) >= d(P - b - c - d) + 5 under the chord configuration; exhaustive n <= 9",
                               true));
    }

    // Quotient graphs.
    {
        Tally t;
        for (int n = 5; n <= exhaustive8; ++n) {
            const FlipGraph smaller = FlipGraph::build(n - 1, options.budget);
            for (int a = 0; a < n; ++a) {
                ++t.cases;
                const QuotientGraph q = quotient_graph(n, a, options.budget);
                bool same = q.nodes == smaller.keys();
                for (std::size_t i = 0; same && i < q.nodes.size(); ++i) {
                    std::vector<int> nb(smaller.neighbors(i).begin(), smaller.neighbors(i).end());
                    std::sort(nb.begin(), nb.end());
                    same = nb == q.adjacency[i];
                }
                if (!same) t.fail("n=" + std::to_string(n) + " a=" + std::to_string(a));
            }
        }
        out.push_back(t.finish("property.quotient_graphs",
                               "contracting classes of equal deletion gives the smaller flip graph; n = 5..8"));

        const QuotientGraph hex = quotient_graph(6, 0, options.budget);
        bool cycle = hex.nodes.size() == 5 && hex.edge_count() == 5;
        for (const auto& nb : hex.adjacency) cycle &= nb.size() == 2;
        out.push_back(result("quotient.hexagon", cycle, "5-cycle",
                             std::to_string(hex.nodes.size()) + " nodes, " + std::to_string(hex.edge_count()) +
                                 " edges",
                             "hexagon flip graph contracted at one vertex is the pentagon's 5-cycle"));
    }

    // Engine against exhaustive BFS.
    {
        Tally t;
        auto check_pair = [&](const Triangulation& u, const Triangulation& v, int truth) {
            ++t.cases;
            const SearchReport r = flip_distance(u, v, SearchOptions{options.budget});
            bool ok = r.distance == truth && r.witness.valid() && r.witness.front() == u && r.witness.back() == v &&
                      static_cast<int>(r.witness.length()) == r.distance &&
                      r.distance >= interior_difference(u, v) && fan_upper_bound(u, v) >= r.distance;
            for (const Edge& e : common_interior(u, v)) {
                for (const Flip& f : r.witness.flips()) ok &= f.removed != e;
            }
            if (!ok) t.fail(describe(u, v) + " expected " + std::to_string(truth) + " got " +
                            std::to_string(r.distance));
        };
        for (int n = 3; n <= exhaustive8; ++n) {
            const AllPairs& table = tables.at(n);
            const FlipGraph& g = table.graph();
            for (std::size_t i = 0; i < g.size(); ++i) {
                for (std::size_t j = i; j < g.size(); ++j) check_pair(g.at(i), g.at(j), table.distance(i, j));
            }
        }
        for (int n = 9; n <= std::min(11, n_max); ++n) {
            const FlipGraph g = FlipGraph::build(n, options.budget);
            for (int k = 0; k < 1000; ++k) {
                const Triangulation u = uniform_random(n, rng());
                const Triangulation v = uniform_random(n, rng());
                const auto dist = bfs_distances(g, u);
                const int truth = dist[g.index_of(v)];
                check_pair(u, v, truth);
                if (k % 10 == 0) check_pair(v, u, truth);
            }
        }
        out.push_back(t.finish("property.engine_matches_bfs",
                               "search distance and witness agree with BFS; all pairs n <= 8, 10^3 samples n = 9..11"));
    }

    // Decomposition and forced flips preserve distance.
    {
        Tally t;
        for (int n = 4; n <= exhaustive8; ++n) {
            const AllPairs& table = tables.at(n);
            const FlipGraph& g = table.graph();
            for (std::size_t i = 0; i < g.size(); ++i) {
                for (std::size_t j = 0; j < g.size(); ++j) {
                    const Triangulation u = g.at(i), v = g.at(j);
                    ++t.cases;
                    int sum = 0;
                    for (const Component& c : decompose(u, v)) {
                        SearchOptions plain{options.budget, false, false, false};
                        sum += flip_distance(c.pair.first, c.pair.second, plain).distance;
                    }
                    const ForcedReduction fr = reduce_forced(u, v);
                    const int rest = table.distance(table.graph().index_of(fr.reduced), j);
                    if (sum != table.distance(i, j) || rest + fr.applied() != table.distance(i, j)) {
                        t.fail(describe(u, v));
                    }
                }
            }
        }
        out.push_back(t.finish("property.reductions_exact",
                               "component distances add up and forced flips are on a geodesic; exhaustive n <= 8"));
    }

    // Structural identities of the named pairs.
    {
        Tally t;
        auto iso = [&](const TriangulationPair& p, const TriangulationPair& q, const std::string& what) {
            ++t.cases;
            if (pair_dihedral_class(p) != pair_dihedral_class(q)) t.fail(what);
        };
        for (int n = 4; n <= 14; ++n) {
            const int one[] = {1};
            iso(delete_seq(family_A(n), one), family_A(n - 1), "A_" + std::to_string(n) + " - 1");
        }
        for (int n = 6; n <= 14; ++n) {
            const int two[] = {3, 1};
            iso(delete_seq(family_A(n), two), family_A(n - 2), "A_" + std::to_string(n) + " - 3 - 1");
        }
        for (int n = 12; n <= 15; ++n) {
            const int five[] = {4, 5, 0, 1, 2};
            const int four[] = {4, 0, 1, 2};
            iso(delete_seq(family_B(n), five), family_A(n - 5), "B_" + std::to_string(n));
            iso(delete_seq(family_C(n), four), family_A(n - 4), "C_" + std::to_string(n));
        }
        out.push_back(t.finish("property.pair_isomorphisms",
                               "deleting the stated vertices from A, B and C pairs gives smaller A pairs"));
    }
}

}  // namespace

std::vector<CheckResult> property_suite(int n_max, std::uint64_t seed, const VerifyOptions& options) {
    std::vector<CheckResult> out;
    try {
        run_properties(out, n_max, seed, options);
    } catch (const ResourceError& e) {
        out.push_back(skipped("property.remaining", CheckStatus::skipped_budget, "0 violations", e.what(),
                              "property checks after the first one that exceeded the budget"));
    }
    return out;
}

// --- Reporting ------------------------------------------------------------------------------

std::vector<CheckResult> sorted(std::vector<CheckResult> results) {
    std::stable_sort(results.begin(), results.end(),
                     [](const CheckResult& x, const CheckResult& y) { return x.name < y.name; });
    return results;
}

std::string report_text(const std::vector<CheckResult>& results) {
    std::ostringstream out;
    std::map<CheckStatus, int> counts;
    for (const CheckResult& r : results) {
        ++counts[r.status];
        out << to_string(r.status) << ' ' << r.name << ": expected " << r.expected << ", observed " << r.observed
            << '\n';
    }
    out << "summary: " << counts[CheckStatus::pass] << " pass, " << counts[CheckStatus::fail] << " fail, "
        << counts[CheckStatus::skipped_budget] + counts[CheckStatus::skipped_vacuous] << " skipped\n";
    return out.str();
}

std::string report_json(const std::vector<CheckResult>& results) {
    nlohmann::ordered_json j;
    j["checks"] = nlohmann::json::array();
    for (const CheckResult& r : results) {
        j["checks"].push_back({{"name", r.name},
                               {"status", to_string(r.status)},
                               {"expected", r.expected},
                               {"observed", r.observed},
                               {"basis", r.basis}});
    }
    j["failures"] = exit_code(results);
    return j.dump(2);
}

int exit_code(const std::vector<CheckResult>& results) {
    const auto failed = std::count_if(results.begin(), results.end(),
                                      [](const CheckResult& r) { return r.status == CheckStatus::fail; });
    return static_cast<int>(std::min<std::ptrdiff_t>(failed, 125));
}

}  // namespace assoc
