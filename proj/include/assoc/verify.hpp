#pragma once

// Harness that recomputes the distance tables, recursive inequalities,
// explicit witness paths and property checks, reporting one CheckResult per
// claim.

#include <cstdint>
#include <string>
#include <vector>

#include "assoc/error.hpp"
#include "assoc/polygon.hpp"

namespace assoc {

enum class CheckStatus {
    pass,
    fail,
    skipped_budget,  // the computation did not fit the configured budget
    skipped_vacuous  // the implication's hypothesis was never observed
};

std::string to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string expected;
    std::string observed;
    std::string basis;  // the claim being checked, in words
};

struct VerifyOptions {
    Budget budget = Budget::from_env();
    unsigned threads = 1;
    std::uint64_t seed = 20121;
    int diameter_max_n = 12;
    int recursion_max_n = 14;
    int property_max_n = 11;
    /// Adds diameters for n = 13..15 (about two minutes on one core).
    bool stretch = false;
};

std::vector<CheckResult> check_small_tables(const VerifyOptions& options = {});
std::vector<CheckResult> check_recursion(int n_max, const VerifyOptions& options = {});

struct FlipLists {
    std::vector<Edge> first;   // applied to D_n^-
    std::vector<Edge> second;  // applied to D_n^+
};

/// The two flip sequences from data/d_pair_flips.txt, instantiated at n.
FlipLists prop11_lists(int n);

/// Throws SizeError for n < 20.
CheckResult prop11_witness(int n);

std::vector<CheckResult> property_suite(int n_max, std::uint64_t seed, const VerifyOptions& options = {});

/// Sorted by name.
std::vector<CheckResult> sorted(std::vector<CheckResult> results);
std::string report_text(const std::vector<CheckResult>& results);
std::string report_json(const std::vector<CheckResult>& results);
/// Number of failed checks, capped at 125.
int exit_code(const std::vector<CheckResult>& results);

}  // namespace assoc
