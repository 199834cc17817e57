#pragma once

// Property sweeps replaying each identity of the construction, run over a
// bounded worker pool.  Results are reported in a fixed order regardless of
// scheduling.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "eqidx/laurent.hpp"
#include "eqidx/series.hpp"

namespace eqidx {

struct VerifyOptions {
    /// Caps the upper end of every n range.
    std::optional<int> n_max;
    /// Intersected with the k range of every suite that sweeps k.
    std::optional<Window> k_range;
    std::uint64_t seed = 20240917;
    int jobs = 1;
    /// Only run these suite ids (all when empty).
    std::vector<std::string> only;
};

struct SuiteResult {
    std::string id;
    std::string range;
    int cases = 0;
    int failures = 0;
    std::optional<std::string> first_failure;
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::vector<SuiteResult> suites;

    int total_failures() const;
    int exit_status() const { return total_failures() == 0 ? 0 : 1; }
};

/// Every suite id, in report order.
const std::vector<std::string>& suite_ids();

VerifyReport run_verify(const VerifyOptions& options);

std::string format_report(const VerifyReport& report);
Json to_json(const VerifyReport& report);

/// Random Laurent polynomial with 1..max_terms terms, every exponent
/// (including the circle exponent when with_circle) in [-exp_bound, exp_bound]
/// and nonzero coefficients in [-coeff_bound, coeff_bound].
LaurentPoly random_laurent(int rank, std::mt19937_64& rng, int max_terms, int exp_bound,
                           int coeff_bound, bool with_circle);

/// Deterministic generator for case `index` of a sweep keyed by seed.
std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

}  // namespace eqidx
