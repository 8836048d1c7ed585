#pragma once

// Property suites. Each suite draws its own cases from a seeded Rng, checks an
// exact identity per case and records the first counterexample. Shared by the
// `selftest` subcommand and the acceptance runner.

#include "orbifold/random.hpp"

#include <functional>
#include <string>
#include <vector>

namespace orbifold {

struct SuiteResult {
    SuiteResult(std::string n = {}) : name(std::move(n)) {}

    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }
    void fail(const std::string& what);
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    // Deliberately breaks one identity; used to prove the harness can fail.
    bool inject_fault = false;
};

SuiteResult suite_degree_multiplicativity(const SuiteOptions& opt, std::uint64_t cases);
SuiteResult suite_iota_invariance(const SuiteOptions& opt, std::uint64_t cases);

/// All connected genus 0 data with degree in [2, max_degree] and 2 or 3
/// branch cycles; fast test against the subgroup oracle, and the block checks
/// on the maximal etale subcover.
struct SweepResult {
    SuiteResult ramification;
    SuiteResult etale;
};
SweepResult suite_monodromy_sweep(const SuiteOptions& opt, int max_degree);
SweepResult suite_monodromy_random(const SuiteOptions& opt, std::uint64_t cases, int max_degree);

SuiteResult suite_kummer_family(const SuiteOptions& opt, int max_m);

SuiteResult suite_equivariant_equivalence(const SuiteOptions& opt, int m, std::uint64_t cases);
SuiteResult suite_hom_equivalence(const SuiteOptions& opt, int m, std::uint64_t cases);
SuiteResult suite_adjunction(const SuiteOptions& opt, int m, std::uint64_t cases);
SuiteResult suite_parabolic(const SuiteOptions& opt, std::uint64_t cases);
SuiteResult suite_hn(const SuiteOptions& opt, std::uint64_t cases);
SuiteResult suite_branch_calculus(const SuiteOptions& opt, std::uint64_t cases);
SuiteResult suite_divisors(const SuiteOptions& opt, std::uint64_t cases);

/// Every suite, sized by scale (0 runs nothing).
std::vector<SuiteResult> run_all_suites(const SuiteOptions& opt, std::uint64_t scale);

} // namespace orbifold
