#pragma once

// The acceptance suite: one check per criterion, each with its tolerances
// fixed in verify.cpp.

#include <cstdint>
#include <string>
#include <vector>

namespace gl2 {

struct CheckResult {
    int criterion = 0;
    std::string title;
    bool passed = false;
    bool skipped = false;
    std::string summary;                // what was measured
    std::vector<std::string> failures;  // one line per failing sub-check (capped)
    double seconds = 0;

    void fail(std::string what);
};

CheckResult check_singular_gauss_sums(const std::vector<std::uint32_t>& primes);
CheckResult check_cell_values(const std::vector<std::uint32_t>& primes);
CheckResult check_gauss_scalar_magnitude(const std::vector<std::uint32_t>& primes);
CheckResult check_character_table(const std::vector<std::uint32_t>& primes);
CheckResult check_pv_bound(const std::vector<std::uint32_t>& primes);
CheckResult check_fourier_coefficients(const std::vector<std::uint32_t>& primes);
CheckResult check_exact_counts(const std::vector<std::uint32_t>& primes, std::int64_t x_max);
CheckResult check_spot_counts();
CheckResult check_density(const std::vector<std::uint32_t>& primes);
CheckResult check_shifted_generators(const std::vector<std::uint32_t>& primes);

/// The full suite at the primes fixed by the acceptance criteria.
std::vector<CheckResult> run_acceptance_suite();

/// Every criterion restricted to one prime; criteria that do not apply at p
/// (or would be too slow for brute force) are reported as skipped.
std::vector<CheckResult> verify_prime(std::uint32_t p);

}  // namespace gl2
