#pragma once

// Slow, independent reference computations used only by tests. Nothing here
// calls the optimized library paths it is compared against.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dioph::oracle {

struct Triple {
    std::size_t u = 0, v = 0, m = 0;
};

/// Exhaustive O(N^3) search for the best U V^w prefix. Ties go to larger
/// u + v, then smaller u. `min_span` restricts to u + v >= min_span;
/// `initial_only` restricts to u = 0.
Triple best_repetition(const std::vector<std::uint32_t>& a, std::size_t min_span = 1, bool initial_only = false);

/// Distinct factor counts by inserting every window into a std::set.
std::vector<std::uint64_t> naive_complexity(const std::vector<std::uint32_t>& a, std::size_t n_max);

/// Fixed point of 0 -> 01, 1 -> 0, truncated.
std::vector<std::uint32_t> fibonacci_word(std::size_t length);

/// Characteristic word of [0; 1 + d_1, d_2, d_3, ...] built from standard
/// words s_n = s_{n-1}^{d_n} s_{n-2}, with s_{-1} = 1, s_0 = 0. `partial`
/// lists a_1, a_2, ... of the slope.
std::vector<std::uint32_t> standard_word(const std::vector<unsigned long>& partial, std::size_t length);

/// Fractional base-b digits of p/q (0 <= p/q < 1) by schoolbook long division.
std::vector<std::uint32_t> long_division(const mpz_class& p, const mpz_class& q, unsigned base, std::size_t count);

/// Decimal digits of the truncated series sum_{k<=K} 1/k!, fractional part.
std::vector<std::uint32_t> e_partial_sum_digits(unsigned terms, std::size_t count);

std::string render(const std::vector<std::uint32_t>& a);

}  // namespace dioph::oracle
