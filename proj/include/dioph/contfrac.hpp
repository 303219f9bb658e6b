#pragma once

#include "dioph/numeric.hpp"
#include "dioph/realnum.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace dioph {

struct Convergent {
    BigInt p;
    BigInt q;
};

/// Certified partial quotients a_0, a_1, ... with convergents p_n/q_n.
struct CFExpansion {
    std::vector<BigInt> quotients;
    std::vector<Convergent> convergents;
    /// The value is the rational p_last/q_last and the expansion is complete.
    bool terminated = false;
    std::size_t requested = 0;

    std::size_t certified() const noexcept { return quotients.size(); }
    /// Fewer terms than requested and not a finished rational expansion.
    bool partial() const noexcept { return !terminated && quotients.size() < requested; }

    /// JSON array of decimal strings.
    std::string quotients_json() const;
    /// JSON array of [p, q] decimal-string pairs.
    std::string convergents_json() const;
};

/// Emits a_k only while the current interval of the complete quotient has a
/// certified floor; refines the source (doubling precision) otherwise.
/// Budget exhaustion yields a partial expansion, never an error.
CFExpansion cf_from_enclosure(const RealSpec& spec, std::size_t max_terms, const Budget& budget = Budget::from_env());

/// Euclid, canonical form (last quotient >= 2 unless the value is an integer).
CFExpansion cf_of_rational(const Rational& x);

/// Per-index values 2 + log a_{n+1} / log q_n for n = n_min .. certified - 2.
struct MuEstimate {
    std::size_t n_min = 0;
    std::vector<double> values;  // values[i] belongs to n = n_min + i
    double global_max = 0.0;
    /// Max over the second half of `values`.
    double tail_max = 0.0;

    std::size_t n_last() const noexcept { return n_min + values.size() - 1; }
};

MuEstimate mu_estimate(const CFExpansion& cf, std::size_t n_min = 5);

/// Largest a_k for k in [first, first + count). Finite data cannot prove
/// boundedness; this is an observation only.
BigInt bounded_pq_check(const CFExpansion& cf, std::size_t first, std::size_t count);

}  // namespace dioph
