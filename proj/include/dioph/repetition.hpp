#pragma once

#include "dioph/numeric.hpp"
#include "dioph/words.hpp"

#include <cstddef>
#include <string>

namespace dioph {

/// A prefix of the form U V^w with |U| = u, |V| = v, |U V^w| = m >= u + v.
/// The certificate is a[i] = a[i + v] for every u <= i < m - v (0-based).
struct RepetitionWitness {
    std::size_t u = 0;
    std::size_t v = 1;
    std::size_t m = 1;

    std::size_t span() const noexcept { return u + v; }
    Rational score() const { return make_rational(BigInt(m), BigInt(span())); }
    std::string to_json() const;

    bool operator==(const RepetitionWitness&) const = default;
};

/// True when `a` ranks strictly before `b`: higher score, then longer
/// repetition (larger m), then smaller u.
bool witness_before(const RepetitionWitness& a, const RepetitionWitness& b);

/// Prefix-based estimate of a supremum exponent. `persistent_max` is the
/// best witness with u + v >= threshold, which screens out short accidents.
struct ExponentEstimate {
    RepetitionWitness global_max;
    RepetitionWitness persistent_max;
    std::size_t prefix_length = 0;
    std::size_t threshold = 0;
};

struct ScanOptions {
    unsigned threads = 1;
};

/// Best U V^w prefix over all u >= 0, v >= 1 with m capped at |prefix|.
ExponentEstimate dio_estimate(const Word& prefix, std::size_t threshold, ScanOptions options = {});

/// Same search restricted to u = 0 (V^w prefixes); threshold applies to v.
ExponentEstimate ice_estimate(const Word& prefix, std::size_t threshold, ScanOptions options = {});

bool verify_witness(const Word& prefix, const RepetitionWitness& w);

/// Default persistence threshold: max(1, N / 20).
std::size_t default_threshold(std::size_t prefix_length);

}  // namespace dioph
