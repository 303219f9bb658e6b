#pragma once

// Repetition witnesses on a digit expansion turned into explicit rational
// approximants, and the dio-versus-mu comparison.

#include "dioph/contfrac.hpp"
#include "dioph/numeric.hpp"
#include "dioph/realnum.hpp"
#include "dioph/repetition.hpp"
#include "dioph/words.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace dioph {

/// p/q = I.U V V V ... in base b with q = b^u (b^v - 1). Not reduced.
struct Approximant {
    BigInt p;
    BigInt q;
    RepetitionWitness witness;
    unsigned base = 10;
    BigInt integer_part;

    Rational score() const { return witness.score(); }
    /// p/q in lowest terms, for display.
    Rational lowest_terms() const { return make_rational(p, q); }
};

/// `digits` are the fractional digits of the target (at least witness.m of
/// them). Throws if the witness does not verify against them.
Approximant witness_to_approximant(const Word& digits, const RepetitionWitness& witness, unsigned base,
                                   const BigInt& integer_part = 0);

enum class Verdict { holds, fails, inconclusive };

struct ApproximationCheck {
    /// |xi - p/q| < b^-m
    Verdict digit_bound = Verdict::inconclusive;
    /// |xi - p/q| < q^-(m/(u+v))
    Verdict power_bound = Verdict::inconclusive;
    /// Certified upper bound on |xi - p/q| from the final enclosure.
    Rational distance_bound;
    /// b^-m minus distance_bound; positive when the digit bound holds.
    Rational digit_margin;
    unsigned long bits_used = 0;

    bool both_hold() const { return digit_bound == Verdict::holds && power_bound == Verdict::holds; }
};

ApproximationCheck verify_approximation(const RealSpec& xi, const Approximant& approximant,
                                        const Budget& budget = Budget::from_env());

const char* to_string(Verdict v);

struct DioMuOptions {
    unsigned base = 10;
    std::size_t prefix = 10'000;
    std::size_t cf_terms = 60;
    double slack = 0.15;
    std::size_t threshold = 0;  // 0: default_threshold(prefix)
    std::size_t n_min = 5;
    ScanOptions scan;
};

struct DioMuReport {
    std::string spec;
    DioMuOptions options;
    std::size_t digits_certified = 0;
    std::optional<ExponentEstimate> dio;
    std::size_t cf_certified = 0;
    std::optional<MuEstimate> mu;
    bool rational = false;
    bool partial = false;
    bool inequality_holds = false;
    std::string note;

    std::string to_json() const;
};

/// dio estimate of the base-b digits beside the mu estimate of the continued
/// fraction; the inequality is dio_global <= mu_tail_max + slack.
DioMuReport dio_mu_report(const RealSpec& spec, const DioMuOptions& options, const Budget& budget = Budget::from_env());

}  // namespace dioph
