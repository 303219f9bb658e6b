#pragma once

// Exactly-defined real numbers as refinable rational enclosures, plus
// certified base-b digit extraction.

#include "dioph/numeric.hpp"
#include "dioph/words.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace dioph {

/// Closed rational interval [lo, hi] certified to contain a target real.
struct Enclosure {
    Rational lo;
    Rational hi;

    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    /// True when `inner` lies inside this interval.
    bool encloses(const Enclosure& inner) const { return lo <= inner.lo && inner.hi <= hi; }
};

/// Precision cap, in bits of interval width, for every refinement loop.
struct Budget {
    unsigned long max_bits = 1'000'000;

    /// Reads DIOPH_BUDGET_BITS when set, otherwise the default cap.
    static Budget from_env();
};

/// Partial quotients a_0, a_1, ... of a continued fraction. The expansion is
///  - finite (a rational) when neither `period` nor `rule` is set and
///    `open_tail` is false;
///  - head followed by `period` repeated forever;
///  - head followed by rule(k) for k >= head.size();
///  - or, with `open_tail`, a certified head of an unknown expansion.
struct CFQuotients {
    std::vector<BigInt> head;
    std::vector<BigInt> period;
    std::function<BigInt(std::size_t)> rule;
    bool open_tail = false;

    /// nullopt past the last term of a finite expansion (or of a known head
    /// when the tail is open).
    std::optional<BigInt> term(std::size_t k) const;
    bool is_finite() const { return period.empty() && !rule && !open_tail; }

    /// [0; 1, 10, 100, 1000, ...] style rule: a_k = base^(k-1) for k >= 1.
    static CFQuotients powers(unsigned long base);
};

/// Hook for number families outside the built-in list.
class EnclosureSource {
public:
    virtual ~EnclosureSource() = default;
    /// Enclosure of width <= 2^-bits.
    virtual Enclosure at(unsigned long bits) const = 0;
    virtual std::string describe() const = 0;
    virtual bool is_rational() const { return false; }
};

struct RealSpec;

namespace spec {
struct Rational {
    BigInt p;
    BigInt q;
};
struct SeriesE {};
/// Sum over n >= 0 of 2^(-2^n).
struct SeriesShallit {};
/// (P + sqrt(D)) / Q.
struct Surd {
    BigInt p;
    BigInt q;
    BigInt d;
};
struct FromCF {
    CFQuotients quotients;
};
/// (a x + b) / (c x + d) with |ad - bc| = 1.
struct Mobius {
    BigInt a, b, c, d;
    std::shared_ptr<const RealSpec> inner;
};
struct Custom {
    std::shared_ptr<const EnclosureSource> source;
};
}  // namespace spec

struct RealSpec {
    std::variant<spec::Rational, spec::SeriesE, spec::SeriesShallit, spec::Surd, spec::FromCF, spec::Mobius,
                 spec::Custom>
        value;

    static RealSpec rational(const BigInt& p, const BigInt& q);
    static RealSpec e();
    static RealSpec shallit();
    static RealSpec surd(const BigInt& p, const BigInt& q, const BigInt& d);
    static RealSpec from_cf(CFQuotients quotients);
    static RealSpec mobius(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d, RealSpec inner);
    static RealSpec custom(std::shared_ptr<const EnclosureSource> source);

    /// Known to be rational from its description alone.
    bool is_rational() const;
    std::string describe() const;
};

/// Enclosure of width <= 2^-bits. Throws BudgetExhausted when the number
/// cannot be refined that far within the budget.
Enclosure enclosure(const RealSpec& spec, unsigned long bits, const Budget& budget = Budget::from_env());

/// Image of `inner` under x -> (ax + b)/(cx + d); nullopt when the pole
/// -d/c lies in the interval.
std::optional<Enclosure> mobius_image(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d,
                                      const Enclosure& inner);

/// Möbius image of a refinable spec, refining the inner value until the pole
/// separates and the image is narrower than 2^-bits.
Enclosure mobius(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d, const RealSpec& inner,
                 unsigned long bits, const Budget& budget = Budget::from_env());

/// Base-b expansion with certified digits only. `digits.size() < requested`
/// signals that the budget ran out mid-stream.
struct DigitStream {
    unsigned base = 10;
    BigInt integer_part;
    std::vector<Letter> digits;
    std::size_t requested = 0;

    bool complete() const { return digits.size() == requested; }
    std::size_t certified() const { return digits.size(); }
    Word word() const { return Word(digits, base); }
    /// "I.ddd certified:N", digits comma-separated for bases above 10.
    std::string render() const;
};

DigitStream digits(const RealSpec& spec, unsigned base, std::size_t count, const Budget& budget = Budget::from_env());

}  // namespace dioph
