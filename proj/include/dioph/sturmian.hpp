#pragma once

// Sturmian words from exact slopes, and quasi-Sturmian words W phi(s).

#include "dioph/numeric.hpp"
#include "dioph/realnum.hpp"
#include "dioph/words.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dioph {

/// An irrational slope alpha in (0, 1), either a quadratic surd
/// (P + sqrt D)/Q or a continued fraction [0; m_1, m_2, ...].
class SlopeSpec {
public:
    static SlopeSpec surd(const BigInt& p, const BigInt& q, const BigInt& d);
    /// Full expansion [0; m_1, m_2, ...]; must be infinite with a_0 = 0.
    static SlopeSpec continued_fraction(CFQuotients quotients);

    bool is_surd() const noexcept { return surd_.has_value(); }
    const spec::Surd& as_surd() const { return *surd_; }
    const RealSpec& real() const noexcept { return real_; }
    std::string describe() const { return description_; }

private:
    SlopeSpec(RealSpec real, std::optional<spec::Surd> surd, std::string description);

    RealSpec real_;
    std::optional<spec::Surd> surd_;
    std::string description_;
};

/// Exact floor(n * alpha + rho) for n >= 0. Surds use integer square roots;
/// continued-fraction slopes use convergent enclosures refined until the
/// floor is unambiguous.
class SlopeFloor {
public:
    SlopeFloor(SlopeSpec slope, Rational intercept);
    BigInt operator()(std::uint64_t n) const;

private:
    void refine_for(std::uint64_t n) const;

    SlopeSpec slope_;
    Rational intercept_;
    mutable Enclosure alpha_;
    mutable unsigned long bits_ = 0;
};

/// Lazy s_1 s_2 ... with s_n = floor((n+1)alpha + rho) - floor(n alpha + rho).
/// Copying a stream snapshots its position.
class MechanicalStream {
public:
    MechanicalStream(SlopeSpec slope, Rational intercept);
    Letter next();
    std::uint64_t position() const noexcept { return n_; }

private:
    std::shared_ptr<const SlopeFloor> floor_;
    std::uint64_t n_ = 0;
    BigInt current_;
};

Word mechanical_word(const SlopeSpec& slope, const Rational& intercept, std::size_t length);

/// Upper bound (exact rational) on max_n |#1(s_1..s_n) - n alpha|.
Rational letter_frequency_check(const Word& s, const SlopeSpec& slope);

/// Nonerasing morphism on {0, 1}.
struct Morphism {
    Word image0;
    Word image1;

    Morphism(Word zero, Word one);
    const Word& image(Letter c) const { return c == 0 ? image0 : image1; }
    std::string describe() const;
};

struct QuasiSturmianSpec {
    Word prefix;
    Morphism morphism;
    SlopeSpec slope;
    Rational intercept = 0;
};

/// First `length` letters of W phi(s); s is generated only as far as needed.
Word apply_morphism(const QuasiSturmianSpec& spec, std::size_t length);

struct QuasiSturmianFit {
    bool found = false;
    std::int64_t k = 0;
    std::size_t n0 = 0;
    std::size_t n_max = 0;
    /// Length of the constant-gap run ending at n_max.
    std::size_t plateau = 0;
};

/// Minimum plateau length (in n) before a fit is reported.
inline constexpr std::size_t kQuasiSturmianPlateau = 50;

/// Least n0 with p(n) = n + k on [n0, n_max]. Requires n_max <= |a|/4.
QuasiSturmianFit quasi_sturmian_check(const Word& a, std::size_t n_max);

/// Upper bound on max over n <= length of | |phi(s_1..s_n)| - delta n |,
/// delta = alpha |phi(1)| + (1 - alpha) |phi(0)|.
Rational morphic_length_check(const QuasiSturmianSpec& spec, std::size_t length);

/// The real sum s_n b^-n for a mechanical word s (digits in {0, 1}).
std::shared_ptr<const EnclosureSource> mechanical_number(SlopeSpec slope, Rational intercept = 0, unsigned base = 2);

}  // namespace dioph
