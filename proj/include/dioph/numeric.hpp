#pragma once

// Exact integer/rational helpers shared by every module. All arithmetic in
// the library goes through GMP; no floating point enters a certified value.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dioph {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when a refinement loop runs out of its precision budget.
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed mini-language input. `position` is the 0-based offset of the
/// offending character in the parsed string.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline BigInt floor_of(const Rational& x) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

inline BigInt ceil_of(const Rational& x) {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

inline BigInt pow_of(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigInt isqrt_of(const BigInt& x) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const BigInt& x) {
    return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

/// 2^-bits as an exact rational.
inline Rational two_pow_neg(unsigned long bits) {
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
    return Rational(BigInt(1), den);
}

/// Natural log of a positive big integer. Uses the mantissa/exponent split so
/// the relative error stays at double rounding (~1e-16) for any magnitude.
double log_of(const BigInt& x);

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

BigInt parse_bigint(const std::string& text);

}  // namespace dioph
