#include "dioph/numeric.hpp"

#include <cmath>
#include <numbers>

namespace dioph {

double log_of(const BigInt& x) {
    if (x <= 0) throw std::domain_error("log of a nonpositive integer");
    long exp = 0;
    const double mantissa = mpz_get_d_2exp(&exp, x.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exp) * std::numbers::ln2;
}

BigInt parse_bigint(const std::string& text) {
    BigInt r;
    if (text.empty() || r.set_str(text, 10) != 0) {
        throw std::invalid_argument("not an integer: '" + text + "'");
    }
    return r;
}

}  // namespace dioph
