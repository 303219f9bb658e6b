#include "dioph/contfrac.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace dioph {

std::string CFExpansion::quotients_json() const {
    std::string out = "[";
    for (std::size_t i = 0; i < quotients.size(); ++i) {
        if (i) out += ",";
        out += "\"" + quotients[i].get_str() + "\"";
    }
    return out + "]";
}

std::string CFExpansion::convergents_json() const {
    std::string out = "[";
    for (std::size_t i = 0; i < convergents.size(); ++i) {
        if (i) out += ",";
        out += "[\"" + convergents[i].p.get_str() + "\",\"" + convergents[i].q.get_str() + "\"]";
    }
    return out + "]";
}

namespace {

void push_quotient(CFExpansion& cf, const BigInt& a) {
    const std::size_t k = cf.quotients.size();
    if (k > 0 && a < 1) throw std::logic_error("partial quotient below 1");
    const BigInt p_prev = k >= 1 ? cf.convergents[k - 1].p : BigInt(1);
    const BigInt q_prev = k >= 1 ? cf.convergents[k - 1].q : BigInt(0);
    const BigInt p_prev2 = k >= 2 ? cf.convergents[k - 2].p : (k == 1 ? BigInt(1) : BigInt(0));
    const BigInt q_prev2 = k >= 2 ? cf.convergents[k - 2].q : (k == 1 ? BigInt(0) : BigInt(1));
    Convergent c{a * p_prev + p_prev2, a * q_prev + q_prev2};
    BigInt g;
    mpz_gcd(g.get_mpz_t(), c.p.get_mpz_t(), c.q.get_mpz_t());
    if (g != 1) throw std::logic_error("convergent not in lowest terms");
    cf.quotients.push_back(a);
    cf.convergents.push_back(std::move(c));
}

// Interval of the complete quotient x_k given an enclosure of the value:
// x_k = (p_{k-2} - q_{k-2} x) / (q_{k-1} x - p_{k-1}).
std::optional<Enclosure> tail_interval(const CFExpansion& cf, const Enclosure& value) {
    const std::size_t k = cf.quotients.size();
    if (k == 0) return value;
    const BigInt& p1 = cf.convergents[k - 1].p;
    const BigInt& q1 = cf.convergents[k - 1].q;
    const BigInt p2 = k >= 2 ? cf.convergents[k - 2].p : BigInt(1);
    const BigInt q2 = k >= 2 ? cf.convergents[k - 2].q : BigInt(0);
    return mobius_image(-q2, p2, q1, -p1, value);
}

}  // namespace

CFExpansion cf_from_enclosure(const RealSpec& spec, std::size_t max_terms, const Budget& budget) {
    CFExpansion cf;
    cf.requested = max_terms;
    unsigned long bits = std::min<unsigned long>(64, budget.max_bits);
    Enclosure value;
    // Open-tailed sources may not reach 64 bits at all.
    while (true) {
        try {
            value = enclosure(spec, bits, budget);
            break;
        } catch (const BudgetExhausted&) {
            if (bits <= 1) return cf;
            bits /= 2;
        }
    }
    std::optional<Enclosure> x = value;

    while (cf.quotients.size() < max_terms) {
        if (x) {
            const BigInt a = floor_of(x->lo);
            if (x->is_point()) {
                push_quotient(cf, a);
                const Rational frac = x->lo - Rational(a);
                if (sgn(frac) == 0) {
                    cf.terminated = true;
                    break;
                }
                const Rational next = 1 / frac;
                x = Enclosure{next, next};
                continue;
            }
            // lo == a would leave "the value is exactly a" open.
            if (x->lo > Rational(a) && x->hi < Rational(a + 1)) {
                push_quotient(cf, a);
                x = Enclosure{1 / (x->hi - Rational(a)), 1 / (x->lo - Rational(a))};
                continue;
            }
        }
        if (bits >= budget.max_bits) break;
        bits = std::min(bits * 2, budget.max_bits);
        Enclosure fresh;
        try {
            fresh = enclosure(spec, bits, budget);
        } catch (const BudgetExhausted&) {
            break;
        }
        if (fresh.lo < value.lo) fresh.lo = value.lo;
        if (fresh.hi > value.hi) fresh.hi = value.hi;
        value = std::move(fresh);
        x = tail_interval(cf, value);
    }
    return cf;
}

CFExpansion cf_of_rational(const Rational& x) {
    CFExpansion cf;
    BigInt num = x.get_num(), den = x.get_den();
    while (true) {
        BigInt a, r;
        mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        push_quotient(cf, a);
        if (r == 0) break;
        num = std::move(den);
        den = std::move(r);
    }
    cf.terminated = true;
    cf.requested = cf.quotients.size();
    return cf;
}

MuEstimate mu_estimate(const CFExpansion& cf, std::size_t n_min) {
    if (n_min < 2) throw std::invalid_argument("n_min must be at least 2 so that q_n >= 2");
    if (cf.certified() < n_min + 2) {
        throw std::invalid_argument("too few certified terms: need " + std::to_string(n_min + 2) + ", have " +
                                    std::to_string(cf.certified()));
    }
    MuEstimate est;
    est.n_min = n_min;
    for (std::size_t n = n_min; n + 1 < cf.certified(); ++n) {
        const double log_a = log_of(cf.quotients[n + 1]);
        const double log_q = log_of(cf.convergents[n].q);
        est.values.push_back(2.0 + log_a / log_q);
    }
    est.global_max = *std::max_element(est.values.begin(), est.values.end());
    const auto mid = est.values.begin() + static_cast<std::ptrdiff_t>(est.values.size() / 2);
    est.tail_max = *std::max_element(mid, est.values.end());
    return est;
}

BigInt bounded_pq_check(const CFExpansion& cf, std::size_t first, std::size_t count) {
    if (count == 0 || first + count > cf.certified()) {
        throw std::invalid_argument("window exceeds certified terms");
    }
    BigInt best = cf.quotients[first];
    for (std::size_t k = first + 1; k < first + count; ++k) best = std::max(best, cf.quotients[k]);
    return best;
}

}  // namespace dioph
