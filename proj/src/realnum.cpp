#include "dioph/realnum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace dioph {

Budget Budget::from_env() {
    Budget b;
    if (const char* env = std::getenv("DIOPH_BUDGET_BITS"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != nullptr && *end == '\0' && v > 0) b.max_bits = v;
    }
    return b;
}

std::optional<BigInt> CFQuotients::term(std::size_t k) const {
    if (k < head.size()) return head[k];
    if (!period.empty()) return period[(k - head.size()) % period.size()];
    if (rule) return rule(k);
    return std::nullopt;
}

CFQuotients CFQuotients::powers(unsigned long base) {
    CFQuotients q;
    q.head = {BigInt(0)};
    q.rule = [base](std::size_t k) { return pow_of(BigInt(base), static_cast<unsigned long>(k - 1)); };
    return q;
}

RealSpec RealSpec::rational(const BigInt& p, const BigInt& q) {
    if (q == 0) throw std::invalid_argument("zero denominator");
    return {spec::Rational{p, q}};
}
RealSpec RealSpec::e() { return {spec::SeriesE{}}; }
RealSpec RealSpec::shallit() { return {spec::SeriesShallit{}}; }
RealSpec RealSpec::surd(const BigInt& p, const BigInt& q, const BigInt& d) {
    if (q == 0) throw std::invalid_argument("surd denominator Q must be nonzero");
    if (d < 0) throw std::invalid_argument("surd radicand D must be nonnegative");
    return {spec::Surd{p, q, d}};
}
RealSpec RealSpec::from_cf(CFQuotients quotients) {
    if (!quotients.term(0)) throw std::invalid_argument("continued fraction needs at least a_0");
    return {spec::FromCF{std::move(quotients)}};
}
RealSpec RealSpec::mobius(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d, RealSpec inner) {
    const BigInt det = a * d - b * c;
    if (det != 1 && det != -1) throw std::invalid_argument("Mobius matrix must satisfy |ad - bc| = 1");
    return {spec::Mobius{a, b, c, d, std::make_shared<const RealSpec>(std::move(inner))}};
}
RealSpec RealSpec::custom(std::shared_ptr<const EnclosureSource> source) {
    if (!source) throw std::invalid_argument("null enclosure source");
    return {spec::Custom{std::move(source)}};
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

bool RealSpec::is_rational() const {
    return std::visit(overloaded{
                          [](const spec::Rational&) { return true; },
                          [](const spec::Surd& s) { return is_perfect_square(s.d); },
                          [](const spec::FromCF& f) { return f.quotients.is_finite(); },
                          [](const spec::Mobius& m) { return m.inner->is_rational(); },
                          [](const spec::Custom& c) { return c.source->is_rational(); },
                          [](const auto&) { return false; },
                      },
                      value);
}

std::string RealSpec::describe() const {
    return std::visit(overloaded{
                          [](const spec::Rational& r) { return "rat:" + r.p.get_str() + "/" + r.q.get_str(); },
                          [](const spec::SeriesE&) { return std::string("e"); },
                          [](const spec::SeriesShallit&) { return std::string("shallit"); },
                          [](const spec::Surd& s) {
                              return "surd:" + s.p.get_str() + "," + s.q.get_str() + "," + s.d.get_str();
                          },
                          [](const spec::FromCF& f) {
                              std::string out = "cf:";
                              for (std::size_t i = 0; i < f.quotients.head.size(); ++i) {
                                  if (i) out += ",";
                                  out += f.quotients.head[i].get_str();
                              }
                              if (!f.quotients.period.empty()) {
                                  out += ",(";
                                  for (std::size_t i = 0; i < f.quotients.period.size(); ++i) {
                                      if (i) out += ",";
                                      out += f.quotients.period[i].get_str();
                                  }
                                  out += ")*";
                              } else if (f.quotients.rule) {
                                  out += ",...";
                              }
                              return out;
                          },
                          [](const spec::Mobius& m) {
                              return "mobius:" + m.a.get_str() + "," + m.b.get_str() + "," + m.c.get_str() + "," +
                                     m.d.get_str() + ":(" + m.inner->describe() + ")";
                          },
                          [](const spec::Custom& c) { return c.source->describe(); },
                      },
                      value);
}

namespace {

Enclosure ordered(Rational a, Rational b) {
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b)};
}

// e = sum 1/k!, tail after K terms < 2/(K+1)!.
Enclosure e_enclosure(unsigned long bits) {
    BigInt next_fact = 2;  // (K+1)! for K = 1
    unsigned long k = 1;
    while (mpz_sizeinbase(next_fact.get_mpz_t(), 2) <= bits + 1) {
        ++k;
        next_fact *= k + 1;
    }
    BigInt num = 1;
    for (unsigned long j = 1; j <= k; ++j) num = num * j + 1;
    const BigInt fact = next_fact / (k + 1);
    Rational lo(num, fact);
    lo.canonicalize();
    Rational hi = lo + Rational(BigInt(2), next_fact);
    hi.canonicalize();
    return {lo, hi};
}

// sum 2^(-2^n), tail after n = K is below 2 * 2^(-2^(K+1)).
Enclosure shallit_enclosure(unsigned long bits) {
    unsigned long k = 0;
    while ((1UL << (k + 1)) - 1 < bits) ++k;
    const unsigned long top = 1UL << k;
    BigInt num = 0;
    for (unsigned long n = 0; n <= k; ++n) {
        BigInt term;
        mpz_ui_pow_ui(term.get_mpz_t(), 2, top - (1UL << n));
        num += term;
    }
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, top);
    Rational lo(num, den);
    lo.canonicalize();
    Rational hi = lo + two_pow_neg((1UL << (k + 1)) - 1);
    return {lo, hi};
}

Enclosure surd_enclosure(const spec::Surd& s, unsigned long bits) {
    BigInt scaled = s.d;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
    const BigInt root = isqrt_of(scaled);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
    const Rational q(s.q);
    Rational lo_root(root, scale);
    lo_root.canonicalize();
    if (root * root == scaled) {
        const Rational x = (Rational(s.p) + lo_root) / q;
        return {x, x};
    }
    Rational hi_root(root + 1, scale);
    hi_root.canonicalize();
    return ordered((Rational(s.p) + lo_root) / q, (Rational(s.p) + hi_root) / q);
}

// Convergent sandwich: with a_0..a_k known, the value lies between p_k/q_k
// and (p_k + p_{k-1})/(q_k + q_{k-1}).
Enclosure cf_enclosure(const CFQuotients& cf, unsigned long bits) {
    BigInt p_prev = 1, q_prev = 0;
    BigInt p = *cf.term(0), q = 1;
    BigInt target;
    mpz_ui_pow_ui(target.get_mpz_t(), 2, bits);
    const std::size_t max_terms = 2 * static_cast<std::size_t>(bits) + 64;
    for (std::size_t k = 1;; ++k) {
        if (q * (q + q_prev) >= target) break;
        const auto a = cf.term(k);
        if (!a) {
            if (cf.open_tail) throw BudgetExhausted("continued fraction prefix exhausted after " + std::to_string(k) + " terms");
            Rational x(p, q);
            x.canonicalize();
            return {x, x};
        }
        if (*a < 1) throw std::invalid_argument("partial quotient a_" + std::to_string(k) + " must be >= 1");
        if (k > max_terms) throw BudgetExhausted("continued fraction did not converge within budget");
        BigInt p_next = *a * p + p_prev;
        BigInt q_next = *a * q + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(p_next);
        q = std::move(q_next);
    }
    Rational a(p, q), b(p + p_prev, q + q_prev);
    a.canonicalize();
    b.canonicalize();
    return ordered(std::move(a), std::move(b));
}

}  // namespace

std::optional<Enclosure> mobius_image(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d,
                                      const Enclosure& inner) {
    const Rational den_lo = Rational(c) * inner.lo + Rational(d);
    const Rational den_hi = Rational(c) * inner.hi + Rational(d);
    if (sgn(den_lo) == 0 || sgn(den_hi) == 0 || sgn(den_lo) != sgn(den_hi)) return std::nullopt;
    const Rational lo = (Rational(a) * inner.lo + Rational(b)) / den_lo;
    const Rational hi = (Rational(a) * inner.hi + Rational(b)) / den_hi;
    return ordered(lo, hi);
}

Enclosure mobius(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d, const RealSpec& inner,
                 unsigned long bits, const Budget& budget) {
    const BigInt det = a * d - b * c;
    if (det != 1 && det != -1) throw std::invalid_argument("Mobius matrix must satisfy |ad - bc| = 1");
    const Rational target = two_pow_neg(bits);
    unsigned long inner_bits = bits + 8;
    while (true) {
        if (inner_bits > budget.max_bits) throw BudgetExhausted("Mobius pole not separable within budget");
        const auto image = mobius_image(a, b, c, d, enclosure(inner, inner_bits, budget));
        if (image && image->width() <= target) return *image;
        inner_bits *= 2;
    }
}

Enclosure enclosure(const RealSpec& spec, unsigned long bits, const Budget& budget) {
    if (bits > budget.max_bits) {
        throw BudgetExhausted("requested " + std::to_string(bits) + " bits exceeds budget of " +
                              std::to_string(budget.max_bits));
    }
    return std::visit(overloaded{
                          [](const spec::Rational& r) {
                              const Rational x = make_rational(r.p, r.q);
                              return Enclosure{x, x};
                          },
                          [&](const spec::SeriesE&) { return e_enclosure(bits); },
                          [&](const spec::SeriesShallit&) { return shallit_enclosure(bits); },
                          [&](const spec::Surd& s) { return surd_enclosure(s, bits); },
                          [&](const spec::FromCF& f) { return cf_enclosure(f.quotients, bits); },
                          [&](const spec::Mobius& m) { return mobius(m.a, m.b, m.c, m.d, *m.inner, bits, budget); },
                          [&](const spec::Custom& c) { return c.source->at(bits); },
                      },
                      spec.value);
}

std::string DigitStream::render() const {
    std::ostringstream os;
    os << integer_part.get_str() << '.';
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (base > 10) {
            if (i) os << ',';
            os << digits[i];
        } else {
            os << static_cast<char>('0' + digits[i]);
        }
    }
    os << " certified:" << digits.size();
    return os.str();
}

namespace {

// Base-b digits of 0 <= x < b^width, most significant first, zero padded.
void append_digits(const BigInt& x, unsigned base, std::size_t width, std::vector<Letter>& out) {
    if (width == 0) return;
    if (base <= 62) {
        const std::string text = x.get_str(static_cast<int>(base));
        out.insert(out.end(), width - std::min(width, text.size()), 0);
        // GMP writes 10..35 as a-z up to base 36, then A-Z and a-z for 10..61.
        const bool upper_first = base > 36;
        for (char c : text) {
            Letter d;
            if (c <= '9') d = c - '0';
            else if (c <= 'Z') d = c - 'A' + 10;
            else d = c - 'a' + (upper_first ? 36 : 10);
            out.push_back(d);
        }
        return;
    }
    if (width == 1) {
        out.push_back(static_cast<Letter>(x.get_ui()));
        return;
    }
    const std::size_t low = width / 2;
    BigInt hi, lo;
    const BigInt split = pow_of(BigInt(base), low);
    mpz_fdiv_qr(hi.get_mpz_t(), lo.get_mpz_t(), x.get_mpz_t(), split.get_mpz_t());
    append_digits(hi, base, width - low, out);
    append_digits(lo, base, low, out);
}

}  // namespace

DigitStream digits(const RealSpec& spec, unsigned base, std::size_t count, const Budget& budget) {
    if (base < 2) throw std::invalid_argument("base must be >= 2");
    DigitStream out;
    out.base = base;
    out.requested = count;
    out.digits.reserve(count);

    const double per_digit = std::log2(static_cast<double>(base));
    unsigned long bits = static_cast<unsigned long>(std::ceil(static_cast<double>(count) * per_digit)) + 32;

    bool have_integer = false;
    std::optional<Enclosure> current;
    while (true) {
        try {
            Enclosure fresh = enclosure(spec, std::min(bits, budget.max_bits), budget);
            if (current) {
                // Both contain the target, so the intersection does too.
                if (fresh.lo < current->lo) fresh.lo = current->lo;
                if (fresh.hi > current->hi) fresh.hi = current->hi;
            }
            current = std::move(fresh);
        } catch (const BudgetExhausted&) {
            if (!have_integer) throw;
            return out;
        }
        const Enclosure& enc = *current;

        if (!have_integer) {
            const BigInt ip = floor_of(enc.lo);
            if (enc.hi < Rational(ip + 1)) {
                out.integer_part = ip;
                have_integer = true;
            }
        }

        if (have_integer) {
            // Digit j is certified iff floor(lo b^j) = floor(hi b^j), so the
            // certified digits are the common prefix of floor(lo b^N) and
            // floor(hi b^N) written with N digits.
            const BigInt power = pow_of(BigInt(base), static_cast<unsigned long>(count));
            const Rational ip(out.integer_part);
            const BigInt lo_digits = floor_of((enc.lo - ip) * Rational(power));
            const BigInt hi_digits = floor_of((enc.hi - ip) * Rational(power));
            std::vector<Letter> lo_seq, hi_seq;
            append_digits(lo_digits, base, count, lo_seq);
            append_digits(hi_digits, base, count, hi_seq);
            std::size_t agree = 0;
            while (agree < count && lo_seq[agree] == hi_seq[agree]) ++agree;
            if (agree < out.digits.size()) throw std::logic_error("refined enclosure left a certified digit cell");
            out.digits.assign(lo_seq.begin(), lo_seq.begin() + static_cast<std::ptrdiff_t>(agree));
            if (out.digits.size() == count) return out;
        }

        if (bits >= budget.max_bits) {
            if (!have_integer) throw BudgetExhausted("integer part not certified within budget");
            return out;
        }
        bits *= 2;
    }
}

}  // namespace dioph
