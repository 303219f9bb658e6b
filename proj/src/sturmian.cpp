#include "dioph/sturmian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace dioph {

namespace {

unsigned long bit_length(std::uint64_t n) {
    unsigned long bits = 0;
    while (n) {
        ++bits;
        n >>= 1;
    }
    return bits;
}

// An irrational value never sits on 0 or 1, so refinement settles the test.
bool strictly_inside_unit(const RealSpec& value) {
    const Budget budget = Budget::from_env();
    for (unsigned long bits = 64;; bits *= 2) {
        const Enclosure enc = enclosure(value, std::min(bits, budget.max_bits), budget);
        if (enc.lo > 0 && enc.hi < 1) return true;
        if (enc.hi <= 0 || enc.lo >= 1) return false;
        if (bits >= budget.max_bits) throw BudgetExhausted("slope range not decided within budget");
    }
}

Enclosure alpha_enclosure(const SlopeSpec& slope, std::size_t length) {
    return enclosure(slope.real(), bit_length(length) + 64);
}

Rational abs_of(const Rational& x) { return sgn(x) < 0 ? Rational(-x) : x; }

}  // namespace

SlopeSpec::SlopeSpec(RealSpec real, std::optional<spec::Surd> surd, std::string description)
    : real_(std::move(real)), surd_(std::move(surd)), description_(std::move(description)) {}

SlopeSpec SlopeSpec::surd(const BigInt& p, const BigInt& q, const BigInt& d) {
    if (q == 0) throw std::invalid_argument("surd denominator Q must be nonzero");
    if (d < 0) throw std::invalid_argument("surd radicand D must be nonnegative");
    if (is_perfect_square(d)) throw std::invalid_argument("slope must be irrational");
    RealSpec real = RealSpec::surd(p, q, d);
    if (!strictly_inside_unit(real)) throw std::invalid_argument("slope must lie in (0, 1)");
    return SlopeSpec(std::move(real), spec::Surd{p, q, d},
                     "surd:" + p.get_str() + "," + q.get_str() + "," + d.get_str());
}

SlopeSpec SlopeSpec::continued_fraction(CFQuotients quotients) {
    if (quotients.is_finite() || quotients.open_tail) throw std::invalid_argument("slope must be irrational");
    const auto a0 = quotients.term(0);
    if (!a0 || *a0 != 0) throw std::invalid_argument("slope continued fraction must start with a_0 = 0");
    for (std::size_t k = 1; k < quotients.head.size(); ++k) {
        if (quotients.head[k] < 1) throw std::invalid_argument("partial quotients must be >= 1");
    }
    for (const BigInt& m : quotients.period) {
        if (m < 1) throw std::invalid_argument("partial quotients must be >= 1");
    }
    RealSpec real = RealSpec::from_cf(std::move(quotients));
    std::string description = "cfslope:" + real.describe().substr(3);
    return SlopeSpec(std::move(real), std::nullopt, std::move(description));
}

SlopeFloor::SlopeFloor(SlopeSpec slope, Rational intercept)
    : slope_(std::move(slope)), intercept_(std::move(intercept)) {
    intercept_.canonicalize();
    if (intercept_ < 0 || intercept_ >= 1) throw std::invalid_argument("intercept must lie in [0, 1)");
}

void SlopeFloor::refine_for(std::uint64_t n) const {
    const unsigned long wanted = 2 * bit_length(n) + 16;
    if (bits_ >= wanted) return;
    bits_ = wanted;
    alpha_ = enclosure(slope_.real(), bits_);
}

BigInt SlopeFloor::operator()(std::uint64_t n) const {
    if (slope_.is_surd()) {
        // n alpha + r/t = (A + B sqrt D) / C with A = t n P + r Q, B = t n, C = t Q.
        const spec::Surd& s = slope_.as_surd();
        const BigInt& r = intercept_.get_num();
        const BigInt& t = intercept_.get_den();
        const BigInt nn(static_cast<unsigned long>(n));
        BigInt a = t * nn * s.p + r * s.q;
        BigInt b = t * nn;
        BigInt c = t * s.q;
        if (c < 0) {
            a = -a;
            b = -b;
            c = -c;
        }
        // B sqrt D is irrational for B != 0, so it sits strictly between
        // isqrt(B^2 D) and the next integer.
        const BigInt root = isqrt_of(b * b * s.d);
        BigInt out;
        const BigInt top = b >= 0 ? BigInt(a + root) : BigInt(a - root - 1);
        mpz_fdiv_q(out.get_mpz_t(), top.get_mpz_t(), c.get_mpz_t());
        return out;
    }

    if (n == 0) return floor_of(intercept_);
    refine_for(n);
    const Rational nn(BigInt(static_cast<unsigned long>(n)));
    while (true) {
        const BigInt lo = floor_of(nn * alpha_.lo + intercept_);
        const BigInt hi = floor_of(nn * alpha_.hi + intercept_);
        if (lo == hi) return lo;
        bits_ *= 2;
        alpha_ = enclosure(slope_.real(), bits_);
    }
}

MechanicalStream::MechanicalStream(SlopeSpec slope, Rational intercept)
    : floor_(std::make_shared<const SlopeFloor>(std::move(slope), std::move(intercept))) {
    current_ = (*floor_)(1);
    n_ = 0;
}

Letter MechanicalStream::next() {
    ++n_;
    BigInt following = (*floor_)(n_ + 1);
    const BigInt diff = following - current_;
    current_ = std::move(following);
    if (diff < 0 || diff > 1) throw std::logic_error("mechanical word letter outside {0, 1}");
    return static_cast<Letter>(diff.get_ui());
}

Word mechanical_word(const SlopeSpec& slope, const Rational& intercept, std::size_t length) {
    if (length == 0) throw std::invalid_argument("length must be positive");
    MechanicalStream stream(slope, intercept);
    std::vector<Letter> out;
    out.reserve(length);
    for (std::size_t i = 0; i < length; ++i) out.push_back(stream.next());
    return Word(std::move(out), 2);
}

Rational letter_frequency_check(const Word& s, const SlopeSpec& slope) {
    if (s.alphabet_size() > 2) throw std::invalid_argument("expected a binary word");
    const Enclosure alpha = alpha_enclosure(slope, s.size());
    Rational worst = 0;
    BigInt ones = 0;
    for (std::size_t n = 1; n <= s.size(); ++n) {
        if (s[n - 1] == 1) ++ones;
        const Rational nn(BigInt(static_cast<unsigned long>(n)));
        const Rational c(ones);
        worst = std::max({worst, abs_of(c - nn * alpha.lo), abs_of(c - nn * alpha.hi)});
    }
    return worst;
}

Morphism::Morphism(Word zero, Word one) : image0(std::move(zero)), image1(std::move(one)) {
    if (image0.empty() || image1.empty()) throw std::invalid_argument("morphism must be nonerasing");
}

std::string Morphism::describe() const { return "0>" + image0.render() + ";1>" + image1.render(); }

Word apply_morphism(const QuasiSturmianSpec& spec, std::size_t length) {
    const Letter alphabet = std::max({spec.prefix.alphabet_size(), spec.morphism.image0.alphabet_size(),
                                      spec.morphism.image1.alphabet_size()});
    std::vector<Letter> out(spec.prefix.symbols().begin(), spec.prefix.symbols().end());
    if (out.size() < length) {
        MechanicalStream s(spec.slope, spec.intercept);
        while (out.size() < length) {
            const auto img = spec.morphism.image(s.next()).symbols();
            out.insert(out.end(), img.begin(), img.end());
        }
    }
    out.resize(length);
    return Word(std::move(out), alphabet);
}

QuasiSturmianFit quasi_sturmian_check(const Word& a, std::size_t n_max) {
    if (n_max == 0 || n_max > a.size() / 4) throw std::invalid_argument("window too large: need n_max <= |a|/4");
    const auto gaps = gap_profile(complexity_profile(a, n_max));
    QuasiSturmianFit fit;
    fit.n_max = n_max;
    std::size_t n0 = n_max;
    while (n0 > 1 && gaps[n0 - 2] == gaps[n_max - 1]) --n0;
    fit.plateau = n_max - n0 + 1;
    if (fit.plateau >= kQuasiSturmianPlateau) {
        fit.found = true;
        fit.k = gaps[n_max - 1];
        fit.n0 = n0;
    }
    return fit;
}

Rational morphic_length_check(const QuasiSturmianSpec& spec, std::size_t length) {
    const Enclosure alpha = alpha_enclosure(spec.slope, length);
    const Rational len0(BigInt(static_cast<unsigned long>(spec.morphism.image0.size())));
    const Rational len1(BigInt(static_cast<unsigned long>(spec.morphism.image1.size())));
    const Rational delta_lo = alpha.lo * len1 + (1 - alpha.lo) * len0;
    const Rational delta_hi = alpha.hi * len1 + (1 - alpha.hi) * len0;

    MechanicalStream s(spec.slope, spec.intercept);
    Rational worst = 0;
    BigInt image_length = 0;
    for (std::size_t n = 1; n <= length; ++n) {
        image_length += static_cast<unsigned long>(spec.morphism.image(s.next()).size());
        const Rational nn(BigInt(static_cast<unsigned long>(n)));
        const Rational l(image_length);
        worst = std::max({worst, abs_of(l - nn * delta_lo), abs_of(l - nn * delta_hi)});
    }
    return worst;
}

namespace {

class MechanicalNumber final : public EnclosureSource {
public:
    MechanicalNumber(SlopeSpec slope, Rational intercept, unsigned base)
        : slope_(std::move(slope)), intercept_(std::move(intercept)), base_(base) {}

    // Digits 1..m fix the value to within sum_{n>m} b^-n = b^-m / (b - 1).
    Enclosure at(unsigned long bits) const override {
        const auto m = static_cast<std::size_t>(std::ceil(static_cast<double>(bits) / std::log2(base_))) + 1;
        const Word w = mechanical_word(slope_, intercept_, m);
        BigInt num = 0;
        for (Letter c : w.symbols()) num = num * base_ + c;
        const BigInt scale = pow_of(BigInt(base_), m);
        Rational lo(num, scale);
        lo.canonicalize();
        Rational hi = lo + Rational(BigInt(1), scale * (base_ - 1));
        hi.canonicalize();
        return {lo, hi};
    }

    std::string describe() const override {
        std::string out = "sturmian:" + slope_.describe();
        if (base_ != 2) out += "@" + std::to_string(base_);
        return out;
    }

private:
    SlopeSpec slope_;
    Rational intercept_;
    unsigned base_;
};

}  // namespace

std::shared_ptr<const EnclosureSource> mechanical_number(SlopeSpec slope, Rational intercept, unsigned base) {
    if (base < 2) throw std::invalid_argument("base must be >= 2");
    return std::make_shared<const MechanicalNumber>(std::move(slope), std::move(intercept), base);
}

}  // namespace dioph
