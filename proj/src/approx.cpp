#include "dioph/approx.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dioph {

Approximant witness_to_approximant(const Word& digits, const RepetitionWitness& witness, unsigned base,
                                   const BigInt& integer_part) {
    if (base < 2) throw std::invalid_argument("base must be >= 2");
    if (digits.alphabet_size() > base) throw std::invalid_argument("digit word alphabet exceeds base");
    if (!verify_witness(digits, witness)) throw std::invalid_argument("witness does not verify against the digits");

    const auto a = digits.symbols();
    BigInt u_value = 0, v_value = 0;
    for (std::size_t i = 0; i < witness.u; ++i) u_value = u_value * base + a[i];
    for (std::size_t i = witness.u; i < witness.span(); ++i) v_value = v_value * base + a[i];

    const BigInt period_den = pow_of(BigInt(base), witness.v) - 1;
    Approximant out;
    out.q = pow_of(BigInt(base), witness.u) * period_den;
    out.p = integer_part * out.q + u_value * period_den + v_value;
    out.witness = witness;
    out.base = base;
    out.integer_part = integer_part;
    return out;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

namespace {

Rational abs_of(const Rational& x) { return sgn(x) < 0 ? Rational(-x) : x; }

// distance^den * q^num < 1, cleared of denominators.
bool below_q_power(const Rational& distance, const BigInt& q, const Rational& exponent) {
    if (sgn(distance) == 0) return true;
    const unsigned long num = exponent.get_num().get_ui();
    const unsigned long den = exponent.get_den().get_ui();
    return pow_of(distance.get_num(), den) * pow_of(q, num) < pow_of(distance.get_den(), den);
}

}  // namespace

ApproximationCheck verify_approximation(const RealSpec& xi, const Approximant& approximant, const Budget& budget) {
    const Rational target = make_rational(approximant.p, approximant.q);
    const std::size_t m = approximant.witness.m;
    const BigInt scale = pow_of(BigInt(approximant.base), m);
    const Rational digit_cell(BigInt(1), scale);
    const Rational exponent = approximant.score();

    ApproximationCheck check;
    auto bits = static_cast<unsigned long>(std::ceil(static_cast<double>(m) * std::log2(approximant.base))) + 64;
    while (true) {
        bits = std::min(bits, budget.max_bits);
        const Enclosure enc = enclosure(xi, bits, budget);
        const Rational far = std::max(abs_of(enc.lo - target), abs_of(enc.hi - target));
        const Rational near = enc.contains(target) ? Rational(0) : std::min(abs_of(enc.lo - target), abs_of(enc.hi - target));
        check.distance_bound = far;
        check.digit_margin = digit_cell - far;
        check.bits_used = bits;

        if (far < digit_cell) {
            check.digit_bound = Verdict::holds;
        } else if (near >= digit_cell) {
            check.digit_bound = Verdict::fails;
        }
        if (below_q_power(far, approximant.q, exponent)) {
            check.power_bound = Verdict::holds;
        } else if (!below_q_power(near, approximant.q, exponent)) {
            check.power_bound = Verdict::fails;
        }
        if (check.digit_bound != Verdict::inconclusive && check.power_bound != Verdict::inconclusive) return check;
        if (bits >= budget.max_bits) return check;
        check.digit_bound = check.power_bound = Verdict::inconclusive;
        bits *= 2;
    }
}

namespace {

double six_places(double x) { return std::round(x * 1e6) / 1e6; }

nlohmann::ordered_json estimate_json(double x) {
    return nlohmann::ordered_json{{"value", six_places(x)}, {"kind", "estimate"}};
}

nlohmann::ordered_json witness_json(const RepetitionWitness& w) {
    const Rational s = w.score();
    return nlohmann::ordered_json{{"u", w.u},
                                  {"v", w.v},
                                  {"m", w.m},
                                  {"score_num", s.get_num().get_str()},
                                  {"score_den", s.get_den().get_str()}};
}

}  // namespace

std::string DioMuReport::to_json() const {
    nlohmann::ordered_json j;
    j["spec"] = spec;
    j["base"] = options.base;
    j["prefix"] = options.prefix;
    j["cf_terms"] = options.cf_terms;
    j["digits_certified"] = digits_certified;
    if (dio) {
        j["dio"] = {{"global", witness_json(dio->global_max)},
                    {"persistent", witness_json(dio->persistent_max)},
                    {"threshold", dio->threshold},
                    {"global_estimate", estimate_json(dio->global_max.score().get_d())},
                    {"persistent_estimate", estimate_json(dio->persistent_max.score().get_d())}};
    } else {
        j["dio"] = nullptr;
    }
    if (mu) {
        nlohmann::ordered_json values = nlohmann::ordered_json::array();
        for (double v : mu->values) values.push_back(six_places(v));
        j["mu"] = {{"cf_certified", cf_certified},
                   {"n_min", mu->n_min},
                   {"values", values},
                   {"kind", "estimate"},
                   {"global_max", estimate_json(mu->global_max)},
                   {"tail_max", estimate_json(mu->tail_max)}};
    } else {
        j["mu"] = {{"cf_certified", cf_certified}};
    }
    j["inequality_holds"] = inequality_holds;
    j["slack"] = options.slack;
    j["status"] = rational ? "rational" : (partial ? "partial" : "ok");
    j["note"] = note;
    return j.dump(2);
}

DioMuReport dio_mu_report(const RealSpec& spec, const DioMuOptions& options, const Budget& budget) {
    DioMuReport report;
    report.spec = spec.describe();
    report.options = options;

    const DigitStream ds = digits(spec, options.base, options.prefix, budget);
    report.digits_certified = ds.certified();
    if (ds.certified() >= 2) {
        const std::size_t threshold = options.threshold ? options.threshold : default_threshold(ds.certified());
        report.dio = dio_estimate(ds.word(), std::min(threshold, ds.certified() / 2), options.scan);
    }

    const CFExpansion cf = cf_from_enclosure(spec, options.cf_terms, budget);
    report.cf_certified = cf.certified();
    report.rational = spec.is_rational() || cf.terminated;
    if (!report.rational && cf.certified() >= options.n_min + 2) report.mu = mu_estimate(cf, options.n_min);

    report.partial = !ds.complete() || cf.partial() || !report.dio || (!report.rational && !report.mu);
    if (report.rational) {
        report.note = "rational - exponent diverges (eventually periodic expansion)";
    } else if (report.partial) {
        report.note = "partial: budget exhausted before the requested digits or terms were certified";
    }
    if (report.dio && report.mu) {
        report.inequality_holds = report.dio->global_max.score().get_d() <= report.mu->tail_max + options.slack;
    }
    return report;
}

}  // namespace dioph
