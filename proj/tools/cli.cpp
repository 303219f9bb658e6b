#include "cli.hpp"

#include "criteria.hpp"
#include "dioph/approx.hpp"
#include "dioph/contfrac.hpp"
#include "dioph/grammar.hpp"
#include "dioph/realnum.hpp"
#include "dioph/repetition.hpp"
#include "dioph/sturmian.hpp"
#include "dioph/words.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace dioph::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
    std::string source;
    std::string morphism;
    std::string slope;
    std::string intercept = "0";
    std::string format;
    std::string suite = "all";
    unsigned base = 10;
    std::size_t count = 20;
    std::size_t prefix = 10000;
    bool prefix_given = false;
    std::size_t threshold = 0;
    std::size_t terms = 0;
    std::size_t nmin = 5;
    std::size_t nmax = 0;
    unsigned threads = 1;
    std::uint64_t seed = acceptance::Context{}.seed;
    double slack = 0.15;
    bool persistent = false;
};

double six_places(double x) { return std::round(x * 1e6) / 1e6; }

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

Json estimate(double x) { return Json{{"value", six_places(x)}, {"kind", "estimate"}}; }

Json rational_json(const Rational& r) {
    return Json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

Json witness_json(const RepetitionWitness& w) {
    const Rational s = w.score();
    return Json{{"u", w.u},
                {"v", w.v},
                {"m", w.m},
                {"score_num", s.get_num().get_str()},
                {"score_den", s.get_den().get_str()},
                {"score_estimate", estimate(s.get_d())}};
}

std::string witness_text(const RepetitionWitness& w) {
    const Rational s = w.score();
    return "u=" + std::to_string(w.u) + " v=" + std::to_string(w.v) + " m=" + std::to_string(w.m) + " score " +
           s.get_num().get_str() + "/" + s.get_den().get_str() + " ~ " + fixed6(s.get_d());
}

Rational parse_intercept(const std::string& text) {
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) {
        throw ParseError("intercept must be an integer or P/Q", 0);
    }
    r.canonicalize();
    return r;
}

std::string format_or(const Config& cfg, const char* fallback) { return cfg.format.empty() ? fallback : cfg.format; }

void check_format(const std::string& fmt, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
        if (fmt == a) return;
    }
    throw std::invalid_argument("format '" + fmt + "' is not available for this command");
}

Word source_word(const Config& cfg) {
    const bool literal = cfg.source.starts_with("word:");
    return materialize_word(cfg.source, cfg.base, literal && !cfg.prefix_given ? 0 : cfg.prefix);
}

int cmd_digits(const Config& cfg, std::ostream& out, std::ostream& err) {
    const std::string fmt = format_or(cfg, "text");
    check_format(fmt, {"text", "json"});
    const DigitStream ds = digits(parse_real(cfg.source), cfg.base, cfg.count);
    if (fmt == "json") {
        Json digits = Json::array();
        for (Letter d : ds.digits) digits.push_back(d);
        out << Json{{"spec", cfg.source},
                    {"base", cfg.base},
                    {"integer_part", ds.integer_part.get_str()},
                    {"digits", digits},
                    {"certified", ds.certified()},
                    {"requested", ds.requested}}
                   .dump(2)
            << "\n";
    } else {
        out << ds.render() << "\n";
    }
    if (!ds.complete()) {
        err << "budget exhausted: " << ds.certified() << " of " << ds.requested << " digits certified\n";
        return budget;
    }
    return ok;
}

int cmd_profile(const Config& cfg, bool gap_only, std::ostream& out) {
    const std::string fmt = format_or(cfg, "csv");
    check_format(fmt, {"csv", "text", "json"});
    const Word w = source_word(cfg);
    const std::size_t n_max = cfg.nmax ? cfg.nmax : std::min<std::size_t>(30, w.size());
    const auto profile = complexity_profile(w, n_max);
    const auto gaps = gap_profile(profile);
    if (fmt == "csv") {
        out << profile.to_csv();
    } else if (fmt == "json") {
        Json j{{"source", cfg.source}, {"base", cfg.base}, {"prefix_length", w.size()}, {"kind", "lower_bound"}};
        if (!gap_only) j["counts"] = profile.counts;
        j["gaps"] = gaps;
        out << j.dump(2) << "\n";
    } else {
        out << "# prefix of " << w.size() << " letters; counts are lower bounds for the infinite word\n";
        for (std::size_t n = 1; n <= n_max; ++n) {
            if (gap_only) {
                out << n << " " << gaps[n - 1] << "\n";
            } else {
                out << n << " " << profile.at(n) << " " << gaps[n - 1] << "\n";
            }
        }
    }
    return ok;
}

int cmd_exponent(const Config& cfg, bool initial, std::ostream& out) {
    const std::string fmt = format_or(cfg, "text");
    check_format(fmt, {"text", "json"});
    const Word w = source_word(cfg);
    const std::size_t t = cfg.threshold ? cfg.threshold : default_threshold(w.size());
    const ScanOptions scan{cfg.threads};
    const ExponentEstimate est = initial ? ice_estimate(w, t, scan) : dio_estimate(w, t, scan);
    if (fmt == "json") {
        out << Json{{"source", cfg.source},
                    {"exponent", initial ? "ice" : "dio"},
                    {"base", cfg.base},
                    {"prefix_length", est.prefix_length},
                    {"threshold", est.threshold},
                    {"global", witness_json(est.global_max)},
                    {"persistent", witness_json(est.persistent_max)}}
                   .dump(2)
            << "\n";
    } else {
        out << (initial ? "ice" : "dio") << " estimate over " << est.prefix_length << " letters, threshold "
            << est.threshold << "\n";
        out << "global     " << witness_text(est.global_max) << "\n";
        out << "persistent " << witness_text(est.persistent_max) << "\n";
    }
    return ok;
}

int cmd_cf(const Config& cfg, std::ostream& out, std::ostream& err) {
    const std::string fmt = format_or(cfg, "text");
    check_format(fmt, {"text", "json"});
    const std::size_t terms = cfg.terms ? cfg.terms : 20;
    const CFExpansion cf = cf_from_enclosure(parse_real(cfg.source), terms);
    if (fmt == "json") {
        Json q = Json::array(), c = Json::array();
        for (const auto& a : cf.quotients) q.push_back(a.get_str());
        for (const auto& pq : cf.convergents) c.push_back(Json::array({pq.p.get_str(), pq.q.get_str()}));
        out << Json{{"spec", cfg.source},
                    {"quotients", q},
                    {"convergents", c},
                    {"certified", cf.certified()},
                    {"requested", cf.requested},
                    {"terminated", cf.terminated}}
                   .dump(2)
            << "\n";
    } else {
        out << "[";
        for (std::size_t i = 0; i < cf.quotients.size(); ++i) out << (i ? "," : "") << cf.quotients[i].get_str();
        out << "]\n";
        if (cf.partial()) out << "terms certified: " << cf.certified() << "\n";
    }
    if (cf.partial()) {
        err << "budget exhausted: " << cf.certified() << " of " << cf.requested << " terms certified\n";
        return budget;
    }
    return ok;
}

int cmd_mu(const Config& cfg, std::ostream& out, std::ostream& err) {
    const std::string fmt = format_or(cfg, "text");
    check_format(fmt, {"text", "json"});
    const std::size_t terms = cfg.terms ? cfg.terms : 60;
    const CFExpansion cf = cf_from_enclosure(parse_real(cfg.source), terms);
    if (cf.terminated) throw std::invalid_argument("the value is rational: its expansion stops after " +
                                                   std::to_string(cf.certified()) + " terms");
    const MuEstimate mu = mu_estimate(cf, cfg.nmin);
    if (fmt == "json") {
        Json values = Json::array();
        for (double v : mu.values) values.push_back(six_places(v));
        out << Json{{"spec", cfg.source},
                    {"certified", cf.certified()},
                    {"n_min", mu.n_min},
                    {"values", values},
                    {"kind", "estimate"},
                    {"global_max", estimate(mu.global_max)},
                    {"tail_max", estimate(mu.tail_max)}}
                   .dump(2)
            << "\n";
    } else {
        for (std::size_t i = 0; i < mu.values.size(); ++i) out << mu.n_min + i << " " << fixed6(mu.values[i]) << "\n";
        out << "global_max " << fixed6(mu.global_max) << " (estimate)\n";
        out << "tail_max " << fixed6(mu.tail_max) << " (estimate)\n";
    }
    if (cf.partial()) {
        err << "budget exhausted: " << cf.certified() << " of " << cf.requested << " terms certified\n";
        return budget;
    }
    return ok;
}

int cmd_sturmian(const Config& cfg, std::ostream& out) {
    const std::string fmt = format_or(cfg, "text");
    check_format(fmt, {"text", "json"});
    const SlopeSpec slope = parse_slope(cfg.slope);
    const Word w = mechanical_word(slope, parse_intercept(cfg.intercept), cfg.prefix);
    if (fmt == "json") {
        out << Json{{"slope", slope.describe()},
                    {"intercept", cfg.intercept},
                    {"length", w.size()},
                    {"word", w.render()},
                    {"frequency_deviation_bound", rational_json(letter_frequency_check(w, slope))}}
                   .dump(2)
            << "\n";
    } else {
        out << w.render() << "\n";
    }
    return ok;
}

int cmd_quasi(const Config& cfg, std::ostream& out) {
    const std::string fmt = format_or(cfg, "text");
    check_format(fmt, {"text", "json"});
    const QuasiSturmianSpec spec{parse_word(cfg.source), parse_morphism(cfg.morphism), parse_slope(cfg.slope),
                                 parse_intercept(cfg.intercept)};
    const Word w = apply_morphism(spec, cfg.prefix);
    const std::size_t n_max = cfg.nmax ? cfg.nmax : std::min<std::size_t>(500, w.size() / 4);
    const QuasiSturmianFit fit = quasi_sturmian_check(w, n_max);
    const Rational deviation = morphic_length_check(spec, cfg.prefix);
    const std::string head = w.prefix(std::min<std::size_t>(w.size(), 60)).render();
    if (fmt == "json") {
        out << Json{{"word_prefix", head},
                    {"length", w.size()},
                    {"morphism", spec.morphism.describe()},
                    {"slope", spec.slope.describe()},
                    {"fit", Json{{"found", fit.found},
                                 {"k", fit.k},
                                 {"n0", fit.n0},
                                 {"n_max", fit.n_max},
                                 {"plateau", fit.plateau}}},
                    {"length_deviation_bound", rational_json(deviation)}}
                   .dump(2)
            << "\n";
    } else {
        out << head << (w.size() > 60 ? "..." : "") << "\n";
        if (fit.found) {
            out << "p(n) = n + " << fit.k << " for n = " << fit.n0 << ".." << fit.n_max << " (plateau " << fit.plateau
                << ")\n";
        } else {
            out << "no plateau of length " << kQuasiSturmianPlateau << " up to n = " << fit.n_max << "\n";
        }
        out << "length deviation <= " << deviation.get_str() << " ~ " << fixed6(deviation.get_d()) << "\n";
    }
    return ok;
}

int cmd_approximant(const Config& cfg, std::ostream& out) {
    const std::string fmt = format_or(cfg, "text");
    check_format(fmt, {"text", "json"});
    const RealSpec xi = parse_real(cfg.source);
    const DigitStream ds = digits(xi, cfg.base, cfg.prefix);
    if (!ds.complete()) {
        throw BudgetExhausted("only " + std::to_string(ds.certified()) + " of " + std::to_string(cfg.prefix) +
                              " digits certified");
    }
    const std::size_t t = cfg.threshold ? cfg.threshold : default_threshold(ds.certified());
    const auto est = dio_estimate(ds.word(), t, ScanOptions{cfg.threads});
    const RepetitionWitness w = cfg.persistent ? est.persistent_max : est.global_max;
    const Approximant ap = witness_to_approximant(ds.word(), w, cfg.base, ds.integer_part);
    const ApproximationCheck check = verify_approximation(xi, ap);
    if (fmt == "json") {
        out << Json{{"spec", cfg.source},
                    {"base", cfg.base},
                    {"witness", witness_json(w)},
                    {"p", ap.p.get_str()},
                    {"q", ap.q.get_str()},
                    {"lowest_terms", rational_json(ap.lowest_terms())},
                    {"digit_bound", to_string(check.digit_bound)},
                    {"power_bound", to_string(check.power_bound)},
                    {"bits_used", check.bits_used}}
                   .dump(2)
            << "\n";
    } else {
        out << "witness " << witness_text(w) << "\n";
        out << "p " << ap.p.get_str() << "\n";
        out << "q " << ap.q.get_str() << "\n";
        out << "lowest terms " << ap.lowest_terms().get_str() << "\n";
        out << "|xi - p/q| < b^-m: " << to_string(check.digit_bound) << "\n";
        out << "|xi - p/q| < q^-(m/(u+v)): " << to_string(check.power_bound) << "\n";
    }
    if (check.both_hold()) return ok;
    if (check.digit_bound == Verdict::fails || check.power_bound == Verdict::fails) return criterion_failed;
    return budget;
}

int cmd_report(const Config& cfg, std::ostream& out) {
    const std::string fmt = format_or(cfg, "json");
    check_format(fmt, {"text", "json"});
    DioMuOptions opts;
    opts.base = cfg.base;
    opts.prefix = cfg.prefix;
    opts.cf_terms = cfg.terms ? cfg.terms : 60;
    opts.slack = cfg.slack;
    opts.threshold = cfg.threshold;
    opts.n_min = cfg.nmin;
    opts.scan.threads = cfg.threads;
    const DioMuReport r = dio_mu_report(parse_real(cfg.source), opts);
    if (fmt == "json") {
        out << r.to_json() << "\n";
    } else {
        out << "spec " << r.spec << "\n";
        out << "digits certified " << r.digits_certified << " of " << opts.prefix << " (base " << opts.base << ")\n";
        if (r.dio) {
            out << "dio global     " << witness_text(r.dio->global_max) << "\n";
            out << "dio persistent " << witness_text(r.dio->persistent_max) << "\n";
        }
        out << "cf terms certified " << r.cf_certified << " of " << opts.cf_terms << "\n";
        if (r.mu) out << "mu tail_max " << fixed6(r.mu->tail_max) << " global_max " << fixed6(r.mu->global_max) << "\n";
        if (r.dio && r.mu) {
            out << "dio <= mu_tail + " << fixed6(opts.slack) << ": " << (r.inequality_holds ? "yes" : "no") << "\n";
        }
        if (!r.note.empty()) out << r.note << "\n";
    }
    return r.partial && !r.rational ? budget : ok;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
    acceptance::Context ctx;
    ctx.threads = cfg.threads;
    ctx.seed = cfg.seed;
    std::size_t failed = 0, total = 0;
    acceptance::run_suite(cfg.suite, ctx, [&](const acceptance::Outcome& o) {
        out << acceptance::format_line(o) << std::endl;
        ++total;
        if (!o.passed) ++failed;
    });
    out << (total - failed) << "/" << total << " criteria passed\n";
    return failed ? criterion_failed : ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact experiments on digit expansions, continued fractions and Sturmian words", "dioph"};
    app.require_subcommand(1);
    Config cfg;

    const auto base_opt = [&](CLI::App* sub) {
        sub->add_option("--base", cfg.base, "Digit base")->check(CLI::Range(2U, 1U << 30));
    };
    const auto format_opt = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    };
    const auto prefix_opt = [&](CLI::App* sub) {
        sub->add_option("--prefix", cfg.prefix, "Prefix length")
            ->check(CLI::PositiveNumber)
            ->each([&](const std::string&) { cfg.prefix_given = true; });
    };
    const auto threads_opt = [&](CLI::App* sub) {
        sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1U, 256U));
    };

    auto* digits_cmd = app.add_subcommand("digits", "Certified base-b digits of a real number");
    digits_cmd->add_option("real", cfg.source, "Real number")->required();
    base_opt(digits_cmd);
    digits_cmd->add_option("--count", cfg.count, "Number of digits")->check(CLI::PositiveNumber);
    format_opt(digits_cmd);

    auto* complexity_cmd = app.add_subcommand("complexity", "Factor complexity profile of a prefix");
    auto* gap_cmd = app.add_subcommand("gap", "p(n) - n profile of a prefix");
    auto* ice_cmd = app.add_subcommand("ice", "Initial critical exponent estimate");
    auto* dio_cmd = app.add_subcommand("dio", "Diophantine exponent estimate");
    for (auto* sub : {complexity_cmd, gap_cmd, ice_cmd, dio_cmd}) {
        sub->add_option("source", cfg.source, "Word source or real number")->required();
        base_opt(sub);
        prefix_opt(sub);
        format_opt(sub);
    }
    for (auto* sub : {complexity_cmd, gap_cmd}) {
        sub->add_option("--nmax", cfg.nmax, "Largest factor length")->check(CLI::PositiveNumber);
    }
    for (auto* sub : {ice_cmd, dio_cmd}) {
        sub->add_option("--threshold", cfg.threshold, "Persistence threshold on u + v")->check(CLI::PositiveNumber);
        threads_opt(sub);
    }

    auto* cf_cmd = app.add_subcommand("cf", "Certified continued fraction expansion");
    auto* mu_cmd = app.add_subcommand("mu", "Irrationality exponent estimate from partial quotients");
    for (auto* sub : {cf_cmd, mu_cmd}) {
        sub->add_option("real", cfg.source, "Real number")->required();
        sub->add_option("--terms", cfg.terms, "Partial quotients to certify")->check(CLI::PositiveNumber);
        format_opt(sub);
    }
    mu_cmd->add_option("--nmin", cfg.nmin, "First index n")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));

    auto* sturmian_cmd = app.add_subcommand("sturmian", "Mechanical word of an irrational slope");
    sturmian_cmd->add_option("slope", cfg.slope, "Slope")->required();
    sturmian_cmd->add_option("--intercept", cfg.intercept, "Intercept in [0, 1) as P/Q");
    prefix_opt(sturmian_cmd);
    format_opt(sturmian_cmd);

    auto* quasi_cmd = app.add_subcommand("quasi", "Quasi-Sturmian word W phi(s) and its complexity fit");
    quasi_cmd->add_option("word", cfg.source, "Prefix word W (digits or JSON array)")->required();
    quasi_cmd->add_option("morphism", cfg.morphism, "Morphism, e.g. 0>01;1>001")->required();
    quasi_cmd->add_option("slope", cfg.slope, "Slope of s")->required();
    quasi_cmd->add_option("--intercept", cfg.intercept, "Intercept in [0, 1) as P/Q");
    quasi_cmd->add_option("--nmax", cfg.nmax, "Largest factor length")->check(CLI::PositiveNumber);
    prefix_opt(quasi_cmd);
    format_opt(quasi_cmd);

    auto* approximant_cmd = app.add_subcommand("approximant", "Rational approximant from the best repetition");
    approximant_cmd->add_option("real", cfg.source, "Real number")->required();
    base_opt(approximant_cmd);
    prefix_opt(approximant_cmd);
    approximant_cmd->add_option("--threshold", cfg.threshold, "Persistence threshold")->check(CLI::PositiveNumber);
    approximant_cmd->add_flag("--persistent", cfg.persistent, "Use the persistent witness");
    threads_opt(approximant_cmd);
    format_opt(approximant_cmd);

    auto* report_cmd = app.add_subcommand("report", "dio estimate of the digits against the mu estimate");
    report_cmd->add_option("real", cfg.source, "Real number")->required();
    base_opt(report_cmd);
    prefix_opt(report_cmd);
    report_cmd->add_option("--terms", cfg.terms, "Partial quotients to certify")->check(CLI::PositiveNumber);
    report_cmd->add_option("--threshold", cfg.threshold, "Persistence threshold")->check(CLI::PositiveNumber);
    report_cmd->add_option("--nmin", cfg.nmin, "First index n for mu")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
    report_cmd->add_option("--slack", cfg.slack, "Allowed excess of dio over mu")->check(CLI::NonNegativeNumber);
    threads_opt(report_cmd);
    format_opt(report_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Run acceptance criteria");
    verify_cmd->add_option("--suite", cfg.suite, "Suite name")->check(CLI::IsMember(acceptance::suite_names()));
    verify_cmd->add_option("--seed", cfg.seed, "Seed for randomized criteria");
    threads_opt(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (digits_cmd->parsed()) return cmd_digits(cfg, out, err);
        if (complexity_cmd->parsed()) return cmd_profile(cfg, false, out);
        if (gap_cmd->parsed()) return cmd_profile(cfg, true, out);
        if (ice_cmd->parsed()) return cmd_exponent(cfg, true, out);
        if (dio_cmd->parsed()) return cmd_exponent(cfg, false, out);
        if (cf_cmd->parsed()) return cmd_cf(cfg, out, err);
        if (mu_cmd->parsed()) return cmd_mu(cfg, out, err);
        if (sturmian_cmd->parsed()) return cmd_sturmian(cfg, out);
        if (quasi_cmd->parsed()) return cmd_quasi(cfg, out);
        if (approximant_cmd->parsed()) return cmd_approximant(cfg, out);
        if (report_cmd->parsed()) return cmd_report(cfg, out);
        if (verify_cmd->parsed()) return cmd_verify(cfg, out);
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const BudgetExhausted& e) {
        err << "budget exhausted: " << e.what() << "\n";
        return budget;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return criterion_failed;
    }
    return usage;
}

}  // namespace dioph::cli
