#include "dioph/approx.hpp"
#include "dioph/contfrac.hpp"
#include "dioph/grammar.hpp"
#include "dioph/realnum.hpp"
#include "dioph/repetition.hpp"
#include "dioph/sturmian.hpp"
#include "dioph/words.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace dioph;

namespace {

py::int_ to_py(const BigInt& x) { return py::int_(py::module_::import("builtins").attr("int")(x.get_str())); }

py::object to_py(const Rational& r) {
    return py::module_::import("fractions").attr("Fraction")(to_py(BigInt(r.get_num())), to_py(BigInt(r.get_den())));
}

Rational from_py_fraction(const py::object& x) {
    const py::object f = py::module_::import("fractions").attr("Fraction")(x);
    Rational r(BigInt(py::str(f.attr("numerator")).cast<std::string>()),
               BigInt(py::str(f.attr("denominator")).cast<std::string>()));
    r.canonicalize();
    return r;
}

Word source_word(const std::string& source, unsigned base, std::optional<std::size_t> prefix) {
    const std::size_t fallback = source.starts_with("word:") ? 0 : 10000;
    return materialize_word(source, base, prefix.value_or(fallback));
}

py::dict witness_dict(const RepetitionWitness& w) {
    py::dict d;
    d["u"] = w.u;
    d["v"] = w.v;
    d["m"] = w.m;
    d["score"] = to_py(w.score());
    return d;
}

py::dict exponent(const std::string& source, unsigned base, std::optional<std::size_t> prefix, std::size_t threshold,
                  unsigned threads, bool initial) {
    const Word w = source_word(source, base, prefix);
    const std::size_t t = threshold ? threshold : default_threshold(w.size());
    ExponentEstimate est;
    {
        py::gil_scoped_release release;
        est = initial ? ice_estimate(w, t, ScanOptions{threads}) : dio_estimate(w, t, ScanOptions{threads});
    }
    py::dict d;
    d["prefix_length"] = est.prefix_length;
    d["threshold"] = est.threshold;
    d["global"] = witness_dict(est.global_max);
    d["persistent"] = witness_dict(est.persistent_max);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact digit, continued fraction and repetition experiments";

    static py::exception<BudgetExhausted> budget_error(m, "BudgetExhausted", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const BudgetExhausted& e) {
            budget_error(e.what());
        }
    });

    m.def(
        "digits",
        [](const std::string& spec, unsigned base, std::size_t count) {
            const DigitStream ds = digits(parse_real(spec), base, count);
            py::dict d;
            d["integer_part"] = to_py(ds.integer_part);
            d["digits"] = std::vector<std::uint32_t>(ds.digits.begin(), ds.digits.end());
            d["certified"] = ds.certified();
            d["rendered"] = ds.render();
            return d;
        },
        py::arg("spec"), py::arg("base") = 10, py::arg("count") = 20);

    m.def(
        "continued_fraction",
        [](const std::string& spec, std::size_t terms) {
            const CFExpansion cf = cf_from_enclosure(parse_real(spec), terms);
            py::list q;
            for (const auto& a : cf.quotients) q.append(to_py(a));
            py::list c;
            for (const auto& pq : cf.convergents) c.append(to_py(make_rational(pq.p, pq.q)));
            py::dict d;
            d["quotients"] = q;
            d["convergents"] = c;
            d["terminated"] = cf.terminated;
            d["partial"] = cf.partial();
            return d;
        },
        py::arg("spec"), py::arg("terms") = 20);

    m.def(
        "mu_estimate",
        [](const std::string& spec, std::size_t terms, std::size_t n_min) {
            const MuEstimate mu = mu_estimate(cf_from_enclosure(parse_real(spec), terms), n_min);
            py::dict d;
            d["n_min"] = mu.n_min;
            d["values"] = mu.values;
            d["global_max"] = mu.global_max;
            d["tail_max"] = mu.tail_max;
            return d;
        },
        py::arg("spec"), py::arg("terms") = 60, py::arg("n_min") = 5);

    m.def(
        "complexity",
        [](const std::string& source, unsigned base, std::optional<std::size_t> prefix, std::size_t n_max) {
            const Word w = source_word(source, base, prefix);
            return complexity_profile(w, std::min(n_max, w.size())).counts;
        },
        py::arg("source"), py::arg("base") = 10, py::arg("prefix") = py::none(), py::arg("n_max") = 30);

    m.def(
        "dio",
        [](const std::string& source, unsigned base, std::optional<std::size_t> prefix, std::size_t threshold,
           unsigned threads) {
            return exponent(source, base, prefix, threshold, threads, false);
        },
        py::arg("source"), py::arg("base") = 10, py::arg("prefix") = py::none(), py::arg("threshold") = 0,
        py::arg("threads") = 1);

    m.def(
        "ice",
        [](const std::string& source, unsigned base, std::optional<std::size_t> prefix, std::size_t threshold,
           unsigned threads) {
            return exponent(source, base, prefix, threshold, threads, true);
        },
        py::arg("source"), py::arg("base") = 10, py::arg("prefix") = py::none(), py::arg("threshold") = 0,
        py::arg("threads") = 1);

    m.def(
        "sturmian",
        [](const std::string& slope, std::size_t length, const py::object& intercept) {
            return mechanical_word(parse_slope(slope), from_py_fraction(intercept), length).render();
        },
        py::arg("slope"), py::arg("length"), py::arg("intercept") = 0);

    m.def(
        "approximant",
        [](const std::string& spec, unsigned base, std::size_t prefix) {
            const RealSpec xi = parse_real(spec);
            const DigitStream ds = digits(xi, base, prefix);
            if (!ds.complete()) throw BudgetExhausted("digit prefix not certified");
            const auto est = dio_estimate(ds.word(), default_threshold(ds.certified()));
            const Approximant ap = witness_to_approximant(ds.word(), est.global_max, base, ds.integer_part);
            const ApproximationCheck check = verify_approximation(xi, ap);
            py::dict d;
            d["witness"] = witness_dict(est.global_max);
            d["p"] = to_py(ap.p);
            d["q"] = to_py(ap.q);
            d["digit_bound"] = to_string(check.digit_bound);
            d["power_bound"] = to_string(check.power_bound);
            return d;
        },
        py::arg("spec"), py::arg("base") = 10, py::arg("prefix") = 10000);

    m.def(
        "report_json",
        [](const std::string& spec, unsigned base, std::size_t prefix, std::size_t terms, double slack) {
            DioMuOptions opts;
            opts.base = base;
            opts.prefix = prefix;
            opts.cf_terms = terms;
            opts.slack = slack;
            return dio_mu_report(parse_real(spec), opts).to_json();
        },
        py::arg("spec"), py::arg("base") = 10, py::arg("prefix") = 10000, py::arg("terms") = 60,
        py::arg("slack") = 0.15);
}
