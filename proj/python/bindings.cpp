#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <subexp/asymptotics.hpp>
#include <subexp/cli.hpp>
#include <subexp/exact.hpp>
#include <subexp/khintchine.hpp>
#include <subexp/specfun.hpp>

namespace py = pybind11;
using namespace subexp;

namespace
{

Real to_arg(const py::handle &value)
{
    if (py::isinstance<py::str>(value)) {
        return Real(value.cast<std::string>());
    }
    if (py::isinstance<py::int_>(value)) {
        return Real(py::str(value).cast<std::string>());
    }
    return Real(value.cast<double>());
}

double to_float(const Real &x)
{
    return x.convert_to<double>();
}

py::object to_python(const Rational &q)
{
    const Integer num = numerator(q);
    const Integer den = denominator(q);
    py::object builtins_int = py::module_::import("builtins").attr("int");
    if (den == 1) {
        return builtins_int(num.str());
    }
    return py::module_::import("fractions").attr("Fraction")(builtins_int(num.str()), builtins_int(den.str()));
}

Rational to_rational(const py::handle &value)
{
    return parse_rational(py::str(value).cast<std::string>());
}

py::dict estimate_dict(const log_estimate &le)
{
    py::dict d;
    d["log_value"] = to_float(le.log_value);
    d["prefactor_log"] = to_float(le.terms.prefactor_log);
    d["power_log"] = to_float(le.terms.power_log);
    d["exponent_sum"] = to_float(le.terms.exponent_sum);
    d["constant_terms"] = to_float(le.terms.constant_terms);
    d["leading_exponent"] = to_float(le.terms.leading_exponent);
    d["formula"] = to_string(le.formula);
    d["n"] = le.n;
    d["remainder_converged"] = le.remainder_converged;
    return d;
}

formula_kind parse_formula(const std::string &name)
{
    if (name == "khintchine") {
        return formula_kind::khintchine;
    }
    if (name == "explicit") {
        return formula_kind::explicit_form;
    }
    throw py::value_error("formula must be 'khintchine' or 'explicit'");
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact counts and asymptotic estimates for multiplicative generating functions";

    py::register_exception<error>(m, "Error");

    m.def("precision", &working_precision, "Working precision in decimal digits.");
    m.def("set_precision", &set_working_precision, py::arg("digits"));

    m.def("riemann_zeta", [](const py::object &s) { return to_float(specfun::riemann_zeta(to_arg(s))); },
          py::arg("s"));
    m.def("hurwitz_zeta",
          [](const py::object &s, const py::object &q) { return to_float(specfun::hurwitz_zeta(to_arg(s), to_arg(q))); },
          py::arg("s"), py::arg("q"));
    m.def("log_gamma", [](const py::object &x) { return to_float(specfun::log_gamma(to_arg(x))); }, py::arg("x"));
    m.def("riemann_zeta_str",
          [](const py::object &s) { return specfun::riemann_zeta(to_arg(s)).str(working_precision()); },
          py::arg("s"), "zeta(s) as a decimal string at working precision.");

    py::class_<model_spec>(m, "Model")
        .def_property_readonly("label", &model_spec::label)
        .def_property_readonly("kind", [](const model_spec &model) { return to_string(model.kind()); })
        .def("weight", [](const model_spec &model, std::uint64_t j) { return to_python(model.weight(j)); })
        .def("__repr__", [](const model_spec &model) { return "<Model " + model.label() + ">"; });

    m.def("standard", &make_standard);
    m.def("roots", &make_roots);
    m.def("congruent", &make_congruent, py::arg("a"), py::arg("b"));
    m.def(
        "weight_table",
        [](const std::vector<py::object> &weights, const std::string &base) {
            const auto kind = parse_base_kind(base);
            if (!kind) {
                throw py::value_error("base must be multiset, selection or exponential");
            }
            std::vector<Rational> table;
            for (const auto &w : weights) {
                table.push_back(to_rational(w));
            }
            return make_weight_table(table, base_function(*kind));
        },
        py::arg("weights"), py::arg("base") = "multiset");

    py::class_<spectral_data>(m, "Spectrum")
        .def_property_readonly("poles",
                               [](const spectral_data &sd) {
                                   std::vector<std::pair<double, double>> out;
                                   for (const auto &p : sd.poles) {
                                       out.emplace_back(to_float(p.rho), to_float(p.h));
                                   }
                                   return out;
                               })
        .def_property_readonly("A0", [](const spectral_data &sd) { return to_float(sd.A0); })
        .def_property_readonly("h0", [](const spectral_data &sd) { return to_float(sd.h0); })
        .def_property_readonly("d_neg",
                               [](const spectral_data &sd) {
                                   std::vector<double> out;
                                   for (const auto &v : sd.d_neg) {
                                       out.push_back(to_float(v));
                                   }
                                   return out;
                               })
        .def_property_readonly("classification",
                               [](const spectral_data &sd) { return to_string(validate_spectrum(sd).regime); })
        .def("to_json", [](const spectral_data &sd) { return to_json(sd).dump(); });

    m.def("spectrum", [](const model_spec &model) { return derive_spectrum(model); }, py::arg("model"));
    m.def("custom_spectrum",
          [](const std::string &text) { return load_custom_spectrum(nlohmann::json::parse(text)); },
          py::arg("json"));

    m.def("kappa", [](const spectral_data &sd) { return to_float(kappa(sd)); }, py::arg("spectrum"));
    m.def("q_constant", [](const spectral_data &sd) { return to_float(q_constant(sd)); }, py::arg("spectrum"));
    m.def(
        "solve_delta",
        [](const spectral_data &sd, std::uint64_t n) {
            const khintchine_solution s = solve_delta(sd, n);
            py::dict d;
            d["delta"] = to_float(s.delta);
            d["residual"] = to_float(s.residual);
            d["iterations"] = s.iterations;
            return d;
        },
        py::arg("spectrum"), py::arg("n"));
    m.def(
        "log_estimate",
        [](const spectral_data &sd, std::uint64_t n, const std::string &formula) {
            return estimate_dict(log_estimate_for(sd, n, parse_formula(formula)));
        },
        py::arg("spectrum"), py::arg("n"), py::arg("formula") = "explicit");

    m.def(
        "exact_coefficients",
        [](const model_spec &model, std::size_t order) {
            const exact_series series = exact_coefficients(model, order);
            py::list out;
            for (const auto &c : series.coeffs) {
                out.append(to_python(c));
            }
            return out;
        },
        py::arg("model"), py::arg("N"));
    m.def(
        "pentagonal_oracle",
        [](std::size_t order) {
            py::list out;
            for (const auto &c : pentagonal_oracle(order).coeffs) {
                out.append(to_python(c));
            }
            return out;
        },
        py::arg("N"));

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line interface; returns (exit code, stdout, stderr).");
    m.def("verify", [] {
        std::vector<std::pair<std::string, bool>> out;
        for (const auto &check : cli::verify_constants()) {
            out.emplace_back(check.name, check.ok);
        }
        return out;
    });
}
