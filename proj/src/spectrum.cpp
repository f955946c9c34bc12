#include <subexp/spectrum.hpp>

#include <cmath>
#include <utility>

#include <fmt/format.h>

#include <subexp/errors.hpp>
#include <subexp/specfun.hpp>

namespace subexp
{

Real spectral_data::d_minus(std::size_t l) const
{
    if (l == 0 || l > d_neg.size()) {
        throw domain_error(fmt::format("D(-{}) not available (have {} values)", l, d_neg.size()));
    }
    return d_neg[l - 1];
}

std::string to_string(pole_regime regime)
{
    switch (regime) {
        case pole_regime::subcritical:
            return "subcritical";
        case pole_regime::critical:
            return "critical";
        case pole_regime::ineligible:
            return "ineligible";
    }
    return "unknown";
}

spectrum_report validate_spectrum(const spectral_data &sd)
{
    spectrum_report report;
    report.has_poles = !sd.poles.empty();
    if (!report.has_poles) {
        report.problems.push_back("no positive poles");
    }

    report.ordered = true;
    report.positive_residues = true;
    for (std::size_t l = 0; l < sd.poles.size(); ++l) {
        if (sd.poles[l].rho <= 0) {
            report.ordered = false;
            report.problems.push_back(fmt::format("pole {} has rho <= 0", l + 1));
        }
        if (l > 0 && !(sd.poles[l - 1].rho < sd.poles[l].rho)) {
            report.ordered = false;
            report.problems.push_back(fmt::format("poles {} and {} are not strictly increasing", l, l + 1));
        }
        if (!(sd.poles[l].h > 0)) {
            report.positive_residues = false;
            report.problems.push_back(fmt::format("residue h_{} is not positive", l + 1));
        }
    }

    report.has_d_neg = !sd.d_neg.empty();
    if (!report.has_d_neg) {
        report.problems.push_back("d_neg is empty (D(-1) is required)");
    }

    if (sd.poles.size() >= 2) {
        const Real gap = 2 * sd.poles[sd.r() - 2].rho - sd.poles[sd.r() - 1].rho;
        report.gap = gap;
        if (abs(gap) <= Real(critical_tolerance)) {
            report.regime = pole_regime::critical;
        } else if (gap < 0) {
            report.regime = pole_regime::subcritical;
        } else {
            report.regime = pole_regime::ineligible;
        }
    }
    return report;
}

namespace
{

// h = A zeta(rho+1) Gamma(rho)
pole make_pole(const Real &rho, const Real &dirichlet_residue)
{
    const Real h = dirichlet_residue * specfun::riemann_zeta(rho + 1) * exp(specfun::log_gamma(rho));
    return pole{rho, h, dirichlet_residue};
}

// D(-l) = zeta(1-l) D_b(-l), both factors exact at nonpositive integers.
template <typename DbAtNegative>
std::vector<Real> negative_values(unsigned count, DbAtNegative db)
{
    std::vector<Real> out;
    out.reserve(count);
    for (unsigned l = 1; l <= count; ++l) {
        out.push_back(to_real(specfun::riemann_zeta_nonpositive_integer(l - 1) * db(l)));
    }
    return out;
}

} // namespace

spectral_data derive_spectrum(const model_spec &model, unsigned d_neg_terms)
{
    if (d_neg_terms == 0 || d_neg_terms > 20) {
        throw domain_error(fmt::format("derive_spectrum: d_neg length must lie in [1, 20], got {}", d_neg_terms));
    }
    using specfun::riemann_zeta_deriv;
    using specfun::riemann_zeta_nonpositive_integer;

    spectral_data sd;
    switch (model.kind()) {
        case model_kind::standard: {
            // D_b(s) = zeta(s)
            sd.poles.push_back(make_pole(Real(1), Real(1)));
            sd.A0 = to_real(riemann_zeta_nonpositive_integer(0));
            sd.h0 = riemann_zeta_deriv(Real(0));
            sd.d_neg = negative_values(d_neg_terms, [](unsigned l) { return riemann_zeta_nonpositive_integer(l); });
            break;
        }
        case model_kind::roots: {
            // D_b(s) = 2 zeta(s-1) + zeta(s)
            sd.poles.push_back(make_pole(Real(1), Real(1)));
            sd.poles.push_back(make_pole(Real(2), Real(2)));
            sd.A0 = to_real(2 * riemann_zeta_nonpositive_integer(1) + riemann_zeta_nonpositive_integer(0));
            sd.h0 = 2 * riemann_zeta_deriv(Real(-1)) + riemann_zeta_deriv(Real(0));
            sd.d_neg = negative_values(d_neg_terms, [](unsigned l) {
                return 2 * riemann_zeta_nonpositive_integer(l + 1) + riemann_zeta_nonpositive_integer(l);
            });
            break;
        }
        case model_kind::congruent: {
            // D_b(s) = a^{-s} zeta(s, b/a)
            const auto [a, b] = *model.congruence();
            const Rational q(b, a);
            const Real a_real(a);
            sd.poles.push_back(make_pole(Real(1), 1 / a_real));
            const Rational zeta0 = specfun::hurwitz_zeta_nonpositive_integer(0, q);
            sd.A0 = to_real(zeta0);
            sd.h0 = -log(a_real) * sd.A0 + specfun::hurwitz_zeta_deriv0(to_real(q));
            sd.d_neg = negative_values(d_neg_terms, [a = a, &q](unsigned l) {
                Rational a_pow = 1;
                for (unsigned e = 0; e < l; ++e) {
                    a_pow *= a;
                }
                return a_pow * specfun::hurwitz_zeta_nonpositive_integer(l, q);
            });
            break;
        }
        case model_kind::custom:
            throw custom_model_error("custom models have no derived spectrum; supply poles, A0, h0 and d_neg "
                                     "explicitly (custom spectrum document)");
    }
    // D(s) = zeta(s+1) D_b(s) = A0/s + gamma A0 + D_b'(0) + O(s), so h0 = D_b'(0).
    sd.theta = sd.h0 + specfun::euler_gamma() * sd.A0;
    return sd;
}

namespace
{

Real read_number(const nlohmann::json &value, const std::string &where)
{
    if (value.is_number_integer()) {
        return Real(value.get<long long>());
    }
    if (value.is_number()) {
        return Real(value.get<double>());
    }
    if (value.is_string()) {
        const auto text = value.get<std::string>();
        if (text.find('/') != std::string::npos) {
            return to_real(parse_rational(text));
        }
        try {
            return Real(text);
        } catch (const std::exception &) {
            throw schema_error(fmt::format("{}: '{}' is not a number", where, text));
        }
    }
    throw schema_error(fmt::format("{}: expected a number", where));
}

const nlohmann::json &require(const nlohmann::json &doc, const char *key)
{
    if (!doc.contains(key)) {
        throw schema_error(fmt::format("custom spectrum: missing key '{}'", key));
    }
    return doc.at(key);
}

} // namespace

spectral_data load_custom_spectrum(const nlohmann::json &document)
{
    if (!document.is_object()) {
        throw schema_error("custom spectrum: document must be a JSON object");
    }
    spectral_data sd;

    const auto &poles = require(document, "poles");
    if (!poles.is_array() || poles.empty()) {
        throw schema_error("custom spectrum: 'poles' must be a non-empty array");
    }
    for (std::size_t i = 0; i < poles.size(); ++i) {
        const auto &p = poles[i];
        if (!p.is_object() || !p.contains("rho") || !p.contains("h")) {
            throw schema_error(fmt::format("custom spectrum: poles[{}] needs 'rho' and 'h'", i));
        }
        sd.poles.push_back(pole{read_number(p.at("rho"), fmt::format("poles[{}].rho", i)),
                                read_number(p.at("h"), fmt::format("poles[{}].h", i)), std::nullopt});
    }

    sd.A0 = read_number(require(document, "A0"), "A0");
    sd.h0 = read_number(require(document, "h0"), "h0");
    if (document.contains("theta")) {
        sd.theta = read_number(document.at("theta"), "theta");
    }

    const auto &d_neg = require(document, "d_neg");
    if (!d_neg.is_array() || d_neg.empty()) {
        throw schema_error("custom spectrum: 'd_neg' must be a non-empty array");
    }
    for (std::size_t i = 0; i < d_neg.size(); ++i) {
        sd.d_neg.push_back(read_number(d_neg[i], fmt::format("d_neg[{}]", i)));
    }

    const spectrum_report report = validate_spectrum(sd);
    if (!report.valid()) {
        std::string message = "custom spectrum:";
        for (const auto &problem : report.problems) {
            message += " " + problem + ";";
        }
        throw spectrum_error(message);
    }
    return sd;
}

nlohmann::json to_json(const spectral_data &sd)
{
    nlohmann::json doc;
    doc["poles"] = nlohmann::json::array();
    for (const auto &p : sd.poles) {
        doc["poles"].push_back({{"rho", p.rho.str(0)}, {"h", p.h.str(0)}});
    }
    doc["A0"] = sd.A0.str(0);
    doc["h0"] = sd.h0.str(0);
    if (sd.theta) {
        doc["theta"] = sd.theta->str(0);
    }
    doc["d_neg"] = nlohmann::json::array();
    for (const auto &v : sd.d_neg) {
        doc["d_neg"].push_back(v.str(0));
    }
    return doc;
}

} // namespace subexp
