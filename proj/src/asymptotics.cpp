#include <subexp/asymptotics.hpp>

#include <fmt/format.h>

#include <subexp/errors.hpp>
#include <subexp/khintchine.hpp>
#include <subexp/specfun.hpp>

namespace subexp
{

std::string to_string(formula_kind kind)
{
    return kind == formula_kind::khintchine ? "khintchine" : "explicit";
}

remainder_sum remainder_delta(const spectral_data &sd, const Real &tau, const Real &tol)
{
    if (!(tau > 0 && tau < 1)) {
        throw domain_error(fmt::format("remainder_delta: tau = {} outside (0, 1)", format_sig(tau)));
    }
    if (sd.d_neg.empty()) {
        throw domain_error("remainder_delta: d_neg is empty");
    }
    remainder_sum out;
    out.value = 0;
    Real tau_pow = 1;
    Real factorial = 1;
    for (std::size_t l = 1; l <= sd.d_neg.size(); ++l) {
        tau_pow *= tau;
        factorial *= l;
        const Real &d = sd.d_neg[l - 1];
        if (d == 0) {
            continue;
        }
        const Real term = (l % 2 == 0 ? d : Real(-d)) * tau_pow / factorial;
        if (out.terms_used > 0 && abs(term) < tol * (1 + abs(out.value))) {
            out.tolerance_reached = true;
            return out;
        }
        out.value += term;
        out.terms_used = static_cast<unsigned>(l);
    }
    // Exhausted: accepted only when the last stored coefficient vanishes.
    out.tolerance_reached = sd.d_neg.back() == 0;
    return out;
}

log_estimate log_estimate_khintchine(const spectral_data &sd, std::uint64_t n)
{
    const khintchine_solution sol = solve_delta(sd, n);
    const Real &delta = sol.delta;
    const Real log_delta = log(delta);
    const pole &top = sd.top();

    log_estimate le;
    le.n = n;
    le.formula = formula_kind::khintchine;

    // Gaussian local-limit factor: variance ~ rho_r (rho_r+1) h_r delta^{-rho_r-2}.
    le.terms.prefactor_log = -log(2 * specfun::pi() * top.rho * (top.rho + 1) * top.h) / 2;
    le.terms.power_log = (top.rho / 2 + 1 - sd.A0) * log_delta;

    Real lower = 0;
    for (std::size_t l = 0; l + 1 < sd.r(); ++l) {
        lower += sd.poles[l].h * pow(delta, -sd.poles[l].rho);
    }
    le.terms.leading_exponent = top.h * pow(delta, -top.rho) + Real(n) * delta;
    le.terms.exponent_sum = le.terms.leading_exponent + lower;

    const remainder_sum delta_sum = remainder_delta(sd, delta, Real(remainder_tolerance));
    le.remainder_converged = delta_sum.tolerance_reached;
    le.terms.constant_terms = sd.h0 + delta_sum.value;

    le.log_value = le.terms.prefactor_log + le.terms.power_log + le.terms.exponent_sum + le.terms.constant_terms;
    return le;
}

Real kappa(const spectral_data &sd)
{
    const Real &rho = sd.top().rho;
    return (-rho / 2 - 1 + sd.A0) / (rho + 1);
}

namespace
{

void require_eligible(const spectral_data &sd)
{
    const spectrum_report report = validate_spectrum(sd);
    if (!report.valid()) {
        throw spectrum_error("invalid spectrum: " + report.problems.front());
    }
    if (report.regime == pole_regime::ineligible) {
        throw ineligible_spectrum_error(fmt::format(
            "2 rho_(r-1) - rho_r = {} > 0: no explicit formula for this spectrum", format_sig(*report.gap)));
    }
}

} // namespace

Real q_constant(const spectral_data &sd)
{
    require_eligible(sd);
    if (validate_spectrum(sd).regime != pole_regime::critical) {
        return sd.h0;
    }
    const pole &top = sd.top();
    const pole &next = sd.poles[sd.r() - 2];
    const Real scale = top.rho * top.h;
    const Real cross = next.rho * next.h;
    return sd.h0 - pow(scale, -(2 * next.rho + 1) / (top.rho + 1)) * cross * cross / (2 * (top.rho + 1));
}

log_estimate log_estimate_explicit(const spectral_data &sd, std::uint64_t n)
{
    require_eligible(sd);
    if (n == 0) {
        throw domain_error("log_estimate_explicit: n must be positive");
    }
    const pole &top = sd.top();
    const Real scale = top.rho * top.h;
    const Real n_real(n);
    const Real log_n = log(n_real);

    log_estimate le;
    le.n = n;
    le.formula = formula_kind::explicit_form;

    le.terms.prefactor_log = -log(2 * specfun::pi() * scale * (top.rho + 1)) / 2
                             + (top.rho + 2 - 2 * sd.A0) / (2 * (top.rho + 1)) * log(scale);
    le.terms.power_log = kappa(sd) * log_n;

    const Real top_power = top.rho / (top.rho + 1);
    le.terms.leading_exponent = (1 + top.rho) * top.h * pow(scale, -top_power) * pow(n_real, top_power);
    Real lower = 0;
    for (std::size_t l = 0; l + 1 < sd.r(); ++l) {
        const Real power = sd.poles[l].rho / (top.rho + 1);
        lower += sd.poles[l].h * pow(scale, -power) * pow(n_real, power);
    }
    le.terms.exponent_sum = le.terms.leading_exponent + lower;
    le.terms.constant_terms = q_constant(sd);

    le.log_value = le.terms.prefactor_log + le.terms.power_log + le.terms.exponent_sum + le.terms.constant_terms;
    return le;
}

log_estimate log_estimate_for(const spectral_data &sd, std::uint64_t n, formula_kind formula)
{
    return formula == formula_kind::khintchine ? log_estimate_khintchine(sd, n) : log_estimate_explicit(sd, n);
}

decimal_form to_decimal(const Real &log_value)
{
    if (!isfinite(log_value)) {
        throw domain_error("to_decimal: log value is not finite");
    }
    const Real ln10 = log(Real(10));
    const Real e = floor(log_value / ln10);
    Real mantissa = exp(log_value - e * ln10);
    const Real scale("1e11");
    mantissa = round(mantissa * scale) / scale;
    long long exponent = e.convert_to<long long>();
    if (mantissa >= 10) {
        mantissa /= 10;
        ++exponent;
    } else if (mantissa < 1) {
        mantissa *= 10;
        --exponent;
    }
    return decimal_form{mantissa, exponent};
}

} // namespace subexp
