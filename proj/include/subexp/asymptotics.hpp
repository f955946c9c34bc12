#pragma once

#include <cstdint>
#include <string>

#include <subexp/numeric.hpp>
#include <subexp/spectrum.hpp>

namespace subexp
{

enum class formula_kind
{
    khintchine,
    explicit_form,
};

std::string to_string(formula_kind kind);

// Additive split of a predicted log c_n. log_value is the sum of the four aggregate terms.
struct log_breakdown
{
    Real prefactor_log;  // constant out-exponential factors
    Real power_log;      // delta^{...} or n^kappa
    Real exponent_sum;   // pole terms in the exponent (and n delta for the Khintchine form)
    Real constant_terms; // h0 + Delta(delta), or Q

    // Part of exponent_sum: the top-pole term (explicit form) or h_r delta^{-rho_r} + n delta.
    Real leading_exponent;
};

struct log_estimate
{
    Real log_value;
    log_breakdown terms;
    std::uint64_t n = 0;
    formula_kind formula = formula_kind::khintchine;
    // Khintchine form only: the Delta series met its truncation tolerance.
    bool remainder_converged = true;
};

struct remainder_sum
{
    Real value;
    bool tolerance_reached = false;
    unsigned terms_used = 0;
};

// Delta(tau) = sum_{l>=1} (-1)^l D(-l) tau^l / l!, truncated once the next nonzero term is below
// tol (1 + |partial sum|). tolerance_reached is false if d_neg runs out first.
remainder_sum remainder_delta(const spectral_data &sd, const Real &tau, const Real &tol);

// Truncation tolerance for Delta(delta_n) in the Khintchine form.
inline constexpr double remainder_tolerance = 1e-20;

// log of delta^{rho_r/2+1} / sqrt(2 pi rho_r (rho_r+1) h_r) exp(sum_{l=0}^r h_l delta^{-rho_l} - A0 log delta
// + Delta(delta) + n delta) at the Khintchine solution delta = delta_n.
log_estimate log_estimate_khintchine(const spectral_data &sd, std::uint64_t n);

// (-rho_r/2 - 1 + A0) / (rho_r + 1)
Real kappa(const spectral_data &sd);

// h0, minus (rho_r h_r)^{-(2 rho_{r-1}+1)/(rho_r+1)} (rho_{r-1} h_{r-1})^2 / (2 (rho_r+1)) in the critical case.
// Throws ineligible_spectrum_error when 2 rho_{r-1} - rho_r > 0.
Real q_constant(const spectral_data &sd);

// The explicit large-n formula; requires a subcritical or critical spectrum.
log_estimate log_estimate_explicit(const spectral_data &sd, std::uint64_t n);

log_estimate log_estimate_for(const spectral_data &sd, std::uint64_t n, formula_kind formula);

struct decimal_form
{
    Real mantissa; // in [1, 10), 12 significant digits
    long long exponent10 = 0;
};

decimal_form to_decimal(const Real &log_value);
inline decimal_form to_decimal(const log_estimate &le)
{
    return to_decimal(le.log_value);
}

} // namespace subexp
