#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <subexp/model.hpp>
#include <subexp/numeric.hpp>

namespace subexp
{

// A simple pole of Gamma(s) D(s) at rho > 0 with residue h.
struct pole
{
    Real rho;
    Real h;
    // Residue A of D_b at rho when D(s) = zeta(s+1) D_b(s); then h = A zeta(rho+1) Gamma(rho).
    std::optional<Real> dirichlet_residue;
};

// Analytic data of Gamma(s) D(s), D the Dirichlet series of Lambda_k.
struct spectral_data
{
    std::vector<pole> poles; // strictly increasing in rho
    Real A0;                 // lim_{s->0} s D(s)
    Real h0;                 // Theta - gamma A0
    std::optional<Real> theta;
    std::vector<Real> d_neg; // D(-1), D(-2), ..., D(-L)

    std::size_t r() const
    {
        return poles.size();
    }
    const pole &top() const
    {
        return poles.back();
    }
    Real d_minus(std::size_t l) const;
};

inline constexpr unsigned default_d_neg_terms = 20;

// Tolerance on 2 rho_{r-1} - rho_r for the critical case.
inline constexpr double critical_tolerance = 1e-12;

enum class pole_regime
{
    subcritical, // 2 rho_{r-1} - rho_r < 0, or r = 1
    critical,    // 2 rho_{r-1} - rho_r = 0
    ineligible,  // 2 rho_{r-1} - rho_r > 0
};

std::string to_string(pole_regime regime);

struct spectrum_report
{
    bool has_poles = false;
    bool ordered = false;
    bool positive_residues = false;
    bool has_d_neg = false;
    std::optional<Real> gap; // 2 rho_{r-1} - rho_r, absent when r = 1
    pole_regime regime = pole_regime::subcritical;
    std::vector<std::string> problems;

    bool valid() const
    {
        return problems.empty();
    }
    bool eligible() const
    {
        return valid() && regime != pole_regime::ineligible;
    }
};

spectrum_report validate_spectrum(const spectral_data &sd);

// Spectra of the presets from D(s) = zeta(s+1) D_b(s). Custom models throw custom_model_error.
spectral_data derive_spectrum(const model_spec &model, unsigned d_neg_terms = default_d_neg_terms);

// Document keys: poles (array of {rho, h}), A0, h0, d_neg (array), optional theta.
// Numbers may be JSON numbers or strings ("1.6449...", "1/24").
spectral_data load_custom_spectrum(const nlohmann::json &document);

nlohmann::json to_json(const spectral_data &sd);

} // namespace subexp
