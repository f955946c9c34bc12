#pragma once

#include <cstdint>
#include <vector>

#include <subexp/numeric.hpp>
#include <subexp/spectrum.hpp>

namespace subexp
{

// sum_l h_l rho_l delta^{-rho_l-1} + A0 / delta + D(-1)
Real khintchine_lhs(const spectral_data &sd, const Real &delta);

// d/d delta of khintchine_lhs.
Real khintchine_lhs_derivative(const spectral_data &sd, const Real &delta);

// Two-term expansion of z_n = 1/delta_n:
// (n / (rho_r h_r))^{1/(rho_r+1)} + w_n, with w_n from the second-largest pole (0 when r = 1).
Real initial_guess(const spectral_data &sd, std::uint64_t n);

struct khintchine_solution
{
    Real delta;
    Real z;
    Real residual; // khintchine_lhs(delta) - n
    int iterations = 0;
    Real lo;
    Real hi;
    // Bracket width after each iteration; non-increasing.
    std::vector<Real> bracket_widths;
    int bisection_steps = 0;
};

// max(1e-10 n, 1e-12)
Real residual_tolerance(std::uint64_t n);

inline constexpr int max_solver_iterations = 200;

// Safeguarded Newton-bisection on lhs(delta) = n. Requires n > D(-1).
khintchine_solution solve_delta(const spectral_data &sd, std::uint64_t n);

} // namespace subexp
