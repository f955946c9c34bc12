#include <subexp/khintchine.hpp>

#include <fmt/format.h>

#include <subexp/errors.hpp>

namespace subexp
{

Real khintchine_lhs(const spectral_data &sd, const Real &delta)
{
    Real sum = 0;
    for (const auto &p : sd.poles) {
        sum += p.h * p.rho * pow(delta, -p.rho - 1);
    }
    return sum + sd.A0 / delta + sd.d_minus(1);
}

Real khintchine_lhs_derivative(const spectral_data &sd, const Real &delta)
{
    Real sum = 0;
    for (const auto &p : sd.poles) {
        sum -= p.h * p.rho * (p.rho + 1) * pow(delta, -p.rho - 2);
    }
    return sum - sd.A0 / (delta * delta);
}

Real initial_guess(const spectral_data &sd, std::uint64_t n)
{
    if (n == 0) {
        throw domain_error("initial_guess: n must be positive");
    }
    const Real n_real(n);
    const pole &top = sd.top();
    const Real scale = top.rho * top.h;
    const Real z0 = pow(n_real / scale, 1 / (top.rho + 1));
    if (sd.r() == 1) {
        return z0;
    }

    const pole &next = sd.poles[sd.r() - 2];
    const Real m = next.rho * next.h / ((top.rho + 1) * scale);
    const Real exponent = (next.rho - top.rho + 1) / (top.rho + 1);
    const Real w = abs(m * pow(scale, -exponent) * pow(n_real, exponent));

    // lhs is decreasing in delta, i.e. increasing in z: move z toward the root.
    const Real lhs0 = khintchine_lhs(sd, 1 / z0);
    const Real guess = lhs0 > n_real ? z0 - w : z0 + w;
    return guess > 0 ? guess : z0;
}

Real residual_tolerance(std::uint64_t n)
{
    const Real relative = Real("1e-10") * Real(n);
    const Real floor_tol("1e-12");
    return relative > floor_tol ? relative : floor_tol;
}

khintchine_solution solve_delta(const spectral_data &sd, std::uint64_t n)
{
    if (n == 0) {
        throw domain_error("solve_delta: n must be positive");
    }
    const Real n_real(n);
    if (!(n_real > sd.d_minus(1))) {
        throw no_bracket_error(
            fmt::format("solve_delta: n = {} does not exceed D(-1) = {}; no positive solution", n, format_sig(sd.d_minus(1))));
    }
    auto f = [&](const Real &delta) { return khintchine_lhs(sd, delta) - n_real; };

    // f > 0 at lo, f < 0 at hi. Past the root f stays negative because lhs -> D(-1) < n.
    const Real min_delta("1e-12");
    const Real max_delta("1e12");
    Real lo = 1 / initial_guess(sd, n);
    Real hi = lo;
    if (f(lo) > 0) {
        do {
            lo = hi;
            hi *= 2;
            if (hi > max_delta) {
                throw no_bracket_error(fmt::format("solve_delta: cannot bracket n = {} below delta = 1e12", n));
            }
        } while (f(hi) >= 0);
    } else {
        do {
            hi = lo;
            lo /= 2;
            if (lo < min_delta) {
                throw no_bracket_error(fmt::format("solve_delta: cannot bracket n = {} above delta = 1e-12", n));
            }
        } while (f(lo) <= 0);
    }

    khintchine_solution sol;
    const Real step_tol = pow(Real(10), -static_cast<int>(working_precision()) + 6);
    Real x = (lo + hi) / 2;
    Real fx = f(x);
    for (int it = 1; it <= max_solver_iterations; ++it) {
        sol.iterations = it;
        if (fx == 0) {
            break;
        }
        const Real slope = khintchine_lhs_derivative(sd, x);
        const Real newton_step = fx / slope;
        // Converged: x stays strictly inside the current bracket.
        if (slope < 0 && abs(newton_step) <= step_tol * x) {
            break;
        }

        if (fx > 0) {
            lo = x;
        } else {
            hi = x;
        }
        sol.bracket_widths.push_back(hi - lo);

        Real next = x - newton_step;
        if (!(slope < 0) || !(next > lo && next < hi)) {
            next = (lo + hi) / 2;
            ++sol.bisection_steps;
        }
        x = next;
        fx = f(x);
    }

    sol.delta = x;
    sol.z = 1 / x;
    sol.residual = fx;
    sol.lo = lo;
    sol.hi = hi;
    if (abs(fx) > residual_tolerance(n)) {
        throw non_convergence_error(fmt::format("solve_delta: residual {} after {} iterations at n = {}",
                                                format_sig(fx), sol.iterations, n));
    }
    return sol;
}

} // namespace subexp
