#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include <fmt/format.h>

#include <subexp/asymptotics.hpp>
#include <subexp/exact.hpp>
#include <subexp/khintchine.hpp>
#include <subexp/model.hpp>
#include <subexp/specfun.hpp>
#include <subexp/spectrum.hpp>

using namespace subexp;

namespace
{

struct outcome
{
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string &what)
    {
        if (!condition) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string sig(const Real &x)
{
    return format_sig(x, 6);
}

Real pi()
{
    return specfun::pi();
}

// zeta(3) = 5/2 sum_{k>=1} (-1)^{k+1} / (k^3 binom(2k, k))
Real apery_zeta3()
{
    Real sum = 0;
    Real central = 1;
    for (int k = 1; k <= 150; ++k) {
        central = central * (4 * k - 2) / k;
        const Real term = 1 / (Real(k) * k * k * central);
        sum += (k % 2 == 1) ? term : Real(-term);
    }
    return 5 * sum / 2;
}

// log A = lim [sum k log k - (n^2/2 + n/2 + 1/12) log n + n^2/4], Richardson on n, 2n.
Real log_glaisher_oracle()
{
    auto partial = [](int n) {
        Real sum = 0;
        for (int k = 2; k <= n; ++k) {
            sum += Real(k) * log(Real(k));
        }
        const Real nn(n);
        return sum - (nn * nn / 2 + nn / 2 + Real(1) / 12) * log(nn) + nn * nn / 4;
    };
    return (4 * partial(4000) - partial(2000)) / 3;
}

std::vector<Integer> distinct_parts(std::size_t n)
{
    std::vector<Integer> q(n + 1, Integer(0));
    q[0] = 1;
    for (std::size_t part = 1; part <= n; ++part) {
        for (std::size_t m = n; m >= part; --m) {
            q[m] += q[m - part];
        }
    }
    return q;
}

// |ratio - 1| for exact c_n against the explicit estimate.
std::vector<Real> ratio_gaps(const model_spec &model, const std::vector<std::uint64_t> &grid, std::string &trace)
{
    const exact_series series = exact_coefficients(model, grid.back());
    const spectral_data sd = derive_spectrum(model);
    std::vector<Real> gaps;
    for (const auto n : grid) {
        const Real ratio = exp(series.log_coeff(n) - log_estimate_explicit(sd, n).log_value);
        gaps.push_back(abs(ratio - 1));
        trace += fmt::format(" {}:{}", n, sig(ratio));
    }
    return gaps;
}

bool strictly_decreasing(const std::vector<Real> &values)
{
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (!(values[i] < values[i - 1])) {
            return false;
        }
    }
    return true;
}

outcome exact_counting()
{
    outcome o;
    const std::vector<model_spec> presets{make_standard(), make_roots(),       make_congruent(2, 1),
                                          make_congruent(3, 1), make_congruent(3, 2), make_congruent(5, 4)};
    for (const auto &model : presets) {
        o.require(exact_coefficients(model, 500).coeffs == product_dp(model, 500).coeffs,
                  model.label() + " recurrence != product");
    }
    const exact_series p = exact_coefficients(make_standard(), 2000);
    const exact_series pentagonal = pentagonal_oracle(2000);
    o.require(p.coeffs == pentagonal.coeffs, "recurrence != pentagonal to 2000");
    o.require(product_dp(make_standard(), 2000).coeffs == pentagonal.coeffs, "product != pentagonal to 2000");
    o.require(p.coeffs[10] == 42, "p(10) != 42");
    o.require(p.coeffs[100] == Rational(190569292), "p(100) != 190569292");
    o.detail = o.ok ? fmt::format("{} presets to N=500, standard to N=2000, p(2000) has {} digits", presets.size(),
                                  p.coeffs[2000].str().size())
                    : o.detail;
    return o;
}

outcome hardy_ramanujan()
{
    outcome o;
    const spectral_data sd = derive_spectrum(make_standard());
    Real worst = 0;
    for (const std::uint64_t n : {10u, 100u, 1000u}) {
        const Real nn(n);
        const Real want = -log(4 * sqrt(Real(3))) - log(nn) + pi() * sqrt(2 * nn / 3);
        worst = std::max(worst, Real(abs(log_estimate_explicit(sd, n).log_value - want)));
    }
    o.require(worst <= Real(1e-10), "difference above 1e-10");
    o.detail = fmt::format("max |difference| = {}", sig(worst)) + (o.ok ? "" : "; " + o.detail);
    return o;
}

outcome standard_ratios()
{
    outcome o;
    std::string trace;
    const auto gaps = ratio_gaps(make_standard(), {100, 200, 400, 800, 1600}, trace);
    std::string trace_1000;
    const auto at_1000 = ratio_gaps(make_standard(), {1000}, trace_1000);
    o.require(gaps[0] <= Real(0.06), "|ratio-1| > 0.06 at n=100");
    o.require(at_1000[0] <= Real(0.02), "|ratio-1| > 0.02 at n=1000");
    o.require(strictly_decreasing(gaps), "|ratio-1| not strictly decreasing");
    o.detail = fmt::format("ratios{};{}", trace, trace_1000) + (o.ok ? "" : "; " + o.detail);
    return o;
}

outcome roots_constants()
{
    outcome o;
    const spectral_data sd = derive_spectrum(make_roots());
    const Real zeta2 = pi() * pi() / 6;
    const Real zeta3 = apery_zeta3();
    const Real tol(1e-12);
    o.require(abs(sd.A0 + Real(2) / 3) <= tol, "A0 != -2/3");
    o.require(abs(sd.poles.at(0).h - zeta2) <= tol, "h_1 != zeta(2)");
    o.require(abs(sd.poles.at(1).h - 2 * zeta3) <= tol, "h_2 != 2 zeta(3)");
    const spectrum_report report = validate_spectrum(sd);
    o.require(report.regime == pole_regime::critical && report.gap && abs(*report.gap) <= tol, "not critical");
    o.require(abs(kappa(sd) + Real(8) / 9) <= tol, "kappa != -8/9");
    const Real correction = sd.h0 - q_constant(sd);
    o.require(abs(correction - zeta2 * zeta2 / (24 * zeta3)) <= tol, "Q correction != zeta(2)^2/(24 zeta(3))");
    o.detail = fmt::format("A0={} h=({}, {}) kappa={} Q correction={}", sig(sd.A0), sig(sd.poles[0].h),
                           sig(sd.poles[1].h), sig(kappa(sd)), sig(correction))
               + (o.ok ? "" : "; " + o.detail);
    return o;
}

outcome roots_convergence()
{
    outcome o;
    std::string trace;
    const model_spec roots = make_roots();
    const auto gaps = ratio_gaps(roots, {125, 250, 500, 1000}, trace);
    const Real log_gap = abs(exact_coefficients(roots, 1000).log_coeff(1000)
                             - log_estimate_explicit(derive_spectrum(roots), 1000).log_value);
    o.require(strictly_decreasing(gaps), "|ratio-1| not decreasing");
    o.require(log_gap <= Real(0.5), "|log exact - log pred| > 0.5 at n=1000");
    o.detail = fmt::format("ratios{}; log gap at 1000 = {}", trace, sig(log_gap)) + (o.ok ? "" : "; " + o.detail);
    return o;
}

outcome congruent_parts()
{
    outcome o;
    const model_spec odd = make_congruent(2, 1);
    const exact_series series = exact_coefficients(odd, 500);
    const auto distinct = distinct_parts(500);
    bool euler = true;
    for (std::size_t n = 0; n <= 500; ++n) {
        euler = euler && series.coeffs[n] == Rational(distinct[n]);
    }
    o.require(euler, "odd parts != distinct parts");

    const spectral_data sd = derive_spectrum(odd);
    Real worst = 0;
    for (const std::uint64_t n : {10u, 1000u, 123457u}) {
        const Real want = pi() * sqrt(2 * Real(n) / 6);
        worst = std::max(worst, Real(abs(log_estimate_explicit(sd, n).terms.leading_exponent / want - 1)));
    }
    o.require(worst <= Real(1e-12), "exponent term differs from pi sqrt(2n/(3a))");

    std::string trace;
    const auto gaps = ratio_gaps(odd, {100, 200, 400, 800, 1600}, trace);
    o.require(strictly_decreasing(gaps), "|ratio-1| not decreasing");

    // Constant from the explicit formula against Gamma(q) pi^{q-1} 2^{-3/2-q/2} 3^{-q/2} a^{(q-1)/2}.
    const Real q = Real(1) / 2;
    const log_estimate le = log_estimate_explicit(sd, 1000);
    const Real derived = exp(le.terms.prefactor_log + le.terms.constant_terms);
    const Real closed = exp(specfun::log_gamma(q)) * pow(pi(), q - 1) * pow(Real(2), -Real(1.5) - q / 2)
                        * pow(Real(3), -q / 2) * pow(Real(2), (q - 1) / 2);
    o.require(abs(derived / closed - 1) <= Real(1e-12), "derived constant differs from the closed form");
    o.detail = fmt::format("Euler identity to 500, exponent rel err {}, ratios{}; constant {}", sig(worst), trace,
                           sig(derived))
               + (o.ok ? "" : "; " + o.detail);
    return o;
}

outcome formula_agreement()
{
    outcome o;
    std::string trace;
    for (const auto &model : {make_standard(), make_roots(), make_congruent(2, 1)}) {
        const spectral_data sd = derive_spectrum(model);
        std::vector<Real> diffs;
        for (const std::uint64_t n : {1000u, 10000u, 100000u, 1000000u}) {
            diffs.push_back(abs(log_estimate_explicit(sd, n).log_value - log_estimate_khintchine(sd, n).log_value));
        }
        o.require(diffs.back() <= Real(0.05), model.label() + " difference > 0.05 at 1e6");
        o.require(strictly_decreasing(diffs), model.label() + " difference not decreasing");
        trace += fmt::format(" {}:{}", model.label(), sig(diffs.back()));
    }
    o.detail = "difference at n=1e6" + trace + (o.ok ? "" : "; " + o.detail);
    return o;
}

outcome khintchine_solver()
{
    outcome o;
    std::string trace;
    for (const auto &model : {make_standard(), make_roots(), make_congruent(2, 1)}) {
        const spectral_data sd = derive_spectrum(model);
        Real previous_delta = 1e9;
        std::uint64_t n = 1;
        for (int k = 1; k <= 8; ++k) {
            n *= 10;
            const khintchine_solution s = solve_delta(sd, n);
            o.require(abs(s.residual) <= residual_tolerance(n), fmt::format("{} residual at n={}", model.label(), n));
            o.require(s.delta < previous_delta, fmt::format("{} delta not decreasing at n={}", model.label(), n));
            previous_delta = s.delta;
        }
        Real worst_shrink = 1e9;
        for (std::uint64_t m = 10; m <= 10 * 16 * 16 * 16 * 16; m *= 16) {
            auto gap = [&](std::uint64_t x) {
                const Real z = 1 / solve_delta(sd, x).delta;
                return abs(z - initial_guess(sd, x)) / z;
            };
            const Real shrink = gap(m) / gap(16 * m);
            worst_shrink = std::min(worst_shrink, shrink);
        }
        o.require(worst_shrink >= Real(2), model.label() + " expansion gap shrinks less than 2x");
        trace += fmt::format(" {}:{}", model.label(), sig(worst_shrink));
    }
    o.detail = "worst gap shrink per 16x" + trace + (o.ok ? "" : "; " + o.detail);
    return o;
}

outcome special_functions()
{
    outcome o;
    using namespace specfun;
    const Real p = pi();
    o.require(abs(riemann_zeta(Real(2)) / (p * p / 6) - 1) <= Real(1e-13), "zeta(2)");
    o.require(abs(riemann_zeta(Real(4)) / (pow(p, 4) / 90) - 1) <= Real(1e-13), "zeta(4)");
    for (std::uint64_t a = 1; a <= 10; ++a) {
        for (std::uint64_t b = 1; b <= a; ++b) {
            if (std::gcd(a, b) == 1) {
                const Real q = Real(b) / a;
                o.require(abs(hurwitz_zeta(Real(0), q) - (Real(0.5) - q)) <= Real(1e-13),
                          fmt::format("zeta(0,{}/{})", b, a));
            }
        }
    }
    o.require(abs(riemann_zeta_deriv(Real(0)) + log(2 * p) / 2) <= Real(1e-12), "zeta'(0)");
    const Real log_a = log_glaisher_oracle();
    o.require(abs(riemann_zeta_deriv(Real(-1)) - (Real(1) / 12 - log_a)) <= Real(1e-12), "zeta'(-1)");
    o.detail = fmt::format("zeta'(-1)={} log A oracle={}", sig(riemann_zeta_deriv(Real(-1))), sig(log_a))
               + (o.ok ? "" : "; " + o.detail);
    return o;
}

struct criterion
{
    int id;
    const char *title;
    double limit_seconds;
    std::function<outcome()> body;
};

} // namespace

int main()
{
    const std::vector<criterion> criteria{
        {1, "exact counting oracles agree", 60, exact_counting},
        {2, "explicit formula collapses to Hardy-Ramanujan", 1, hardy_ramanujan},
        {3, "standard ratios converge", 60, standard_ratios},
        {4, "roots-model constants", 1, roots_constants},
        {5, "roots-model ratios converge", 120, roots_convergence},
        {6, "congruent parts", 60, congruent_parts},
        {7, "explicit and Khintchine forms agree", 5, formula_agreement},
        {8, "Khintchine solver", 5, khintchine_solver},
        {9, "special functions", 5, special_functions},
    };

    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        outcome o;
        try {
            o = c.body();
        } catch (const std::exception &e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > c.limit_seconds) {
            o.ok = false;
            o.detail += fmt::format("; exceeded {} s", c.limit_seconds);
        }
        failures += o.ok ? 0 : 1;
        fmt::print("criterion {} {}: {} ({:.2f} s) [{}]\n", c.id, o.ok ? "PASS" : "FAIL", c.title, seconds, o.detail);
    }
    fmt::print("{} of {} criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
