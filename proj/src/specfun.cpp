#include <subexp/specfun.hpp>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <vector>

#include <fmt/format.h>

#include <subexp/errors.hpp>

namespace subexp::specfun
{

namespace
{

constexpr unsigned guard_digits = 20;

Real epsilon_at(unsigned digits)
{
    return pow(Real(10), -static_cast<int>(digits));
}

bool is_integer(const Real &x)
{
    return x == floor(x);
}

std::string show(const Real &x)
{
    return x.str(17);
}

// Euler-Maclaurin with shift N; no domain checks. Caller controls precision.
Real hurwitz_em(const Real &s, const Real &q)
{
    const unsigned digits = working_precision();
    const unsigned shift = digits + 10;
    const Real eps = epsilon_at(digits);

    Real sum = 0;
    for (unsigned k = 0; k < shift; ++k) {
        sum += pow(Real(k) + q, -s);
    }
    const Real x = Real(shift) + q;
    const Real x_pow = pow(x, -s);
    sum += x * x_pow / (s - 1);
    sum += x_pow / 2;

    // Tail: sum_j B_{2j}/(2j)! * s (s+1) ... (s+2j-2) * x^{-s-2j+1}
    Real rising = s;          // s (s+1) ... (s+2j-2)
    Real factorial = 2;       // (2j)!
    Real x_term = x_pow / x;  // x^{-s-2j+1}
    const Real inv_x2 = 1 / (x * x);
    for (unsigned j = 1; j <= 4 * digits; ++j) {
        const Real term = to_real(bernoulli(2 * j)) / factorial * rising * x_term;
        sum += term;
        if (rising == 0 || abs(term) <= eps * abs(sum)) {
            break;
        }
        rising *= (s + 2 * j - 1) * (s + 2 * j);
        factorial *= Real(2 * j + 1) * (2 * j + 2);
        x_term *= inv_x2;
    }
    return sum;
}

// Borwein, "An efficient algorithm for the Riemann zeta function", algorithm 2.
Real riemann_borwein(const Real &s)
{
    const unsigned digits = working_precision();
    const unsigned n = static_cast<unsigned>(std::ceil(digits / 0.7655)) + 10;

    // u_i = n (n+i-1)! 4^i / ((n-i)! (2i)!), all integers; d_k = sum_{i<=k} u_i.
    std::vector<Integer> d(n + 1);
    Integer u = 1;
    Integer acc = 1;
    d[0] = acc;
    for (unsigned i = 1; i <= n; ++i) {
        u *= Integer(4) * (n + i - 1) * (n - i + 1);
        u /= Integer(2 * i) * (2 * i - 1);
        acc += u;
        d[i] = acc;
    }

    Real sum = 0;
    for (unsigned k = 0; k < n; ++k) {
        const Real term = to_real(Integer(d[k] - d[n])) / pow(Real(k + 1), s);
        sum += (k % 2 == 0) ? term : -term;
    }
    return -sum / (to_real(d[n]) * (1 - pow(Real(2), 1 - s)));
}

Real log_gamma_impl(const Real &x)
{
    const unsigned digits = working_precision();
    const Real eps = epsilon_at(digits);
    const Real threshold = Real(digits + 10);

    Real y = x;
    Real product = 1;
    while (y < threshold) {
        product *= y;
        y += 1;
    }

    Real sum = (y - Real(0.5)) * log(y) - y + log(2 * pi()) / 2;
    Real y_pow = y;
    const Real y2 = y * y;
    for (unsigned j = 1; j <= 2 * digits; ++j) {
        const Real term = to_real(bernoulli(2 * j)) / (Real(2 * j) * (2 * j - 1) * y_pow);
        sum += term;
        if (abs(term) <= eps * abs(sum)) {
            break;
        }
        y_pow *= y2;
    }
    return sum - log(product);
}

} // namespace

Real pi()
{
    Real p;
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
}

Real euler_gamma()
{
    return Real("0.577215664901532860606512090082402431042159336");
}

Real log_glaisher()
{
    return Real("0.248754477033784262547252993576113976097369714");
}

Rational bernoulli(unsigned n)
{
    static std::mutex mutex;
    static std::vector<Rational> cache{Rational(1)};

    std::lock_guard lock(mutex);
    while (cache.size() <= n) {
        // B_m = -1/(m+1) sum_{k<m} C(m+1, k) B_k
        const unsigned m = static_cast<unsigned>(cache.size());
        Rational acc = 0;
        Integer binom = 1; // C(m+1, 0)
        for (unsigned k = 0; k < m; ++k) {
            acc += Rational(binom) * cache[k];
            binom = binom * (m + 1 - k) / (k + 1);
        }
        cache.push_back(-acc / Rational(m + 1));
    }
    return cache[n];
}

Real riemann_zeta(const Real &s)
{
    if (!isfinite(s) || s < -20 || s > 40) {
        throw domain_error(fmt::format("riemann_zeta: s = {} outside [-20, 40]", show(s)));
    }
    if (abs(s - 1) < Real(1e-9)) {
        throw pole_error(fmt::format("riemann_zeta: s = {} is at the pole s = 1", show(s)));
    }
    if (s == 0) {
        return Real(-0.5);
    }
    if (s < 0 && is_integer(s) && is_integer(s / 2)) {
        return Real(0);
    }

    const unsigned digits = working_precision();
    Real result;
    {
        scoped_precision guard(digits + guard_digits);
        if (s > 0) {
            result = riemann_borwein(s);
        } else if (s > Real(-1e-6)) {
            result = hurwitz_em(s, Real(1));
        } else {
            // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1-s) zeta(1-s)
            const Real one_minus = 1 - s;
            const Real p = pi();
            result = pow(Real(2), s) * pow(p, s - 1) * sin(p * s / 2) * exp(log_gamma_impl(one_minus))
                     * riemann_borwein(one_minus);
        }
    }
    return at_working_precision(result);
}

Real riemann_zeta_deriv(const Real &s)
{
    if (s == 0) {
        return -log(2 * pi()) / 2;
    }
    if (s == -1) {
        return Real(1) / 12 - log_glaisher();
    }
    throw unsupported_point_error(
        fmt::format("riemann_zeta_deriv: closed form only at s = 0 and s = -1, got {}", show(s)));
}

Real riemann_zeta_deriv_numeric(const Real &s)
{
    const unsigned digits = working_precision();
    Real result;
    {
        scoped_precision guard(2 * digits);
        const Real h("1e-8");
        result = (riemann_zeta(s + h) - riemann_zeta(s - h)) / (2 * h);
    }
    return at_working_precision(result);
}

Real hurwitz_zeta(const Real &s, const Real &q)
{
    if (!isfinite(s) || s < -10 || s > 40) {
        throw domain_error(fmt::format("hurwitz_zeta: s = {} outside [-10, 40]", show(s)));
    }
    if (!isfinite(q) || q <= 0 || q > 1) {
        throw domain_error(fmt::format("hurwitz_zeta: q = {} outside (0, 1]", show(q)));
    }
    if (abs(s - 1) < Real(1e-9)) {
        throw pole_error(fmt::format("hurwitz_zeta: s = {} is at the pole s = 1", show(s)));
    }

    const unsigned digits = working_precision();
    // Negative s sums terms of size ~ N^{1-s} that cancel down to O(1).
    const double cancellation = std::max(0.0, 1.0 - s.convert_to<double>()) * std::log10(digits + 11.0);
    Real result;
    {
        scoped_precision guard(digits + guard_digits + static_cast<unsigned>(std::ceil(cancellation)));
        result = hurwitz_em(s, q);
    }
    return at_working_precision(result);
}

Real hurwitz_zeta_deriv0(const Real &q)
{
    if (!isfinite(q) || q <= 0 || q > 1) {
        throw domain_error(fmt::format("hurwitz_zeta_deriv0: q = {} outside (0, 1]", show(q)));
    }
    return log_gamma(q) - log(2 * pi()) / 2;
}

Rational riemann_zeta_nonpositive_integer(unsigned m)
{
    const Rational b = bernoulli(m + 1);
    return (m % 2 == 0 ? b : Rational(-b)) / Rational(m + 1);
}

Rational hurwitz_zeta_nonpositive_integer(unsigned m, const Rational &q)
{
    // B_{m+1}(q) = sum_k C(m+1, k) B_k q^{m+1-k}
    const unsigned degree = m + 1;
    Rational poly = 0;
    Integer binom = 1;
    for (unsigned k = 0; k <= degree; ++k) {
        Rational q_pow = 1;
        for (unsigned e = 0; e < degree - k; ++e) {
            q_pow *= q;
        }
        poly += Rational(binom) * bernoulli(k) * q_pow;
        binom = binom * (degree - k) / (k + 1);
    }
    return -poly / Rational(degree);
}

Real log_gamma(const Real &x)
{
    if (!isfinite(x) || x <= 0) {
        throw domain_error(fmt::format("log_gamma: x = {} must be positive", show(x)));
    }
    if (x == 1 || x == 2) {
        return Real(0);
    }
    const unsigned digits = working_precision();
    Real result;
    {
        scoped_precision guard(digits + guard_digits);
        result = log_gamma_impl(x);
    }
    return at_working_precision(result);
}

} // namespace subexp::specfun
