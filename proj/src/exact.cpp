#include <subexp/exact.hpp>

#include <fmt/format.h>

#include <subexp/errors.hpp>

namespace subexp
{

bool exact_series::integral() const
{
    for (const auto &c : coeffs) {
        if (denominator(c) != 1) {
            return false;
        }
    }
    return true;
}

Real log_rational(const Rational &q)
{
    if (q <= 0) {
        throw domain_error("log of a non-positive coefficient");
    }
    return log(to_real(Integer(numerator(q)))) - log(to_real(Integer(denominator(q))));
}

Real exact_series::log_coeff(std::size_t n) const
{
    if (n >= coeffs.size()) {
        throw domain_error(fmt::format("c_{} not computed (order {})", n, order()));
    }
    return log_rational(coeffs[n]);
}

namespace
{

// k Lambda_k for k = 1..order (index k-1).
std::vector<Rational> weighted_lambda(const model_spec &model, std::size_t order)
{
    const lambda_series lambda = lambda_coeffs(model, order);
    if (!lambda.exact()) {
        throw unsupported_model_error("exact coefficients need an exact (rational) scale sequence");
    }
    std::vector<Rational> out = lambda.exact_values();
    for (std::size_t k = 1; k <= order; ++k) {
        out[k - 1] *= k;
    }
    return out;
}

// Division-free until the final exact divide by n. Empty result if some n c_n is not a multiple of n.
std::vector<Integer> integer_recurrence(const std::vector<Integer> &k_lambda, std::size_t order)
{
    std::vector<Integer> c(order + 1);
    c[0] = 1;
    Integer acc;
    for (std::size_t n = 1; n <= order; ++n) {
        acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (k_lambda[k - 1] != 0) {
                acc += k_lambda[k - 1] * c[n - k];
            }
        }
        if (acc % n != 0) {
            return {};
        }
        c[n] = acc / n;
    }
    return c;
}

} // namespace

exact_series exact_coefficients(const model_spec &model, std::size_t order)
{
    exact_series series;
    series.kind = model.kind();
    if (order == 0) {
        series.coeffs = {Rational(1)};
        return series;
    }

    const std::vector<Rational> k_lambda = weighted_lambda(model, order);

    bool integer_weights = true;
    for (const auto &v : k_lambda) {
        if (denominator(v) != 1) {
            integer_weights = false;
            break;
        }
    }
    if (integer_weights) {
        std::vector<Integer> k_lambda_int;
        k_lambda_int.reserve(order);
        for (const auto &v : k_lambda) {
            k_lambda_int.emplace_back(numerator(v));
        }
        const std::vector<Integer> c = integer_recurrence(k_lambda_int, order);
        if (!c.empty()) {
            series.coeffs.reserve(order + 1);
            for (const auto &v : c) {
                series.coeffs.emplace_back(v);
            }
            return series;
        }
    }

    std::vector<Rational> c(order + 1);
    c[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (k_lambda[k - 1] != 0) {
                acc += k_lambda[k - 1] * c[n - k];
            }
        }
        c[n] = acc / Rational(n);
    }
    series.coeffs = std::move(c);
    return series;
}

std::vector<Real> approx_coefficients(const model_spec &model, std::size_t order)
{
    std::vector<Real> c(order + 1);
    c[0] = 1;
    if (order == 0) {
        return c;
    }
    const lambda_series lambda = lambda_coeffs(model, order);
    std::vector<Real> k_lambda(order);
    for (std::size_t k = 1; k <= order; ++k) {
        k_lambda[k - 1] = Real(k) * lambda.value(k);
    }
    for (std::size_t n = 1; n <= order; ++n) {
        Real acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            acc += k_lambda[k - 1] * c[n - k];
        }
        c[n] = acc / Real(n);
    }
    return c;
}

exact_series pentagonal_oracle(std::size_t order)
{
    std::vector<Integer> p(order + 1);
    p[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        Integer acc = 0;
        for (std::size_t k = 1;; ++k) {
            const std::size_t g1 = k * (3 * k - 1) / 2;
            if (g1 > n) {
                break;
            }
            const std::size_t g2 = k * (3 * k + 1) / 2;
            Integer term = p[n - g1];
            if (g2 <= n) {
                term += p[n - g2];
            }
            if (k % 2 == 1) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[n] = acc;
    }
    exact_series series;
    series.kind = model_kind::standard;
    series.coeffs.reserve(order + 1);
    for (const auto &v : p) {
        series.coeffs.emplace_back(v);
    }
    return series;
}

exact_series product_dp(const model_spec &model, std::size_t order)
{
    if (model.base().kind() != base_kind::multiset) {
        throw unsupported_model_error("product_dp supports the multiset base only");
    }
    if (!model.has_exact_scale()) {
        throw unsupported_model_error("product_dp needs a_j = 1");
    }

    std::vector<Integer> c(order + 1);
    c[0] = 1;
    std::vector<Integer> next(order + 1);
    std::vector<Integer> binom;
    for (std::size_t j = 1; j <= order; ++j) {
        const Rational b_rational = model.weight(j);
        if (denominator(b_rational) != 1) {
            throw unsupported_model_error(
                fmt::format("product_dp needs integer weights; b_{} = {}", j, b_rational.str()));
        }
        if (model.scale(j) != 1) {
            throw unsupported_model_error(fmt::format("product_dp needs a_j = 1; a_{} differs", j));
        }
        const Integer b(numerator(b_rational));
        if (b == 0) {
            continue;
        }

        // (1 - z^j)^{-b} = sum_m C(b+m-1, m) z^{jm}
        const std::size_t max_m = order / j;
        binom.assign(max_m + 1, Integer(0));
        binom[0] = 1;
        for (std::size_t m = 1; m <= max_m; ++m) {
            binom[m] = binom[m - 1] * (b + m - 1) / m;
        }
        for (std::size_t n = 0; n <= order; ++n) {
            Integer acc = 0;
            for (std::size_t m = 0; m * j <= n; ++m) {
                acc += binom[m] * c[n - m * j];
            }
            next[n] = acc;
        }
        c.swap(next);
    }

    exact_series series;
    series.kind = model.kind();
    series.coeffs.reserve(order + 1);
    for (const auto &v : c) {
        series.coeffs.emplace_back(v);
    }
    return series;
}

} // namespace subexp
