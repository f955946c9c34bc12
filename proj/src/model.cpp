#include <subexp/model.hpp>

#include <numeric>
#include <utility>

#include <fmt/format.h>

#include <subexp/errors.hpp>

namespace subexp
{

std::string base_function::name() const
{
    switch (kind_) {
        case base_kind::multiset:
            return "multiset";
        case base_kind::selection:
            return "selection";
        case base_kind::exponential:
            return "exponential";
    }
    return "unknown";
}

Rational base_function::log_taylor(std::uint64_t m) const
{
    if (m == 0) {
        throw domain_error("log-Taylor coefficients start at m = 1");
    }
    switch (kind_) {
        case base_kind::multiset:
            // -log(1-w) = sum w^m / m
            return Rational(1, m);
        case base_kind::selection:
            // log(1+w) = sum (-1)^{m+1} w^m / m
            return m % 2 == 1 ? Rational(1, m) : Rational(-1, m);
        case base_kind::exponential:
            return m == 1 ? Rational(1) : Rational(0);
    }
    return Rational(0);
}

std::optional<base_kind> parse_base_kind(const std::string &name)
{
    if (name == "multiset") {
        return base_kind::multiset;
    }
    if (name == "selection") {
        return base_kind::selection;
    }
    if (name == "exponential") {
        return base_kind::exponential;
    }
    return std::nullopt;
}

std::string to_string(model_kind kind)
{
    switch (kind) {
        case model_kind::standard:
            return "standard";
        case model_kind::roots:
            return "roots";
        case model_kind::congruent:
            return "congruent";
        case model_kind::custom:
            return "custom";
    }
    return "unknown";
}

model_spec::model_spec(model_kind kind, base_function base, weight_rule weights, scale_rule scale, std::string label)
    : kind_(kind), base_(base), weights_(std::move(weights)), scale_(std::move(scale)), label_(std::move(label))
{
}

model_spec model_spec::with_real_scale(model_kind kind, base_function base, weight_rule weights,
                                       real_scale_rule scale, std::string label)
{
    model_spec model(kind, base, std::move(weights), scale_rule{}, std::move(label));
    model.real_scale_ = std::move(scale);
    return model;
}

Rational model_spec::weight(std::uint64_t j) const
{
    Rational b = weights_(j);
    if (b < 0) {
        throw invalid_parameters_error(fmt::format("weight b_{} = {} is negative", j, b.str()));
    }
    return b;
}

Rational model_spec::scale(std::uint64_t j) const
{
    if (real_scale_) {
        throw unsupported_model_error("model has an irrational scale sequence; no exact a_j");
    }
    Rational a = scale_(j);
    if (a <= 0 || a > 1) {
        throw invalid_parameters_error(fmt::format("scale a_{} = {} outside (0, 1]", j, a.str()));
    }
    return a;
}

Real model_spec::scale_real(std::uint64_t j) const
{
    if (!real_scale_) {
        return to_real(scale(j));
    }
    Real a = (*real_scale_)(j);
    if (a <= 0 || a > 1) {
        throw invalid_parameters_error(fmt::format("scale a_{} = {} outside (0, 1]", j, a.str(17)));
    }
    return a;
}

namespace
{

Rational unit_scale(std::uint64_t)
{
    return Rational(1);
}

} // namespace

model_spec make_standard()
{
    return model_spec(
        model_kind::standard, base_function{}, [](std::uint64_t) { return Rational(1); }, unit_scale, "standard");
}

model_spec make_roots()
{
    // Part j occurs (j+1)^2 - j^2 times among floor(sqrt(1)), floor(sqrt(2)), ...
    return model_spec(
        model_kind::roots, base_function{}, [](std::uint64_t j) { return Rational(2 * j + 1); }, unit_scale,
        "roots");
}

model_spec make_congruent(std::uint64_t a, std::uint64_t b)
{
    if (a == 0 || b == 0) {
        throw invalid_parameters_error(fmt::format("congruent model needs positive a, b (got a={}, b={})", a, b));
    }
    if (std::gcd(a, b) != 1) {
        throw invalid_parameters_error(fmt::format("congruent model needs gcd(a, b) = 1 (got a={}, b={})", a, b));
    }
    const std::uint64_t residue = (b - 1) % a + 1;
    model_spec model(
        model_kind::congruent, base_function{},
        [a, residue](std::uint64_t j) { return Rational(j % a == residue % a ? 1 : 0); }, unit_scale,
        fmt::format("congruent({},{})", a, residue));
    model.congruence_ = std::make_pair(a, residue);
    return model;
}

model_spec make_weight_table(std::vector<Rational> weights, base_function base)
{
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < 0) {
            throw invalid_parameters_error(fmt::format("weight b_{} = {} is negative", i + 1, weights[i].str()));
        }
    }
    const std::size_t size = weights.size();
    return model_spec(
        model_kind::custom, base,
        [table = std::move(weights)](std::uint64_t j) {
            if (j == 0 || j > table.size()) {
                throw undefined_weight_error(
                    fmt::format("weight table defines b_1..b_{}, b_{} requested", table.size(), j));
            }
            return table[j - 1];
        },
        unit_scale, fmt::format("custom(table of {})", size));
}

std::size_t lambda_series::order() const
{
    return std::visit([](const auto &v) { return v.size(); }, values);
}

Real lambda_series::value(std::size_t k) const
{
    if (k == 0 || k > order()) {
        throw domain_error(fmt::format("Lambda_{} outside 1..{}", k, order()));
    }
    if (exact()) {
        return to_real(exact_values()[k - 1]);
    }
    return std::get<std::vector<Real>>(values)[k - 1];
}

lambda_series lambda_coeffs(const model_spec &model, std::size_t order)
{
    if (order == 0) {
        throw domain_error("lambda_coeffs: order must be positive");
    }
    const base_function &base = model.base();

    if (model.has_exact_scale()) {
        std::vector<Rational> lambda(order, Rational(0));
        for (std::size_t j = 1; j <= order; ++j) {
            const Rational b = model.weight(j);
            if (b == 0) {
                continue;
            }
            const Rational a = model.scale(j);
            Rational a_pow = 1;
            for (std::size_t m = 1; j * m <= order; ++m) {
                if (a != 1) {
                    a_pow *= a;
                }
                const Rational g = base.log_taylor(m);
                if (g != 0) {
                    lambda[j * m - 1] += b * g * a_pow;
                }
            }
        }
        return lambda_series{std::move(lambda)};
    }

    std::vector<Real> lambda(order, Real(0));
    for (std::size_t j = 1; j <= order; ++j) {
        const Rational b = model.weight(j);
        if (b == 0) {
            continue;
        }
        const Real a = model.scale_real(j);
        const Real b_real = to_real(b);
        Real a_pow = 1;
        for (std::size_t m = 1; j * m <= order; ++m) {
            a_pow *= a;
            const Rational g = base.log_taylor(m);
            if (g != 0) {
                lambda[j * m - 1] += b_real * to_real(g) * a_pow;
            }
        }
    }
    return lambda_series{std::move(lambda)};
}

Rational weight_off_multiples(const model_spec &model, std::uint64_t q, std::uint64_t n)
{
    if (q < 2) {
        throw invalid_parameters_error("weight_off_multiples: q must be at least 2");
    }
    Rational count = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
        if (k % q != 0) {
            count += model.weight(k);
        }
    }
    return count;
}

std::vector<llt_row> llt_condition_report(const model_spec &model, std::uint64_t n_max, std::uint64_t q_max)
{
    if (n_max < 16) {
        throw invalid_parameters_error("llt_condition_report: n_max must be at least 16");
    }
    if (q_max < 2 || q_max > 64) {
        throw invalid_parameters_error("llt_condition_report: q_max must lie in [2, 64]");
    }

    std::vector<std::uint64_t> grid;
    for (std::uint64_t n = 16; n <= n_max; n *= 2) {
        grid.push_back(n);
    }
    if (grid.back() != n_max) {
        grid.push_back(n_max);
    }

    std::vector<Rational> weights(n_max + 1);
    for (std::uint64_t k = 1; k <= n_max; ++k) {
        weights[k] = model.weight(k);
    }

    std::vector<llt_row> rows;
    for (std::uint64_t q = 2; q <= q_max; ++q) {
        Rational count = 0;
        std::uint64_t k = 1;
        for (const std::uint64_t n : grid) {
            for (; k <= n; ++k) {
                if (k % q != 0) {
                    count += weights[k];
                }
            }
            const Real log_n = log(Real(n));
            rows.push_back(llt_row{q, n, count, to_real(count) / (log_n * log_n)});
        }
    }
    return rows;
}

} // namespace subexp
