#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <subexp/numeric.hpp>

namespace subexp
{

enum class base_kind
{
    multiset,    // S(w) = 1/(1-w)
    selection,   // S(w) = 1 + w
    exponential, // S(w) = e^w
};

// The per-part generating function S, described by the coefficients g_m of
// log S(w) = sum_{m >= 1} g_m w^m.
class base_function
{
public:
    explicit base_function(base_kind kind = base_kind::multiset) : kind_(kind) {}

    base_kind kind() const
    {
        return kind_;
    }
    std::string name() const;

    Rational log_taylor(std::uint64_t m) const;

private:
    base_kind kind_;
};

std::optional<base_kind> parse_base_kind(const std::string &name);

enum class model_kind
{
    standard,
    roots,
    congruent,
    custom,
};

std::string to_string(model_kind kind);

using weight_rule = std::function<Rational(std::uint64_t)>;
using scale_rule = std::function<Rational(std::uint64_t)>;
using real_scale_rule = std::function<Real(std::uint64_t)>;

// f(z) = prod_j S(a_j z^j)^{b_j}. Immutable once built.
class model_spec
{
public:
    model_spec(model_kind kind, base_function base, weight_rule weights, scale_rule scale, std::string label);

    // Irrational scale sequence: switches Lambda_k to high-precision reals.
    static model_spec with_real_scale(model_kind kind, base_function base, weight_rule weights,
                                      real_scale_rule scale, std::string label);

    model_kind kind() const
    {
        return kind_;
    }
    const base_function &base() const
    {
        return base_;
    }
    const std::string &label() const
    {
        return label_;
    }

    // b_j; throws undefined_weight_error if the rule has no value, invalid_parameters_error if negative.
    Rational weight(std::uint64_t j) const;

    bool has_exact_scale() const
    {
        return !real_scale_.has_value();
    }
    // a_j; only for exact scales. Throws invalid_parameters_error unless 0 < a_j <= 1.
    Rational scale(std::uint64_t j) const;
    Real scale_real(std::uint64_t j) const;

    // Congruent-preset parameters (modulus a, canonical residue b in [1, a]).
    std::optional<std::pair<std::uint64_t, std::uint64_t>> congruence() const
    {
        return congruence_;
    }

private:
    friend model_spec make_congruent(std::uint64_t, std::uint64_t);

    model_kind kind_;
    base_function base_;
    weight_rule weights_;
    scale_rule scale_;
    std::optional<real_scale_rule> real_scale_;
    std::string label_;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> congruence_;
};

model_spec make_standard();
model_spec make_roots();
// Parts congruent to b mod a. Requires gcd(a, b) = 1; b is reduced into [1, a].
model_spec make_congruent(std::uint64_t a, std::uint64_t b);

// Multiset model with weights b_1..b_N from a table; b_j for j > N is undefined.
model_spec make_weight_table(std::vector<Rational> weights, base_function base = base_function{});

// Taylor coefficients Lambda_1..Lambda_N of log f.
struct lambda_series
{
    // Index k-1 holds Lambda_k.
    std::variant<std::vector<Rational>, std::vector<Real>> values;

    std::size_t order() const;
    bool exact() const
    {
        return std::holds_alternative<std::vector<Rational>>(values);
    }
    const std::vector<Rational> &exact_values() const
    {
        return std::get<std::vector<Rational>>(values);
    }
    Real value(std::size_t k) const;
};

// Lambda_k = sum_{j m = k} b_j g_m a_j^m.
lambda_series lambda_coeffs(const model_spec &model, std::size_t order);

struct llt_row
{
    std::uint64_t q;
    std::uint64_t n;
    Rational count; // sum_{k <= n, q does not divide k} b_k
    Real ratio;     // count / log^2 n
};

// Weight mass off the multiples of q; the sufficient LLT condition asks this to grow at
// least like log^2 n. Diagnostic only.
Rational weight_off_multiples(const model_spec &model, std::uint64_t q, std::uint64_t n);

// Rows for q = 2..q_max and n = 16, 32, ... (plus n_max itself), ordered by (q, n).
std::vector<llt_row> llt_condition_report(const model_spec &model, std::uint64_t n_max, std::uint64_t q_max);

} // namespace subexp
