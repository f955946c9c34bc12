#pragma once

#include <cstddef>
#include <vector>

#include <subexp/model.hpp>
#include <subexp/numeric.hpp>

namespace subexp
{

// c_0..c_N of f(z) = sum c_n z^n.
struct exact_series
{
    std::vector<Rational> coeffs;
    model_kind kind = model_kind::custom;

    std::size_t order() const
    {
        return coeffs.size() - 1;
    }
    // Every coefficient has denominator 1.
    bool integral() const;
    // Natural log of c_n; c_n must be positive.
    Real log_coeff(std::size_t n) const;
};

// n c_n = sum_{k=1}^n (k Lambda_k) c_{n-k}. Exact; needs an exact scale sequence.
exact_series exact_coefficients(const model_spec &model, std::size_t order);

// Same recurrence over high-precision reals; works for irrational scales.
std::vector<Real> approx_coefficients(const model_spec &model, std::size_t order);

// Euler's pentagonal-number recurrence for p(n). Independent check for the standard preset.
exact_series pentagonal_oracle(std::size_t order);

// Truncated product of (1 - z^j)^{-b_j}. Multiset base, a_j = 1 and integer b_j only.
exact_series product_dp(const model_spec &model, std::size_t order);

Real log_rational(const Rational &q);

} // namespace subexp
