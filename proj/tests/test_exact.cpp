#include <subexp/errors.hpp>
#include <subexp/exact.hpp>

#include "support.hpp"

using namespace subexp;

namespace
{

// 0/1 knapsack over parts 1..n.
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

// Unbounded knapsack over odd parts.
std::vector<Integer> odd_parts(std::size_t n)
{
    std::vector<Integer> q(n + 1, Integer(0));
    q[0] = 1;
    for (std::size_t part = 1; part <= n; part += 2) {
        for (std::size_t m = part; m <= n; ++m) {
            q[m] += q[m - part];
        }
    }
    return q;
}

Rational R(long v)
{
    return Rational(v);
}

} // namespace

TEST_CASE("partition counts")
{
    const exact_series p = exact_coefficients(make_standard(), 100);
    CHECK(p.kind == model_kind::standard);
    CHECK(p.order() == 100);
    CHECK(p.coeffs[0] == 1);
    CHECK(p.coeffs[10] == 42);
    CHECK(p.coeffs[100] == Rational(190569292));

    const exact_series odd = exact_coefficients(make_congruent(2, 1), 10);
    CHECK(odd.coeffs[10] == 10);

    CHECK(exact_coefficients(make_standard(), 0).coeffs == std::vector<Rational>{R(1)});
}

TEST_CASE("pentagonal oracle")
{
    CHECK(pentagonal_oracle(4).coeffs == std::vector<Rational>{R(1), R(1), R(2), R(3), R(5)});
    CHECK(pentagonal_oracle(0).coeffs == std::vector<Rational>{R(1)});
    CHECK(pentagonal_oracle(10).coeffs.back() == 42);
    CHECK(pentagonal_oracle(400).coeffs == exact_coefficients(make_standard(), 400).coeffs);
}

TEST_CASE("product DP agrees with the recurrence")
{
    const exact_series roots = exact_coefficients(make_roots(), 6);
    CHECK(product_dp(make_roots(), 6).coeffs == roots.coeffs);
    CHECK(roots.coeffs == std::vector<Rational>{R(1), R(3), R(11), R(32), R(90), R(231), R(576)});
    CHECK(product_dp(make_standard(), 50).coeffs == pentagonal_oracle(50).coeffs);

    for (const model_spec &model : {make_standard(), make_roots(), make_congruent(2, 1), make_congruent(3, 2)}) {
        CHECK(product_dp(model, 150).coeffs == exact_coefficients(model, 150).coeffs);
    }

    CHECK_THROWS_AS(product_dp(make_weight_table({Rational(1, 2)}), 1), unsupported_model_error);
    CHECK_THROWS_AS(product_dp(make_weight_table({R(1)}, base_function(base_kind::selection)), 1),
                    unsupported_model_error);
}

TEST_CASE("integrality and growth")
{
    for (const model_spec &model : {make_standard(), make_roots(), make_congruent(5, 3)}) {
        CHECK(exact_coefficients(model, 200).integral());
    }
    const exact_series p = exact_coefficients(make_standard(), 300);
    bool nondecreasing = true;
    for (std::size_t n = 1; n < p.order(); ++n) {
        nondecreasing = nondecreasing && p.coeffs[n + 1] >= p.coeffs[n];
    }
    CHECK(nondecreasing);
}

TEST_CASE("Euler identity")
{
    const std::size_t n = 300;
    const exact_series odd = exact_coefficients(make_congruent(2, 1), n);
    const std::vector<Integer> distinct = distinct_parts(n);
    const std::vector<Integer> odd_direct = odd_parts(n);
    std::vector<Rational> weights(n, R(1));
    const exact_series selection = exact_coefficients(make_weight_table(weights, base_function(base_kind::selection)), n);
    bool all_equal = true;
    for (std::size_t m = 0; m <= n; ++m) {
        all_equal = all_equal && odd.coeffs[m] == Rational(distinct[m]) && odd.coeffs[m] == Rational(odd_direct[m])
                    && selection.coeffs[m] == odd.coeffs[m];
    }
    CHECK(all_equal);
}

TEST_CASE("rational coefficients")
{
    // exp(z) with a single exponential-base part.
    std::vector<Rational> single(12, R(0));
    single[0] = 1;
    const exact_series e = exact_coefficients(make_weight_table(single, base_function(base_kind::exponential)), 12);
    Integer factorial = 1;
    for (std::size_t n = 0; n <= 12; ++n) {
        if (n > 0) {
            factorial *= n;
        }
        CHECK(e.coeffs[n] == Rational(Integer(1), factorial));
    }
    CHECK_FALSE(e.integral());

    // (1 - z)^{-1/2}: c_n = binom(2n, n) / 4^n.
    const exact_series half = exact_coefficients(make_weight_table({Rational(1, 2), R(0), R(0), R(0), R(0), R(0)}), 6);
    Integer central = 1;
    for (std::size_t n = 1; n <= 6; ++n) {
        central = central * (4 * n - 2) / n;
        CHECK(half.coeffs[n] == Rational(central, Integer(1) << (2 * n)));
    }
}

TEST_CASE("approximate coefficients match the exact path")
{
    const std::vector<Real> approx = approx_coefficients(make_roots(), 60);
    const exact_series exact = exact_coefficients(make_roots(), 60);
    for (std::size_t n = 0; n <= 60; ++n) {
        testing::check_rel(approx[n], to_real(exact.coeffs[n]), 1e-30);
    }
    testing::check_rel(exact.log_coeff(60), log(to_real(exact.coeffs[60])), 1e-30);
    testing::check_rel(log_rational(Rational(3, 7)), log(Real(3) / 7), 1e-30);
}
