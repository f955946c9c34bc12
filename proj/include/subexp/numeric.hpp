#pragma once

#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace subexp
{

// Expression templates are disabled so that `auto` never captures a lazy expression.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline constexpr unsigned default_precision_digits = 38;

// Working precision in significant decimal digits. Process-wide; set it before any
// concurrent use.
unsigned working_precision();
void set_working_precision(unsigned digits);

// Reads SUBEXP_PRECISION if set and valid, otherwise keeps the current precision.
void apply_precision_from_environment();

// Raises the working precision for the lifetime of the object.
class scoped_precision
{
public:
    explicit scoped_precision(unsigned digits);
    ~scoped_precision();

    scoped_precision(const scoped_precision &) = delete;
    scoped_precision &operator=(const scoped_precision &) = delete;

private:
    unsigned saved_;
};

// Rounds to the current working precision.
Real at_working_precision(const Real &x);

Real to_real(const Rational &q);
Real to_real(const Integer &z);

// Parses "p", "p/q" or a decimal literal such as "1.25e-3" (decimal literals become exact rationals).
Rational parse_rational(const std::string &text);

// Shortest round-trippable-at-15-digits rendering used by all text output.
std::string format_sig(const Real &x, int digits = 15);

} // namespace subexp
