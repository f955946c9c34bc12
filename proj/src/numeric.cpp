#include <subexp/numeric.hpp>

#include <cctype>
#include <cstdlib>
#include <string>

#include <fmt/format.h>

#include <subexp/errors.hpp>

namespace subexp
{

unsigned working_precision()
{
    return Real::default_precision();
}

void set_working_precision(unsigned digits)
{
    if (digits < 16 || digits > 1000) {
        throw domain_error(fmt::format("precision must be between 16 and 1000 digits, got {}", digits));
    }
    Real::default_precision(digits);
}

void apply_precision_from_environment()
{
    const char *env = std::getenv("SUBEXP_PRECISION");
    if (env == nullptr || *env == '\0') {
        return;
    }
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end == '\0' && v >= 16 && v <= 1000) {
        set_working_precision(static_cast<unsigned>(v));
    }
}

namespace
{

// Static initialiser: every translation unit sees the default before main().
const bool precision_initialised = [] {
    Real::default_precision(default_precision_digits);
    return true;
}();

} // namespace

scoped_precision::scoped_precision(unsigned digits) : saved_(Real::default_precision())
{
    Real::default_precision(digits);
}

scoped_precision::~scoped_precision()
{
    Real::default_precision(saved_);
}

Real at_working_precision(const Real &x)
{
    return Real(x, working_precision());
}

Real to_real(const Rational &q)
{
    Real out;
    out.backend() = q.backend();
    return out;
}

Real to_real(const Integer &z)
{
    Real out;
    out.backend() = z.backend();
    return out;
}

Rational parse_rational(const std::string &text)
{
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s.push_back(c);
        }
    }
    if (s.empty()) {
        throw schema_error("empty number");
    }
    try {
        if (const auto slash = s.find('/'); slash != std::string::npos) {
            const Integer num(s.substr(0, slash));
            const Integer den(s.substr(slash + 1));
            if (den == 0) {
                throw schema_error("zero denominator in '" + text + "'");
            }
            return Rational(num, den);
        }

        // Decimal literal: [sign] digits [. digits] [e [sign] digits]
        std::size_t i = 0;
        bool negative = false;
        if (s[i] == '+' || s[i] == '-') {
            negative = s[i] == '-';
            ++i;
        }
        std::string digits;
        long scale = 0;
        bool seen_point = false;
        for (; i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'); ++i) {
            if (s[i] == '.') {
                if (seen_point) {
                    throw schema_error("malformed number '" + text + "'");
                }
                seen_point = true;
            } else {
                digits.push_back(s[i]);
                if (seen_point) {
                    --scale;
                }
            }
        }
        if (digits.empty()) {
            throw schema_error("malformed number '" + text + "'");
        }
        if (i < s.size()) {
            if (s[i] != 'e' && s[i] != 'E') {
                throw schema_error("malformed number '" + text + "'");
            }
            const std::string exp_text = s.substr(i + 1);
            std::size_t used = 0;
            const long e = std::stol(exp_text, &used);
            if (used != exp_text.size()) {
                throw schema_error("malformed number '" + text + "'");
            }
            scale += e;
        }
        Integer mantissa(digits);
        if (negative) {
            mantissa = -mantissa;
        }
        Integer ten_pow = 1;
        for (long k = 0; k < (scale < 0 ? -scale : scale); ++k) {
            ten_pow *= 10;
        }
        return scale >= 0 ? Rational(mantissa * ten_pow) : Rational(mantissa, ten_pow);
    } catch (const schema_error &) {
        throw;
    } catch (const std::exception &) {
        throw schema_error("malformed number '" + text + "'");
    }
}

std::string format_sig(const Real &x, int digits)
{
    return fmt::format("{:.{}g}", x.convert_to<double>(), digits);
}

} // namespace subexp
