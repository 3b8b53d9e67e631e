#ifndef GRADA_RATIONAL_HPP
#define GRADA_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "grada/error.hpp"

namespace grada {

// Exact scalar field. cpp_rational keeps gcd-reduced form with positive
// denominator, which is exactly the canonical form every equality test in
// this library relies on.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& q) { return q.is_zero(); }

/// A value q is idempotent in a product of copies of the rationals iff q*q = q.
inline bool is_idempotent_value(const Rational& q) { return q == 0 || q == 1; }

/// Parse "p", "-p" or "p/q" with arbitrary-precision parts.
inline Rational parse_rational(const std::string& text)
{
    if (text.empty())
        fail(Errc::ParseError, "empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0)
            fail(Errc::ParseError, "zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail(Errc::ParseError, "bad rational literal '" + text + "'");
    }
}

/// Canonical rendering: "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rational& q)
{
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

} // namespace grada

#endif
