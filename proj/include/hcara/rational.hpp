#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace hcara {

/// Exact fraction backed by GMP. Always kept in canonical form
/// (positive denominator, coprime numerator and denominator).
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Parses "p", "p/q", "-p/q" (optional leading '+'). Decimal points and
/// exponents are rejected. Throws InputError.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return value.sign(); }

}  // namespace hcara
