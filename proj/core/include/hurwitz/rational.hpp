#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hurwitz {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Backend { ExactRational, Float };

inline const char* to_string(Backend b) noexcept {
    return b == Backend::ExactRational ? "exact" : "float";
}

inline int sign_of(const Rational& q) { return q.sign(); }
inline int sign_of(const Integer& n) { return n.sign(); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Canonical text form: "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);

/// True when the token uses decimal-point or exponent notation, i.e. the
/// kind of literal that selects the Float backend.
bool is_float_literal(const std::string& token);

/// Parses "3", "-7/2", "1.25", "3e-4", ... into an exact rational.
/// Decimal and scientific literals are converted exactly (1.25 -> 5/4).
/// Throws Error(ParseError) on malformed input.
Rational rational_from_string(const std::string& token);

} // namespace hurwitz
