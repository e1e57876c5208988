#include "hurwitz/rational.hpp"

#include "hurwitz/errors.hpp"

#include <cctype>
#include <sstream>

namespace hurwitz {

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << '/' << denominator(q);
    return os.str();
}

bool is_float_literal(const std::string& token) {
    return token.find_first_of(".eE") != std::string::npos &&
           token.find('/') == std::string::npos;
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer integer_from(const std::string& s) {
    require(all_digits(s), ErrorCode::ParseError, "malformed number: '" + s + "'");
    return Integer(s);
}

Integer pow10(long e) {
    Integer p = 1;
    for (long i = 0; i < e; ++i) p *= 10;
    return p;
}

} // namespace

Rational rational_from_string(const std::string& token) {
    require(!token.empty(), ErrorCode::ParseError, "empty coefficient");

    std::string s = token;
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        s.erase(0, 1);
    }
    require(!s.empty(), ErrorCode::ParseError, "malformed number: '" + token + "'");

    Rational value;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        Integer num = integer_from(s.substr(0, slash));
        Integer den = integer_from(s.substr(slash + 1));
        require(den != 0, ErrorCode::ParseError, "zero denominator: '" + token + "'");
        value = Rational(num, den);
    } else {
        // [digits][.digits][(e|E)[sign]digits], converted exactly.
        std::string mantissa = s;
        long exponent = 0;
        if (auto epos = s.find_first_of("eE"); epos != std::string::npos) {
            mantissa = s.substr(0, epos);
            std::string expstr = s.substr(epos + 1);
            require(!expstr.empty(), ErrorCode::ParseError, "malformed exponent: '" + token + "'");
            bool eneg = false;
            if (expstr[0] == '+' || expstr[0] == '-') {
                eneg = expstr[0] == '-';
                expstr.erase(0, 1);
            }
            require(all_digits(expstr) && expstr.size() <= 6, ErrorCode::ParseError,
                    "malformed exponent: '" + token + "'");
            exponent = std::stol(expstr);
            if (eneg) exponent = -exponent;
        }
        std::string digits = mantissa;
        long frac_digits = 0;
        if (auto dot = mantissa.find('.'); dot != std::string::npos) {
            digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
            frac_digits = static_cast<long>(mantissa.size() - dot - 1);
        }
        if (digits.empty()) digits = "0";
        Integer num = integer_from(digits);
        long net = exponent - frac_digits;
        value = net >= 0 ? Rational(num * pow10(net)) : Rational(num, pow10(-net));
    }

    return negative ? Rational(-value) : value;
}

} // namespace hurwitz
