#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace arc {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

// floor(a / b) for b != 0, exact for negative operands
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int rat_floor(const Rational& q) { return floor_div(rat_num(q), rat_den(q)); }

inline Int rat_ceil(const Rational& q) { return -rat_floor(-q); }

// fractional part in [0, 1)
inline Rational rat_mod1(const Rational& q) { return q - Rational(rat_floor(q)); }

// accepts "p", "-p", "p/q"; q > 0 after normalisation
inline Rational parse_rational(const std::string& text) {
    auto bad = [&]() { throw std::invalid_argument("invalid rational: '" + text + "'"); };
    if (text.empty()) bad();
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) bad();
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rational(0);
}

inline std::string format_rational(const Rational& q) {
    if (rat_den(q) == 1) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

}  // namespace arc
