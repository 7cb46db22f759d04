#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace gla {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_str(const Rational& q) {
    std::string s = boost::multiprecision::numerator(q).str();
    const Integer den = boost::multiprecision::denominator(q);
    if (den != 1) {
        s += '/';
        s += den.str();
    }
    return s;
}

}  // namespace gla
