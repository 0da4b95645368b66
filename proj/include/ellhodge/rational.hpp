#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "ellhodge/errors.hpp"

namespace ellhodge {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Accepts "7", "-3/4", "0"; whitespace is not tolerated.
inline Rat parse_rational(const std::string& s) {
    auto bad = [&] { throw config_error("bad rational literal: '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) bad();
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rat();  // unreachable
}

inline std::string format_rational(const Rat& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

inline double to_double(const Rat& q) { return q.convert_to<double>(); }

}  // namespace ellhodge
