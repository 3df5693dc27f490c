#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

#include "ramicalc/error.hpp"

namespace ramicalc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int rat_den(const Rat& x) { return boost::multiprecision::denominator(x); }

inline bool rat_is_int(const Rat& x) { return rat_den(x) == 1; }

/* Exact, decimal-free serialization: "3", "-3/2". */
inline std::string rat_str(const Rat& x) {
    Int n = rat_num(x), d = rat_den(x);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw Error(errc::schema_error, "empty rational literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool digits = false, slash = false, den_digits = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c >= '0' && c <= '9') {
            (slash ? den_digits : digits) = true;
        } else if (c == '/' && !slash && digits) {
            slash = true;
        } else {
            throw Error(errc::schema_error, "bad rational literal: " + s);
        }
    }
    if (!digits || (slash && !den_digits))
        throw Error(errc::schema_error, "bad rational literal: " + s);
    if (!slash) return Rat(Int(s));
    auto pos = s.find('/');
    Int num(s.substr(0, pos)), den(s.substr(pos + 1));
    if (den == 0) throw Error(errc::schema_error, "zero denominator: " + s);
    return Rat(num, den);
}

inline Int ipow(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

/* p^alpha for small prime p; alpha >= 0. */
inline Int p_pow(long p, long alpha) {
    if (alpha < 0) throw Error(errc::invalid_argument, "negative power of p");
    return ipow(Int(p), static_cast<unsigned long>(alpha));
}

/* If x == p^a for some a >= 0, return a. */
inline std::optional<long> p_power_exponent(Int x, long p) {
    if (x <= 0) return std::nullopt;
    long a = 0;
    while (x > 1) {
        if (x % p != 0) return std::nullopt;
        x /= p;
        ++a;
    }
    return a;
}

}  // namespace ramicalc
