#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tsirel {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Index = std::int64_t;

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw parse_error("rational with zero denominator");
    return Rational(num, den);
}

// Parses "num/den" or "num". Den must be nonzero.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::exception&) {
        throw parse_error("bad rational literal: " + s);
    }
}

inline std::string rat_str(const Rational& q) {
    Int n = rat_num(q), d = rat_den(q);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

inline Rational pow_q(Rational base, unsigned long long e) {
    Rational r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Least integer >= q.
inline Int ceil_int(const Rational& q) {
    Int n = rat_num(q), d = rat_den(q);
    Int quot = n / d, rem = n % d;
    if (rem > 0) ++quot;
    return quot;
}

inline double approx(const Rational& q) { return q.convert_to<double>(); }

} // namespace tsirel
