#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace bellkit {

// Arbitrary-precision rational. GMP keeps values canonical (reduced,
// positive denominator) as long as they are constructed canonically,
// which parse_rational below guarantees.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

/// Parses "num", "num/den" or a plain integer string into a reduced rational.
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(Integer(text));
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + text);
    return Rational(num) / Rational(den);  // division canonicalizes
}

/// Formats as "num" when the denominator is 1, "num/den" otherwise.
inline std::string format_rational(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const RatVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline RatVec operator+(const RatVec& a, const RatVec& b) {
    RatVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline RatVec operator-(const RatVec& a, const RatVec& b) {
    RatVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline RatVec operator*(const Rational& s, const RatVec& v) {
    RatVec r(v);
    for (auto& x : r) x *= s;
    return r;
}

/// Scales a vector to the unique primitive integer representative with the
/// same orientation (entries become coprime integers). An optional trailing
/// value (an inequality bound) is scaled along but does not enter the gcd.
/// Zero vectors are left untouched.
inline void make_primitive(RatVec& v, Rational* tail = nullptr) {
    Integer lcm_den = 1;
    Integer gcd_num = 0;
    for (const auto& x : v) {
        lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
        gcd_num = boost::multiprecision::gcd(gcd_num, numerator(x));
    }
    if (gcd_num == 0) return;
    const Rational scale = Rational(lcm_den) / Rational(gcd_num);  // gcd>0 by gmp convention
    for (auto& x : v) x *= scale;
    if (tail) *tail *= scale;
}

}  // namespace bellkit
