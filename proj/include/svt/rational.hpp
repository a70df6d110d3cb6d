#pragma once

#include <boost/rational.hpp>
#include <string>

// Under C++20 the reversed form of boost's mixed operator== is preferred for
// rational == integer and recurses forever. Exact non-template overloads win.
namespace boost {
inline bool operator==(const rational<long long>& a, long long b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator==(long long b, const rational<long long>& a) { return a == b; }
inline bool operator!=(const rational<long long>& a, long long b) { return !(a == b); }
inline bool operator!=(long long b, const rational<long long>& a) { return !(a == b); }
inline bool operator==(const rational<long long>& a, int b) { return a == static_cast<long long>(b); }
inline bool operator==(int b, const rational<long long>& a) { return a == static_cast<long long>(b); }
inline bool operator!=(const rational<long long>& a, int b) { return !(a == static_cast<long long>(b)); }
inline bool operator!=(int b, const rational<long long>& a) { return !(a == static_cast<long long>(b)); }
}  // namespace boost

namespace svt {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& r);

// Accepts "3", "-5/2", " 7 / 4 ".
Rational parse_rational(const std::string& s);

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

inline bool is_half_integer(const Rational& r) { return r.denominator() == 2; }

}  // namespace svt
