#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

// Boost 1.74's mixed rational/integer operator== recurses forever under C++20
// reversed-operator rules. Exact non-template overloads take precedence.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(std::int64_t a, const rational<std::int64_t>& b) { return b == a; }
inline bool operator!=(const rational<std::int64_t>& a, std::int64_t b) { return !(a == b); }
inline bool operator!=(std::int64_t a, const rational<std::int64_t>& b) { return !(b == a); }
inline bool operator<(const rational<std::int64_t>& a, std::int64_t b) { return a.operator<(b); }
inline bool operator<(std::int64_t a, const rational<std::int64_t>& b) { return b.operator>(a); }
inline bool operator>(const rational<std::int64_t>& a, std::int64_t b) { return a.operator>(b); }
inline bool operator>(std::int64_t a, const rational<std::int64_t>& b) { return b.operator<(a); }
inline bool operator<=(const rational<std::int64_t>& a, std::int64_t b) { return !a.operator>(b); }
inline bool operator<=(std::int64_t a, const rational<std::int64_t>& b) { return !b.operator<(a); }
inline bool operator>=(const rational<std::int64_t>& a, std::int64_t b) { return !a.operator<(b); }
inline bool operator>=(std::int64_t a, const rational<std::int64_t>& b) { return !b.operator>(a); }
#define FKW_RAT_INT_CMP(op)                                                                        \
  inline bool operator op(const rational<std::int64_t>& a, int b) { return a op std::int64_t{b}; } \
  inline bool operator op(int a, const rational<std::int64_t>& b) { return std::int64_t{a} op b; }
FKW_RAT_INT_CMP(==)
FKW_RAT_INT_CMP(!=)
FKW_RAT_INT_CMP(<)
FKW_RAT_INT_CMP(>)
FKW_RAT_INT_CMP(<=)
FKW_RAT_INT_CMP(>=)
#undef FKW_RAT_INT_CMP
}  // namespace boost

namespace fkw {

using Rational = boost::rational<std::int64_t>;
using RatVec = std::vector<Rational>;
using IntVec = std::vector<std::int64_t>;

/// Parses "p", "-p" or "p/q". Throws InputError on malformed text or q == 0.
Rational parse_rational(std::string_view text);

/// Comma-separated list of rationals, e.g. "1/2,-3,0".
RatVec parse_rational_list(std::string_view text);

std::string to_string(const Rational& r);
std::string to_string(const RatVec& v);

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

/// Floor and ceiling of a rational (denominator is always positive).
std::int64_t floor(const Rational& r);
std::int64_t ceil(const Rational& r);

}  // namespace fkw
