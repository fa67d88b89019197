#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "soliton_forge/errors.hpp"

namespace sforge {

// All scalar arithmetic in this library is exact. Rational keeps a canonical
// reduced form: gcd(|p|, q) = 1 and q > 0. Expression templates are disabled
// so every arithmetic expression yields a plain value; the lazy variant can
// dangle when a subexpression references a temporary.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Rational make_rational(long long num, long long den) {
  if (den == 0) throw Error("rational with zero denominator");
  return Rational(Integer(num)) / Rational(Integer(den));
}

// Wire format: "p" or "p/q" in decimal, q > 0. Unreduced input is
// canonicalized on read.
inline Rational parse_rational(std::string_view text) {
  const auto fail = [&] {
    throw ParseError("bad rational '" + std::string(text) +
                     "': expected \"p\" or \"p/q\" with decimal integers and q > 0");
  };
  if (text.empty()) fail();
  std::size_t pos = 0;
  if (text[0] == '-') pos = 1;
  std::size_t digits = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    ++pos;
    ++digits;
  }
  if (digits == 0) fail();
  if (pos == text.size()) return Rational(Integer(std::string(text)));
  if (text[pos] != '/') fail();
  const std::string_view den = text.substr(pos + 1);
  if (den.empty()) fail();
  for (char ch : den)
    if (ch < '0' || ch > '9') fail();
  const Integer q{std::string(den)};
  if (q == 0) fail();
  return Rational(Integer(std::string(text.substr(0, pos)))) / Rational(q);
}

inline std::string rat_str(const Rational& r) { return r.str(); }

inline int sign(const Rational& r) { return r.sign(); }

}  // namespace sforge
