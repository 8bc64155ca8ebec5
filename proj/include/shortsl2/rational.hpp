// Exact rational scalars. All arithmetic in the toolkit is exact: ranks,
// kernels and identity checks are decided over Q, never in floating point.
//
// Rational is boost::multiprecision::mpq_rational (GMP backend): always in
// lowest terms with a positive denominator, which is exactly the canonical
// form the JSON serialization "p/q" (or "p" when q = 1) requires.
#ifndef SHORTSL2_RATIONAL_HPP
#define SHORTSL2_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "shortsl2/errors.hpp"

namespace shortsl2 {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Canonical serialization: "p/q", or "p" when the denominator is 1.
inline std::string rat_to_string(const Rational& r) { return r.str(); }

// Strict parser for the serialized form: optional leading '-', digits,
// optionally followed by '/' and a positive integer. Anything else is
// malformed input.
inline Rational rat_from_string(const std::string& s) {
  auto malformed = [&]() -> Error {
    return Error(ErrorKind::MalformedInput, "not a rational string: \"" + s + "\"");
  };
  if (s.empty()) throw malformed();
  std::size_t pos = 0;
  if (s[pos] == '-') ++pos;
  std::size_t num_begin = pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  if (pos == num_begin) throw malformed();
  Integer num(s.substr(0, pos));
  if (pos == s.size()) return Rational(num);
  if (s[pos] != '/') throw malformed();
  ++pos;
  std::size_t den_begin = pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  if (pos == den_begin || pos != s.size()) throw malformed();
  Integer den(s.substr(den_begin));
  if (den == 0) throw malformed();
  return Rational(num) / Rational(den);
}

}  // namespace shortsl2

#endif  // SHORTSL2_RATIONAL_HPP
