#pragma once

// Exact arithmetic used throughout csplab. Every LP value, dual price and
// activity is a GMP rational; lengths and counts are plain 64-bit integers.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <cstdio>
#include <string>

namespace csplab {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

inline BigInt floor(const Rational& r) {
  return floor_div(boost::multiprecision::numerator(r),
                   boost::multiprecision::denominator(r));
}

inline BigInt ceil(const Rational& r) {
  return -floor(Rational(-r));
}

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline Rational frac(const Rational& r) { return r - Rational(floor(r)); }

/// "p/q" form, or "p" when the value is integral.
inline std::string to_fraction_string(const Rational& r) { return r.str(); }

/// Decimal approximation with 6 significant digits (display only).
inline std::string to_decimal_string(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", r.convert_to<double>());
  return buf;
}

/// Exact fixed-point rendering, rounded half away from zero.
inline std::string to_fixed_string(const Rational& r, int places) {
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const bool negative = r < 0;
  Rational scaled = (negative ? Rational(-r) : r) * Rational(scale);
  BigInt rounded = floor(Rational(scaled + Rational(1, 2)));
  BigInt whole = rounded / scale;
  BigInt part = rounded % scale;
  std::string digits = part.str();
  if (places > 0)
    digits = std::string(static_cast<std::size_t>(places) - digits.size(), '0') + digits;
  std::string out = (negative && rounded != 0) ? "-" : "";
  out += whole.str();
  if (places > 0) out += "." + digits;
  return out;
}

/// Percentage of a rational fraction, three decimals, e.g. "3.455%".
inline std::string to_percent_string(const Rational& fraction) {
  return to_fixed_string(fraction * 100, 3) + "%";
}

inline std::int64_t to_int64(const BigInt& v) { return v.convert_to<std::int64_t>(); }

}  // namespace csplab
