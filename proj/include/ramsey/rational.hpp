#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "ramsey/error.hpp"

namespace ramsey {

// Exact arbitrary-precision fraction, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(long long num, long long den = 1) {
  detail::require(den != 0, "Rational: zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Accepts "p", "p/q", or a plain decimal such as "0.05" or "-1.25e-2"; result is exact.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational");
  if (auto slash = text.find('/'); slash != std::string::npos) {
    try {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator in '" + text + "'");
      return Rational(num, den);
    } catch (const std::runtime_error&) {
      throw ParseError("malformed rational '" + text + "'");
    }
  }
  std::string mantissa = text;
  long long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string::npos) {
    mantissa = text.substr(0, e);
    try {
      exponent = std::stoll(text.substr(e + 1));
    } catch (const std::exception&) {
      throw ParseError("malformed exponent in '" + text + "'");
    }
  }
  bool negative = false;
  std::size_t pos = 0;
  if (pos < mantissa.size() && (mantissa[pos] == '-' || mantissa[pos] == '+')) negative = mantissa[pos++] == '-';
  std::string digits;
  long long frac_digits = 0;
  bool seen_point = false;
  for (; pos < mantissa.size(); ++pos) {
    char c = mantissa[pos];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      throw ParseError("malformed number '" + text + "'");
    }
  }
  if (digits.empty()) throw ParseError("malformed number '" + text + "'");
  BigInt num(digits);
  if (negative) num = -num;
  const long long shift = exponent - frac_digits;
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(shift < 0 ? -shift : shift));
  return shift < 0 ? Rational(num, scale) : Rational(num * scale);
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt acc = 1;
  for (long long i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc;
}

inline Rational rational_pow(const Rational& base, unsigned exponent) {
  Rational acc = 1;
  for (unsigned i = 0; i < exponent; ++i) acc *= base;
  return acc;
}

inline BigInt ceil_of(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  BigInt quot = num / den;
  if (quot * den < num) quot += 1;
  return quot;
}

inline BigInt floor_of(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  BigInt quot = num / den;
  if (quot * den > num) quot -= 1;
  return quot;
}

}  // namespace ramsey
