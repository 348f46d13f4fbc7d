#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treesec/errors.hpp"

namespace treesec {

// Exact rationals on arbitrary-precision integers, always kept in lowest
// terms with a positive denominator.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Largest integer not exceeding q.
inline BigInt floor_to_int(const Rational& q) {
  BigInt n = numerator(q);
  BigInt d = denominator(q);  // always > 0
  BigInt t = n / d;
  if (n % d != 0 && n < 0) --t;
  return t;
}

inline Rational floor_rational(const Rational& q) { return Rational(floor_to_int(q)); }

// lcm of all denominators; 1 for an empty range.
inline BigInt denominator_lcm(std::span<const Rational> xs) {
  BigInt l = 1;
  for (const Rational& x : xs) l = boost::multiprecision::lcm(l, denominator(x));
  return l;
}

// Lowest-terms text form: bare integer when the denominator is 1,
// "num/den" otherwise.
inline std::string format_rational(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += '/';
    s += denominator(q).str();
  }
  return s;
}

namespace detail {
inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}
}  // namespace detail

// Accepts "7", "-3", "7/2", "-7/2" and decimal forms like "3.5" (converted
// exactly). Throws ParseError on anything else or on a zero denominator.
inline Rational parse_rational(std::string_view s) {
  std::string_view rest = s;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  auto fail = [&] { throw ParseError("cannot parse rational: \"" + std::string(s) + "\""); };

  Rational value;
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    std::string_view num = rest.substr(0, slash);
    std::string_view den = rest.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den)) fail();
    BigInt d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in \"" + std::string(s) + "\"");
    value = Rational(BigInt{std::string(num)}, d);
  } else if (auto dot = rest.find('.'); dot != std::string_view::npos) {
    std::string_view whole = rest.substr(0, dot);
    std::string_view frac = rest.substr(dot + 1);
    if (!detail::all_digits(whole) || !detail::all_digits(frac)) fail();
    BigInt scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = Rational(BigInt{std::string(whole)} * scale + BigInt{std::string(frac)}, scale);
  } else {
    if (!detail::all_digits(rest)) fail();
    value = Rational(BigInt{std::string(rest)});
  }
  if (negative) value = -value;
  return value;
}

}  // namespace treesec
