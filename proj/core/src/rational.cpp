#include "galois/rational.hpp"

#include "galois/error.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace galois {

namespace {

std::int64_t parse_int(std::string_view digits, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw ArgumentError("not a rational number: '" + std::string(whole) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

} // namespace

Rational parse_rational(std::string_view text) {
  const auto s = trim(text);
  if (s.empty()) throw ArgumentError("empty rational");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = parse_int(trim(s.substr(0, slash)), s);
    const auto den = parse_int(trim(s.substr(slash + 1)), s);
    if (den == 0) throw ArgumentError("zero denominator: '" + std::string(s) + "'");
    return Rational(num, den);
  }

  auto dot = s.find('.');
  if (dot == std::string_view::npos) return Rational(parse_int(s, s));

  std::string_view int_part = s.substr(0, dot);
  std::string_view frac_part = s.substr(dot + 1);
  bool negative = false;
  if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
    negative = int_part.front() == '-';
    int_part.remove_prefix(1);
  }
  if (int_part.empty() && frac_part.empty()) throw ArgumentError("not a rational number: '" + std::string(s) + "'");
  if (frac_part.size() > 15) throw ArgumentError("too many decimal places: '" + std::string(s) + "'");
  if (frac_part.find_first_not_of("0123456789") != std::string_view::npos ||
      int_part.find_first_not_of("0123456789") != std::string_view::npos)
    throw ArgumentError("not a rational number: '" + std::string(s) + "'");

  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
  const std::int64_t whole = int_part.empty() ? 0 : parse_int(int_part, s);
  const std::int64_t frac = frac_part.empty() ? 0 : parse_int(frac_part, s);
  Rational r(whole * scale + frac, scale);
  return negative ? -r : r;
}

std::string to_fraction_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_truncated_decimal(const Rational& r, int digits) {
  std::int64_t num = r.numerator();
  const std::int64_t den = r.denominator();
  std::string out;
  if (num < 0) {
    out.push_back('-');
    num = -num;
  }
  out += std::to_string(num / den);
  std::int64_t rem = num % den;
  std::string frac;
  for (int i = 0; i < digits; ++i) {
    rem *= 10;
    frac.push_back(static_cast<char>('0' + rem / den));
    rem %= den;
  }
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (!frac.empty()) out += "." + frac;
  return out;
}

double to_rounded_double(const Rational& r, int digits) {
  const double scale = std::pow(10.0, digits);
  const double value = static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
  return std::round(value * scale) / scale;
}

} // namespace galois
