#include "statel/rational.hpp"

#include <cctype>

#include "statel/error.hpp"

namespace statel {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw ModelError(Fault::BadNumber,
                   "not a rational literal: '" + std::string(text) + "'");
}

}  // namespace

Rat parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad(text);

  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
    if (s.empty()) bad(text);
  }

  Rat value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    BigInt p(std::string(num));
    BigInt q(std::string(den));
    if (q == 0) bad(text);
    value = Rat(p, q);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad(text);
    if (!whole.empty() && !all_digits(whole)) bad(text);
    if (!frac.empty() && !all_digits(frac)) bad(text);
    BigInt p = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
    BigInt q = 1;
    for (char c : frac) {
      p = p * 10 + (c - '0');
      q *= 10;
    }
    value = Rat(p, q);
  } else {
    if (!all_digits(s)) bad(text);
    value = Rat(BigInt(std::string(s)));
  }
  return negative ? Rat(-value) : value;
}

std::string format_rational(const Rat& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double rational_to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace statel
