#include "statel/value.hpp"

namespace statel {

std::string Value::key() const {
  if (is_token()) return as_token();
  std::string out;
  const Vec& v = as_vector();
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += format_rational(v[i]);
  }
  return out;
}

std::string Value::str() const {
  if (is_token()) return as_token();
  std::string out = "(";
  const Vec& v = as_vector();
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_rational(v[i]);
  }
  return out + ")";
}

int Value::compare(const Value& o) const {
  if (is_token() != o.is_token()) return is_token() ? -1 : 1;
  if (is_token()) {
    const auto& a = as_token();
    const auto& b = o.as_token();
    return a < b ? -1 : a == b ? 0 : 1;
  }
  const Vec& a = as_vector();
  const Vec& b = o.as_vector();
  const size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return -1;
    if (b[i] < a[i]) return 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

}  // namespace statel
