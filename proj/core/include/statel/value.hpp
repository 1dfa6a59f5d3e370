#pragma once

#include <string>
#include <variant>
#include <vector>

#include "statel/rational.hpp"

namespace statel {

// A measurement value: a label token, or a numeric feature vector with
// exact rational coordinates.
class Value {
 public:
  using Vec = std::vector<Rat>;

  Value() : v_(std::string()) {}
  static Value token(std::string t) { return Value(std::move(t)); }
  static Value vector(Vec v) { return Value(std::move(v)); }

  bool is_token() const { return std::holds_alternative<std::string>(v_); }
  bool is_vector() const { return !is_token(); }
  const std::string& as_token() const { return std::get<std::string>(v_); }
  const Vec& as_vector() const { return std::get<Vec>(v_); }

  // Canonical text key: the token itself, or ';'-joined rational coordinates.
  // Used to match CSV rows against classifier/oracle tables.
  std::string key() const;

  // Display form: tokens as-is, vectors as "(a, b)".
  std::string str() const;

  bool operator==(const Value& o) const { return compare(o) == 0; }
  bool operator!=(const Value& o) const { return compare(o) != 0; }
  bool operator<(const Value& o) const { return compare(o) < 0; }

 private:
  explicit Value(std::string t) : v_(std::move(t)) {}
  explicit Value(Vec v) : v_(std::move(v)) {}
  int compare(const Value& o) const;

  std::variant<std::string, Vec> v_;
};

using Tuple = std::vector<Value>;

}  // namespace statel
