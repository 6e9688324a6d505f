#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace liebi {

// Exact rational number. Always stored reduced with a positive denominator;
// zero is 0/1.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I n) : value_(static_cast<long>(n)) {}  // NOLINT: implicit by design of arithmetic
  Rational(long num, long den);

  // Accepts "3", "-7", "5/6", "-1/2". Returns nullopt on malformed input or a
  // zero denominator.
  static std::optional<Rational> parse(std::string_view text);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  // Throws std::domain_error when o is zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

enum class RatOp { add, sub, mul, div };

// Checked arithmetic: nullopt is the error value for division by zero.
std::optional<Rational> rat_arith(const Rational& a, const Rational& b, RatOp op);

}  // namespace liebi
