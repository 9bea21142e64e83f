#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace hypertrees {

/// An element x + y*sqrt(D) of the real quadratic field Q(sqrt(D)), with x, y
/// exact rationals and D a square-free integer >= 2.
///
/// A number with y = 0 may carry no field at all (radicand() == 0); such a
/// rational combines with a number from any field. Mixing two different
/// fields throws ArithmeticError.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(mpq_class rational);  // NOLINT(google-explicit-constructor)
  QuadraticNumber(const mpz_class& integer);  // NOLINT(google-explicit-constructor)
  QuadraticNumber(long integer);  // NOLINT(google-explicit-constructor)

  /// x + y*sqrt(radicand). The radicand must be square-free and >= 2.
  QuadraticNumber(mpq_class x, mpq_class y, std::int64_t radicand);

  /// sqrt(n) for n >= 0, written as k*sqrt(D) with D square-free; exact
  /// rational k when n is a perfect square.
  static QuadraticNumber sqrt(const mpz_class& n);

  const mpq_class& rational_part() const noexcept { return x_; }
  const mpq_class& irrational_part() const noexcept { return y_; }
  std::int64_t radicand() const noexcept { return d_; }

  bool is_rational() const { return sgn(y_) == 0; }
  bool is_integer() const { return is_rational() && x_.get_den() == 1; }

  /// Throws ArithmeticError unless is_rational().
  const mpq_class& as_rational() const;
  /// Throws ArithmeticError unless is_integer().
  mpz_class as_integer() const;

  /// -1, 0 or +1, decided exactly.
  int sign() const;

  QuadraticNumber conjugate() const;
  /// x^2 - D*y^2
  mpq_class norm() const;
  QuadraticNumber inverse() const;
  QuadraticNumber abs() const;
  QuadraticNumber pow(unsigned exponent) const;

  /// Largest integer not exceeding the value, computed exactly.
  mpz_class floor() const;

  /// Decimal expansion rounded half-to-even at `digits` fractional digits.
  std::string to_decimal(int digits) const;

  /// Exact radical form, e.g. "-5/2 + 5/2*sqrt(3)".
  std::string to_string() const;

  QuadraticNumber operator-() const;
  QuadraticNumber& operator+=(const QuadraticNumber& rhs);
  QuadraticNumber& operator-=(const QuadraticNumber& rhs);
  QuadraticNumber& operator*=(const QuadraticNumber& rhs);
  QuadraticNumber& operator/=(const QuadraticNumber& rhs);

  friend QuadraticNumber operator+(QuadraticNumber a, const QuadraticNumber& b) { return a += b; }
  friend QuadraticNumber operator-(QuadraticNumber a, const QuadraticNumber& b) { return a -= b; }
  friend QuadraticNumber operator*(QuadraticNumber a, const QuadraticNumber& b) { return a *= b; }
  friend QuadraticNumber operator/(QuadraticNumber a, const QuadraticNumber& b) { return a /= b; }

  /// Value equality; a number with y = 0 equals its rational part whatever
  /// field it was computed in.
  friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b);
  friend std::strong_ordering operator<=>(const QuadraticNumber& a, const QuadraticNumber& b);

 private:
  std::int64_t common_field(const QuadraticNumber& rhs) const;

  mpq_class x_{0};
  mpq_class y_{0};
  std::int64_t d_ = 0;
};

/// 10^exponent as an exact rational (exponent may be negative).
mpq_class pow10(int exponent);

/// Decimal expansion of a rational, rounded half-to-even.
std::string to_decimal(const mpq_class& value, int digits);

/// "n" or "n/d".
std::string to_string(const mpq_class& value);

/// floor(log10(|v|)) for v != 0, computed exactly.
int decimal_order(const QuadraticNumber& v);

std::ostream& operator<<(std::ostream& os, const QuadraticNumber& v);

}  // namespace hypertrees
