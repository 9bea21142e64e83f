#include "hypertrees/quadratic.hpp"

#include <ostream>

#include <utility>

#include "hypertrees/errors.hpp"

namespace hypertrees {

namespace {

bool is_square_free(std::int64_t n) {
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % (f * f) == 0) return false;
  }
  return true;
}

// Splits n >= 1 into k^2 * d with d square-free.
std::pair<mpz_class, mpz_class> split_square(mpz_class n) {
  mpz_class k = 1;
  mpz_class d = 1;
  for (mpz_class f = 2; f * f <= n; ++f) {
    int multiplicity = 0;
    while (mpz_divisible_p(n.get_mpz_t(), f.get_mpz_t()) != 0) {
      n /= f;
      ++multiplicity;
    }
    for (int i = 0; i + 1 < multiplicity; i += 2) k *= f;
    if (multiplicity % 2 == 1) d *= f;
  }
  d *= n;
  return {k, d};
}

// floor(num / den) for den > 0.
mpz_class floor_div(const mpz_class& num, const mpz_class& den) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

mpz_class floor_of(const mpq_class& v) { return floor_div(v.get_num(), v.get_den()); }

std::string format_fixed(const mpz_class& scaled, int digits, bool negative) {
  std::string body = scaled.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), 1, '.');
  }
  if (negative && scaled != 0) body.insert(0, 1, '-');
  return body;
}

// Half-to-even rounding of a non-negative rational to an integer.
mpz_class round_half_even(const mpq_class& v) {
  mpz_class f = floor_of(v);
  const mpq_class frac = v - mpq_class(f);
  const int cmp_half = cmp(frac, mpq_class(1, 2));
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(f.get_mpz_t()) != 0)) f += 1;
  return f;
}

}  // namespace

QuadraticNumber::QuadraticNumber(mpq_class rational) : x_(std::move(rational)) {
  x_.canonicalize();
}

QuadraticNumber::QuadraticNumber(const mpz_class& integer) : x_(integer) {}

QuadraticNumber::QuadraticNumber(long integer) : x_(integer) {}

QuadraticNumber::QuadraticNumber(mpq_class x, mpq_class y, std::int64_t radicand)
    : x_(std::move(x)), y_(std::move(y)), d_(radicand) {
  if (radicand < 2 || !is_square_free(radicand)) {
    throw ArithmeticError("radicand " + std::to_string(radicand) +
                          " must be a square-free integer >= 2");
  }
  x_.canonicalize();
  y_.canonicalize();
}

QuadraticNumber QuadraticNumber::sqrt(const mpz_class& n) {
  if (n < 0) throw ArithmeticError("square root of a negative integer");
  if (n == 0) return QuadraticNumber();
  auto [k, d] = split_square(n);
  if (d == 1) return QuadraticNumber(mpq_class(k));
  return QuadraticNumber(mpq_class(0), mpq_class(k), d.get_si());
}

const mpq_class& QuadraticNumber::as_rational() const {
  if (!is_rational()) throw ArithmeticError(to_string() + " is not rational");
  return x_;
}

mpz_class QuadraticNumber::as_integer() const {
  if (!is_integer()) throw ArithmeticError(to_string() + " is not an integer");
  return x_.get_num();
}

int QuadraticNumber::sign() const {
  const int sx = sgn(x_);
  const int sy = sgn(y_);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  // Opposite signs: the larger of x^2 and D*y^2 wins.
  const mpq_class lhs = x_ * x_;
  const mpq_class rhs = y_ * y_ * d_;
  return cmp(lhs, rhs) > 0 ? sx : sy;
}

QuadraticNumber QuadraticNumber::conjugate() const {
  QuadraticNumber out = *this;
  out.y_ = -y_;
  return out;
}

mpq_class QuadraticNumber::norm() const { return x_ * x_ - y_ * y_ * d_; }

QuadraticNumber QuadraticNumber::inverse() const {
  const mpq_class n = norm();
  if (sgn(n) == 0) throw ArithmeticError("division by zero");
  QuadraticNumber out = *this;
  out.x_ = x_ / n;
  out.y_ = -y_ / n;
  return out;
}

QuadraticNumber QuadraticNumber::abs() const { return sign() < 0 ? -*this : *this; }

QuadraticNumber QuadraticNumber::pow(unsigned exponent) const {
  QuadraticNumber result(1L);
  result.d_ = d_;
  QuadraticNumber base = *this;
  while (exponent != 0) {
    if ((exponent & 1U) != 0) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

mpz_class QuadraticNumber::floor() const {
  if (is_rational()) return floor_of(x_);
  // value = (P + Q*sqrt(D)) / R with integers P, Q and R > 0.
  const mpz_class P = x_.get_num() * y_.get_den();
  const mpz_class Q = y_.get_num() * x_.get_den();
  const mpz_class R = x_.get_den() * y_.get_den();
  mpz_class s;
  const mpz_class q2d = Q * Q * d_;
  mpz_sqrt(s.get_mpz_t(), q2d.get_mpz_t());
  // Q^2*D is never a perfect square, so |Q|*sqrt(D) lies strictly in (s, s+1)
  // and the numerator lies strictly between two consecutive integers; the
  // floor of the quotient is the floor of the lower integer over R.
  const mpz_class lower = Q > 0 ? mpz_class(P + s) : mpz_class(P - s - 1);
  return floor_div(lower, R);
}

std::string QuadraticNumber::to_decimal(int digits) const {
  if (digits < 0) throw PreconditionError("negative decimal precision");
  const QuadraticNumber magnitude = abs();
  const QuadraticNumber scaled = magnitude * QuadraticNumber(pow10(digits));
  mpz_class rounded;
  if (scaled.is_rational()) {
    rounded = round_half_even(scaled.x_);
  } else {
    // Irrational values are never exactly halfway.
    rounded = (scaled + QuadraticNumber(mpq_class(1, 2))).floor();
  }
  return format_fixed(rounded, digits, sign() < 0);
}

std::string QuadraticNumber::to_string() const {
  if (is_rational()) return hypertrees::to_string(x_);
  std::string out;
  if (sgn(x_) != 0) {
    out = hypertrees::to_string(x_);
    out += sgn(y_) < 0 ? " - " : " + ";
  } else if (sgn(y_) < 0) {
    out = "-";
  }
  const mpq_class my = y_ < 0 ? mpq_class(-y_) : y_;
  if (my != 1) out += hypertrees::to_string(my) + "*";
  out += "sqrt(" + std::to_string(d_) + ")";
  return out;
}

std::int64_t QuadraticNumber::common_field(const QuadraticNumber& rhs) const {
  if (d_ == 0) return rhs.d_;
  if (rhs.d_ == 0 || rhs.d_ == d_) return d_;
  throw ArithmeticError("mixing Q(sqrt(" + std::to_string(d_) + ")) and Q(sqrt(" +
                        std::to_string(rhs.d_) + "))");
}

QuadraticNumber QuadraticNumber::operator-() const {
  QuadraticNumber out = *this;
  out.x_ = -x_;
  out.y_ = -y_;
  return out;
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& rhs) {
  d_ = common_field(rhs);
  x_ += rhs.x_;
  y_ += rhs.y_;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& rhs) {
  d_ = common_field(rhs);
  x_ -= rhs.x_;
  y_ -= rhs.y_;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& rhs) {
  d_ = common_field(rhs);
  mpq_class x = x_ * rhs.x_ + y_ * rhs.y_ * d_;
  mpq_class y = x_ * rhs.y_ + y_ * rhs.x_;
  x_ = std::move(x);
  y_ = std::move(y);
  return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& rhs) {
  common_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) {
  if (a.is_rational() && b.is_rational()) return a.x_ == b.x_;
  return a.d_ == b.d_ && a.x_ == b.x_ && a.y_ == b.y_;
}

std::strong_ordering operator<=>(const QuadraticNumber& a, const QuadraticNumber& b) {
  const int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

mpq_class pow10(int exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) return mpq_class(p);
  mpq_class out(1, 1);
  out /= p;
  return out;
}

std::string to_decimal(const mpq_class& value, int digits) {
  return QuadraticNumber(value).to_decimal(digits);
}

std::string to_string(const mpq_class& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

int decimal_order(const QuadraticNumber& v) {
  if (v.sign() == 0) throw PreconditionError("decimal order of zero is undefined");
  const QuadraticNumber a = v.abs();
  const QuadraticNumber one(1L);
  if (a >= one) {
    return static_cast<int>(a.floor().get_str().size()) - 1;
  }
  int k = 0;
  QuadraticNumber scaled = a;
  const QuadraticNumber ten(10L);
  while (scaled < one) {
    scaled *= ten;
    --k;
  }
  return k;
}

std::ostream& operator<<(std::ostream& os, const QuadraticNumber& v) { return os << v.to_string(); }

}  // namespace hypertrees
