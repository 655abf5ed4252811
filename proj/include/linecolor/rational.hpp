#pragma once

#include "linecolor/bigint.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace linecolor {

// Exact rational number, always in lowest terms with a positive denominator.
// Distance coincidence ("are these two gaps the same restriction value?") is
// the central predicate of everything downstream, so equality must be exact;
// no floating point is involved anywhere in 1-D computations.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int v) : num_(v), den_(1) {}                // NOLINT(runtime/explicit)
  Rational(long long v) : num_(v), den_(1) {}          // NOLINT(runtime/explicit)
  Rational(BigInt v) : num_(std::move(v)), den_(1) {}  // NOLINT(runtime/explicit)

  Rational(BigInt numerator, BigInt denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    normalize();
  }

  // Accepts "p", "-p", "p/q" with optional sign on either part; q != 0.
  static Rational parse(const std::string& text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_positive() const { return num_ > 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const { return Rational(unchecked{}, -num_, den_); }

  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return num_ * o.den_ < o.num_ * den_;
  }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  Rational abs() const {
    return num_ < 0 ? Rational(unchecked{}, -num_, den_) : *this;
  }

  // Exact floor of the value.
  BigInt floor() const { return floor_div(num_, den_); }

  // "p" when integral, "p/q" otherwise; canonical (used as JSON map keys).
  std::string str() const;

 private:
  struct unchecked {};
  Rational(unchecked, BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize();

  BigInt num_;
  BigInt den_;  // > 0
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// floor(x / r) for r > 0; exact.
inline BigInt floor_quotient(const Rational& x, const Rational& r) {
  if (!r.is_positive()) throw std::domain_error("floor_quotient: width must be positive");
  return floor_div(x.num() * r.den(), x.den() * r.num());
}

}  // namespace linecolor
