#pragma once

#include <ostream>
#include <string>

#include "parageo/exact/poly.hpp"

namespace parageo {

/// Rational function num/den in t, kept in canonical form: gcd(num, den) = 1
/// and den monic. The zero function is 0/1.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(int c) : RatFun(Poly(c)) {}       // NOLINT(google-explicit-constructor)
  RatFun(Scalar c) : RatFun(Poly(c)) {}    // NOLINT(google-explicit-constructor)
  RatFun(Poly num) : num_(std::move(num)), den_(1) {}  // NOLINT
  RatFun(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  /// Throws PoleAtOrigin-style DivisionByZero when den(x) = 0.
  Scalar eval(const Scalar& x) const;

  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const Scalar& s);
  friend RatFun operator/(const RatFun& a, const Scalar& s);
  RatFun operator-() const;

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  std::string str() const;

 private:
  struct Canonical {};
  RatFun(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFun& r);

RatFun ratfun_derivative(const RatFun& r);

}  // namespace parageo
