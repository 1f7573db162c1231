#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "parageo/exact/scalar.hpp"

namespace parageo {

/// Polynomial degree with a distinguished "minus infinity" for the zero
/// polynomial, so deg(pq) = deg p + deg q holds without special cases.
class Degree {
 public:
  explicit constexpr Degree(std::size_t d) : value_(d), neg_inf_(false) {}
  static constexpr Degree neg_infinity() { return Degree(); }

  constexpr bool is_neg_infinity() const { return neg_inf_; }
  /// Only meaningful when !is_neg_infinity().
  constexpr std::size_t value() const { return value_; }

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (a.neg_inf_ || b.neg_inf_) return Degree();
    return Degree(a.value_ + b.value_);
  }
  friend constexpr bool operator==(Degree a, Degree b) {
    return a.neg_inf_ == b.neg_inf_ && (a.neg_inf_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (a.neg_inf_ || b.neg_inf_) return b.neg_inf_ <=> a.neg_inf_;
    return a.value_ <=> b.value_;
  }

 private:
  constexpr Degree() : value_(0), neg_inf_(true) {}
  std::size_t value_;
  bool neg_inf_;
};

/// Dense univariate polynomial in t over Q(i). Trailing zero coefficients are
/// never stored.
class Poly {
 public:
  Poly() = default;
  Poly(int c) : Poly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(Scalar c);                   // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Scalar> coeffs);

  static Poly t() { return monomial(Scalar(1), 1); }
  static Poly monomial(Scalar c, std::size_t power);

  Degree degree() const {
    return coeffs_.empty() ? Degree::neg_infinity() : Degree(coeffs_.size() - 1);
  }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Coefficient of t^power (zero past the degree).
  const Scalar& coeff(std::size_t power) const;
  const Scalar& leading() const;
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  Scalar eval(const Scalar& x) const;
  /// Drop every term of degree > max_degree.
  Poly truncated(std::size_t max_degree) const;
  /// The i-th derivative evaluated at 0, i.e. i! * coeff(i).
  Scalar derivative_at_zero(unsigned order) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Scalar& s);
  Poly& operator/=(const Scalar& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  friend Poly operator/(Poly a, const Scalar& s) { return a /= s; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string str() const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Formal derivative.
Poly poly_derivative(const Poly& p);
/// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd (zero if both inputs are zero).
Poly gcd(Poly a, Poly b);
Poly make_monic(const Poly& p);
Poly pow(const Poly& p, unsigned e);

}  // namespace parageo
