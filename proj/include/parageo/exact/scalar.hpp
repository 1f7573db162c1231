#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace parageo {

/// Exact element of Q(i). The imaginary part is stored only when nonzero, so
/// arithmetic on purely rational values never touches it.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Scalar(mpq_class re, mpq_class im);

  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }
  static Scalar fraction(long num, long den);
  /// Accepts "p", "p/q", "bi", "a+bi", "a-bi" with rational a, b.
  static Scalar parse(std::string_view text);

  const mpq_class& re() const { return re_; }
  mpq_class im() const { return im_ ? *im_ : mpq_class(0); }

  bool is_zero() const { return sgn(re_) == 0 && !im_; }
  bool is_real() const { return !im_; }
  bool is_one() const { return !im_ && re_ == 1; }

  Scalar conj() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical text: "p/q" for rationals, "a+bi" otherwise.
  std::string str() const;

 private:
  void normalize_im();

  mpq_class re_;
  std::optional<mpq_class> im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// n! as a Scalar.
Scalar factorial(unsigned n);

}  // namespace parageo
