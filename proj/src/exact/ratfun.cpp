#include "parageo/exact/ratfun.hpp"

#include "parageo/error.hpp"

namespace parageo {

RatFun::RatFun(Poly num, Poly den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num, den);
  if (!g.is_constant()) {
    num = divmod(num, g).first;
    den = divmod(den, g).first;
  }
  Scalar lead = den.leading();
  num_ = num / lead;
  den_ = den / lead;
}

Scalar RatFun::eval(const Scalar& x) const {
  Scalar d = den_.eval(x);
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function evaluated at a pole");
  return num_.eval(x) / d;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_polynomial() && b.is_polynomial()) return RatFun(a.num_ + b.num_, Poly(1), RatFun::Canonical{});
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
  if (a.is_polynomial() && b.is_polynomial()) return RatFun(a.num_ - b.num_, Poly(1), RatFun::Canonical{});
  if (a.den_ == b.den_) return RatFun(a.num_ - b.num_, a.den_);
  return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return RatFun();
  if (a.is_polynomial() && b.is_polynomial()) return RatFun(a.num_ * b.num_, Poly(1), RatFun::Canonical{});
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function division by zero");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun operator*(const RatFun& a, const Scalar& s) {
  if (s.is_zero()) return RatFun();
  return RatFun(a.num_ * s, a.den_, RatFun::Canonical{});
}

RatFun operator/(const RatFun& a, const Scalar& s) {
  return RatFun(a.num_ / s, a.den_, RatFun::Canonical{});
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, Canonical{}); }

std::string RatFun::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFun& r) { return os << r.str(); }

RatFun ratfun_derivative(const RatFun& r) {
  if (r.is_polynomial()) return RatFun(poly_derivative(r.num()));
  return RatFun(poly_derivative(r.num()) * r.den() - r.num() * poly_derivative(r.den()),
                r.den() * r.den());
}

}  // namespace parageo
