#include "parageo/exact/poly.hpp"

#include <sstream>

#include "parageo/error.hpp"

namespace parageo {

namespace {
const Scalar kZero;
}

Poly::Poly(Scalar c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

Poly::Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(Scalar c, std::size_t power) {
  Poly p;
  if (c.is_zero()) return p;
  p.coeffs_.assign(power + 1, Scalar());
  p.coeffs_[power] = std::move(c);
  return p;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Scalar& Poly::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : kZero;
}

const Scalar& Poly::leading() const {
  if (coeffs_.empty()) return kZero;
  return coeffs_.back();
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar acc;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc *= x;
    acc += coeffs_[k];
  }
  return acc;
}

Poly Poly::truncated(std::size_t max_degree) const {
  if (coeffs_.size() <= max_degree + 1) return *this;
  Poly r;
  r.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(max_degree + 1));
  r.trim();
  return r;
}

Scalar Poly::derivative_at_zero(unsigned order) const {
  const Scalar& c = coeff(order);
  if (c.is_zero()) return c;
  return c * factorial(order);
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Poly& Poly::operator/=(const Scalar& s) {
  if (s.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial divided by zero scalar");
  for (auto& c : coeffs_) c /= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string Poly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    bool complex = !coeffs_[k].is_real();
    if (k == 0) {
      os << coeffs_[k];
      continue;
    }
    if (!coeffs_[k].is_one()) os << (complex ? "(" : "") << coeffs_[k] << (complex ? ")" : "") << "*";
    os << "t";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return Poly();
  std::vector<Scalar> c(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) c[k - 1] = p.coeff(k) * Scalar(static_cast<long>(k));
  return Poly(std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Scalar> rem = a.coeffs();
  const std::size_t db = b.size() - 1;
  std::vector<Scalar> quo(a.size() - db);
  const Scalar inv_lead = b.leading().inverse();
  for (std::size_t k = quo.size(); k-- > 0;) {
    Scalar q = rem[k + db] * inv_lead;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeff(j);
    quo[k] = std::move(q);
  }
  rem.resize(db);
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly make_monic(const Poly& p) {
  if (p.is_zero() || p.leading().is_one()) return p;
  return p / p.leading();
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

Poly pow(const Poly& p, unsigned e) {
  Poly r(1);
  for (unsigned k = 0; k < e; ++k) r *= p;
  return r;
}

}  // namespace parageo
