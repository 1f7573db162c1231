#include "parageo/curves/alg_curve.hpp"

#include <algorithm>

namespace parageo {

AlgCurve::AlgCurve(const GradedAlgebra* algebra, std::vector<Poly> coords)
    : algebra_(algebra), coords_(std::move(coords)) {
  if (coords_.size() != algebra_->dim())
    throw Error(ErrorCode::DimensionMismatch, "curve needs " + std::to_string(algebra_->dim()) + " coordinates");
  for (const auto& p : coords_)
    for (const auto& c : p.coeffs())
      if (!c.is_real()) throw Error(ErrorCode::NotInAlgebra, "curve coordinates must be rational");
}

AlgCurve AlgCurve::zero(const GradedAlgebra& algebra) {
  return AlgCurve(&algebra, std::vector<Poly>(algebra.dim()));
}

AlgCurve AlgCurve::constant(const AlgElem& x) { return scaled(x, Poly(1)); }

AlgCurve AlgCurve::scaled(const AlgElem& x, const Poly& f) {
  std::vector<Poly> c(x.algebra().dim());
  for (std::size_t a = 0; a < c.size(); ++a)
    if (!x.coord(a).is_zero()) c[a] = f * x.coord(a);
  return AlgCurve(x.algebra_ptr(), std::move(c));
}

AlgCurve AlgCurve::from_matrix(const GradedAlgebra& algebra, const PolyMatrix& m) {
  if (m.rows() != algebra.matrix_dim() || m.cols() != algebra.matrix_dim())
    throw Error(ErrorCode::DimensionMismatch, "curve matrix has the wrong size");
  std::vector<Poly> coords = algebra.extract(m);
  for (const auto& p : coords)
    for (const auto& c : p.coeffs())
      if (!c.is_real()) throw Error(ErrorCode::NotInAlgebra, "curve leaves the real form " + algebra.name());
  if (algebra.assemble(coords) != m) throw Error(ErrorCode::NotInAlgebra, "curve leaves " + algebra.name());
  return AlgCurve(&algebra, std::move(coords));
}

AlgElem AlgCurve::coefficient(std::size_t power) const {
  Vector v(coords_.size());
  for (std::size_t a = 0; a < v.size(); ++a) v[a] = coords_[a].coeff(power);
  return AlgElem(algebra_, std::move(v));
}

AlgElem AlgCurve::derivative_at_zero(unsigned order) const {
  Vector v(coords_.size());
  for (std::size_t a = 0; a < v.size(); ++a) v[a] = coords_[a].derivative_at_zero(order);
  return AlgElem(algebra_, std::move(v));
}

AlgElem AlgCurve::eval(const Scalar& t) const {
  Vector v(coords_.size());
  for (std::size_t a = 0; a < v.size(); ++a) v[a] = coords_[a].eval(t);
  return AlgElem(algebra_, std::move(v));
}

AlgCurve AlgCurve::derivative() const {
  std::vector<Poly> c(coords_.size());
  for (std::size_t a = 0; a < c.size(); ++a) c[a] = poly_derivative(coords_[a]);
  return AlgCurve(algebra_, std::move(c));
}

AlgCurve AlgCurve::truncated(std::size_t max_degree) const {
  std::vector<Poly> c(coords_.size());
  for (std::size_t a = 0; a < c.size(); ++a) c[a] = coords_[a].truncated(max_degree);
  return AlgCurve(algebra_, std::move(c));
}

std::size_t AlgCurve::max_degree() const {
  std::size_t d = 0;
  for (const auto& p : coords_)
    if (p.size() > 0) d = std::max(d, p.size() - 1);
  return d;
}

bool AlgCurve::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool AlgCurve::in_p() const {
  for (std::size_t a = 0; a < algebra_->n_dim(); ++a)
    if (!coords_[a].is_zero()) return false;
  return true;
}

bool AlgCurve::in_n() const {
  for (std::size_t a = algebra_->n_dim(); a < coords_.size(); ++a)
    if (!coords_[a].is_zero()) return false;
  return true;
}

AlgCurve& AlgCurve::operator+=(const AlgCurve& o) {
  if (algebra_ != o.algebra_) throw Error(ErrorCode::AlgebraMismatch, "curves in different algebras");
  for (std::size_t a = 0; a < coords_.size(); ++a) coords_[a] += o.coords_[a];
  return *this;
}

AlgCurve& AlgCurve::operator-=(const AlgCurve& o) {
  if (algebra_ != o.algebra_) throw Error(ErrorCode::AlgebraMismatch, "curves in different algebras");
  for (std::size_t a = 0; a < coords_.size(); ++a) coords_[a] -= o.coords_[a];
  return *this;
}

AlgCurve operator*(AlgCurve a, const Poly& f) {
  for (const auto& c : f.coeffs())
    if (!c.is_real()) throw Error(ErrorCode::NotInAlgebra, "curves admit only rational scalar functions");
  for (auto& p : a.coords_) p = p * f;
  return a;
}

AlgCurve AlgCurve::operator-() const {
  AlgCurve r = *this;
  for (auto& p : r.coords_) p = -p;
  return r;
}

bool operator==(const AlgCurve& a, const AlgCurve& b) {
  return a.algebra_ == b.algebra_ && a.coords_ == b.coords_;
}

AlgCurve bracket(const AlgCurve& x, const AlgCurve& y) {
  if (x.algebra_ptr() != y.algebra_ptr()) throw Error(ErrorCode::AlgebraMismatch, "curves in different algebras");
  const GradedAlgebra& g = x.algebra();
  std::vector<Poly> out(g.dim());
  for (std::size_t a = 0; a < g.dim(); ++a) {
    if (x.coord(a).is_zero()) continue;
    for (std::size_t b = 0; b < g.dim(); ++b) {
      if (y.coord(b).is_zero()) continue;
      const auto& table = g.structure(a, b);
      if (table.empty()) continue;
      const Poly xy = x.coord(a) * y.coord(b);
      for (const auto& [c, coef] : table) out[c] += xy * coef;
    }
  }
  return AlgCurve(&g, std::move(out));
}

AlgCurve bracket(const AlgElem& x, const AlgCurve& y) {
  if (x.algebra_ptr() != y.algebra_ptr()) throw Error(ErrorCode::AlgebraMismatch, "curves in different algebras");
  const GradedAlgebra& g = x.algebra();
  std::vector<Poly> out(g.dim());
  for (std::size_t a = 0; a < g.dim(); ++a) {
    if (x.coord(a).is_zero()) continue;
    for (std::size_t b = 0; b < g.dim(); ++b) {
      if (y.coord(b).is_zero()) continue;
      for (const auto& [c, coef] : g.structure(a, b)) out[c] += y.coord(b) * (x.coord(a) * coef);
    }
  }
  return AlgCurve(&g, std::move(out));
}

}  // namespace parageo
