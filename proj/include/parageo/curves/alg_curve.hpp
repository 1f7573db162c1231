#pragma once

#include <vector>

#include "parageo/algebra/graded_algebra.hpp"

namespace parageo {

/// Polynomial curve t -> g, stored as one polynomial per basis coordinate.
class AlgCurve {
 public:
  AlgCurve() = default;
  AlgCurve(const GradedAlgebra* algebra, std::vector<Poly> coords);

  static AlgCurve zero(const GradedAlgebra& algebra);
  static AlgCurve constant(const AlgElem& x);
  /// f(t) * x
  static AlgCurve scaled(const AlgElem& x, const Poly& f);
  /// Coordinates of a polynomial matrix lying in g for every t; throws NotInAlgebra.
  static AlgCurve from_matrix(const GradedAlgebra& algebra, const PolyMatrix& m);

  const GradedAlgebra& algebra() const { return *algebra_; }
  const GradedAlgebra* algebra_ptr() const { return algebra_; }
  const std::vector<Poly>& coords() const { return coords_; }
  const Poly& coord(std::size_t i) const { return coords_[i]; }

  PolyMatrix matrix() const { return algebra_->assemble(coords_); }
  /// Taylor coefficient of t^power.
  AlgElem coefficient(std::size_t power) const;
  /// order-th derivative at t = 0.
  AlgElem derivative_at_zero(unsigned order) const;
  AlgElem eval(const Scalar& t) const;
  AlgCurve derivative() const;
  AlgCurve truncated(std::size_t max_degree) const;
  std::size_t max_degree() const;

  bool is_zero() const;
  bool in_p() const;
  bool in_n() const;

  AlgCurve& operator+=(const AlgCurve& o);
  AlgCurve& operator-=(const AlgCurve& o);
  friend AlgCurve operator+(AlgCurve a, const AlgCurve& b) { return a += b; }
  friend AlgCurve operator-(AlgCurve a, const AlgCurve& b) { return a -= b; }
  friend AlgCurve operator*(AlgCurve a, const Poly& f);
  friend AlgCurve operator*(const Poly& f, AlgCurve a) { return std::move(a) * f; }
  AlgCurve operator-() const;
  friend bool operator==(const AlgCurve& a, const AlgCurve& b);
  friend bool operator!=(const AlgCurve& a, const AlgCurve& b) { return !(a == b); }

 private:
  const GradedAlgebra* algebra_ = nullptr;
  std::vector<Poly> coords_;
};

AlgCurve bracket(const AlgCurve& x, const AlgCurve& y);
AlgCurve bracket(const AlgElem& x, const AlgCurve& y);

}  // namespace parageo
