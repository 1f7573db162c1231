#include "parageo/exact/linalg.hpp"

namespace parageo {

RowEchelon rref(ScalarMatrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    const Scalar inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar f = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (m(row, j).is_zero()) continue;
        m(r, j) -= f * m(row, j);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const ScalarMatrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> kernel_basis(const ScalarMatrix& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const ScalarMatrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "solve: rhs size");
  ScalarMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  const RowEchelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

ScalarMatrix inverse(const ScalarMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  ScalarMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(1);
  }
  const RowEchelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
    throw Error(ErrorCode::DivisionByZero, "matrix is singular");
  ScalarMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::size_t span_dimension(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
  if (vectors.empty()) return 0;
  ScalarMatrix m(vectors.size(), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < ambient_dim; ++j) m(i, j) = vectors[i][j];
  return rank(m);
}

PolyMatrix mat_inverse_unimodular(const PolyMatrix& m) {
  auto [det, adj] = det_and_adjugate(m);
  if (det != Poly(1)) throw Error(ErrorCode::DeterminantNotOne, "determinant is " + det.str());
  return adj;
}

PolyMatrix to_poly(const ScalarMatrix& m) {
  return m.map([](const Scalar& s) { return Poly(s); });
}

RatMatrix to_rat(const PolyMatrix& m) {
  return m.map([](const Poly& p) { return RatFun(p); });
}

PolyMatrix derivative(const PolyMatrix& m) { return m.map(poly_derivative); }

RatMatrix derivative(const RatMatrix& m) { return m.map(ratfun_derivative); }

ScalarMatrix eval(const PolyMatrix& m, const Scalar& t) {
  return m.map([&t](const Poly& p) { return p.eval(t); });
}

PolyMatrix truncated(const PolyMatrix& m, std::size_t max_degree) {
  return m.map([max_degree](const Poly& p) { return p.truncated(max_degree); });
}

ScalarMatrix coefficient(const PolyMatrix& m, std::size_t power) {
  return m.map([power](const Poly& p) { return p.coeff(power); });
}

std::size_t max_degree(const PolyMatrix& m) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j).size() > 0) d = std::max(d, m(i, j).size() - 1);
  return d;
}

}  // namespace parageo
