#pragma once

#include <optional>
#include <vector>

#include "parageo/exact/matrix.hpp"

namespace parageo {

struct RowEchelon {
  ScalarMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form over Q(i).
RowEchelon rref(ScalarMatrix m);
std::size_t rank(const ScalarMatrix& m);

/// Exact basis of the null space {v : m v = 0}; empty iff m is injective.
std::vector<Vector> kernel_basis(const ScalarMatrix& m);

/// One solution of m x = rhs (free variables set to zero), or nullopt.
std::optional<Vector> solve(const ScalarMatrix& m, const Vector& rhs);

/// Inverse of an invertible constant matrix; throws DivisionByZero if singular.
ScalarMatrix inverse(const ScalarMatrix& m);

/// Rank of the span of a list of coordinate vectors.
std::size_t span_dimension(const std::vector<Vector>& vectors, std::size_t ambient_dim);

/// Characteristic-polynomial data from the Faddeev-LeVerrier recursion:
/// returns (det, adjugate). Works over any exact ring with division by
/// integers, which covers Scalar, Poly and RatFun.
template <class T>
std::pair<T, Matrix<T>> det_and_adjugate(const Matrix<T>& a) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return {T(1), Matrix<T>()};
  Matrix<T> m = Matrix<T>::identity(n);  // M_1 = I, c_{n-1} = -tr(A)
  T c = -a.trace();
  for (std::size_t k = 2; k <= n; ++k) {
    Matrix<T> next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c;
    m = std::move(next);
    c = -(a * m).trace() / Scalar(static_cast<long>(k));
  }
  // c is now c_0; det = (-1)^n c_0 and adj = (-1)^(n-1) M_n
  T det = (n % 2 == 0) ? c : -c;
  if (n % 2 == 0) m = -m;
  return {det, m};
}

template <class T>
T determinant(const Matrix<T>& a) {
  return det_and_adjugate(a).first;
}

/// Adjugate of a PolyMatrix with determinant the constant 1; the result is
/// its exact inverse. Throws DeterminantNotOne otherwise.
PolyMatrix mat_inverse_unimodular(const PolyMatrix& m);

PolyMatrix to_poly(const ScalarMatrix& m);
RatMatrix to_rat(const PolyMatrix& m);
PolyMatrix derivative(const PolyMatrix& m);
RatMatrix derivative(const RatMatrix& m);
ScalarMatrix eval(const PolyMatrix& m, const Scalar& t);
PolyMatrix truncated(const PolyMatrix& m, std::size_t max_degree);
/// Coefficient matrix of t^power.
ScalarMatrix coefficient(const PolyMatrix& m, std::size_t power);
std::size_t max_degree(const PolyMatrix& m);

template <class T>
Matrix<T> mat_pow(const Matrix<T>& m, unsigned e) {
  Matrix<T> r = Matrix<T>::identity(m.rows());
  for (unsigned k = 0; k < e; ++k) r = r * m;
  return r;
}

/// Index of nilpotency (smallest e with m^e = 0), checking powers up to the
/// matrix dimension; nullopt if m is not nilpotent.
template <class T>
std::optional<unsigned> nilpotency_index(const Matrix<T>& m) {
  Matrix<T> power = Matrix<T>::identity(m.rows());
  for (unsigned e = 0; e <= m.rows(); ++e) {
    if (power.is_zero()) return e;
    power = power * m;
  }
  return std::nullopt;
}

/// Finite exponential series of a nilpotent matrix; throws NotNilpotent.
template <class T>
Matrix<T> exp_nilpotent_matrix(const Matrix<T>& m) {
  Matrix<T> result = Matrix<T>::identity(m.rows());
  Matrix<T> term = Matrix<T>::identity(m.rows());
  for (unsigned j = 1; j <= m.rows(); ++j) {
    term = term * m;
    if (term.is_zero()) return result;
    term = term * Scalar::fraction(1, j);
    result += term;
  }
  throw Error(ErrorCode::NotNilpotent, "matrix is not nilpotent");
}

/// Finite logarithm of a unipotent matrix (m - I nilpotent).
template <class T>
Matrix<T> log_unipotent_matrix(const Matrix<T>& m) {
  const Matrix<T> nil = m - Matrix<T>::identity(m.rows());
  Matrix<T> result(m.rows(), m.cols());
  Matrix<T> power = Matrix<T>::identity(m.rows());
  for (unsigned j = 1; j <= m.rows(); ++j) {
    power = power * nil;
    if (power.is_zero()) return result;
    Matrix<T> term = power * Scalar::fraction((j % 2 == 1) ? 1 : -1, j);
    result += term;
  }
  throw Error(ErrorCode::NotNilpotent, "matrix is not unipotent");
}

/// Matrix commutator xy - yx.
template <class T>
Matrix<T> commutator(const Matrix<T>& x, const Matrix<T>& y) {
  return x * y - y * x;
}

}  // namespace parageo
