#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "parageo/exact/linalg.hpp"
#include "parageo/exact/matrix.hpp"

namespace parageo {

enum class FieldTag { Rational, Gaussian };

class AlgElem;

/// Catalog identifier such as proj(2), grass(1,2), conf(1,1), lagr3, su21, xxdot.
struct CatalogId {
  std::string family;
  std::vector<int> params;

  static CatalogId parse(const std::string& text);
  std::string str() const;
};

/// A |k|-graded real matrix Lie algebra g = g_{-k} + ... + g_k with the
/// parabolic p = g_0 + ... + g_k. The basis is ordered by grade (ascending)
/// and every basis matrix is supported on the matrix entries (r, c) with
/// weight[c] - weight[r] equal to its grade. Immutable after construction.
class GradedAlgebra {
 public:
  struct BasisEntry {
    std::string label;
    int grade;
    ScalarMatrix matrix;
  };

  GradedAlgebra(std::string name, FieldTag field, std::vector<int> weights, bool unimodular,
                std::vector<BasisEntry> basis, std::vector<ScalarMatrix> g0_samples);

  const std::string& name() const { return name_; }
  FieldTag field() const { return field_; }
  std::size_t matrix_dim() const { return weights_.size(); }
  std::size_t dim() const { return basis_.size(); }
  int depth() const { return depth_; }
  bool unimodular() const { return unimodular_; }
  const std::vector<int>& weights() const { return weights_; }

  int grade_of(std::size_t index) const { return basis_[index].grade; }
  const std::string& label(std::size_t index) const { return basis_[index].label; }
  const ScalarMatrix& basis_matrix(std::size_t index) const { return basis_[index].matrix; }
  /// Basis index carrying the label; throws NotInAlgebra.
  std::size_t index_of(const std::string& label) const;
  /// Basis indices of g_i form [grade_begin(i), grade_end(i)).
  std::size_t grade_begin(int grade) const;
  std::size_t grade_end(int grade) const;
  std::size_t grade_dim(int grade) const { return grade_end(grade) - grade_begin(grade); }
  std::size_t n_dim() const { return grade_begin(0); }
  std::size_t pplus_dim() const { return dim() - grade_end(0); }

  /// Grade carried by matrix entry (r, c).
  int entry_grade(std::size_t r, std::size_t c) const { return weights_[c] - weights_[r]; }

  AlgElem zero() const;
  AlgElem basis_elem(std::size_t index) const;
  /// Element from real coordinates over the full basis.
  AlgElem element(Vector coords) const;
  /// Element of grade `grade` from coordinates over that grade's basis.
  AlgElem grade_element(int grade, const Vector& coords) const;
  /// Element of n from coordinates over g_{-k} + ... + g_{-1}.
  AlgElem n_element(const Vector& coords) const;
  /// Element of p_+ from coordinates over g_1 + ... + g_k.
  AlgElem pplus_element(const Vector& coords) const;

  ScalarMatrix to_matrix(const Vector& coords) const;
  /// Coordinates of a matrix lying in g; throws NotInAlgebra otherwise.
  AlgElem from_matrix(const ScalarMatrix& m) const;
  /// Coordinates read off the pivot entries, without the membership check.
  template <class T>
  std::vector<T> extract(const Matrix<T>& m) const {
    std::vector<T> out(dim());
    for (std::size_t a = 0; a < dim(); ++a) {
      for (std::size_t j = 0; j < dim(); ++j) {
        const Scalar& w = pivot_inverse_(a, j);
        if (w.is_zero()) continue;
        const T& entry = m(pivots_[j].first, pivots_[j].second);
        if (entry.is_zero()) continue;
        out[a] += entry * w;
      }
    }
    return out;
  }
  template <class T>
  Matrix<T> assemble(const std::vector<T>& coords) const {
    Matrix<T> m(matrix_dim(), matrix_dim());
    for (std::size_t a = 0; a < dim(); ++a) {
      if (coords[a].is_zero()) continue;
      for (const auto& [r, c, s] : sparse_basis_[a]) m(r, c) += coords[a] * s;
    }
    return m;
  }

  /// Structure constants: [e_a, e_b] = sum over (c, coef).
  const std::vector<std::pair<std::size_t, Scalar>>& structure(std::size_t a, std::size_t b) const {
    return table_[a * dim() + b];
  }

  /// Block-diagonal sample elements of G_0 (validated at construction).
  const std::vector<ScalarMatrix>& g0_samples() const { return g0_samples_; }

  /// True iff the invertible matrix lies in the block-upper-triangular P pattern.
  bool in_parabolic_pattern(const ScalarMatrix& m) const;
  bool in_parabolic_pattern(const PolyMatrix& m) const;
  bool in_g0_pattern(const ScalarMatrix& m) const;
  /// Part of a matrix supported on entries of the given grade.
  template <class T>
  Matrix<T> entries_of_grade(const Matrix<T>& m, int grade) const {
    Matrix<T> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (entry_grade(i, j) == grade) r(i, j) = m(i, j);
    return r;
  }

  /// Exhaustive structural checks: grading, Jacobi, nilpotency, real
  /// structure constants. Returns a list of violations (empty when valid).
  std::vector<std::string> validate() const;

 private:
  std::string name_;
  FieldTag field_;
  std::vector<int> weights_;
  bool unimodular_;
  int depth_ = 0;
  std::vector<BasisEntry> basis_;
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Scalar>>> sparse_basis_;
  std::vector<std::pair<std::size_t, std::size_t>> pivots_;
  ScalarMatrix pivot_inverse_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> table_;
  std::vector<ScalarMatrix> g0_samples_;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

/// Catalog lookup; algebras are built once and shared. Throws
/// UnknownCatalogName or BadParams.
AlgebraPtr make_algebra(const CatalogId& id);
AlgebraPtr make_algebra(const std::string& name);

/// Element of g as real coordinates over the grade-ordered basis.
class AlgElem {
 public:
  AlgElem() = default;
  AlgElem(const GradedAlgebra* algebra, Vector coords);

  const GradedAlgebra& algebra() const { return *algebra_; }
  const GradedAlgebra* algebra_ptr() const { return algebra_; }
  const Vector& coords() const { return coords_; }
  const Scalar& coord(std::size_t i) const { return coords_[i]; }
  /// Coordinates restricted to the basis of g_i.
  Vector grade_coords(int grade) const;
  Vector n_coords() const;
  Vector pplus_coords() const;

  bool is_zero() const;
  AlgElem grade_component(int grade) const;
  AlgElem n_part() const;
  AlgElem p_part() const;
  bool in_grade(int grade) const;
  bool in_p() const;
  bool in_n() const;
  bool in_pplus() const;

  ScalarMatrix matrix() const { return algebra_->to_matrix(coords_); }

  AlgElem& operator+=(const AlgElem& o);
  AlgElem& operator-=(const AlgElem& o);
  AlgElem& operator*=(const Scalar& s);
  friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
  friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
  friend AlgElem operator*(AlgElem a, const Scalar& s) { return a *= s; }
  friend AlgElem operator*(const Scalar& s, AlgElem a) { return a *= s; }
  AlgElem operator-() const;
  friend bool operator==(const AlgElem& a, const AlgElem& b);
  friend bool operator!=(const AlgElem& a, const AlgElem& b) { return !(a == b); }

  std::string str() const;

 private:
  const GradedAlgebra* algebra_ = nullptr;
  Vector coords_;
};

std::ostream& operator<<(std::ostream& os, const AlgElem& x);

void require_same_algebra(const AlgElem& x, const AlgElem& y);

AlgElem bracket(const AlgElem& x, const AlgElem& y);
/// Matrix of ad_x on coordinates (column b holds [x, e_b]).
ScalarMatrix ad_matrix(const AlgElem& x);
/// ad_x^power (y).
AlgElem ad_pow(const AlgElem& x, const AlgElem& y, unsigned power);

/// Finite exponential series of scale(t) * x, which is a polynomial matrix
/// because x is nilpotent. Throws NotNilpotent.
PolyMatrix exp_nilpotent(const AlgElem& x, const Poly& scale);

/// Invertible constant matrix normalizing g (and of determinant 1 for the
/// sl-based catalog entries), stored with its inverse.
class GroupElem {
 public:
  static GroupElem identity(const GradedAlgebra& algebra);
  /// Validated construction; throws NotInGroup.
  static GroupElem from_matrix(const GradedAlgebra& algebra, ScalarMatrix m);
  /// exp(x) for nilpotent x.
  static GroupElem exp(const AlgElem& x);

  const GradedAlgebra& algebra() const { return *algebra_; }
  const ScalarMatrix& matrix() const { return matrix_; }
  const ScalarMatrix& inverse_matrix() const { return inverse_; }
  GroupElem inverse() const;
  bool in_parabolic() const { return algebra_->in_parabolic_pattern(matrix_); }
  bool in_g0() const { return algebra_->in_g0_pattern(matrix_); }

  friend GroupElem operator*(const GroupElem& a, const GroupElem& b);
  friend bool operator==(const GroupElem& a, const GroupElem& b) { return a.matrix_ == b.matrix_; }

 private:
  GroupElem(const GradedAlgebra* algebra, ScalarMatrix m, ScalarMatrix inv)
      : algebra_(algebra), matrix_(std::move(m)), inverse_(std::move(inv)) {}
  const GradedAlgebra* algebra_;
  ScalarMatrix matrix_;
  ScalarMatrix inverse_;
};

/// Conjugation g x g^{-1}.
AlgElem Ad(const GroupElem& g, const AlgElem& x);
/// Ad(g, y) projected to n along p, for g in P and y in n.
AlgElem truncated_Ad(const GroupElem& g, const AlgElem& y);

/// b = b0 exp(Z_1) ... exp(Z_k) with b0 in G_0 and Z_j in g_j.
struct ParabolicNormalForm {
  GroupElem b0;
  std::vector<AlgElem> z;  // z[j-1] lies in g_j

  GroupElem reconstruct() const;
};

ParabolicNormalForm normal_form_P(const GroupElem& b);

/// exp(Z_1) ... exp(Z_k) for per-grade components.
GroupElem exp_product(const GradedAlgebra& algebra, const std::vector<AlgElem>& z);

}  // namespace parageo
