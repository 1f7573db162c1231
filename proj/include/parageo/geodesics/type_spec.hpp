#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parageo/algebra/graded_algebra.hpp"

namespace parageo {

/// Label of the G_0-stratum of x in n. Conformal algebras: zero, null,
/// positive, negative. Grassmannians: zero, "rank r" (proj: zero, generic).
/// lagr3 and xxdot use the zero patterns of their grade blocks, su21 the
/// grade pattern (zero, contact, transverse).
std::string g0_orbit_classify(const AlgElem& x);

/// All stratum labels defined for the algebra, in a fixed order.
std::vector<std::string> stratum_labels(const GradedAlgebra& g);
/// The grade containing a stratum when it lies inside a single g_{-j}.
std::optional<int> stratum_grade(const GradedAlgebra& g, const std::string& label);

/// ||X||^2 = X^t J X for X in g_{-1} of a conformal algebra.
Scalar conformal_norm(const AlgElem& x);
/// Rank of the g_{-1} block of a Grassmannian element.
std::size_t grassmann_rank(const AlgElem& x);

/// A G_0-invariant subset A of n.
class TypeSpec {
 public:
  enum class Kind { FullN, Grade, NullCone, Rank, Strata, Span };

  static TypeSpec full_n(AlgebraPtr g);
  /// g_{-j}, j >= 1.
  static TypeSpec grade(AlgebraPtr g, int j);
  static TypeSpec null_cone(AlgebraPtr g);
  static TypeSpec rank(AlgebraPtr g, int r);
  static TypeSpec strata(AlgebraPtr g, std::vector<std::string> labels);
  /// Linear span of generators in n; G_0-stability is checked on the samples.
  static TypeSpec span(AlgebraPtr g, std::vector<AlgElem> generators);

  /// full_n | grade(-j) | null_cone | rank(r) | strata(a,b,..) | span(L1,L2,..)
  static TypeSpec parse(AlgebraPtr g, const std::string& text);
  std::string str() const;

  const GradedAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  Kind kind() const { return kind_; }
  bool g0_stable() const { return g0_stable_; }

  bool contains(const AlgElem& x) const;
  /// Grade -j when every member lies in g_{-j}.
  std::optional<int> pure_grade() const;
  /// Basis of the subspace when the set is a linear subspace.
  std::optional<std::vector<AlgElem>> linear_basis() const;
  /// Nonzero members with integer coordinates in [-range, range] over n,
  /// lexicographic.
  std::vector<AlgElem> members(int range) const;
  /// Pairs (sample, member) where Ad(g_0) leaves the set.
  std::size_t g0_invariance_violations(const std::vector<AlgElem>& members) const;

 private:
  TypeSpec(AlgebraPtr g, Kind kind) : algebra_(std::move(g)), kind_(kind) {}

  AlgebraPtr algebra_;
  Kind kind_;
  int param_ = 0;
  std::vector<std::string> labels_;
  std::vector<AlgElem> generators_;
  bool g0_stable_ = true;
};

/// Proved jet order for curves of this type: 2 when |1|-graded, the least r
/// with r j >= k + 1 when the type lies in g_{-j}, else k + 2.
unsigned theorem_jet_bound(const TypeSpec& ts);

/// Integer points of [-range, range]^dim, first coordinate slowest.
std::vector<Vector> integer_grid(std::size_t dim, int range);

}  // namespace parageo
