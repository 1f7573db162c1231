#pragma once

#include <vector>

#include "parageo/algebra/graded_algebra.hpp"
#include "parageo/curves/alg_curve.hpp"

namespace parageo {

/// The curve t -> b exp(tX) P with b in P and X in n.
class CurveSpec {
 public:
  /// Throws NotInParabolic / NotInNilpotentPart / AlgebraMismatch.
  CurveSpec(GroupElem b, AlgElem x);
  /// b = exp(z) for z in p_+.
  static CurveSpec from_exp(const AlgElem& z, const AlgElem& x);
  static CurveSpec at_origin(const AlgElem& x);

  const GradedAlgebra& algebra() const { return x_.algebra(); }
  const GroupElem& b() const { return b_; }
  const ParabolicNormalForm& normal_form() const { return normal_form_; }
  const AlgElem& x() const { return x_; }

  /// b exp(tX)
  PolyMatrix curve_matrix() const;
  /// Ad_b X, the velocity of the lift exp(t Ad_b X) through the identity.
  const AlgElem& lifted_velocity() const { return lifted_; }
  /// truncated_Ad(b, X)
  AlgElem direction() const { return truncated_Ad(b_, x_); }

 private:
  GroupElem b_;
  ParabolicNormalForm normal_form_;
  AlgElem x_;
  AlgElem lifted_;
};

/// Per-grade components Z_1..Z_k of an element of p_+.
std::vector<AlgElem> split_pplus(const AlgElem& z);

/// Comparison data for two curves, optionally with the first one
/// reparametrized: exp(phi(t) W1) = exp(t W2) u(t), W_i = Ad_{b_i} X_i.
struct ComparisonCurve {
  const GradedAlgebra* algebra;
  AlgElem w1;
  AlgElem w2;
  Poly phi;
  PolyMatrix u;
  PolyMatrix u_inverse;
  AlgCurve delta_u;
};

ComparisonCurve comparison(const CurveSpec& c1, const CurveSpec& c2);
/// phi must be a polynomial with phi(0) = 0 and phi'(0) != 0 (BadReparam).
ComparisonCurve comparison(const CurveSpec& c1, const CurveSpec& c2, const Poly& phi);

/// Left logarithmic derivative f^{-1} f' of a determinant-one polynomial
/// matrix curve (inverse by adjugate).
PolyMatrix log_derivative(const PolyMatrix& f);

/// exp of a nilpotent polynomial matrix curve.
PolyMatrix exp_curve(const PolyMatrix& y);

/// True iff u(t) stays in P, i.e. both curves coincide in G/P.
bool curves_equal(const CurveSpec& c1, const CurveSpec& c2);
bool curves_equal(const ComparisonCurve& cc);
/// Same ell-jet at 0: (delta u)^{(i)}(0) in p for all i <= ell - 1.
bool jet_equal(const CurveSpec& c1, const CurveSpec& c2, unsigned ell);
bool jet_equal(const ComparisonCurve& cc, unsigned ell);
/// Largest ell (capped at max_order) with equal ell-jets.
unsigned common_jet_order(const ComparisonCurve& cc, unsigned max_order);

/// The curve as exp(Y(t)) p(t) with Y in n, computed modulo t^{order+1}.
struct NormalCoordJet {
  unsigned order;
  std::vector<AlgElem> y_coeffs;  // Taylor coefficients, y_coeffs[0] = 0
  PolyMatrix lower;               // exp(Y(t)) truncated
  PolyMatrix p_part;              // truncated series in P

  /// Y^{(i)}(0)
  AlgElem derivative(unsigned i) const;
};

/// Default order 2k + 4 when order == 0.
NormalCoordJet normal_coord_jet(const CurveSpec& c, unsigned order = 0);
/// Oracle: equal ell-jets iff the normal-coordinate coefficients agree up to t^ell.
bool normal_jets_agree(const NormalCoordJet& a, const NormalCoordJet& b, unsigned ell);

/// Terms 1/(p+1)! ad(-Y)^p Y' of the logarithmic derivative of exp(Y(t)),
/// listed until they vanish.
std::vector<AlgCurve> exp_log_derivative_terms(const AlgCurve& y);
/// delta(exp Y(t)) computed by matrix calculus equals the series above.
bool verify_exp_log_derivative(const AlgCurve& y);

/// delta(f g) = delta g + Ad_{g^{-1}} delta f for determinant-one curves.
bool verify_log_derivative_product_rule(const PolyMatrix& f, const PolyMatrix& g);

/// (delta u)^{(i)} = ad(-W1)^i (delta u) for 1 <= i <= i_max.
bool verify_delta_derivative_iteration(const ComparisonCurve& cc, unsigned i_max);

/// d/dt (Ad_{u^{-1}} Y) = Ad_{u^{-1}} Y' - [delta u, Ad_{u^{-1}} Y] as matrices.
bool verify_conjugated_derivative(const PolyMatrix& u, const AlgCurve& y);

/// One term of the reparametrized derivative expansion: for a partition of
/// i with parts parts[m].first repeated parts[m].second times.
struct BellTerm {
  unsigned k;                                           // number of parts
  std::vector<std::pair<unsigned, unsigned>> parts;     // (j, a), j increasing
  Scalar coefficient;                                   // i! / prod (j!)^a a!
};
std::vector<BellTerm> bell_terms(unsigned i);

/// (delta u)^{(i)} = phi^{(i+1)} W1 + sum_k (-1)^k (sum c phi-products) ad_{W1}^k delta u
/// for 1 <= i <= i_max, where cc was built with a reparametrization phi.
bool verify_reparam_derivative_expansion(const ComparisonCurve& cc, unsigned i_max);

}  // namespace parageo
