#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parageo/curves/curve_engine.hpp"
#include "parageo/exact/ratfun.hpp"

namespace parageo {

/// phi(t) = (At + B) / (Ct + D), kept as a projective class: the matrix is
/// scaled so that D = 1 (or C = 1 when D = 0).
class MobiusMap {
 public:
  /// Throws BadReparam when AD - BC = 0.
  MobiusMap(Scalar a, Scalar b, Scalar c, Scalar d);
  static MobiusMap identity() { return MobiusMap(Scalar(1), Scalar(0), Scalar(0), Scalar(1)); }
  /// The map with phi(0) = phi0, phi'(0) = a, phi''(0) = b. Throws ZeroVelocity.
  static MobiusMap from_seeds(const Scalar& phi0, const Scalar& a, const Scalar& b);

  const Scalar& A() const { return a_; }
  const Scalar& B() const { return b_; }
  const Scalar& C() const { return c_; }
  const Scalar& D() const { return d_; }
  Scalar determinant() const { return a_ * d_ - b_ * c_; }
  bool is_affine() const { return c_.is_zero(); }

  RatFun as_ratfun() const;
  /// phi(0), phi'(0), phi''(0); throw PoleAtOrigin when D = 0.
  Scalar value_at_zero() const;
  Scalar velocity() const;
  Scalar acceleration() const;

  /// (this o inner)(t) = this(inner(t)), the matrix product.
  MobiusMap compose(const MobiusMap& inner) const;
  /// this(f(t)) as a rational function.
  RatFun apply(const RatFun& f) const;

  friend bool operator==(const MobiusMap& x, const MobiusMap& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  std::string str() const;

 private:
  Scalar a_, b_, c_, d_;
};

struct ReparamVerdict {
  bool exists = false;
  std::optional<MobiusMap> map;
  std::string failure_reason;  // empty when exists
};

/// Whether c^{e,X1} and c^{exp Z, X2} are one unparametrized curve, for X1, X2
/// in g_{-1} of a |1|-graded algebra or in g_{-k} with Z in p_+. Throws
/// NotApplicableGrading otherwise.
ReparamVerdict reparam_solve(const AlgElem& x1, const AlgElem& z, const AlgElem& x2);
/// Same with b = exp(Z_1) ... exp(Z_k) in exp(p_+) given as a group element.
ReparamVerdict reparam_solve(const AlgElem& x1, const GroupElem& b, const AlgElem& x2);

/// exp(phi(t) W1) = exp(t W2) u(t) with u in P, checked identically over
/// rational functions. Needs phi(0) = 0; throws PoleAtOrigin / BadReparam.
bool verify_reparam(const CurveSpec& c1, const CurveSpec& c2, const MobiusMap& m);
bool verify_reparam(const CurveSpec& c1, const CurveSpec& c2, const RatFun& phi);

/// phi''' phi' = (3/2) phi''^2 as rational functions.
bool schwarzian_check(const MobiusMap& m);
bool schwarzian_check(const RatFun& phi);

/// Z in g_{grade} with [X,[X,Z]] = X, or nothing (also for X = 0).
std::optional<AlgElem> projective_structure_exists(const AlgElem& x, int grade_for_z);

/// Taylor coefficients of t, t^2, ..., t^N for phi(t) = at (1 - (b/2a) t)^{-1}.
std::vector<Scalar> taylor_seed_expand(const Scalar& a, const Scalar& b, unsigned n);

/// If c (from o) traces c^{e,X} o phi up to t^order, the Taylor polynomial of phi.
std::optional<Poly> origin_reparam_series(const AlgElem& x, const CurveSpec& c, unsigned order);

}  // namespace parageo
