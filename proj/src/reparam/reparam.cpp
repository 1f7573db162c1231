#include "parageo/reparam/reparam.hpp"

namespace parageo {

namespace {

/// s with y = s x, when it exists (x nonzero).
std::optional<Scalar> ratio(const AlgElem& y, const AlgElem& x) {
  for (std::size_t i = 0; i < x.coords().size(); ++i) {
    if (x.coord(i).is_zero()) continue;
    const Scalar s = y.coord(i) / x.coord(i);
    if (y == x * s) return s;
    return std::nullopt;
  }
  return std::nullopt;
}

RatMatrix exp_ratfun(const ScalarMatrix& w, const RatFun& phi) {
  const std::size_t n = w.rows();
  RatMatrix out = RatMatrix::identity(n);
  ScalarMatrix power = ScalarMatrix::identity(n);
  RatFun phi_pow(1);
  for (unsigned j = 1; j <= n; ++j) {
    power = power * w;
    if (power.is_zero()) break;
    phi_pow = phi_pow * phi / Scalar(static_cast<long>(j));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (!power(r, c).is_zero()) out(r, c) += phi_pow * power(r, c);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- MobiusMap

MobiusMap::MobiusMap(Scalar a, Scalar b, Scalar c, Scalar d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (determinant().is_zero()) throw Error(ErrorCode::BadReparam, "degenerate fractional linear map");
  const Scalar s = d_.is_zero() ? c_ : d_;
  if (!s.is_one()) {
    a_ /= s;
    b_ /= s;
    c_ /= s;
    d_ /= s;
  }
}

MobiusMap MobiusMap::from_seeds(const Scalar& phi0, const Scalar& a, const Scalar& b) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroVelocity, "phi'(0) must be nonzero");
  const Scalar c = -b / (Scalar(2) * a);
  return MobiusMap(a + c * phi0, phi0, c, Scalar(1));
}

RatFun MobiusMap::as_ratfun() const { return RatFun(Poly(std::vector<Scalar>{b_, a_}), Poly(std::vector<Scalar>{d_, c_})); }

Scalar MobiusMap::value_at_zero() const {
  if (d_.is_zero()) throw Error(ErrorCode::PoleAtOrigin, "phi has a pole at 0");
  return b_ / d_;
}

Scalar MobiusMap::velocity() const {
  if (d_.is_zero()) throw Error(ErrorCode::PoleAtOrigin, "phi has a pole at 0");
  return determinant() / (d_ * d_);
}

Scalar MobiusMap::acceleration() const {
  if (d_.is_zero()) throw Error(ErrorCode::PoleAtOrigin, "phi has a pole at 0");
  return Scalar(-2) * c_ * determinant() / (d_ * d_ * d_);
}

MobiusMap MobiusMap::compose(const MobiusMap& in) const {
  return MobiusMap(a_ * in.a_ + b_ * in.c_, a_ * in.b_ + b_ * in.d_, c_ * in.a_ + d_ * in.c_, c_ * in.b_ + d_ * in.d_);
}

RatFun MobiusMap::apply(const RatFun& f) const { return (f * a_ + RatFun(b_)) / (f * c_ + RatFun(d_)); }

std::string MobiusMap::str() const { return "(" + a_.str() + "*t + " + b_.str() + ")/(" + c_.str() + "*t + " + d_.str() + ")"; }

// ------------------------------------------------------------------- solver

ReparamVerdict reparam_solve(const AlgElem& x1, const AlgElem& z, const AlgElem& x2) {
  if (!z.in_pplus()) throw Error(ErrorCode::NotApplicableGrading, "Z must lie in p+");
  if (z.algebra().depth() == 1 && !z.in_grade(1)) throw Error(ErrorCode::NotApplicableGrading, "Z must lie in g_1");
  return reparam_solve(x1, GroupElem::exp(z), x2);
}

ReparamVerdict reparam_solve(const AlgElem& x1, const GroupElem& b, const AlgElem& x2) {
  require_same_algebra(x1, x2);
  if (&b.algebra() != x1.algebra_ptr()) throw Error(ErrorCode::AlgebraMismatch, "b from another algebra");
  const GradedAlgebra& g = x1.algebra();
  const int k = g.depth();
  if (!x1.in_grade(-k) || !x2.in_grade(-k))
    throw Error(ErrorCode::NotApplicableGrading, "directions must lie in g_-" + std::to_string(k));
  const ParabolicNormalForm nf = normal_form_P(b);
  if (!nf.b0.matrix().is_identity()) throw Error(ErrorCode::NotApplicableGrading, "b must lie in exp(p+)");

  ReparamVerdict v;
  if (x1.is_zero() || x2.is_zero()) {
    v.failure_reason = "zero direction";
    return v;
  }
  for (int l = 1; l < k; ++l)
    if (!bracket(nf.z[l - 1], x2).is_zero()) {
      v.failure_reason = "[Z_" + std::to_string(l) + ", X2] != 0";
      return v;
    }
  const auto a = ratio(x2, x1);
  if (!a) {
    v.failure_reason = "X2 is not a multiple of X1";
    return v;
  }
  const auto second = ratio(bracket(x2, bracket(x2, nf.z[k - 1])), x1);
  if (!second) {
    v.failure_reason = "[X2,[X2,Z]] is not a multiple of X1";
    return v;
  }
  v.exists = true;
  v.map = MobiusMap::from_seeds(Scalar(0), *a, *second);
  return v;
}

bool verify_reparam(const CurveSpec& c1, const CurveSpec& c2, const MobiusMap& m) {
  if (m.D().is_zero()) throw Error(ErrorCode::PoleAtOrigin, "phi has a pole at 0");
  if (!m.B().is_zero()) throw Error(ErrorCode::BadReparam, "phi(0) must be 0");
  return verify_reparam(c1, c2, m.as_ratfun());
}

bool verify_reparam(const CurveSpec& c1, const CurveSpec& c2, const RatFun& phi) {
  if (&c1.algebra() != &c2.algebra()) throw Error(ErrorCode::AlgebraMismatch, "curves in different algebras");
  if (phi.den().coeff(0).is_zero()) throw Error(ErrorCode::PoleAtOrigin, "phi has a pole at 0");
  if (!phi.num().coeff(0).is_zero()) throw Error(ErrorCode::BadReparam, "phi(0) must be 0");
  if (ratfun_derivative(phi).num().coeff(0).is_zero()) throw Error(ErrorCode::BadReparam, "phi'(0) must be nonzero");
  const GradedAlgebra& g = c1.algebra();
  const RatMatrix u = to_rat(exp_nilpotent(c2.lifted_velocity(), -Poly::t())) *
                      exp_ratfun(c1.lifted_velocity().matrix(), phi);
  for (std::size_t r = 0; r < u.rows(); ++r)
    for (std::size_t c = 0; c < u.cols(); ++c)
      if (g.entry_grade(r, c) < 0 && !u(r, c).is_zero()) return false;
  return true;
}

bool schwarzian_check(const MobiusMap& m) { return schwarzian_check(m.as_ratfun()); }

bool schwarzian_check(const RatFun& phi) {
  const RatFun d1 = ratfun_derivative(phi);
  if (d1.is_zero()) throw Error(ErrorCode::ZeroVelocity, "phi' vanishes identically");
  const RatFun d2 = ratfun_derivative(d1);
  const RatFun d3 = ratfun_derivative(d2);
  return d3 * d1 == d2 * d2 * Scalar::fraction(3, 2);
}

std::optional<AlgElem> projective_structure_exists(const AlgElem& x, int grade_for_z) {
  const GradedAlgebra& g = x.algebra();
  if (grade_for_z < 1 || grade_for_z > g.depth() || !x.in_grade(-grade_for_z))
    throw Error(ErrorCode::NotApplicableGrading, "need X in g_-j and Z in g_j");
  if (x.is_zero()) return std::nullopt;
  ScalarMatrix m(g.dim(), g.grade_dim(grade_for_z));
  for (std::size_t a = 0; a < g.grade_dim(grade_for_z); ++a) {
    const AlgElem image = bracket(x, bracket(x, g.basis_elem(g.grade_begin(grade_for_z) + a)));
    for (std::size_t i = 0; i < g.dim(); ++i) m(i, a) = image.coord(i);
  }
  const auto sol = solve(m, x.coords());
  if (!sol) return std::nullopt;
  return g.grade_element(grade_for_z, *sol);
}

std::vector<Scalar> taylor_seed_expand(const Scalar& a, const Scalar& b, unsigned n) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroVelocity, "phi'(0) must be nonzero");
  const Scalar q = b / (Scalar(2) * a);
  std::vector<Scalar> out;
  Scalar c = a;
  for (unsigned i = 0; i < n; ++i) {
    out.push_back(c);
    c *= q;
  }
  return out;
}

std::optional<Poly> origin_reparam_series(const AlgElem& x, const CurveSpec& c, unsigned order) {
  if (x.is_zero() || !x.in_n()) throw Error(ErrorCode::NotInNilpotentPart, "need a nonzero direction in n");
  const NormalCoordJet jet = normal_coord_jet(c, order);
  std::vector<Scalar> coeffs{Scalar(0)};
  for (unsigned i = 1; i <= order; ++i) {
    const AlgElem& y = jet.y_coeffs[i];
    if (y.is_zero()) {
      coeffs.emplace_back();
      continue;
    }
    const auto s = ratio(y, x);
    if (!s) return std::nullopt;
    coeffs.push_back(*s);
  }
  return Poly(coeffs);
}

}  // namespace parageo
