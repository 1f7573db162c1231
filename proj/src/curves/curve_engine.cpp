#include "parageo/curves/curve_engine.hpp"

#include <functional>

namespace parageo {

namespace {

PolyMatrix mul_trunc(const PolyMatrix& a, const PolyMatrix& b, std::size_t order) {
  return truncated(a * b, order);
}

/// Inverse of a square series matrix with invertible constant term, mod t^{order+1}.
PolyMatrix series_inverse(const PolyMatrix& d, std::size_t order) {
  const ScalarMatrix d0inv = inverse(coefficient(d, 0));
  const PolyMatrix d0inv_p = to_poly(d0inv);
  // d = d0 (I + e) with e = d0^{-1}(d - d0) of positive order
  const PolyMatrix e = d0inv_p * (d - to_poly(coefficient(d, 0)));
  PolyMatrix sum = PolyMatrix::identity(d.rows());
  PolyMatrix power = PolyMatrix::identity(d.rows());
  for (std::size_t k = 1; k <= order; ++k) {
    power = mul_trunc(power, -e, order);
    if (power.is_zero()) break;
    sum += power;
  }
  return mul_trunc(sum, d0inv_p, order);
}

PolyMatrix block(const PolyMatrix& m, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
  PolyMatrix out(r1 - r0, c1 - c0);
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = c0; j < c1; ++j) out(i - r0, j - c0) = m(i, j);
  return out;
}

void set_block(PolyMatrix& m, std::size_t r0, std::size_t c0, const PolyMatrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
}

void require_same(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (&a != &b) throw Error(ErrorCode::AlgebraMismatch, "curves belong to different algebras");
}

}  // namespace

// ---------------------------------------------------------------- CurveSpec

CurveSpec::CurveSpec(GroupElem b, AlgElem x)
    : b_(std::move(b)), normal_form_(normal_form_P(b_)), x_(std::move(x)) {
  require_same(b_.algebra(), x_.algebra());
  if (!x_.in_n()) throw Error(ErrorCode::NotInNilpotentPart, "curve direction must lie in n");
  lifted_ = Ad(b_, x_);
}

CurveSpec CurveSpec::from_exp(const AlgElem& z, const AlgElem& x) {
  if (!z.in_pplus()) throw Error(ErrorCode::NotInParabolic, "exp(z) needs z in p+");
  return CurveSpec(GroupElem::exp(z), x);
}

CurveSpec CurveSpec::at_origin(const AlgElem& x) { return CurveSpec(GroupElem::identity(x.algebra()), x); }

PolyMatrix CurveSpec::curve_matrix() const { return to_poly(b_.matrix()) * exp_nilpotent(x_, Poly::t()); }

std::vector<AlgElem> split_pplus(const AlgElem& z) {
  if (!z.in_pplus()) throw Error(ErrorCode::NotInParabolic, "expected an element of p+");
  std::vector<AlgElem> out;
  for (int j = 1; j <= z.algebra().depth(); ++j) out.push_back(z.grade_component(j));
  return out;
}

// --------------------------------------------------------------- comparison

ComparisonCurve comparison(const CurveSpec& c1, const CurveSpec& c2) { return comparison(c1, c2, Poly::t()); }

ComparisonCurve comparison(const CurveSpec& c1, const CurveSpec& c2, const Poly& phi) {
  require_same(c1.algebra(), c2.algebra());
  if (!phi.coeff(0).is_zero()) throw Error(ErrorCode::BadReparam, "reparametrization must fix 0");
  if (phi.coeff(1).is_zero()) throw Error(ErrorCode::BadReparam, "reparametrization has zero velocity at 0");
  for (const auto& c : phi.coeffs())
    if (!c.is_real()) throw Error(ErrorCode::BadReparam, "reparametrization must be real");
  const AlgElem& w1 = c1.lifted_velocity();
  const AlgElem& w2 = c2.lifted_velocity();
  const PolyMatrix u = exp_nilpotent(w2, -Poly::t()) * exp_nilpotent(w1, phi);
  const PolyMatrix u_inv = exp_nilpotent(w1, -phi) * exp_nilpotent(w2, Poly::t());
  AlgCurve delta = AlgCurve::from_matrix(c1.algebra(), u_inv * derivative(u));
  return ComparisonCurve{&c1.algebra(), w1, w2, phi, u, u_inv, std::move(delta)};
}

PolyMatrix log_derivative(const PolyMatrix& f) { return mat_inverse_unimodular(f) * derivative(f); }

PolyMatrix exp_curve(const PolyMatrix& y) { return exp_nilpotent_matrix(y); }

bool curves_equal(const ComparisonCurve& cc) { return cc.algebra->in_parabolic_pattern(cc.u); }

bool curves_equal(const CurveSpec& c1, const CurveSpec& c2) { return curves_equal(comparison(c1, c2)); }

bool jet_equal(const ComparisonCurve& cc, unsigned ell) {
  for (unsigned i = 0; i < ell; ++i)
    if (!cc.delta_u.derivative_at_zero(i).in_p()) return false;
  return true;
}

bool jet_equal(const CurveSpec& c1, const CurveSpec& c2, unsigned ell) {
  if (ell == 0) throw Error(ErrorCode::BadParams, "jet order must be at least 1");
  return jet_equal(comparison(c1, c2), ell);
}

unsigned common_jet_order(const ComparisonCurve& cc, unsigned max_order) {
  unsigned ell = 0;
  while (ell < max_order && cc.delta_u.derivative_at_zero(ell).in_p()) ++ell;
  return ell;
}

// ------------------------------------------------------- normal coordinates

AlgElem NormalCoordJet::derivative(unsigned i) const {
  if (i >= y_coeffs.size()) throw Error(ErrorCode::BadParams, "jet order exceeds the computed order");
  return y_coeffs[i] * factorial(i);
}

NormalCoordJet normal_coord_jet(const CurveSpec& c, unsigned order) {
  const GradedAlgebra& g = c.algebra();
  if (order == 0) order = 2 * static_cast<unsigned>(g.depth()) + 4;
  const auto& w = g.weights();
  std::vector<std::size_t> starts{0};
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] < w[i - 1]) throw Error(ErrorCode::NotApplicableGrading, "row weights must be non-decreasing");
    if (w[i] != w[i - 1]) starts.push_back(i);
  }
  starts.push_back(w.size());
  const std::size_t nb = starts.size() - 1;

  PolyMatrix rest = truncated(c.curve_matrix(), order);
  PolyMatrix lower = PolyMatrix::identity(g.matrix_dim());
  for (std::size_t j = 0; j < nb; ++j) {
    const std::size_t j0 = starts[j], j1 = starts[j + 1];
    const PolyMatrix pivot_inv = series_inverse(block(rest, j0, j1, j0, j1), order);
    for (std::size_t i = j + 1; i < nb; ++i) {
      const std::size_t i0 = starts[i], i1 = starts[i + 1];
      const PolyMatrix l = mul_trunc(block(rest, i0, i1, j0, j1), pivot_inv, order);
      set_block(lower, i0, j0, l);
      const PolyMatrix update = mul_trunc(l, block(rest, j0, j1, 0, g.matrix_dim()), order);
      set_block(rest, i0, 0, block(rest, i0, i1, 0, g.matrix_dim()) - update);
    }
  }

  const PolyMatrix nil = lower - PolyMatrix::identity(g.matrix_dim());
  PolyMatrix log(g.matrix_dim(), g.matrix_dim());
  PolyMatrix power = PolyMatrix::identity(g.matrix_dim());
  for (unsigned j = 1; j <= g.matrix_dim(); ++j) {
    power = mul_trunc(power, nil, order);
    if (power.is_zero()) break;
    log += power * Scalar::fraction((j % 2 == 1) ? 1 : -1, j);
  }
  const AlgCurve y = AlgCurve::from_matrix(g, log);
  if (!y.in_n()) throw Error(ErrorCode::NotInNilpotentPart, "normal coordinate left n");

  NormalCoordJet jet{order, {}, lower, rest};
  for (unsigned i = 0; i <= order; ++i) jet.y_coeffs.push_back(y.coefficient(i));
  return jet;
}

bool normal_jets_agree(const NormalCoordJet& a, const NormalCoordJet& b, unsigned ell) {
  if (ell > a.order || ell > b.order) throw Error(ErrorCode::BadParams, "jet order exceeds the computed order");
  for (unsigned i = 0; i <= ell; ++i)
    if (a.y_coeffs[i] != b.y_coeffs[i]) return false;
  return true;
}

// -------------------------------------------------------- identity checkers

std::vector<AlgCurve> exp_log_derivative_terms(const AlgCurve& y) {
  std::vector<AlgCurve> terms;
  AlgCurve r = y.derivative();
  const AlgCurve minus_y = -y;
  for (unsigned p = 0; !r.is_zero(); ++p) {
    std::vector<Poly> scaled = r.coords();
    const Scalar c = Scalar(1) / factorial(p + 1);
    for (auto& q : scaled) q = q * c;
    terms.emplace_back(y.algebra_ptr(), std::move(scaled));
    r = bracket(minus_y, r);
  }
  return terms;
}

bool verify_exp_log_derivative(const AlgCurve& y) {
  const PolyMatrix ym = y.matrix();
  const PolyMatrix lhs = exp_curve(-ym) * derivative(exp_curve(ym));
  AlgCurve rhs = AlgCurve::zero(y.algebra());
  for (const auto& term : exp_log_derivative_terms(y)) rhs += term;
  return lhs == rhs.matrix();
}

bool verify_log_derivative_product_rule(const PolyMatrix& f, const PolyMatrix& g) {
  const PolyMatrix g_inv = mat_inverse_unimodular(g);
  return log_derivative(f * g) == log_derivative(g) + g_inv * log_derivative(f) * g;
}

bool verify_delta_derivative_iteration(const ComparisonCurve& cc, unsigned i_max) {
  if (cc.phi != Poly::t()) throw Error(ErrorCode::BadReparam, "the plain iteration needs phi(t) = t");
  AlgCurve d = cc.delta_u, r = cc.delta_u;
  const AlgElem minus_w1 = -cc.w1;
  for (unsigned i = 1; i <= i_max; ++i) {
    d = d.derivative();
    r = bracket(minus_w1, r);
    if (d != r) return false;
  }
  return true;
}

bool verify_conjugated_derivative(const PolyMatrix& u, const AlgCurve& y) {
  const PolyMatrix u_inv = mat_inverse_unimodular(u);
  const PolyMatrix ym = y.matrix();
  const PolyMatrix conj = u_inv * ym * u;
  const PolyMatrix delta = u_inv * derivative(u);
  const PolyMatrix rhs = u_inv * derivative(ym) * u - commutator(delta, conj);
  return derivative(conj) == rhs;
}

std::vector<BellTerm> bell_terms(unsigned i) {
  std::vector<BellTerm> out;
  std::vector<std::pair<unsigned, unsigned>> parts;
  const Scalar i_fact = factorial(i);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned j, unsigned remaining) {
    if (remaining == 0) {
      BellTerm t{0, parts, i_fact};
      for (const auto& [part, a] : parts) {
        t.k += a;
        Scalar denom = factorial(a);
        for (unsigned m = 0; m < a; ++m) denom *= factorial(part);
        t.coefficient /= denom;
      }
      out.push_back(std::move(t));
      return;
    }
    if (j > remaining) return;
    for (unsigned a = remaining / j; a >= 1; --a) {
      parts.emplace_back(j, a);
      rec(j + 1, remaining - a * j);
      parts.pop_back();
    }
    rec(j + 1, remaining);
  };
  rec(1, i);
  return out;
}

bool verify_reparam_derivative_expansion(const ComparisonCurve& cc, unsigned i_max) {
  std::vector<Poly> phi_d{cc.phi};
  for (unsigned j = 1; j <= i_max + 1; ++j) phi_d.push_back(poly_derivative(phi_d.back()));
  std::vector<AlgCurve> ad_pows{cc.delta_u};
  for (unsigned k = 1; k <= i_max; ++k) ad_pows.push_back(bracket(cc.w1, ad_pows.back()));

  AlgCurve d = cc.delta_u;
  for (unsigned i = 1; i <= i_max; ++i) {
    d = d.derivative();
    AlgCurve rhs = AlgCurve::scaled(cc.w1, phi_d[i + 1]);
    for (const auto& term : bell_terms(i)) {
      Poly product(term.coefficient * Scalar(term.k % 2 == 0 ? 1 : -1));
      for (const auto& [j, a] : term.parts)
        for (unsigned m = 0; m < a; ++m) product = product * phi_d[j];
      rhs += ad_pows[term.k] * product;
    }
    if (d != rhs) return false;
  }
  return true;
}

}  // namespace parageo
