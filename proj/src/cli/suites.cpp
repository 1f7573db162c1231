#include "parageo/cli/suites.hpp"

#include "parageo/curves/curve_engine.hpp"
#include "parageo/geodesics/geodesic_lab.hpp"
#include "parageo/geodesics/model_formulas.hpp"

namespace parageo {

bool SuiteReport::ok() const {
  for (const auto& t : identities)
    if (t.violations > 0) return false;
  return true;
}

namespace {

std::vector<IdentityTally> named(std::initializer_list<const char*> names) {
  std::vector<IdentityTally> out;
  for (const char* n : names) out.push_back(IdentityTally{n, 0, 0, {}});
  return out;
}

void tally(IdentityTally& t, bool holds, const std::string& sample) {
  ++t.samples;
  if (holds) return;
  if (t.violations++ == 0) t.first_violation = sample;
}

std::vector<AlgElem> n_samples(const GradedAlgebra& g) {
  std::vector<AlgElem> xs;
  AlgElem sum = g.zero();
  for (std::size_t a = 0; a < g.n_dim(); ++a) {
    xs.push_back(g.basis_elem(a));
    sum += g.basis_elem(a);
  }
  xs.push_back(sum);
  for (int j = 1; j <= g.depth(); ++j) {
    AlgElem layer = g.zero();
    for (std::size_t a = g.grade_begin(-j); a < g.grade_end(-j); ++a) layer += g.basis_elem(a) * Scalar(j % 2 ? 1 : -2);
    xs.push_back(layer);
  }
  return xs;
}

/// Every stride-th grid point, the stride coprime-ish to the grid width so
/// that samples spread over all coordinates.
std::vector<AlgElem> pplus_samples(const GradedAlgebra& g, int grid, std::size_t want) {
  const auto pts = integer_grid(g.pplus_dim(), grid);
  std::vector<AlgElem> out;
  const std::size_t stride = std::max<std::size_t>(1, pts.size() / want) | 1;
  for (std::size_t i = 0; i < pts.size() && out.size() < want; i += stride) out.push_back(g.pplus_element(pts[i]));
  return out;
}

AlgCurve quadratic_curve(const AlgElem& a, const AlgElem& b) {
  return AlgCurve::scaled(a, Poly::t()) + AlgCurve::scaled(b, Poly::monomial(Scalar(1), 2));
}

}  // namespace

SuiteReport lemma_suite(const AlgebraPtr& g, int grid, unsigned orders, std::size_t samples) {
  SuiteReport r{"lemmas", named({"exp_log_derivative", "log_derivative_product_rule", "delta_derivative_iteration",
                                 "conjugated_derivative", "reparam_derivative_expansion"})};
  const auto xs = n_samples(*g);
  const auto zs = pplus_samples(*g, grid, samples);
  const std::vector<Poly> phis{Poly::t() + Poly::monomial(Scalar(1), 2),
                               Poly::t() * Scalar(2) - Poly::monomial(Scalar::fraction(1, 3), 3)};
  for (std::size_t s = 0; s < samples; ++s) {
    const AlgElem& x1 = xs[s % xs.size()];
    const AlgElem& x2 = xs[(3 * s + 1) % xs.size()];
    const AlgElem& z1 = zs[s % zs.size()];
    const AlgElem& z2 = zs[(7 * s + 5) % zs.size()];
    const std::string tag = "X=" + x1.str() + "; Z=" + z1.str() + "; X'=" + x2.str() + "; Z'=" + z2.str();
    const CurveSpec c1 = CurveSpec::from_exp(z1, x1), c2 = CurveSpec::from_exp(z2, x2);
    const AlgCurve y = quadratic_curve(x1, x2);
    tally(r.identities[0], verify_exp_log_derivative(y), tag);
    tally(r.identities[1], verify_log_derivative_product_rule(c1.curve_matrix(), exp_curve(y.matrix())), tag);
    const ComparisonCurve cc = comparison(c1, c2);
    tally(r.identities[2], verify_delta_derivative_iteration(cc, orders), tag);
    const AlgCurve w = AlgCurve::scaled(z2 + x1, Poly::t()) + AlgCurve::constant(z1);
    tally(r.identities[3], verify_conjugated_derivative(cc.u, w), tag);
    for (const auto& phi : phis)
      tally(r.identities[4], verify_reparam_derivative_expansion(comparison(c1, c2, phi), 4), tag + "; phi=" + phi.str());
  }
  return r;
}

SuiteReport bracket_suite(const AlgebraPtr& g) {
  SuiteReport r{"brackets", named({"grading", "jacobi"})};
  const std::size_t d = g->dim();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const AlgElem ab = bracket(g->basis_elem(a), g->basis_elem(b));
      const int grade = g->grade_of(a) + g->grade_of(b);
      tally(r.identities[0], ab.is_zero() || ab.in_grade(grade), g->label(a) + "," + g->label(b));
      for (std::size_t c = b + 1; c < d; ++c) {
        const AlgElem x = g->basis_elem(a), y = g->basis_elem(b), z = g->basis_elem(c);
        const AlgElem jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
        tally(r.identities[1], jac.is_zero(), g->label(a) + "," + g->label(b) + "," + g->label(c));
      }
    }
  const std::string family = CatalogId::parse(g->name()).family;
  if (family == "conf" || family == "grass" || family == "proj") {
    r.identities.push_back(named({family == "conf" ? "conformal_double_bracket" : "grassmann_double_bracket"}).front());
    for (std::size_t a = g->grade_begin(-1); a < g->grade_end(-1); ++a)
      for (std::size_t b = g->grade_begin(1); b < g->grade_end(1); ++b) {
        const AlgElem x = g->basis_elem(a) + g->basis_elem(g->grade_begin(-1)) * Scalar(2), z = g->basis_elem(b);
        for (const AlgElem& xx : {g->basis_elem(a), x}) {
          const AlgElem expected = family == "conf" ? conformal_double_bracket(xx, z) : grassmann_double_bracket(xx, z);
          tally(r.identities.back(), bracket(xx, bracket(xx, z)) == expected, xx.str() + "; " + z.str());
        }
      }
  }
  return r;
}

SuiteReport safety_suite(const AlgebraPtr& g, int grid, unsigned workers) {
  SuiteReport r{"safety", named({"top_jet_implies_equal"})};
  const TypeSpec ts = TypeSpec::full_n(g);
  const unsigned top = static_cast<unsigned>(g->depth()) + 2;
  auto xs = n_samples(*g);
  xs.resize(std::min<std::size_t>(xs.size(), g->n_dim() + 1));
  for (const auto& x : xs) {
    const JetOrderReport rep = min_jet_order_search(ts, x, grid, top, workers);
    const auto& v = rep.verdicts.back();
    IdentityTally& t = r.identities[0];
    t.samples += rep.admissible;
    if (v.counterexample && t.violations++ == 0)
      t.first_violation = "X=" + x.str() + "; Z=" + g->pplus_element(v.counterexample->z).str();
  }
  return r;
}

}  // namespace parageo
