#include "parageo/geodesics/geodesic_lab.hpp"

#include <algorithm>

#include "parageo/util/parallel.hpp"

namespace parageo {

namespace {

void require_member(const TypeSpec& ts, const AlgElem& x) {
  if (x.algebra_ptr() != &ts.algebra()) throw Error(ErrorCode::AlgebraMismatch, "direction from another algebra");
  if (x.is_zero() || !ts.contains(x)) throw Error(ErrorCode::NotAMember, x.str() + " is not a member of " + ts.str());
}

void require_one_graded(const GradedAlgebra& g) {
  if (g.depth() != 1) throw Error(ErrorCode::NotOneGraded, g.name() + " is not |1|-graded");
}

bool in_span(const std::vector<Vector>& basis, const Vector& v) {
  if (basis.empty()) return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
  ScalarMatrix m(v.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < v.size(); ++i) m(i, j) = basis[j][i];
  return solve(m, v).has_value();
}

/// Row basis of the span (reduced echelon rows).
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  ScalarMatrix m(vectors.size(), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = vectors[i][j];
  const RowEchelon e = rref(m);
  std::vector<Vector> out;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    Vector row(dim);
    for (std::size_t j = 0; j < dim; ++j) row[j] = e.reduced(r, j);
    out.push_back(std::move(row));
  }
  return out;
}

/// d/ds proj_n Ad(exp(Z + sE)) X at s = 0.
AlgElem orbit_derivative(const AlgElem& z, const AlgElem& e, const AlgElem& x) {
  const GradedAlgebra& g = z.algebra();
  const PolyMatrix m = to_poly(z.matrix()) + to_poly(e.matrix()) * Poly::t();
  const PolyMatrix ad = exp_nilpotent_matrix(m) * to_poly(x.matrix()) * exp_nilpotent_matrix(-m);
  return g.from_matrix(coefficient(ad, 1)).n_part();
}

std::optional<std::vector<std::string>> known_orbit_description(const TypeSpec& ts) {
  const std::string family = CatalogId::parse(ts.algebra().name()).family;
  if (ts.kind() != TypeSpec::Kind::Grade) return std::nullopt;
  const int j = *ts.pure_grade();
  if (family == "xxdot" && j == -2) return std::vector<std::string>{"chain", "chain_aX2", "chain_x1", "cylinder"};
  if (family == "lagr3" && j == -2)
    return std::vector<std::string>{"chain", "chain_equiv1", "chain_equiv2", "generic"};
  return std::nullopt;
}

}  // namespace

AlgElem solve_direction(const GroupElem& b, const AlgElem& x) {
  if (!x.in_n()) throw Error(ErrorCode::NotInNilpotentPart, "direction must lie in n");
  const GradedAlgebra& g = x.algebra();
  AlgElem y = x;
  for (int pass = 0; pass <= g.depth(); ++pass) {
    const AlgElem r = x - truncated_Ad(b, y);
    if (r.is_zero()) return y;
    y += r;
  }
  // not unipotent on n: solve the linear system instead
  ScalarMatrix t(g.n_dim(), g.n_dim());
  for (std::size_t a = 0; a < g.n_dim(); ++a) {
    const Vector col = truncated_Ad(b, g.basis_elem(a)).n_coords();
    for (std::size_t i = 0; i < g.n_dim(); ++i) t(i, a) = col[i];
  }
  const auto sol = solve(t, x.n_coords());
  if (!sol) throw Error(ErrorCode::NotInParabolic, "truncated action is not invertible");
  return g.n_element(*sol);
}

std::vector<GridCurve> admissible_curves(const TypeSpec& ts, const AlgElem& x, int grid, unsigned workers) {
  require_member(ts, x);
  const GradedAlgebra& g = ts.algebra();
  const auto points = integer_grid(g.pplus_dim(), grid);
  auto solved = parallel_map(points.size(), workers, [&](std::size_t i) -> std::optional<GridCurve> {
    const AlgElem y = solve_direction(GroupElem::exp(g.pplus_element(points[i])), x);
    if (!ts.contains(y)) return std::nullopt;
    return GridCurve{points[i], y};
  });
  std::vector<GridCurve> out;
  for (auto& s : solved)
    if (s) out.push_back(std::move(*s));
  if (out.empty()) throw Error(ErrorCode::EmptyGrid, "no admissible grid point");
  return out;
}

// ----------------------------------------------------------- jet order search

bool JetOrderReport::ok() const {
  for (const auto& v : verdicts)
    if (v.order >= claimed_bound && v.counterexample) return false;
  return true;
}

JetOrderReport min_jet_order_search(const TypeSpec& ts, const AlgElem& x, int grid, unsigned r_max,
                                    unsigned workers) {
  if (r_max == 0) throw Error(ErrorCode::BadParams, "r_max must be positive");
  const GradedAlgebra& g = ts.algebra();
  const auto curves = admissible_curves(ts, x, grid, workers);
  const CurveSpec base = CurveSpec::at_origin(x);

  struct Outcome {
    unsigned common;
    bool equal;
  };
  const auto outcomes = parallel_map(curves.size(), workers, [&](std::size_t i) {
    const CurveSpec c(GroupElem::exp(g.pplus_element(curves[i].z)), curves[i].y);
    const ComparisonCurve cc = comparison(base, c);
    return Outcome{common_jet_order(cc, r_max), curves_equal(cc)};
  });

  JetOrderReport report{g.name(), ts.str(), x, grid, integer_grid(g.pplus_dim(), grid).size(), curves.size(), 0,
                        {}, theorem_jet_bound(ts), r_max + 1};
  for (const auto& o : outcomes)
    if (o.equal) ++report.coinciding;
  for (unsigned r = 1; r <= r_max; ++r) {
    JetOrderVerdict v{r, 0, std::nullopt};
    for (std::size_t i = 0; i < curves.size(); ++i) {
      if (outcomes[i].common < r) continue;
      ++v.equal_jet_pairs;
      if (!outcomes[i].equal && !v.counterexample) {
        const CurveSpec c(GroupElem::exp(g.pplus_element(curves[i].z)), curves[i].y);
        if (!jet_equal(base, c, r) || curves_equal(base, c))
          throw Error(ErrorCode::BadParams, "counterexample failed re-verification");
        v.counterexample = JetWitness{curves[i].z, curves[i].y, outcomes[i].common};
      }
    }
    if (!v.counterexample && report.observed_order == r_max + 1) report.observed_order = r;
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

// ------------------------------------------------------- partial-sum claim

ClaimReport verify_partial_sum_claim(const std::vector<ClaimSample>& samples) {
  ClaimReport report;
  for (const auto& s : samples) {
    const GradedAlgebra& g = s.x.algebra();
    const int k = g.depth();
    if (k < 2) throw Error(ErrorCode::NotApplicableGrading, "the claim needs depth >= 2");
    if (!s.x.in_grade(-1)) throw Error(ErrorCode::NotInNilpotentPart, "claim samples need X in g_-1");
    if (s.z.size() != static_cast<std::size_t>(k)) throw Error(ErrorCode::DimensionMismatch, "need Z_1..Z_k");
    for (int j = 1; j <= k; ++j)
      if (!s.z[j - 1].in_grade(j)) throw Error(ErrorCode::NotInParabolic, "Z_j must lie in g_j");
    ++report.samples;

    const AlgElem w = Ad(exp_product(g, s.z), s.x) - s.x;
    unsigned hyp_depth = 0;  // largest l with ad_X^i(W) in p for all i <= l
    while (hyp_depth < static_cast<unsigned>(k) && ad_pow(s.x, w, hyp_depth + 1).in_p()) ++hyp_depth;
    if (hyp_depth == 0) {
      ++report.non_applicable;
      continue;
    }
    for (unsigned l = 1; l <= hyp_depth; ++l) {
      ++report.applicable;
      for (unsigned j = 1; j <= l; ++j)
        if (!ad_pow(s.x, s.z[j - 1], j + 1).is_zero())
          report.violations.push_back("sample " + std::to_string(report.samples - 1) + ": ad_X^" +
                                      std::to_string(j + 1) + "(Z_" + std::to_string(j) + ") != 0 at l=" +
                                      std::to_string(l));
      std::vector<AlgElem> head(s.z.begin(), s.z.begin() + l);
      for (std::size_t j = l; j < s.z.size(); ++j) head.push_back(g.zero());
      const AlgElem partial = Ad(exp_product(g, head), s.x) - s.x;
      for (unsigned n = l + 1; n <= l + 4; ++n)
        if (!ad_pow(s.x, partial, n).in_p())
          report.violations.push_back("sample " + std::to_string(report.samples - 1) + ": ad_X^" +
                                      std::to_string(n) + "(W'_" + std::to_string(l) + ") not in p");
    }
  }
  return report;
}

std::vector<ClaimSample> partial_sum_claim_samples(const AlgElem& x, int grid) {
  const GradedAlgebra& g = x.algebra();
  const int k = g.depth();
  std::vector<ClaimSample> out;
  for (const auto& v : integer_grid(g.pplus_dim(), grid)) {
    const AlgElem z = g.pplus_element(v);
    ClaimSample s{x, {}};
    for (int j = 1; j <= k; ++j) s.z.push_back(z.grade_component(j));
    out.push_back(std::move(s));
  }
  std::vector<AlgElem> kernel;
  for (int j = 1; j <= k; ++j) {
    ScalarMatrix m(g.dim(), g.grade_dim(j));
    for (std::size_t a = 0; a < g.grade_dim(j); ++a) {
      const AlgElem image = ad_pow(x, g.basis_elem(g.grade_begin(j) + a), static_cast<unsigned>(j + 1));
      for (std::size_t i = 0; i < g.dim(); ++i) m(i, a) = image.coord(i);
    }
    for (const auto& v : kernel_basis(m)) kernel.push_back(g.grade_element(j, v));
  }
  for (const auto& coeffs : integer_grid(kernel.size(), grid)) {
    AlgElem z = g.zero();
    for (std::size_t i = 0; i < kernel.size(); ++i) z += kernel[i] * coeffs[i];
    ClaimSample s{x, {}};
    for (int j = 1; j <= k; ++j) s.z.push_back(z.grade_component(j));
    out.push_back(std::move(s));
  }
  return out;
}

// ------------------------------------------------------------ standard fiber

FiberSample standard_fiber(const std::vector<AlgElem>& xs, int grid) {
  FiberSample out;
  if (xs.empty()) return out;
  const GradedAlgebra& g = xs.front().algebra();
  require_one_graded(g);
  const auto zs = integer_grid(g.grade_dim(1), grid);
  for (const auto& x : xs) {
    if (!x.in_grade(-1)) throw Error(ErrorCode::NotInNilpotentPart, "fiber directions must lie in g_-1");
    for (const auto& v : zs) {
      const AlgElem z = g.grade_element(1, v);
      out.push_back(FiberPair{x, bracket(x, bracket(x, z)), z});
    }
  }
  return out;
}

FiberSample standard_fiber(const TypeSpec& ts, int grid) {
  require_one_graded(ts.algebra());
  return standard_fiber(ts.members(grid), grid);
}

bool in_standard_fiber(const AlgElem& x, const AlgElem& second) {
  const GradedAlgebra& g = x.algebra();
  require_one_graded(g);
  ScalarMatrix m(g.dim(), g.grade_dim(1));
  for (std::size_t a = 0; a < g.grade_dim(1); ++a) {
    const AlgElem image = bracket(x, bracket(x, g.basis_elem(g.grade_begin(1) + a)));
    for (std::size_t i = 0; i < g.dim(); ++i) m(i, a) = image.coord(i);
  }
  return solve(m, second.coords()).has_value();
}

std::size_t fiber_hull_dimension(const FiberSample& sample, const AlgElem& x) {
  std::vector<Vector> seconds;
  for (const auto& p : sample)
    if (p.x == x) seconds.push_back(p.second.coords());
  return span_dimension(seconds, x.algebra().dim());
}

std::pair<AlgElem, AlgElem> pplus_action_on_2jets(const AlgElem& w, const std::pair<AlgElem, AlgElem>& jet) {
  require_one_graded(w.algebra());
  if (!w.in_grade(1)) throw Error(ErrorCode::NotInParabolic, "the action needs W in g_1");
  const auto& [y1, y2] = jet;
  return {y1, y2 + bracket(y1, bracket(y1, w))};
}

// ------------------------------------------------------------------ families

FamilyReport family_dimension(const TypeSpec& ts, const AlgElem& x, int grid, unsigned workers) {
  const GradedAlgebra& g = ts.algebra();
  const auto curves = admissible_curves(ts, x, grid, workers);
  const CurveSpec base = CurveSpec::at_origin(x);
  const auto equal = parallel_map(curves.size(), workers, [&](std::size_t i) {
    return curves_equal(base, CurveSpec(GroupElem::exp(g.pplus_element(curves[i].z)), curves[i].y));
  });

  std::vector<Vector> admissible, k_points;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    admissible.push_back(curves[i].z);
    if (equal[i]) k_points.push_back(curves[i].z);
  }
  const auto all = integer_grid(g.pplus_dim(), grid);
  FamilyReport r{g.name(), ts.str(), x, g0_orbit_classify(x), grid, all.size(), curves.size(),
                 span_dimension(admissible, g.pplus_dim()), k_points.size(), span_basis(k_points, g.pplus_dim()),
                 true, 0, 0};

  const auto in_k = [&](const Vector& v) { return std::find(k_points.begin(), k_points.end(), v) != k_points.end(); };
  for (const auto& v : all)
    if (in_span(r.k_basis, v) && !in_k(v)) {
      r.k_linear = false;
      break;
    }
  r.dimension_lo = r.admissible_dimension - r.k_basis.size();
  r.dimension_hi = r.k_linear ? r.dimension_lo : r.admissible_dimension;
  return r;
}

OrbitHullReport orbit_hull_dimension(const TypeSpec& ts, int grid, int x_range) {
  const GradedAlgebra& g = ts.algebra();
  const auto xs = ts.members(x_range);
  const auto zs = integer_grid(g.pplus_dim(), grid);
  const auto description = known_orbit_description(ts);

  OrbitHullReport r{g.name(), ts.str(), 0, 0, std::nullopt, std::nullopt};
  std::vector<Vector> basis;
  std::size_t off_description = 0;
  for (const auto& zv : zs) {
    const GroupElem b = GroupElem::exp(g.pplus_element(zv));
    for (const auto& x : xs) {
      const AlgElem p = truncated_Ad(b, x);
      ++r.points;
      if (description) {
        const std::string label = g0_orbit_classify(p);
        if (std::find(description->begin(), description->end(), label) == description->end()) ++off_description;
      }
      if (basis.size() < g.n_dim() && !in_span(basis, p.n_coords())) {
        basis.push_back(p.n_coords());
        basis = span_basis(basis, g.n_dim());
      }
    }
  }
  r.hull_dimension = basis.size();
  if (description) r.description_violations = off_description;

  if (const auto lin = ts.linear_basis()) {
    std::size_t best = 0;
    const std::size_t total = zs.size() * std::max<std::size_t>(xs.size(), 1);
    const std::size_t stride = std::max<std::size_t>(1, total / 256);
    for (std::size_t idx = 0; idx < total && !xs.empty() && best < g.n_dim(); idx += stride) {
      const AlgElem z = g.pplus_element(zs[idx / xs.size()]);
      const AlgElem& x = xs[idx % xs.size()];
      const GroupElem b = GroupElem::exp(z);
      std::vector<Vector> cols;
      for (const auto& e : *lin) cols.push_back(truncated_Ad(b, e).n_coords());
      for (std::size_t a = g.grade_end(0); a < g.dim(); ++a)
        cols.push_back(orbit_derivative(z, g.basis_elem(a), x).n_coords());
      best = std::max(best, span_dimension(cols, g.n_dim()));
    }
    r.tangent_dimension = best;
  }
  return r;
}

// ----------------------------------------------------------------- reduction

std::optional<GroupElem> pplus_conjugator(const AlgElem& y) {
  const GradedAlgebra& g = y.algebra();
  if (!y.in_n() || y.is_zero()) return std::nullopt;
  int low = -1;
  for (int j = g.depth(); j >= 1; --j)
    if (!y.grade_component(-j).is_zero()) {
      low = -j;
      break;
    }
  const AlgElem base = y.grade_component(low);
  if (base == y) return GroupElem::identity(g);
  if (g.depth() != 2 || low != -2) return std::nullopt;
  ScalarMatrix m(g.grade_dim(-1), g.grade_dim(1));
  for (std::size_t a = 0; a < g.grade_dim(1); ++a) {
    const Vector col = bracket(g.basis_elem(g.grade_begin(1) + a), base).grade_coords(-1);
    for (std::size_t i = 0; i < col.size(); ++i) m(i, a) = col[i];
  }
  const auto w = solve(m, y.grade_coords(-1));
  if (!w) return std::nullopt;
  const GroupElem q = GroupElem::exp(g.grade_element(1, *w));
  if (Ad(q, base) != y) return std::nullopt;
  return q;
}

ReductionReport verify_reduces_to_lowest_grade(const TypeSpec& ts, const AlgElem& x, int grid) {
  const GradedAlgebra& g = ts.algebra();
  const int k = g.depth();
  ReductionReport r;
  for (const auto& gc : admissible_curves(ts, x, grid)) {
    ++r.curves;
    const GroupElem b = GroupElem::exp(g.pplus_element(gc.z));
    if (gc.y.in_grade(-k)) {
      ++r.base_members;
      ++r.reduced;
      continue;
    }
    const auto q = pplus_conjugator(gc.y);
    if (!q) continue;
    const AlgElem lowest = gc.y.grade_component(-k);
    if (!lowest.in_grade(-k) || lowest.is_zero()) continue;
    const GroupElem b2 = b * *q;
    if (truncated_Ad(b2, lowest) != x) continue;
    if (curves_equal(CurveSpec(b, gc.y), CurveSpec(b2, lowest))) ++r.reduced;
  }
  return r;
}

}  // namespace parageo
