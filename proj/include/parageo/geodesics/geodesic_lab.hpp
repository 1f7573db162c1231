#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parageo/curves/curve_engine.hpp"
#include "parageo/geodesics/type_spec.hpp"

namespace parageo {

/// The unique Y in n with truncated_Ad(b, Y) = x, for b = exp(Z), Z in p_+.
AlgElem solve_direction(const GroupElem& b, const AlgElem& x);

/// One admissible grid point: b = exp(Z) and the solved Y lies in the type.
struct GridCurve {
  Vector z;  // p_+ coordinates
  AlgElem y;
};
/// Z over the p_+ grid in lexicographic order, keeping those with Y in ts.
std::vector<GridCurve> admissible_curves(const TypeSpec& ts, const AlgElem& x, int grid, unsigned workers = 1);

struct JetWitness {
  Vector z;
  AlgElem y;
  unsigned common_order;  // largest r with equal r-jets
};

struct JetOrderVerdict {
  unsigned order;
  std::size_t equal_jet_pairs;   // grid curves with the same r-jet as the base curve
  std::optional<JetWitness> counterexample;
};

struct JetOrderReport {
  std::string algebra;
  std::string type;
  AlgElem x;
  int grid;
  std::size_t grid_points;
  std::size_t admissible;
  std::size_t coinciding;  // grid curves equal to the base curve
  std::vector<JetOrderVerdict> verdicts;
  unsigned claimed_bound;
  /// Least r without a counterexample on the grid (r_max + 1 if none).
  unsigned observed_order;

  /// No counterexample at or above the proved bound.
  bool ok() const;
};

/// Checks jet_equal(c^{e,X}, c^{exp Z,Y}, r) => curves_equal for r <= r_max
/// over the grid. Throws NotAMember when X is not in ts.
JetOrderReport min_jet_order_search(const TypeSpec& ts, const AlgElem& x, int grid, unsigned r_max,
                                    unsigned workers = 1);

/// A sample (X, Z_1, ..., Z_k) with X in g_{-1} and Z_j in g_j.
struct ClaimSample {
  AlgElem x;
  std::vector<AlgElem> z;
};

struct ClaimReport {
  std::size_t samples = 0;
  std::size_t applicable = 0;     // (sample, l) pairs whose hypothesis holds
  std::size_t non_applicable = 0; // samples failing the hypothesis at l = 1
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// For W = Ad(exp Z_1 ... exp Z_k) X - X and the partial sums W'_l built from
/// Z_1..Z_l: whenever ad_X^i(W) in p for all i <= l, checks ad_X^{j+1}(Z_j) = 0
/// for j <= l and ad_X^n(W'_l) in p for l < n <= l + 4. Needs depth >= 2.
ClaimReport verify_partial_sum_claim(const std::vector<ClaimSample>& samples);
/// Grid samples for X plus combinations of the kernels of Z_j -> ad_X^{j+1} Z_j.
std::vector<ClaimSample> partial_sum_claim_samples(const AlgElem& x, int grid);

struct FiberPair {
  AlgElem x;
  AlgElem second;  // [X, [X, Z]]
  AlgElem z;
};
using FiberSample = std::vector<FiberPair>;

/// Admissible 2-jets (X, [X,[X,Z]]) for X in the given list and Z over the g_1
/// grid. Throws NotOneGraded.
FiberSample standard_fiber(const std::vector<AlgElem>& xs, int grid);
/// Same with X over the members of ts on the grid.
FiberSample standard_fiber(const TypeSpec& ts, int grid);
/// True iff second = [X,[X,Z]] for some Z in g_1.
bool in_standard_fiber(const AlgElem& x, const AlgElem& second);
/// Dimension of the span of the second components attached to X.
std::size_t fiber_hull_dimension(const FiberSample& sample, const AlgElem& x);

/// (Y', Y'' + [Y',[Y',W]]) for W in g_1. Throws NotOneGraded.
std::pair<AlgElem, AlgElem> pplus_action_on_2jets(const AlgElem& w, const std::pair<AlgElem, AlgElem>& jet);

struct FamilyReport {
  std::string algebra;
  std::string type;
  AlgElem x;
  std::string stratum;
  int grid;
  std::size_t grid_points;
  std::size_t admissible;
  std::size_t admissible_dimension;  // linear hull of admissible Z
  std::size_t k_points;              // grid Z giving the base curve
  std::vector<Vector> k_basis;       // basis of the linear hull of K
  bool k_linear;                     // every grid point of the hull lies in K
  std::size_t dimension_lo;
  std::size_t dimension_hi;          // equals dimension_lo when K is linear
};

FamilyReport family_dimension(const TypeSpec& ts, const AlgElem& x, int grid, unsigned workers = 1);

struct OrbitHullReport {
  std::string algebra;
  std::string type;
  std::size_t points;
  std::size_t hull_dimension;                 // linear hull of the sampled orbit points
  std::optional<std::size_t> tangent_dimension;  // max rank of the parametrization's Jacobian
  std::optional<std::size_t> description_violations;  // sampled points off the known parametric set
};

/// Orbit of ts under the truncated action of exp(p_+): Z over the p_+ grid,
/// X over the members of ts with coordinates in [-x_range, x_range].
OrbitHullReport orbit_hull_dimension(const TypeSpec& ts, int grid, int x_range = 1);

/// An element q = exp(w), w in g_1, with Ad(q) X' = y exactly for X' the
/// lowest-grade component of y, when one exists (depth-2 algebras).
std::optional<GroupElem> pplus_conjugator(const AlgElem& y);

struct ReductionReport {
  std::size_t curves = 0;       // admissible curves of the type in direction X
  std::size_t reduced = 0;      // re-expressed and verified as g_{-k} curves
  std::size_t base_members = 0; // admissible curves whose Y already lies in g_{-k}
  bool ok() const { return curves == reduced; }
};

/// Every admissible curve c^{exp Z, Y} of type ts in direction X is rewritten
/// as c^{exp Z q, X'} with X' in g_{-k} and the equality re-verified.
ReductionReport verify_reduces_to_lowest_grade(const TypeSpec& ts, const AlgElem& x, int grid);

}  // namespace parageo
