#include <map>
#include <set>

#include "parageo/cli/experiment.hpp"
#include "parageo/cli/suites.hpp"
#include "parageo/geodesics/geodesic_lab.hpp"
#include "parageo/reparam/reparam.hpp"

namespace parageo {

namespace {

constexpr const char* kVersion = "0.1.0";

struct Summary {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

Json algebra_json(const GradedAlgebra& g) {
  Json grades = Json::array();
  for (int j = -g.depth(); j <= g.depth(); ++j) grades.push_back(Json{{"grade", j}, {"dim", g.grade_dim(j)}});
  Json labels = Json::array();
  for (std::size_t a = 0; a < g.dim(); ++a) labels.push_back(g.label(a));
  return Json{{"name", g.name()},
              {"dim", g.dim()},
              {"depth", g.depth()},
              {"field", g.field() == FieldTag::Rational ? "rational" : "gaussian"},
              {"grades", grades},
              {"basis", labels}};
}

AlgElem default_direction(const TypeSpec& ts) {
  const auto members = ts.members(1);
  if (members.empty()) throw Error(ErrorCode::Usage, "type " + ts.str() + " has no small integer members; pass --x");
  return members.back();
}

Json catalog_payload(Summary& sum) {
  const std::vector<std::pair<std::string, std::string>> families{
      {"proj(m)", "proj(2)"}, {"grass(n,m)", "grass(2,2)"}, {"conf(p,q)", "conf(1,2)"},
      {"lagr3", "lagr3"},     {"su21", "su21"},             {"xxdot", "xxdot"}};
  Json rows = Json::array();
  for (const auto& [family, example] : families) {
    const auto g = make_algebra(example);
    sum.check(g->validate().empty(), example + " validates");
    Json row = algebra_json(*g);
    row["family"] = family;
    rows.push_back(row);
  }
  return Json{{"families", rows}};
}

Json suite_json(const SuiteReport& r) {
  Json ids = Json::array();
  for (const auto& t : r.identities)
    ids.push_back(Json{{"name", t.name},
                       {"samples", t.samples},
                       {"violations", t.violations},
                       {"first_violation", t.first_violation}});
  return Json{{"suite", r.suite}, {"identities", ids}};
}

Json verify_payload(const AlgebraPtr& g, const ExperimentConfig& c, unsigned workers, Summary& sum) {
  std::vector<SuiteReport> reports;
  const std::string suite = c.suite.empty() ? "lemmas" : c.suite;
  if (suite == "lemmas" || suite == "all") reports.push_back(lemma_suite(g, *c.grid, *c.orders));
  if (suite == "brackets" || suite == "all") reports.push_back(bracket_suite(g));
  if (suite == "safety" || suite == "all") reports.push_back(safety_suite(g, std::min(*c.grid, 1), workers));
  Json out = Json::array();
  for (const auto& r : reports) {
    for (const auto& t : r.identities) sum.check(t.violations == 0, r.suite + "/" + t.name);
    out.push_back(suite_json(r));
  }
  return Json{{"suites", out}};
}

Json jets_payload(const TypeSpec& ts, const AlgElem& x, const ExperimentConfig& c, unsigned workers, Summary& sum) {
  const JetOrderReport r = min_jet_order_search(ts, x, *c.grid, *c.orders, workers);
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) {
    Json ce = nullptr;
    if (v.counterexample)
      ce = Json{{"z", vector_json(v.counterexample->z)},
                {"y", element_json(v.counterexample->y)},
                {"common_order", v.counterexample->common_order}};
    verdicts.push_back(Json{{"order", v.order}, {"equal_jet_pairs", v.equal_jet_pairs}, {"counterexample", ce}});
  }
  sum.check(r.ok(), "no counterexample at or above the proved bound " + std::to_string(r.claimed_bound));
  Json out{{"type", r.type},
           {"x", element_json(r.x)},
           {"grid", r.grid},
           {"grid_points", r.grid_points},
           {"admissible", r.admissible},
           {"coinciding", r.coinciding},
           {"claimed_bound", r.claimed_bound},
           {"observed_order", r.observed_order},
           {"verdicts", verdicts}};
  const GradedAlgebra& g = ts.algebra();
  if (g.depth() >= 2 && x.in_grade(-1)) {
    const ClaimReport cr = verify_partial_sum_claim(partial_sum_claim_samples(x, std::min(*c.grid, 1)));
    sum.check(cr.ok(), "partial-sum claim");
    out["partial_sum_claim"] = Json{{"samples", cr.samples},
                                    {"applicable", cr.applicable},
                                    {"non_applicable", cr.non_applicable},
                                    {"violations", cr.violations}};
  }
  return out;
}

Json fiber_payload(const TypeSpec& ts, const ExperimentConfig& c, Summary& sum) {
  const GradedAlgebra& g = ts.algebra();
  const FiberSample s = c.x.empty() ? standard_fiber(ts, *c.grid)
                                    : standard_fiber(std::vector<AlgElem>{parse_element(g, c.x)}, *c.grid);
  Json pairs = Json::array();
  for (const auto& p : s) {
    sum.check(in_standard_fiber(p.x, p.second), "fiber membership of " + p.x.str());
    pairs.push_back(Json{{"x", vector_json(p.x.grade_coords(-1))},
                         {"second", vector_json(p.second.grade_coords(-1))},
                         {"z", vector_json(p.z.grade_coords(1))}});
  }
  Json gm1 = Json::array(), g1 = Json::array();
  for (std::size_t a = g.grade_begin(-1); a < g.grade_end(-1); ++a) gm1.push_back(g.label(a));
  for (std::size_t a = g.grade_begin(1); a < g.grade_end(1); ++a) g1.push_back(g.label(a));
  return Json{{"type", ts.str()}, {"grid", *c.grid}, {"x_basis", gm1}, {"z_basis", g1}, {"pairs", pairs}};
}

Json family_payload(const TypeSpec& ts, const AlgElem& x, const ExperimentConfig& c, unsigned workers, Summary& sum) {
  const FamilyReport r = family_dimension(ts, x, *c.grid, workers);
  Json kb = Json::array();
  for (const auto& v : r.k_basis) kb.push_back(vector_json(v));
  sum.check(r.k_points > 0, "base curve found on the grid");
  sum.check(r.dimension_lo <= r.dimension_hi, "dimension range");
  return Json{{"type", r.type},
              {"x", element_json(r.x)},
              {"stratum", r.stratum},
              {"grid", r.grid},
              {"grid_points", r.grid_points},
              {"admissible", r.admissible},
              {"admissible_dimension", r.admissible_dimension},
              {"k_points", r.k_points},
              {"k_basis", kb},
              {"k_linear", r.k_linear},
              {"dimension_lo", r.dimension_lo},
              {"dimension_hi", r.dimension_hi}};
}

Json reparam_entry(const AlgElem& x1, const AlgElem& z, const AlgElem& x2, Summary& sum, std::size_t& related,
                   std::size_t& projective) {
  const ReparamVerdict v = reparam_solve(x1, z, x2);
  Json e{{"z", element_json(z)}, {"exists", v.exists}, {"failure_reason", v.failure_reason}};
  if (v.exists) {
    const bool ok = verify_reparam(CurveSpec::at_origin(x1), CurveSpec::from_exp(z, x2), *v.map);
    sum.check(ok, "verify_reparam at Z=" + z.str());
    sum.check(schwarzian_check(*v.map), "schwarzian at Z=" + z.str());
    ++related;
    if (!v.map->is_affine()) ++projective;
    e["map"] = Json{{"A", scalar_json(v.map->A())},
                    {"B", scalar_json(v.map->B())},
                    {"C", scalar_json(v.map->C())},
                    {"D", scalar_json(v.map->D())},
                    {"text", v.map->str()}};
    e["verified"] = ok;
  } else {
    e["map"] = nullptr;
    e["verified"] = false;
  }
  return e;
}

Json reparam_payload(const AlgebraPtr& g, const ExperimentConfig& c, Summary& sum) {
  const int k = g->depth();
  const AlgElem x1 = c.x.empty() ? default_direction(TypeSpec::grade(g, k)) : parse_element(*g, c.x);
  const AlgElem x2 = c.second.empty() ? x1 : parse_element(*g, c.second);
  std::vector<AlgElem> zs;
  if (!c.z.empty()) {
    zs.push_back(parse_element(*g, c.z));
  } else {
    for (const auto& v : integer_grid(g->pplus_dim(), *c.grid)) zs.push_back(g->pplus_element(v));
  }
  Json entries = Json::array();
  std::size_t related = 0, projective = 0;
  for (const auto& z : zs) entries.push_back(reparam_entry(x1, z, x2, sum, related, projective));
  return Json{{"x", element_json(x1)},
              {"second", element_json(x2)},
              {"grid", c.z.empty() ? Json(*c.grid) : Json(nullptr)},
              {"entries", entries},
              {"related", related},
              {"projective", projective}};
}

Json classify_payload(const TypeSpec& ts, const ExperimentConfig& c) {
  if (!c.x.empty()) {
    const AlgElem x = parse_element(ts.algebra(), c.x);
    return Json{{"x", element_json(x)}, {"stratum", g0_orbit_classify(x)}};
  }
  std::map<std::string, std::size_t> counts;
  for (const auto& x : ts.members(*c.grid)) ++counts[g0_orbit_classify(x)];
  Json out = Json::object();
  for (const auto& [label, n] : counts) out[label] = n;
  return Json{{"type", ts.str()}, {"grid", *c.grid}, {"counts", out}};
}

}  // namespace

RunResult run(const ExperimentConfig& config, unsigned workers) {
  static const std::set<std::string> commands{"catalog", "verify", "jets", "fiber", "family", "reparam", "classify"};
  if (!commands.count(config.command)) throw Error(ErrorCode::Usage, "unknown command '" + config.command + "'");
  if (config.format != "json" && config.format != "md") throw Error(ErrorCode::Usage, "format must be json or md");
  if (config.grid && *config.grid <= 0) throw Error(ErrorCode::Usage, "grid must be a positive integer");
  if (config.orders && *config.orders == 0) throw Error(ErrorCode::Usage, "orders must be positive");
  static const std::set<std::string> suites{"", "lemmas", "brackets", "safety", "all"};
  if (!suites.count(config.suite)) throw Error(ErrorCode::Usage, "unknown suite '" + config.suite + "'");
  if (workers == 0) workers = default_workers();

  ExperimentConfig c = config;
  Summary sum;
  Json payload;
  Json algebra = nullptr;
  if (c.command == "catalog") {
    payload = catalog_payload(sum);
  } else {
    if (c.algebra.empty()) throw Error(ErrorCode::Usage, c.command + " needs --algebra");
    const AlgebraPtr g = make_algebra(c.algebra);
    c.algebra = g->name();
    if (!c.grid) c.grid = 2;
    if (!c.orders) c.orders = static_cast<unsigned>(g->depth()) + 3;
    if (c.command == "verify" && c.suite.empty()) c.suite = "lemmas";
    if (c.type_spec.empty()) c.type_spec = c.command == "reparam" ? "grade(-" + std::to_string(g->depth()) + ")" : "full_n";
    algebra = algebra_json(*g);
    const TypeSpec ts = TypeSpec::parse(g, c.type_spec);
    c.type_spec = ts.str();
    if (c.command == "verify") {
      payload = verify_payload(g, c, workers, sum);
    } else if (c.command == "jets" || c.command == "family") {
      const AlgElem x = c.x.empty() ? default_direction(ts) : parse_element(*g, c.x);
      c.x = x.str();
      payload = c.command == "jets" ? jets_payload(ts, x, c, workers, sum) : family_payload(ts, x, c, workers, sum);
    } else if (c.command == "fiber") {
      payload = fiber_payload(ts, c, sum);
    } else if (c.command == "reparam") {
      payload = reparam_payload(g, c, sum);
    } else {
      payload = classify_payload(ts, c);
    }
  }

  Json echo = c.to_json();
  echo.erase("output");
  echo.erase("format");
  RunResult out;
  out.report = Json{{"schema", "parageo/1"},
                    {"tool", Json{{"name", "parageo"}, {"version", kVersion}}},
                    {"command", c.command},
                    {"algebra", algebra},
                    {"config", echo},
                    {"results", payload},
                    {"summary", Json{{"passed", sum.failures.empty()}, {"checks", sum.checks}, {"failures", sum.failures}}}};
  out.exit_code = sum.failures.empty() ? 0 : 1;
  return out;
}

}  // namespace parageo
