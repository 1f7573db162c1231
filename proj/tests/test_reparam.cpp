#include <gtest/gtest.h>

#include "parageo/geodesics/geodesic_lab.hpp"
#include "parageo/reparam/reparam.hpp"
#include "support/gen.hpp"

using namespace parageo;
using testgen::Gen;

namespace {

AlgElem elem(const GradedAlgebra& g, std::initializer_list<std::pair<const char*, int>> parts) {
  AlgElem x = g.zero();
  for (const auto& [label, c] : parts) x += g.basis_elem(g.index_of(label)) * Scalar(c);
  return x;
}

MobiusMap random_map(Gen& gen) {
  for (;;) {
    Scalar a = gen.rational(), b = gen.rational(), c = gen.rational(), d = gen.rational();
    if (!(a * d - b * c).is_zero()) return MobiusMap(a, b, c, d);
  }
}

RatFun t_fun() { return RatFun(Poly::t()); }

}  // namespace

TEST(Mobius, NormalizationAndAccessors) {
  const MobiusMap m(Scalar(2), Scalar(0), Scalar(4), Scalar(2));
  EXPECT_EQ(m.A(), Scalar(1));
  EXPECT_EQ(m.C(), Scalar(2));
  EXPECT_EQ(m.D(), Scalar(1));
  EXPECT_EQ(m.value_at_zero(), Scalar(0));
  EXPECT_EQ(m.velocity(), Scalar(1));
  EXPECT_EQ(m.acceleration(), Scalar(-4));
  EXPECT_FALSE(m.is_affine());
  EXPECT_TRUE(MobiusMap(Scalar(3), Scalar(1), Scalar(0), Scalar(1)).is_affine());
  EXPECT_THROW(MobiusMap(Scalar(1), Scalar(2), Scalar(2), Scalar(4)), Error);
  const MobiusMap pole(Scalar(0), Scalar(1), Scalar(1), Scalar(0));
  EXPECT_EQ(pole.C(), Scalar(1));
  EXPECT_THROW(pole.velocity(), Error);
}

TEST(Mobius, SeedsMatchClosedForm) {
  // a t / (1 - (b / 2a) t)
  const MobiusMap m = MobiusMap::from_seeds(Scalar(0), Scalar(3), Scalar(-4));
  EXPECT_EQ(m.as_ratfun(), RatFun(Poly(std::vector<Scalar>{Scalar(0), Scalar(3)}),
                                  Poly(std::vector<Scalar>{Scalar(1), Scalar::fraction(2, 3)})));
  Gen gen(41);
  for (int trial = 0; trial < 30; ++trial) {
    const Scalar phi0 = gen.rational(), a = gen.nonzero_rational(), b = gen.rational();
    const MobiusMap s = MobiusMap::from_seeds(phi0, a, b);
    EXPECT_EQ(s.value_at_zero(), phi0);
    EXPECT_EQ(s.velocity(), a);
    EXPECT_EQ(s.acceleration(), b);
  }
  EXPECT_THROW(MobiusMap::from_seeds(Scalar(0), Scalar(0), Scalar(1)), Error);
}

TEST(MobiusProperty, CompositionIsSubstitution) {
  Gen gen(42);
  for (int trial = 0; trial < 40; ++trial) {
    const MobiusMap f = random_map(gen), h = random_map(gen);
    EXPECT_EQ(f.compose(h).as_ratfun(), f.apply(h.as_ratfun()));
    EXPECT_EQ(f.compose(MobiusMap::identity()), f);
    EXPECT_EQ(MobiusMap::identity().compose(f), f);
  }
}

TEST(Schwarzian, Examples) {
  EXPECT_TRUE(schwarzian_check(MobiusMap::identity()));
  EXPECT_TRUE(schwarzian_check(MobiusMap::from_seeds(Scalar(0), Scalar(1), Scalar(-2))));
  EXPECT_TRUE(schwarzian_check(RatFun(Poly(std::vector<Scalar>{Scalar(0), Scalar(5)}))));
  const Poly cubic(std::vector<Scalar>{Scalar(0), Scalar(1), Scalar(0), Scalar(1)});
  EXPECT_FALSE(schwarzian_check(RatFun(cubic)));
  EXPECT_THROW(schwarzian_check(RatFun(Scalar(2))), Error);
  Gen gen(43);
  for (int trial = 0; trial < 20; ++trial) EXPECT_TRUE(schwarzian_check(random_map(gen)));
}

TEST(TaylorSeeds, Examples) {
  const auto alt = taylor_seed_expand(Scalar(1), Scalar(-2), 6);
  for (std::size_t i = 0; i < alt.size(); ++i) EXPECT_EQ(alt[i], Scalar(i % 2 == 0 ? 1 : -1));
  const auto affine = taylor_seed_expand(Scalar(4), Scalar(0), 4);
  EXPECT_EQ(affine, (std::vector<Scalar>{Scalar(4), Scalar(0), Scalar(0), Scalar(0)}));
  EXPECT_THROW(taylor_seed_expand(Scalar(0), Scalar(1), 3), Error);
}

TEST(TaylorSeedsProperty, MatchesTheMap) {
  Gen gen(44);
  for (int trial = 0; trial < 20; ++trial) {
    const Scalar a = gen.nonzero_rational(), b = gen.rational();
    const unsigned n = 7;
    const auto c = taylor_seed_expand(a, b, n);
    std::vector<Scalar> coeffs{Scalar(0)};
    coeffs.insert(coeffs.end(), c.begin(), c.end());
    const MobiusMap m = MobiusMap::from_seeds(Scalar(0), a, b);
    // phi (C t + 1) = A t holds through t^n
    const Poly prod = Poly(coeffs) * Poly(std::vector<Scalar>{Scalar(1), m.C()});
    const Poly expected(std::vector<Scalar>{Scalar(0), m.A()});
    for (unsigned i = 0; i <= n; ++i) EXPECT_EQ(prod.coeff(i), expected.coeff(i));
  }
}

TEST(Reparam, ProjectiveLineExample) {
  const auto g = make_algebra("proj(1)");
  const AlgElem x = elem(*g, {{"E21", 1}});
  const AlgElem z = elem(*g, {{"E12", 1}});
  const ReparamVerdict v = reparam_solve(x, z, x);
  ASSERT_TRUE(v.exists);
  const RatFun expected(Poly::t(), Poly(std::vector<Scalar>{Scalar(1), Scalar(1)}));
  EXPECT_EQ(v.map->as_ratfun(), expected);
  const CurveSpec c1 = CurveSpec::at_origin(x), c2 = CurveSpec::from_exp(z, x);
  EXPECT_TRUE(verify_reparam(c1, c2, *v.map));
  EXPECT_FALSE(verify_reparam(c1, c2, MobiusMap::from_seeds(Scalar(0), Scalar(1), Scalar(-1))));
  EXPECT_FALSE(verify_reparam(c1, c2, t_fun()));
  const auto series = origin_reparam_series(x, c2, 6);
  ASSERT_TRUE(series.has_value());
  const auto seeds = taylor_seed_expand(Scalar(1), Scalar(-2), 6);
  for (unsigned i = 1; i <= 6; ++i) EXPECT_EQ(series->coeff(i), seeds[i - 1]);
}

TEST(Reparam, IdentityWhenZIsZero) {
  const auto g = make_algebra("conf(1,2)");
  const AlgElem x = elem(*g, {{"X1", 1}, {"X3", 2}});
  const ReparamVerdict same = reparam_solve(x, g->zero(), x);
  ASSERT_TRUE(same.exists);
  EXPECT_EQ(*same.map, MobiusMap::identity());
  const ReparamVerdict scaled = reparam_solve(x, g->zero(), x * Scalar(-3));
  ASSERT_TRUE(scaled.exists);
  EXPECT_TRUE(scaled.map->is_affine());
  EXPECT_EQ(scaled.map->velocity(), Scalar(-3));
}

TEST(Reparam, Failures) {
  const auto g = make_algebra("conf(1,1)");
  const AlgElem x = elem(*g, {{"X1", 1}});
  EXPECT_EQ(reparam_solve(x, g->zero(), elem(*g, {{"X2", 1}})).failure_reason, "X2 is not a multiple of X1");
  EXPECT_EQ(reparam_solve(x, g->zero(), g->zero()).failure_reason, "zero direction");
  const auto lagr3 = make_algebra("lagr3");
  EXPECT_THROW(reparam_solve(elem(*lagr3, {{"E21", 1}}), lagr3->zero(), elem(*lagr3, {{"E21", 1}})), Error);
  EXPECT_THROW(reparam_solve(x, elem(*g, {{"E", 1}}), x), Error);
  const AlgElem x31 = elem(*lagr3, {{"E31", 1}});
  EXPECT_EQ(reparam_solve(x31, elem(*lagr3, {{"E12", 1}}), x31).failure_reason.substr(0, 5), "[Z_1,");
  const CurveSpec c = CurveSpec::at_origin(x);
  EXPECT_THROW(verify_reparam(c, c, MobiusMap::from_seeds(Scalar(1), Scalar(1), Scalar(0))), Error);
}

TEST(ReparamProperty, SolverAgreesWithExactCheck) {
  for (const char* name : {"conf(1,1)", "conf(2,1)", "grass(2,2)", "proj(2)", "lagr3", "xxdot", "su21"}) {
    const auto g = make_algebra(name);
    const int k = g->depth();
    std::vector<AlgElem> xs;
    for (std::size_t a = g->grade_begin(-k); a < g->grade_end(-k); ++a) xs.push_back(g->basis_elem(a));
    AlgElem sum = g->zero();
    for (const auto& x : xs) sum += x;
    xs.push_back(sum);
    std::size_t related = 0;
    for (const auto& x1 : xs)
      for (const auto& v : integer_grid(g->pplus_dim(), 1)) {
        if (k == 1 && v != Vector(v.size())) {
          bool only_g1 = true;
          for (std::size_t i = g->grade_dim(1); i < v.size(); ++i) only_g1 = only_g1 && v[i].is_zero();
          if (!only_g1) continue;
        }
        const AlgElem z = g->pplus_element(v);
        const CurveSpec c1 = CurveSpec::at_origin(x1);
        for (int a : {1, 2, -3}) {
          const AlgElem x2 = x1 * Scalar(a);
          const ReparamVerdict r = reparam_solve(x1, z, x2);
          const CurveSpec c2 = CurveSpec::from_exp(z, x2);
          if (r.exists) {
            ++related;
            EXPECT_TRUE(verify_reparam(c1, c2, *r.map)) << name << " " << z;
            EXPECT_TRUE(schwarzian_check(*r.map));
          } else {
            for (int b = -4; b <= 4; ++b)
              EXPECT_FALSE(verify_reparam(c1, c2, MobiusMap::from_seeds(Scalar(0), Scalar(a), Scalar(b))))
                  << name << " " << z;
          }
        }
      }
    EXPECT_GT(related, 0u) << name;
  }
}

TEST(Reparam, SecondOrderSeedIsNotRescaledByTheVelocity) {
  const auto g = make_algebra("lagr3");
  const AlgElem x1 = elem(*g, {{"E31", 1}});
  const AlgElem z = elem(*g, {{"E13", 1}});
  const AlgElem x2 = x1 * Scalar(2);
  const ReparamVerdict r = reparam_solve(x1, z, x2);
  ASSERT_TRUE(r.exists);
  const CurveSpec c1 = CurveSpec::at_origin(x1), c2 = CurveSpec::from_exp(z, x2);
  EXPECT_TRUE(verify_reparam(c1, c2, *r.map));
  const Scalar b = r.map->acceleration();
  ASSERT_FALSE(b.is_zero());
  EXPECT_FALSE(verify_reparam(c1, c2, MobiusMap::from_seeds(Scalar(0), Scalar(2), b * Scalar(4))));
}

TEST(ProjectiveStructure, Examples) {
  const auto conf = make_algebra("conf(1,1)");
  for (const auto& x : TypeSpec::grade(conf, 1).members(2)) {
    const auto z = projective_structure_exists(x, 1);
    ASSERT_TRUE(z.has_value()) << x;
    EXPECT_EQ(bracket(x, bracket(x, *z)), x);
  }
  EXPECT_FALSE(projective_structure_exists(conf->zero(), 1).has_value());

  const auto grass = make_algebra("grass(2,2)");
  const AlgElem x = elem(*grass, {{"E31", 1}, {"E42", 2}});
  const auto z = projective_structure_exists(x, 1);
  ASSERT_TRUE(z.has_value());
  // -1/2 times the inverse of the g_{-1} block
  EXPECT_EQ(*z, elem(*grass, {{"E13", 1}, {"E24", 0}}) * Scalar::fraction(-1, 2) +
                    elem(*grass, {{"E24", 1}}) * Scalar::fraction(-1, 4));
  EXPECT_THROW(projective_structure_exists(x, 2), Error);
}

TEST(ReparamProperty, ProjectiveStructureGivesEveryMap) {
  Gen gen(45);
  for (const char* name : {"conf(1,1)", "conf(2,1)", "grass(2,2)", "proj(2)"}) {
    const auto g = make_algebra(name);
    for (const auto& x : TypeSpec::grade(g, 1).members(1)) {
      const auto w = projective_structure_exists(x, 1);
      if (!w) continue;
      const Scalar a = gen.nonzero_rational(), b = gen.rational();
      const AlgElem z = *w * (b / (a * a));
      const MobiusMap m = MobiusMap::from_seeds(Scalar(0), a, b);
      EXPECT_TRUE(verify_reparam(CurveSpec::at_origin(x), CurveSpec::from_exp(z, x * a), m)) << name << " " << x;
      const ReparamVerdict r = reparam_solve(x, z, x * a);
      ASSERT_TRUE(r.exists);
      EXPECT_EQ(*r.map, m);
    }
  }
}

TEST(ReparamProperty, AffineMapsOnlyNeedScaling) {
  Gen gen(46);
  for (const char* name : {"conf(1,2)", "grass(1,2)", "lagr3", "xxdot"}) {
    const auto g = make_algebra(name);
    for (const auto& x : TypeSpec::grade(g, g->depth()).members(1)) {
      const Scalar a = gen.nonzero_rational();
      const MobiusMap m(a, Scalar(0), Scalar(0), Scalar(1));
      EXPECT_TRUE(verify_reparam(CurveSpec::at_origin(x), CurveSpec::at_origin(x * a), m));
      EXPECT_EQ(*reparam_solve(x, g->zero(), x * a).map, m);
    }
  }
}
