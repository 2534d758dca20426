#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "fkw/errors.hpp"
#include "fkw/reduction.hpp"

using namespace fkw;
using namespace fkw::testing;

namespace {

struct A1 {
  RootSystemPtr rs = RootSystem::build("A1");
  Level level = Level::from_shifted(*rs, Rational(3, 2));
  Weight zero = Weight::zero(1);
  Weight quarter = weight(*rs, "-1/4");
  std::vector<Weight> orbit = {weight(*rs, "-3/4"), weight(*rs, "-1/4")};
};

}  // namespace

TEST(Reduction, DominanceExamples) {
  A1 a;
  EXPECT_TRUE(is_dominant(*a.rs, a.zero, a.level));
  for (const Rational t : {Rational(3, 2), Rational(1), Rational(-5, 2)})
    EXPECT_FALSE(is_dominant(*a.rs, weight(*a.rs, "-1"), Level::from_shifted(*a.rs, t)));
  for (const char* name : {"A1", "A2", "B2", "G2"}) {
    auto rs = RootSystem::build(name);
    const Weight minus_rho = Rational(-1) * rs->rho();
    EXPECT_TRUE(is_dominant(*rs, minus_rho, Level::from_shifted(*rs, Rational(5, 2))));
  }
  EXPECT_EQ(dominance(*a.rs, a.zero, Level::from_shifted(*a.rs, Rational(0))), Dominance::Critical);
  // Negative level: dominant only without integrality.
  EXPECT_FALSE(is_dominant(*a.rs, a.zero, Level::from_shifted(*a.rs, Rational(-3, 2))));
  EXPECT_TRUE(is_dominant(*a.rs, weight(*a.rs, "-1/3"), Level::from_shifted(*a.rs, Rational(-3, 2))));
}

TEST(Reduction, FiniteAntidominanceExamples) {
  A1 a;
  EXPECT_FALSE(is_finite_antidominant(*a.rs, a.zero));
  EXPECT_TRUE(is_finite_antidominant(*a.rs, a.quarter));
  for (const char* name : {"A2", "B3", "G2"}) {
    auto rs = RootSystem::build(name);
    EXPECT_TRUE(is_finite_antidominant(*rs, Rational(-1) * rs->rho()));
  }
}

TEST(Reduction, HCExamples) {
  A1 a;
  auto hc = hc_project(*a.rs, a.quarter);
  EXPECT_EQ(hc.orbit, a.orbit);
  EXPECT_EQ(hc.orbit_rep, weight(*a.rs, "-3/4"));
  std::mt19937 rng(1);
  for (const char* name : {"A2", "B2", "G2"}) {
    auto rs = RootSystem::build(name);
    const Weight minus_rho = Rational(-1) * rs->rho();
    EXPECT_EQ(hc_project(*rs, minus_rho).orbit.size(), 1u);
    for (const auto& w : rs->enumerate_finite_weyl()) {
      const Weight lambda = random_weight(*rs, rng);
      const auto h = hc_project(*rs, lambda);
      EXPECT_EQ(hc_project(*rs, rs->finite_dot(w, lambda)), h);
      EXPECT_EQ(rs->finite_weyl_order() % h.orbit.size(), 0u);
    }
  }
}

TEST(Reduction, StarActionExamples) {
  A1 a;
  EXPECT_EQ(star_action(AffineWeylElement::identity(a.rs), a.zero, a.level), a.zero);
  EXPECT_EQ(star_action(element(a.rs, {0}, {0}), a.zero, a.level), a.zero);
  EXPECT_EQ(star_action(element(a.rs, {}, {-1}), a.zero, a.level), a.quarter);
  EXPECT_THROW(star_action(element(a.rs, {}, {-1}), weight(*a.rs, "-1"), a.level), InputError);
}

TEST(Reduction, StarActionIsAnAction) {
  for (const char* name : {"A1", "A2"}) {
    auto rs = RootSystem::build(name);
    const Level level = Level::from_shifted(*rs, Rational(5, 3));
    const auto ball = enumerate_ball(rs, 2);
    for (const char* lam : {"0,0", "1/3,-1/3"}) {
      const Weight lambda = weight(*rs, lam);
      if (!is_dominant(*rs, lambda, level)) continue;
      for (const auto& x : ball)
        for (const auto& y : ball)
          EXPECT_EQ(star_action(x * y, lambda, level), star_action(x, star_action(y, lambda, level), level));
    }
  }
}

TEST(Reduction, ReduceExamples) {
  A1 a;
  auto r = reduce(a.rs, coweight({1}), a.zero, a.level);
  ASSERT_TRUE(r.vanishes.has_value());
  EXPECT_FALSE(*r.vanishes);
  EXPECT_EQ(r.hc->orbit, a.orbit);
  EXPECT_EQ(r.shift, 0);
  EXPECT_TRUE(r.paths_agree);

  r = reduce(a.rs, coweight({-1}), a.zero, a.level);
  EXPECT_FALSE(*r.vanishes);
  EXPECT_EQ(r.hc->orbit, a.orbit);
  EXPECT_EQ(r.shift, 1);
  EXPECT_EQ(r.witness.w_chi, element(a.rs, {0}, {0}));
  EXPECT_EQ(r.amplitude, (std::pair<std::int64_t, std::int64_t>{-1, 0}));

  r = reduce(a.rs, coweight({0}), a.zero, a.level);
  EXPECT_TRUE(*r.vanishes);
  r = reduce(a.rs, coweight({1}), a.quarter, a.level);
  EXPECT_TRUE(*r.vanishes);
  r = reduce(a.rs, coweight({0}), a.quarter, a.level);
  EXPECT_FALSE(*r.vanishes);
  EXPECT_EQ(r.shift, 0);
  EXPECT_EQ(r.hc->orbit, a.orbit);

  EXPECT_THROW(reduce(a.rs, coweight({0}), weight(*a.rs, "-1"), a.level), InputError);
  r = reduce(element(a.rs, {0}, {1}), a.zero, a.level);
  EXPECT_EQ(r.shift, 0);
}

TEST(Reduction, AmplitudeExamples) {
  A1 a;
  auto b = build_block(a.rs, a.zero, a.level);
  using Range = std::pair<std::int64_t, std::int64_t>;
  EXPECT_EQ(amplitude(AffineWeylElement::identity(a.rs), *b), (Range{0, 0}));
  EXPECT_EQ(amplitude(element(a.rs, {0}, {1}), *b), (Range{0, 0}));
  EXPECT_EQ(amplitude(element(a.rs, {}, {-1}), *b), (Range{-1, 0}));
}

TEST(Reduction, ListDominantExamples) {
  A1 a;
  EXPECT_EQ(list_dominant_in_block(a.rs, a.zero, a.level, 4), std::vector<Weight>{a.zero});
  EXPECT_EQ(list_dominant_in_block(a.rs, a.quarter, a.level, 0), std::vector<Weight>{a.quarter});
  const Weight generic = weight(*a.rs, "-1/3");
  EXPECT_EQ(list_dominant_in_block(a.rs, generic, a.level, 4), std::vector<Weight>{generic});
}

TEST(Reduction, MinusReductionSpecialization) {
  for (const char* name : {"A1", "A2"}) {
    auto rs = RootSystem::build(name);
    for (const Rational t : {Rational(3, 2), Rational(5, 3), Rational(3)}) {
      const Level level = Level::from_shifted(*rs, t);
      for (const char* lam : {"0,0", "-1/4,0", "-1/3,-1/3", "1/2,-1/2", "-1,0"}) {
        const Weight lambda = weight(*rs, lam);
        if (!is_dominant(*rs, lambda, level)) continue;
        const auto r = reduce(rs, Coweight::zero(rs->rank()), lambda, level);
        ASSERT_TRUE(r.vanishes.has_value());
        EXPECT_EQ(!*r.vanishes, is_finite_antidominant(*rs, lambda)) << name << " " << lam;
        if (!*r.vanishes) {
          EXPECT_EQ(r.shift, 0);
          EXPECT_EQ(*r.hc, hc_project(*rs, lambda));
        }
      }
    }
  }
}
