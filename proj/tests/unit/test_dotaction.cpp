#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "fkw/dotaction.hpp"

using namespace fkw;
using namespace fkw::testing;

namespace {

const Rational kThreeHalves(3, 2);

}  // namespace

TEST(DotAction, PairingExamples) {
  auto rs = RootSystem::build("A1");
  const Level level = Level::from_shifted(*rs, kThreeHalves);
  EXPECT_EQ(level.k, Rational(-1, 2));
  EXPECT_EQ(affine_pairing(*rs, Weight::zero(1), level, {0, 0}), 1);
  EXPECT_EQ(affine_pairing(*rs, Weight::zero(1), level, {0, 1}), Rational(5, 2));

  std::mt19937 rng(7);
  for (const char* name : {"A2", "B2", "C3", "G2", "F4"}) {
    auto r = RootSystem::build(name);
    for (int trial = 0; trial < 10; ++trial) {
      const Weight lambda = random_weight(*r, rng);
      const Level lv = Level::from_shifted(*r, Rational(5, 3));
      EXPECT_EQ(affine_pairing(*r, lambda, lv, {r->theta(), 0}), r->pair_root(lambda + r->rho(), r->theta()));
      EXPECT_EQ(affine_pairing(*r, lambda, lv, {r->negate(r->theta()), 1}),
                lv.t - r->pair_root(lambda + r->rho(), r->theta()));
    }
  }
}

TEST(DotAction, DotExamples) {
  auto rs = RootSystem::build("A1");
  const Level level = Level::from_shifted(*rs, kThreeHalves);
  EXPECT_EQ(dot(AffineWeylElement::identity(rs), weight(*rs, "2/7"), level), weight(*rs, "2/7"));
  EXPECT_EQ(dot(element(rs, {}, {1}), Weight::zero(1), level), weight(*rs, "-3/4"));
  EXPECT_EQ(dot(element(rs, {0}, {1}), Weight::zero(1), level), weight(*rs, "-1/4"));
}

TEST(DotAction, ReflectionFormulaExamples) {
  auto rs = RootSystem::build("A1");
  const Level level = Level::from_shifted(*rs, kThreeHalves);
  // <lambda, (alpha, 0)> = 0 at lambda = -rho
  EXPECT_EQ(reflection_formula(*rs, {0, 0}, weight(*rs, "-1/2"), level), weight(*rs, "-1/2"));
  EXPECT_EQ(reflection_formula(*rs, {1, 1}, weight(*rs, "3/4"), level), weight(*rs, "-1/4"));
  EXPECT_EQ(reflection_formula(*rs, {0, 0}, Weight::zero(1), level), weight(*rs, "-1"));
}

TEST(DotAction, ReflectionElementExamples) {
  auto rs = RootSystem::build("A1");
  EXPECT_EQ(reflection_element(rs, {0, 0}), AffineWeylElement::finite(rs, rs->reflection(0)));
  EXPECT_EQ(reflection_element(rs, {1, 2}), element(rs, {0}, {4}));
  EXPECT_EQ(reflection_element(rs, {1, 1}), element(rs, {0}, {2}));
}

TEST(DotAction, ReflectionElementMatchesFormula) {
  std::mt19937 rng(11);
  for (const char* name : {"A1", "A2", "A3", "B2", "C3", "G2"}) {
    auto rs = RootSystem::build(name);
    for (int trial = 0; trial < 50; ++trial) {
      const AffineCoroot c = random_coroot(*rs, rng);
      const Level level = Level::from_shifted(*rs, Rational(trial % 7 + 1, trial % 3 + 1));
      const Weight lambda = random_weight(*rs, rng);
      const AffineWeylElement s = reflection_element(rs, c);
      EXPECT_EQ(dot(s, lambda, level), reflection_formula(*rs, c, lambda, level)) << name;
      EXPECT_TRUE((s * s).is_identity()) << name;
      EXPECT_EQ(act_on_coroot(s, c), negate(*rs, c)) << name;
      const Weight fixed = reflection_formula(*rs, c, lambda, level);
      EXPECT_EQ(reflection_formula(*rs, c, fixed, level), lambda);
    }
  }
}

TEST(DotAction, Equivariance) {
  std::mt19937 rng(3);
  const std::vector<std::pair<std::string, int>> cases = {{"A1", 6}, {"A2", 6}, {"B2", 4}, {"G2", 3}};
  for (const auto& [name, radius] : cases) {
    auto rs = RootSystem::build(name);
    const auto ball = enumerate_ball(rs, radius);
    for (const auto& x : ball) {
      const Level level = Level::from_shifted(*rs, Rational(5, 2));
      const Weight lambda = random_weight(*rs, rng);
      const AffineCoroot c = random_coroot(*rs, rng);
      EXPECT_EQ(affine_pairing(*rs, dot(x, lambda, level), level, act_on_coroot(x, c)),
                affine_pairing(*rs, lambda, level, c))
          << name << " " << x.to_string();
    }
  }
}

TEST(DotAction, ActionAndTranslations) {
  std::mt19937 rng(5);
  for (const char* name : {"A2", "B2", "G2"}) {
    auto rs = RootSystem::build(name);
    const auto ball = enumerate_ball(rs, 3);
    std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
    const Level level = Level::from_shifted(*rs, Rational(4, 3));
    for (int trial = 0; trial < 60; ++trial) {
      const auto& x = ball[pick(rng)];
      const auto& y = ball[pick(rng)];
      const Weight lambda = random_weight(*rs, rng);
      EXPECT_EQ(dot(x * y, lambda, level), dot(x, dot(y, lambda, level), level));
      Coweight mu = x.translation_part();
      const AffineWeylElement t = AffineWeylElement::translation(rs, mu);
      const Weight other = random_weight(*rs, rng);
      EXPECT_EQ(dot(t, lambda, level) - lambda, dot(t, other, level) - other);
    }
  }
}
