#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "fkw/cosetfact.hpp"
#include "fkw/oracle.hpp"

using namespace fkw;
using namespace fkw::testing;

TEST(Oracle, LengthExamples) {
  auto rs = RootSystem::build("A1");
  EXPECT_EQ(oracle::oracle_length(AffineWeylElement::identity(rs)), 0);
  EXPECT_EQ(oracle::oracle_length(element(rs, {0}, {1})), 0);
  EXPECT_EQ(oracle::oracle_length(element(rs, {}, {3})), 3);
}

TEST(Oracle, ModelRoundTrip) {
  auto rs = RootSystem::build("B2");
  const auto ball = enumerate_ball(rs, 3);
  for (const auto& x : ball) {
    EXPECT_EQ(oracle::to_affine(rs, oracle::from_affine(x)), x);
    for (const auto& y : ball) {
      const auto p = oracle::multiply(*rs, oracle::from_affine(x), oracle::from_affine(y));
      EXPECT_EQ(oracle::to_affine(rs, p), x * y);
    }
  }
}

TEST(Oracle, LengthAgreesOnBalls) {
  for (const auto& [name, radius] : std::vector<std::pair<std::string, int>>{{"A1", 6}, {"A2", 5}, {"B2", 4}, {"G2", 4}}) {
    auto rs = RootSystem::build(name);
    const auto words = oracle::word_lengths(rs, radius);
    std::size_t affine_count = 0;
    for (const auto& x : enumerate_ball(rs, radius)) {
      EXPECT_EQ(length(x), oracle::oracle_length(x)) << name << " " << x.to_string();
      auto it = words.find(oracle::key(x));
      if (it != words.end()) {
        ++affine_count;
        EXPECT_EQ(it->second, length(x)) << name << " " << x.to_string();
      }
    }
    EXPECT_EQ(affine_count, words.size()) << name;
  }
}

TEST(Oracle, MinDoubleCosetExamples) {
  auto rs = RootSystem::build("A1");
  const Level level = Level::from_shifted(*rs, Rational(3, 2));
  auto vacuum = build_block(rs, Weight::zero(1), level);
  auto quarter = build_block(rs, weight(*rs, "-1/4"), level);
  auto r = oracle::oracle_min_double_coset(AffineWeylElement::identity(rs), *vacuum, 4);
  EXPECT_TRUE(r.element.is_identity());
  r = oracle::oracle_min_double_coset(element(rs, {}, {-1}), *vacuum, 4);
  EXPECT_EQ(r.element, element(rs, {0}, {1}));
  EXPECT_EQ(r.minimizers, 1u);
  const auto w = element(rs, {0}, {1});
  r = oracle::oracle_min_double_coset(w, *quarter, 4);
  EXPECT_EQ(r.element, minimal_element(w, *quarter));
  EXPECT_EQ(r.minimizers, 1u);
}

TEST(Oracle, TorsorExamples) {
  auto rs = RootSystem::build("A1");
  const Level level = Level::from_shifted(*rs, Rational(3, 2));
  auto vacuum = build_block(rs, Weight::zero(1), level);
  auto quarter = build_block(rs, weight(*rs, "-1/4"), level);
  auto generic = build_block(rs, weight(*rs, "-1/3"), level);
  EXPECT_TRUE(oracle::oracle_torsor(AffineWeylElement::identity(rs), *generic, 4).torsor);
  EXPECT_TRUE(oracle::oracle_torsor(element(rs, {0}, {1}), *vacuum, 4).torsor);
  const auto w_minus = minimal_element(element(rs, {}, {1}), *quarter);
  EXPECT_FALSE(oracle::oracle_torsor(w_minus, *quarter, 4).torsor);
}

TEST(Oracle, AgreesWithCosetRoutines) {
  const std::vector<std::tuple<std::string, std::string, Rational>> blocks = {
      {"A1", "0", Rational(3, 2)}, {"A1", "-1/4", Rational(5, 2)}, {"A1", "-1/3", Rational(4, 3)},
      {"A2", "0,0", Rational(3)},  {"A2", "-1/3,1/3", Rational(5, 3)}};
  for (const auto& [name, lam, t] : blocks) {
    auto rs = RootSystem::build(name);
    auto b = build_block(rs, weight(*rs, lam), Level::from_shifted(*rs, t));
    for (const auto& w : enumerate_ball(rs, rs->rank() == 1 ? 4 : 3)) {
      const auto w_minus = minimal_element(w, *b);
      const auto o = oracle::oracle_min_double_coset(w, *b, 5);
      EXPECT_EQ(o.element, w_minus) << name << " " << lam << " " << w.to_string();
      EXPECT_EQ(o.minimizers, 1u);
      EXPECT_EQ(stabilizer_test(w_minus, *b).empty(), oracle::oracle_torsor(w_minus, *b, 5).torsor);
    }
  }
}
