#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "fkw/cosetfact.hpp"
#include "fkw/errors.hpp"

using namespace fkw;
using namespace fkw::testing;

namespace {

struct A1Blocks {
  RootSystemPtr rs = RootSystem::build("A1");
  Level level = Level::from_shifted(*rs, Rational(3, 2));
  BlockPtr vacuum = build_block(rs, Weight::zero(1), level);
  BlockPtr quarter = build_block(rs, weight(*rs, "-1/4"), level);
};

}  // namespace

TEST(CosetFact, MinimalElementExamples) {
  A1Blocks a;
  const auto e = AffineWeylElement::identity(a.rs);
  EXPECT_EQ(minimal_element(e, *a.vacuum), e);
  EXPECT_EQ(minimal_element(e, *a.quarter), e);
  EXPECT_EQ(minimal_element(element(a.rs, {0}, {1}), *a.vacuum), element(a.rs, {0}, {1}));
  EXPECT_EQ(minimal_element(element(a.rs, {}, {-1}), *a.vacuum), element(a.rs, {0}, {1}));
}

TEST(CosetFact, StabilizerExamples) {
  A1Blocks a;
  EXPECT_TRUE(stabilizer_test(element(a.rs, {0}, {1}), *a.vacuum).empty());
  const auto w_minus = minimal_element(element(a.rs, {}, {1}), *a.quarter);
  const auto stab = stabilizer_test(w_minus, *a.quarter);
  EXPECT_NE(std::find(stab.begin(), stab.end(), AffineCoroot{1, 1}), stab.end());
  EXPECT_EQ(stabilizer_test(AffineWeylElement::identity(a.rs), *a.vacuum), (std::vector<AffineCoroot>{{0, 0}}));
}

TEST(CosetFact, FactorizeExamples) {
  A1Blocks a;
  const auto e = AffineWeylElement::identity(a.rs);
  auto f = factorize(element(a.rs, {0}, {1}), *a.vacuum);
  EXPECT_TRUE(a.rs->is_identity(f.w_f));
  EXPECT_EQ(f.w_minus, element(a.rs, {0}, {1}));
  EXPECT_EQ(f.w_chi, e);
  EXPECT_EQ(f.w_chi_length, 0);
  EXPECT_TRUE(f.good);

  f = factorize(element(a.rs, {}, {-1}), *a.vacuum);
  EXPECT_EQ(f.w_minus, element(a.rs, {0}, {1}));
  EXPECT_EQ(f.w_chi, element(a.rs, {0}, {0}));
  EXPECT_EQ(f.w_chi_length, 1);
  EXPECT_TRUE(f.good);
  EXPECT_EQ(f.w_minus * f.w_chi, element(a.rs, {}, {-1}));

  auto trivial = build_block(a.rs, weight(*a.rs, "-1/3"), a.level);
  f = factorize(e, *trivial);
  EXPECT_EQ(f.w_minus, e);
  EXPECT_EQ(f.w_chi, e);
  EXPECT_TRUE(f.good);

  f = factorize(element(a.rs, {}, {1}), *a.quarter);
  EXPECT_FALSE(f.good);
  EXPECT_FALSE(f.stabilizer_reflections.empty());
}

TEST(CosetFact, FactorizationIdentity) {
  for (const char* name : {"A1", "A2", "B2"}) {
    auto rs = RootSystem::build(name);
    for (const char* lam : {"0,0", "-1/3,1/3", "1/4,-1/4"}) {
      auto b = build_block(rs, weight(*rs, lam), Level::from_shifted(*rs, Rational(5, 3)));
      for (const auto& w : enumerate_ball(rs, 3)) {
        const auto f = factorize(w, *b);
        EXPECT_EQ(f.good, f.stabilizer_reflections.empty());
        EXPECT_EQ(b->length(f.w_chi), f.w_chi_length);
        EXPECT_LE(length(f.w_minus), length(w));
        EXPECT_EQ(min_rep_in_Wf_coset(f.w_minus * f.w_chi), min_rep_in_Wf_coset(w));
        if (f.good) EXPECT_EQ(AffineWeylElement::finite(rs, f.w_f) * f.w_minus * f.w_chi, w);
      }
    }
  }
}

TEST(CosetFact, ConjugateExamples) {
  A1Blocks a;
  auto c = conjugate_to_simple(*a.vacuum, {0, 0});
  EXPECT_TRUE(c.z.is_identity());
  EXPECT_EQ(c.simple, (AffineCoroot{0, 0}));

  c = conjugate_to_simple(*a.vacuum, {1, 2});
  const auto simples = affine_simple_coroots(*a.rs);
  EXPECT_NE(std::find(simples.begin(), simples.end(), c.simple), simples.end());
  EXPECT_EQ(c.z * reflection_element(a.rs, c.simple) * c.z.inverse(), reflection_element(a.rs, {1, 2}));

  c = conjugate_to_simple(*a.quarter, {1, 1});
  EXPECT_TRUE(c.z.is_identity());
  EXPECT_EQ(c.simple, (AffineCoroot{1, 1}));
}

TEST(CosetFact, ConjugationLemma) {
  const std::vector<std::tuple<std::string, std::string, Rational>> cases = {
      {"A1", "0", Rational(3, 2)},   {"A1", "-1/4", Rational(5, 2)}, {"A2", "0,0", Rational(5, 3)},
      {"A2", "1/3,1/3", Rational(5, 3)}, {"B2", "0,0", Rational(3, 2)}, {"G2", "0,0", Rational(7, 3)}};
  for (const auto& [name, lam, t] : cases) {
    auto rs = RootSystem::build(name);
    auto b = build_block(rs, weight(*rs, lam), Level::from_shifted(*rs, t));
    for (const auto& g : b->generators()) {
      const auto c = conjugate_to_simple(*b, g);
      EXPECT_EQ(c.z * reflection_element(rs, c.simple) * c.z.inverse(), reflection_element(rs, g));
      const auto zinv = c.z.inverse();
      for (int r = 0; r < rs->num_roots(); ++r) {
        for (int n = rs->is_positive(r) ? 0 : 1; n <= 8; ++n) {
          if (!b->is_integral({r, n})) continue;
          EXPECT_TRUE(is_positive(*rs, act_on_coroot(zinv, {r, n}))) << name << " " << to_string(*rs, g);
        }
      }
    }
  }
}
