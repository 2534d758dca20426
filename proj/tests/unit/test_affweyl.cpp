#include <gtest/gtest.h>

#include "fkw/affweyl.hpp"

using namespace fkw;

TEST(AffineWeyl, LongestTimesRhoCheck) {
  const std::vector<std::pair<std::string, std::int64_t>> expected = {
      {"A1", 0}, {"A2", 1}, {"A3", 4}, {"B2", 3}, {"G2", 10}};
  for (const auto& [name, l] : expected) {
    auto rs = RootSystem::build(name);
    AffineWeylElement x(rs, rs->longest_element(), rs->rho_check_coweight());
    EXPECT_EQ(length(x), l) << name;
  }
}
