#include <gtest/gtest.h>

#include "fkw/rootdata.hpp"

using namespace fkw;

TEST(RootData, Sizes) {
  struct Row { std::string name; int positive; int h_dual; std::int64_t det; std::size_t order; };
  const std::vector<Row> rows = {
      {"A1", 1, 2, 2, 2},     {"A2", 3, 3, 3, 6},    {"A3", 6, 4, 4, 24},   {"B2", 4, 3, 2, 8},
      {"B3", 9, 5, 2, 48},    {"C3", 9, 4, 2, 48},   {"D4", 12, 6, 4, 192}, {"G2", 6, 4, 1, 12},
      {"F4", 24, 9, 1, 1152}, {"E6", 36, 12, 3, 51840},
  };
  for (const auto& row : rows) {
    auto rs = RootSystem::build(row.name);
    EXPECT_EQ(rs->num_positive(), row.positive) << row.name;
    EXPECT_EQ(rs->h_dual(), row.h_dual) << row.name;
    EXPECT_EQ(rs->fundamental_group_order(), row.det) << row.name;
    EXPECT_EQ(rs->finite_weyl_order(), row.order) << row.name;
  }
}
