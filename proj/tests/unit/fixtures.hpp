#pragma once

#include <random>
#include <string>

#include "fkw/affweyl.hpp"
#include "fkw/dotaction.hpp"
#include "fkw/rootdata.hpp"

namespace fkw::testing {

inline Weight weight(const RootSystem& rs, const std::string& text) {
  Weight w(parse_rational_list(text));
  w.coords.resize(rs.rank(), Rational(0));
  return w;
}

inline Coweight coweight(std::initializer_list<std::int64_t> c) { return Coweight(IntVec(c)); }

inline AffineWeylElement element(const RootSystemPtr& rs, std::initializer_list<int> word,
                                 std::initializer_list<std::int64_t> mu) {
  return AffineWeylElement(rs, rs->from_word(word), Coweight(IntVec(mu)));
}

inline Weight random_weight(const RootSystem& rs, std::mt19937& rng, int den = 6, int range = 12) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> d(1, den);
  Weight w = Weight::zero(rs.rank());
  for (auto& c : w.coords) c = Rational(num(rng), d(rng));
  return w;
}

inline AffineCoroot random_coroot(const RootSystem& rs, std::mt19937& rng, int degree = 4) {
  std::uniform_int_distribution<int> r(0, rs.num_roots() - 1);
  std::uniform_int_distribution<int> n(-degree, degree);
  return {r(rng), n(rng)};
}

}  // namespace fkw::testing
