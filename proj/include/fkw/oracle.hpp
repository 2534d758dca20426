#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "fkw/affweyl.hpp"
#include "fkw/intweyl.hpp"

// Brute-force recomputations from definitions. Elements are modelled as
// e^{nu} w (translation on the left), independently of AffineWeylElement;
// only the root data is shared.
namespace fkw::oracle {

struct Element {
  Coweight nu;
  FiniteWeyl w;
};

Element from_affine(const AffineWeylElement& x);
AffineWeylElement to_affine(const RootSystemPtr& rs, const Element& x);
Element multiply(const RootSystem& rs, const Element& x, const Element& y);

/// Inversions counted by scanning positive real affine coroots degree by degree.
std::int64_t oracle_length(const AffineWeylElement& x);

/// Word lengths in the affine simple reflections, by BFS from the identity of
/// W_f x| coroot lattice, for all elements of word length <= radius.
std::map<std::vector<std::int64_t>, int> word_lengths(const RootSystemPtr& rs, int radius);
/// Key used by word_lengths for an element.
std::vector<std::int64_t> key(const AffineWeylElement& x);

struct MinResult {
  AffineWeylElement element;
  std::size_t minimizers = 0;  // distinct elements attaining the minimum
};

/// argmin of length over {u w v : u in W_f, v in the W_chi ball of radius L}.
MinResult oracle_min_double_coset(const AffineWeylElement& w, const Block& b, int radius);

struct TorsorResult {
  bool torsor = false;
  std::size_t fixing_pairs = 0;
};

/// Counts (u, v) with u w_minus v = w_minus, u in W_f, v in the ball of radius L.
TorsorResult oracle_torsor(const AffineWeylElement& w_minus, const Block& b, int radius);

/// All of W_f by BFS over simple reflections.
std::vector<FiniteWeyl> finite_weyl_group(const RootSystem& rs);

}  // namespace fkw::oracle
