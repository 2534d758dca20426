#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "fkw/affweyl.hpp"
#include "fkw/dotaction.hpp"

namespace fkw {

/// The set of integers {n : a + n r in Z}, which is empty, all of Z, or a
/// residue class n = residue (mod modulus).
struct Progression {
  bool empty = true;
  std::int64_t residue = 0;
  std::int64_t modulus = 1;

  static Progression solve(const Rational& a, const Rational& r);
  bool contains(std::int64_t n) const;
  /// Smallest member >= n.
  std::optional<std::int64_t> first_at_least(std::int64_t n) const;
  /// Number of members in [lo, hi].
  std::int64_t count_in(std::int64_t lo, std::int64_t hi) const;

  friend bool operator==(const Progression&, const Progression&) = default;
};

struct BallEntry {
  AffineWeylElement element;
  std::vector<int> word;  // indices into Block::generators()
};

/// The integral data of the block chi = lambda + (weight lattice) at a level:
/// which real affine coroots pair integrally with lambda, the Coxeter
/// generators of W_chi, and its length function.
class Block {
 public:
  static std::shared_ptr<const Block> build(RootSystemPtr rs, const Weight& lambda, const Level& level);

  const RootSystem& root_system() const { return *rs_; }
  const RootSystemPtr& root_system_ptr() const { return rs_; }
  const Level& level() const { return level_; }
  const Weight& base_weight() const { return lambda_; }

  /// Integrality pattern of the direction beta (any root index).
  const Progression& progression(int root) const { return patterns_[root]; }
  bool is_integral(const AffineCoroot& c) const { return patterns_[c.root].contains(c.degree); }
  /// Positive integral coroots whose reflections are the Coxeter generators of
  /// W_chi, sorted.
  const std::vector<AffineCoroot>& generators() const { return generators_; }
  const std::vector<AffineWeylElement>& generator_reflections() const { return generator_elements_; }
  bool is_trivial() const { return generators_.empty(); }

  /// Number of positive integral coroots c with y.c < 0 (y need not lie in W_chi).
  std::int64_t integral_inversions(const AffineWeylElement& y) const;
  bool contains(const AffineWeylElement& y) const;
  /// Reduced word of y in the generators; throws NotInBlock when y is not in W_chi.
  std::vector<int> reduced_word(const AffineWeylElement& y) const;
  /// l_chi(y); throws NotInBlock when y is not in W_chi.
  std::int64_t length(const AffineWeylElement& y) const;

  /// All y in W_chi with l_chi(y) <= radius, by increasing length, each with a
  /// reduced word. Throws CapExceeded when radius > cap.
  std::vector<BallEntry> ball(int radius, int cap = default_ball_cap()) const;

 private:
  Block() = default;

  RootSystemPtr rs_;
  Level level_;
  Weight lambda_;
  std::vector<Progression> patterns_;
  std::vector<AffineCoroot> generators_;
  std::vector<AffineWeylElement> generator_elements_;

  mutable std::mutex cache_mutex_;
  mutable std::vector<std::vector<BallEntry>> layers_;
};

using BlockPtr = std::shared_ptr<const Block>;

inline BlockPtr build_block(RootSystemPtr rs, const Weight& lambda, const Level& level) {
  return Block::build(std::move(rs), lambda, level);
}
inline const std::vector<AffineCoroot>& coxeter_generators(const Block& b) { return b.generators(); }
inline std::int64_t length_in_block(const Block& b, const AffineWeylElement& y) { return b.length(y); }
inline std::vector<BallEntry> enumerate_block_ball(const Block& b, int radius, int cap = default_ball_cap()) {
  return b.ball(radius, cap);
}

}  // namespace fkw
