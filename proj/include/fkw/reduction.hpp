#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fkw/cosetfact.hpp"
#include "fkw/dotaction.hpp"
#include "fkw/intweyl.hpp"

namespace fkw {

enum class Dominance { Dominant, NotDominant, Critical };

/// Kac-Kazhdan dominance: no positive real affine coroot pairs to a negative
/// integer. The critical level is reported separately.
Dominance dominance(const RootSystem& rs, const Weight& lambda, const Level& level);
inline bool is_dominant(const RootSystem& rs, const Weight& lambda, const Level& level) {
  return dominance(rs, lambda, level) == Dominance::Dominant;
}

/// No positive finite coroot pairs (rho-shifted) to a positive integer.
bool is_finite_antidominant(const RootSystem& rs, const Weight& lambda);

/// W_f dot-orbit with its lexicographically least element as representative.
struct HCClass {
  Weight orbit_rep;
  std::vector<Weight> orbit;  // sorted

  friend bool operator==(const HCClass& a, const HCClass& b) { return a.orbit_rep == b.orbit_rep; }
};

HCClass hc_project(const RootSystem& rs, const Weight& lambda);

/// The dominant weight of the W_chi orbit of x . lambda. Throws InputError when
/// lambda is not dominant.
Weight star_action(const AffineWeylElement& x, const Weight& lambda, const Level& level);

/// One path of the reduction computation.
struct PathVerdict {
  bool vanishes = true;
  std::optional<HCClass> hc;
  std::int64_t shift = 0;
};

struct ReductionResult {
  /// Unset when the two paths disagree.
  std::optional<bool> vanishes;
  std::optional<HCClass> hc;
  std::int64_t shift = 0;
  std::pair<std::int64_t, std::int64_t> amplitude{0, 0};
  Factorization witness;
  bool finite_antidominant = false;  // of w * lambda
  Weight star;                       // w * lambda
  PathVerdict goodness_path;         // via the torsor condition on e^{mu}
  PathVerdict antidominance_path;    // via finite antidominance of w * lambda
  bool paths_agree = true;
};

/// Reduction of the simple module of dominant highest weight lambda by the
/// coweight mu. Throws InputError when lambda is not dominant, Inconclusive
/// when a search budget is exhausted.
ReductionResult reduce(const RootSystemPtr& rs, const Coweight& mu, const Weight& lambda, const Level& level,
                       const Limits& limits = {});

/// Same, for an element of the minimal-coset set (the representative of the
/// spectral-flow coset). Its W_f coset must contain a translation.
ReductionResult reduce(const AffineWeylElement& w, const Weight& lambda, const Level& level, const Limits& limits = {});

/// [-l_chi(w_chi), 0].
std::pair<std::int64_t, std::int64_t> amplitude(const AffineWeylElement& w, const Block& b, const Limits& limits = {});

/// Dominant weights among {y . lambda : y in W_chi, l_chi(y) <= radius}, sorted.
std::vector<Weight> list_dominant_in_block(const RootSystemPtr& rs, const Weight& lambda, const Level& level,
                                           int radius, int cap = default_ball_cap());

}  // namespace fkw
