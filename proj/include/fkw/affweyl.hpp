#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fkw/rootdata.hpp"

namespace fkw {

/// Real affine coroot (beta, n): the coroot of the real affine root
/// beta + n*delta. Positive when n > 0, or n == 0 and beta > 0.
struct AffineCoroot {
  int root = 0;  // index into the RootSystem root table
  std::int64_t degree = 0;

  friend bool operator==(const AffineCoroot&, const AffineCoroot&) = default;
  friend auto operator<=>(const AffineCoroot&, const AffineCoroot&) = default;
};

bool is_positive(const RootSystem& rs, const AffineCoroot& c);
AffineCoroot negate(const RootSystem& rs, const AffineCoroot& c);
/// "(a1+a2, 3)" style text; root written in the simple-root basis.
std::string to_string(const RootSystem& rs, const AffineCoroot& c);

/// Element w e^{mu} of the extended affine Weyl group W = W_f x| coweights.
///
/// Product rule: (w e^mu)(v e^nu) = wv e^{v^{-1}(mu) + nu}.
/// Action on real affine coroots: (w e^mu)(beta, n) = (w beta, n + <mu, beta>).
class AffineWeylElement {
 public:
  AffineWeylElement() = default;
  AffineWeylElement(RootSystemPtr rs, FiniteWeyl w, Coweight mu);

  static AffineWeylElement identity(RootSystemPtr rs);
  static AffineWeylElement translation(RootSystemPtr rs, Coweight mu);
  static AffineWeylElement finite(RootSystemPtr rs, FiniteWeyl w);
  /// Product of simple reflections s_{i_1} ... s_{i_k} of W_f (0-based).
  static AffineWeylElement from_finite_word(RootSystemPtr rs, const std::vector<int>& word);

  const RootSystem& root_system() const { return *rs_; }
  const RootSystemPtr& root_system_ptr() const { return rs_; }
  const FiniteWeyl& finite_part() const { return w_; }
  const Coweight& translation_part() const { return mu_; }

  bool is_identity() const;
  AffineWeylElement inverse() const;

  /// Canonical text "s1.s2 * t[1,-1]"; "e" for the identity finite part.
  /// Translation coordinates are in the fundamental-coweight basis.
  std::string to_string() const;

  friend bool operator==(const AffineWeylElement& a, const AffineWeylElement& b) {
    return a.w_ == b.w_ && a.mu_ == b.mu_;
  }
  /// Total order used for deterministic output (not a group-theoretic order).
  friend bool operator<(const AffineWeylElement& a, const AffineWeylElement& b);
  std::size_t hash() const;

 private:
  RootSystemPtr rs_;
  FiniteWeyl w_;
  Coweight mu_;
};

struct AffineWeylHash {
  std::size_t operator()(const AffineWeylElement& x) const { return x.hash(); }
};

/// Throws InputError when x and y live over different root systems.
AffineWeylElement multiply(const AffineWeylElement& x, const AffineWeylElement& y);
inline AffineWeylElement operator*(const AffineWeylElement& x, const AffineWeylElement& y) {
  return multiply(x, y);
}

AffineCoroot act_on_coroot(const AffineWeylElement& x, const AffineCoroot& c);

/// Number of positive real affine coroots sent to negative ones:
/// sum over beta > 0 of |<mu, beta> - [w beta < 0]|.
std::int64_t length(const AffineWeylElement& x);

/// Calls visit(c) for every positive real affine coroot c with x.c < 0.
void for_each_inversion(const AffineWeylElement& x, const std::function<void(const AffineCoroot&)>& visit);

/// Unique minimal-length element of the coset W_f x.
AffineWeylElement min_rep_in_Wf_coset(const AffineWeylElement& x);

/// Minimal-length representative of W_f e^{mu}.
AffineWeylElement coweight_to_fW(const RootSystemPtr& rs, const Coweight& mu);

/// Affine simple reflections: s_1..s_r of W_f, then s_0 (reflection in (-theta, 1)).
std::vector<AffineWeylElement> affine_simple_reflections(const RootSystemPtr& rs);
/// Simple affine coroots in the same order: (alpha_i, 0), then (-theta, 1).
std::vector<AffineCoroot> affine_simple_coroots(const RootSystem& rs);
/// The length-zero subgroup (isomorphic to coweights / coroots), identity first.
std::vector<AffineWeylElement> length_zero_elements(const RootSystemPtr& rs);

/// Default cap on ball radius; the FKW_BALL_CAP environment variable overrides it.
int default_ball_cap();

/// All x with length(x) <= radius, each once, ordered by length and then by
/// the deterministic element order. Throws CapExceeded when radius > cap.
std::vector<AffineWeylElement> enumerate_ball(const RootSystemPtr& rs, int radius, int cap = default_ball_cap());

}  // namespace fkw
