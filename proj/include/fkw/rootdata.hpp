#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fkw/rational.hpp"

namespace fkw {

/// A weight of the finite Cartan, in the simple-root basis. The level is
/// carried separately (see Level).
struct Weight {
  RatVec coords;

  Weight() = default;
  explicit Weight(RatVec c) : coords(std::move(c)) {}
  static Weight zero(int rank) { return Weight(RatVec(rank, Rational(0))); }

  std::size_t size() const { return coords.size(); }
  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& s, Weight a);
  friend bool operator==(const Weight&, const Weight&) = default;
  /// Lexicographic order on coordinates.
  friend bool operator<(const Weight& a, const Weight& b) { return a.coords < b.coords; }
};

/// An element of the coweight lattice Λ̌, stored by its pairings with the
/// simple roots, i.e. in the fundamental-coweight basis. Every integer vector
/// is a lattice point, so membership is structural.
struct Coweight {
  IntVec coords;

  Coweight() = default;
  explicit Coweight(IntVec c) : coords(std::move(c)) {}
  static Coweight zero(int rank) { return Coweight(IntVec(rank, 0)); }

  bool is_zero() const;
  Coweight& operator+=(const Coweight& o);
  Coweight& operator-=(const Coweight& o);
  friend Coweight operator+(Coweight a, const Coweight& b) { return a += b; }
  friend Coweight operator-(Coweight a, const Coweight& b) { return a -= b; }
  Coweight operator-() const;
  friend Coweight operator*(std::int64_t s, Coweight a);
  friend bool operator==(const Coweight&, const Coweight&) = default;
  friend auto operator<=>(const Coweight& a, const Coweight& b) { return a.coords <=> b.coords; }
};

/// Element of the finite Weyl group, stored as the permutation it induces on
/// the root table of its RootSystem. Only meaningful together with that
/// RootSystem.
struct FiniteWeyl {
  std::vector<int> images;     // images[r] = index of w(root r)
  std::vector<int> preimages;  // inverse permutation

  friend bool operator==(const FiniteWeyl& a, const FiniteWeyl& b) { return a.images == b.images; }
};

/// Finite root datum of a simple Lie algebra, types A-G.
///
/// Conventions:
///   cartan()[i][j] = <alpha_j, coroot_i>  (row = coroot index)
///   roots are indexed 0..N-1 (positive, simple roots first, then by height)
///   and N..2N-1 (the negatives, negate(r) = r +/- N).
///   The invariant form is normalized so that long roots have square length 2.
class RootSystem {
 public:
  /// Throws InputError for an invalid (type, rank) pair.
  static std::shared_ptr<const RootSystem> build(char type_label, int rank);
  /// Accepts "A1", "G2", "E8" etc.
  static std::shared_ptr<const RootSystem> build(const std::string& name);

  char type_label() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, type_) + std::to_string(rank_); }
  const std::vector<IntVec>& cartan() const { return cartan_; }
  std::int64_t cartan(int i, int j) const { return cartan_[i][j]; }

  int num_positive() const { return static_cast<int>(roots_.size() / 2); }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  const IntVec& root(int r) const { return roots_[r]; }
  /// Coroot of root r in the simple-coroot basis (integer).
  const IntVec& coroot(int r) const { return coroots_[r]; }
  /// (beta, beta) under the normalized form.
  const Rational& norm(int r) const { return norms_[r]; }
  /// 2 / (beta, beta): degree-n coroot (beta, n) has central coefficient n * this.
  std::int64_t central_scale(int r) const { return central_scale_[r]; }
  bool is_positive(int r) const { return r < num_positive(); }
  int negate(int r) const { return is_positive(r) ? r + num_positive() : r - num_positive(); }
  std::int64_t height(int r) const { return heights_[r]; }
  /// Height of the coroot of r in the simple-coroot basis.
  std::int64_t coroot_height(int r) const { return coroot_heights_[r]; }
  std::optional<int> find_root(const IntVec& coords) const;

  int theta() const { return theta_; }
  int h_dual() const { return h_dual_; }
  const Weight& rho() const { return rho_; }
  /// rho-check in the simple-coroot basis.
  const RatVec& rho_check() const { return rho_check_; }
  /// rho-check as a lattice coweight (all fundamental coordinates 1).
  Coweight rho_check_coweight() const { return Coweight(IntVec(rank_, 1)); }
  /// |coweight lattice / coroot lattice| = det(cartan).
  std::int64_t fundamental_group_order() const { return det_; }

  // Pairings.
  /// <lambda, gamma-check> with gamma-check given in the simple-coroot basis.
  Rational pair(const Weight& lambda, const IntVec& coroot_coords) const;
  Rational pair(const Weight& lambda, const RatVec& coroot_coords) const;
  /// <lambda, coroot of r>.
  Rational pair_root(const Weight& lambda, int r) const;
  /// <mu-check, beta_r>, always an integer.
  std::int64_t pair(const Coweight& mu, int r) const;

  /// The map t -> t* given by the normalized form; nu(theta-check) = theta.
  Weight nu(const Coweight& mu) const;
  /// Simple-coroot coordinates of a lattice coweight.
  RatVec coroot_coords(const Coweight& mu) const;
  /// Inverse of coroot_coords; throws InputError when off the lattice.
  Coweight coweight_from_coroot_coords(const RatVec& coords) const;
  /// Coroot of r as a lattice coweight.
  Coweight coweight_of_coroot(int r) const;

  // Finite Weyl group.
  FiniteWeyl identity() const;
  const FiniteWeyl& simple_reflection(int i) const { return simple_reflections_[i]; }
  FiniteWeyl reflection(int r) const;
  FiniteWeyl multiply(const FiniteWeyl& w, const FiniteWeyl& v) const;
  FiniteWeyl inverse(const FiniteWeyl& w) const;
  FiniteWeyl from_word(const std::vector<int>& word) const;
  int apply(const FiniteWeyl& w, int r) const { return w.images[r]; }
  Weight apply(const FiniteWeyl& w, const Weight& lambda) const;
  Coweight apply(const FiniteWeyl& w, const Coweight& mu) const;
  bool is_identity(const FiniteWeyl& w) const;
  int length(const FiniteWeyl& w) const;
  /// Reduced word, built from the right by always stripping the smallest
  /// right descent. Deterministic.
  std::vector<int> reduced_word(const FiniteWeyl& w) const;
  const FiniteWeyl& longest_element() const { return longest_; }
  /// w.lambda = w(lambda + rho) - rho.
  Weight finite_dot(const FiniteWeyl& w, const Weight& lambda) const;
  /// All of W_f; throws CapExceeded when |W_f| > cap.
  std::vector<FiniteWeyl> enumerate_finite_weyl(std::size_t cap = 1u << 20) const;
  std::size_t finite_weyl_order() const { return order_; }

 private:
  RootSystem() = default;
  void generate();

  char type_ = 'A';
  int rank_ = 0;
  std::vector<IntVec> cartan_;
  std::vector<IntVec> roots_;
  std::vector<IntVec> coroots_;
  std::vector<Rational> norms_;
  std::vector<std::int64_t> central_scale_;
  std::vector<std::int64_t> heights_;
  std::vector<std::int64_t> coroot_heights_;
  std::map<IntVec, int> index_;
  std::vector<Rational> simple_norms_;
  std::vector<RatVec> cartan_t_inv_;  // (A^T)^{-1}, for coroot coordinates
  int theta_ = 0;
  int h_dual_ = 0;
  Weight rho_;
  RatVec rho_check_;
  std::int64_t det_ = 1;
  std::size_t order_ = 1;
  std::vector<FiniteWeyl> simple_reflections_;
  FiniteWeyl longest_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

}  // namespace fkw
