#pragma once

#include <cstdint>
#include <vector>

#include "fkw/affweyl.hpp"
#include "fkw/intweyl.hpp"

namespace fkw {

/// Search budgets shared by the double-coset routines.
struct Limits {
  int ball_cap = default_ball_cap();
  /// Extra length allowed above the candidate minimum in the verification BFS.
  int slack = 2;
  /// Maximum number of coset nodes visited by the verification BFS.
  std::size_t node_budget = 200000;
  /// Largest finite Weyl group that may be enumerated.
  std::size_t weyl_cap = 1u << 20;
};

/// w = w_f w_minus w_chi, with w_minus minimal in W_f w W_chi and w_chi of
/// minimal l_chi among the choices.
struct Factorization {
  FiniteWeyl w_f;
  AffineWeylElement w_minus;
  AffineWeylElement w_chi;
  std::int64_t w_chi_length = 0;
  bool good = false;
  std::vector<AffineCoroot> stabilizer_reflections;
};

/// The unique element of minimal length in W_f w W_chi. Throws IntegrityError
/// on a tie and Inconclusive when the verification BFS runs out of budget.
AffineWeylElement minimal_element(const AffineWeylElement& w, const Block& b, const Limits& limits = {});

/// Positive integral coroots c with w_minus . c of degree zero, i.e. the
/// reflections of w_minus^{-1} W_f w_minus that lie in W_chi.
std::vector<AffineCoroot> stabilizer_test(const AffineWeylElement& w_minus, const Block& b);

Factorization factorize(const AffineWeylElement& w, const Block& b, const Limits& limits = {});

struct Conjugation {
  AffineWeylElement z;
  AffineCoroot simple;  // an affine simple coroot with z s_simple z^{-1} = s_c
};

/// Conjugates the reflection of c to an affine simple reflection by repeated
/// height-lowering simple reflections.
Conjugation conjugate_to_simple(const Block& b, const AffineCoroot& c);

/// Height of c in the basis of affine simple coroots.
std::int64_t affine_height(const RootSystem& rs, const AffineCoroot& c);

}  // namespace fkw
