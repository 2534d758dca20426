#pragma once

#include "fkw/affweyl.hpp"
#include "fkw/rootdata.hpp"

namespace fkw {

/// Level k (coefficient of the basic invariant form) together with the
/// shifted level t = k + h^dual. The critical level is t == 0.
struct Level {
  Rational k;
  Rational t;

  static Level from_level(const RootSystem& rs, const Rational& k) { return {k, k + rs.h_dual()}; }
  static Level from_shifted(const RootSystem& rs, const Rational& t) { return {t - rs.h_dual(), t}; }
  bool is_critical() const { return t == 0; }

  friend bool operator==(const Level&, const Level&) = default;
};

/// <lambda, (beta, n)> := <lambda + rho, beta-check> + n * t * 2/(beta, beta).
Rational affine_pairing(const RootSystem& rs, const Weight& lambda, const Level& level, const AffineCoroot& c);

/// Level-k dot action: e^{mu} . lambda = lambda - t nu(mu), and W_f acts by the
/// rho-shifted finite action.
Weight dot(const AffineWeylElement& x, const Weight& lambda, const Level& level);

/// s_c . lambda = lambda - <lambda, c> beta, for c = (beta, n).
Weight reflection_formula(const RootSystem& rs, const AffineCoroot& c, const Weight& lambda, const Level& level);

/// The reflection s_beta e^{-n beta-check} of W attached to c = (beta, n).
AffineWeylElement reflection_element(const RootSystemPtr& rs, const AffineCoroot& c);

}  // namespace fkw
