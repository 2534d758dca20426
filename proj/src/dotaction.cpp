#include "fkw/dotaction.hpp"

namespace fkw {

Rational affine_pairing(const RootSystem& rs, const Weight& lambda, const Level& level, const AffineCoroot& c) {
  return rs.pair_root(lambda + rs.rho(), c.root) + Rational(c.degree * rs.central_scale(c.root)) * level.t;
}

Weight dot(const AffineWeylElement& x, const Weight& lambda, const Level& level) {
  const RootSystem& rs = x.root_system();
  Weight shifted = lambda;
  if (!x.translation_part().is_zero()) shifted -= level.t * rs.nu(x.translation_part());
  return rs.finite_dot(x.finite_part(), shifted);
}

Weight reflection_formula(const RootSystem& rs, const AffineCoroot& c, const Weight& lambda, const Level& level) {
  const Rational p = affine_pairing(rs, lambda, level, c);
  Weight out = lambda;
  const IntVec& beta = rs.root(c.root);
  for (int i = 0; i < rs.rank(); ++i) out.coords[i] -= p * beta[i];
  return out;
}

AffineWeylElement reflection_element(const RootSystemPtr& rs, const AffineCoroot& c) {
  return AffineWeylElement(rs, rs->reflection(c.root), -c.degree * rs->coweight_of_coroot(c.root));
}

}  // namespace fkw
