#include "fkw/reduction.hpp"

#include <set>

#include "fkw/errors.hpp"

namespace fkw {

namespace {

// Number of positive integral coroots with negative pairing, for t > 0.
std::int64_t negative_integral_count(const Block& b, const Weight& mu) {
  const RootSystem& rs = b.root_system();
  const Weight shifted = mu + rs.rho();
  std::int64_t count = 0;
  for (int r = 0; r < rs.num_roots(); ++r) {
    const Progression& p = b.progression(r);
    if (p.empty) continue;
    const Rational a = rs.pair_root(shifted, r);
    const Rational step = b.level().t * rs.central_scale(r);
    // a + n step < 0  <=>  n < -a / step
    count += p.count_in(rs.is_positive(r) ? 0 : 1, ceil(-a / step) - 1);
  }
  return count;
}

void require_dominant(const RootSystem& rs, const Weight& lambda, const Level& level) {
  switch (dominance(rs, lambda, level)) {
    case Dominance::Dominant:
      return;
    case Dominance::Critical:
      throw InputError("critical level: dominance is undefined");
    case Dominance::NotDominant:
      throw InputError("weight " + to_string(lambda.coords) + " is not dominant at shifted level " +
                       to_string(level.t));
  }
}

}  // namespace

Dominance dominance(const RootSystem& rs, const Weight& lambda, const Level& level) {
  if (static_cast<int>(lambda.size()) != rs.rank()) throw InputError("weight has wrong dimension");
  if (level.is_critical()) return Dominance::Critical;
  const Weight shifted = lambda + rs.rho();
  for (int r = 0; r < rs.num_roots(); ++r) {
    const Rational a = rs.pair_root(shifted, r);
    const Rational step = level.t * rs.central_scale(r);
    const Progression p = Progression::solve(a, step);
    if (p.empty) continue;
    if (level.t < 0) return Dominance::NotDominant;
    const std::int64_t n = *p.first_at_least(rs.is_positive(r) ? 0 : 1);
    if (a + step * n < 0) return Dominance::NotDominant;
  }
  return Dominance::Dominant;
}

bool is_finite_antidominant(const RootSystem& rs, const Weight& lambda) {
  const Weight shifted = lambda + rs.rho();
  for (int r = 0; r < rs.num_positive(); ++r) {
    const Rational p = rs.pair_root(shifted, r);
    if (is_integer(p) && p > 0) return false;
  }
  return true;
}

HCClass hc_project(const RootSystem& rs, const Weight& lambda) {
  std::set<Weight> orbit;
  for (const auto& w : rs.enumerate_finite_weyl()) orbit.insert(rs.finite_dot(w, lambda));
  HCClass out;
  out.orbit.assign(orbit.begin(), orbit.end());
  out.orbit_rep = out.orbit.front();
  return out;
}

Weight star_action(const AffineWeylElement& x, const Weight& lambda, const Level& level) {
  const RootSystem& rs = x.root_system();
  require_dominant(rs, lambda, level);
  Weight mu = dot(x, lambda, level);
  const BlockPtr block = Block::build(x.root_system_ptr(), mu, level);
  if (block->is_trivial()) return mu;
  std::int64_t remaining = negative_integral_count(*block, mu);
  for (;;) {
    const AffineCoroot* down = nullptr;
    for (const auto& g : block->generators()) {
      if (affine_pairing(rs, mu, level, g) < 0) {
        down = &g;
        break;
      }
    }
    if (!down) break;
    mu = reflection_formula(rs, *down, mu, level);
    const std::int64_t now = negative_integral_count(*block, mu);
    if (now != remaining - 1) throw IntegrityError("straightening did not lower the negative count by one");
    remaining = now;
  }
  if (remaining != 0) throw IntegrityError("straightening stopped at a non-dominant weight");
  return mu;
}

ReductionResult reduce(const RootSystemPtr& rs, const Coweight& mu, const Weight& lambda, const Level& level,
                       const Limits& limits) {
  if (static_cast<int>(mu.coords.size()) != rs->rank()) throw InputError("coweight has wrong dimension");
  require_dominant(*rs, lambda, level);
  const BlockPtr block = Block::build(rs, lambda, level);
  ReductionResult out;

  const Factorization fa = factorize(AffineWeylElement::translation(rs, mu), *block, limits);
  out.goodness_path.vanishes = !fa.good;
  out.goodness_path.shift = fa.w_chi_length;
  if (fa.good) out.goodness_path.hc = hc_project(*rs, dot(fa.w_minus, lambda, level));

  const AffineWeylElement w = coweight_to_fW(rs, mu);
  const Factorization fb = factorize(w, *block, limits);
  if (!(fb.w_minus == fa.w_minus) || fb.w_chi_length != fa.w_chi_length)
    throw IntegrityError("factorizations of e^mu and its minimal coset representative differ");
  out.star = star_action(w, lambda, level);
  out.finite_antidominant = is_finite_antidominant(*rs, out.star);
  out.antidominance_path.vanishes = !out.finite_antidominant;
  out.antidominance_path.shift = fb.w_chi_length;
  if (out.finite_antidominant) out.antidominance_path.hc = hc_project(*rs, out.star);

  const PathVerdict& a = out.goodness_path;
  const PathVerdict& b = out.antidominance_path;
  out.paths_agree = a.vanishes == b.vanishes && (a.vanishes || (a.hc == b.hc && a.shift == b.shift));
  if (out.paths_agree) {
    out.vanishes = a.vanishes;
    if (!a.vanishes) {
      out.hc = a.hc;
      out.shift = a.shift;
    }
  }
  out.amplitude = {-fa.w_chi_length, 0};
  out.witness = fa;
  return out;
}

ReductionResult reduce(const AffineWeylElement& w, const Weight& lambda, const Level& level, const Limits& limits) {
  // w = u e^{mu} lies in W_f e^{mu}.
  return reduce(w.root_system_ptr(), w.translation_part(), lambda, level, limits);
}

std::pair<std::int64_t, std::int64_t> amplitude(const AffineWeylElement& w, const Block& b, const Limits& limits) {
  return {-factorize(w, b, limits).w_chi_length, 0};
}

std::vector<Weight> list_dominant_in_block(const RootSystemPtr& rs, const Weight& lambda, const Level& level,
                                           int radius, int cap) {
  require_dominant(*rs, lambda, level);
  const BlockPtr block = Block::build(rs, lambda, level);
  std::set<Weight> out;
  for (const auto& entry : block->ball(radius, cap)) {
    Weight mu = dot(entry.element, lambda, level);
    if (is_dominant(*rs, mu, level)) out.insert(std::move(mu));
  }
  return {out.begin(), out.end()};
}

}  // namespace fkw
