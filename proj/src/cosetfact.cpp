#include "fkw/cosetfact.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <unordered_set>

#include "fkw/dotaction.hpp"
#include "fkw/errors.hpp"

namespace fkw {

namespace {

// Greedy descent: left W_f simple reflections, right W_chi generators.
AffineWeylElement descend(AffineWeylElement x, const Block& b) {
  const RootSystemPtr& rs = x.root_system_ptr();
  bool moved = true;
  while (moved) {
    moved = false;
    const AffineWeylElement inv = x.inverse();
    for (int i = 0; i < rs->rank() && !moved; ++i) {
      if (!is_positive(*rs, act_on_coroot(inv, {i, 0}))) {
        x = AffineWeylElement::finite(rs, rs->simple_reflection(i)) * x;
        moved = true;
      }
    }
    for (std::size_t i = 0; i < b.generators().size() && !moved; ++i) {
      if (!is_positive(*rs, act_on_coroot(x, b.generators()[i]))) {
        x = x * b.generator_reflections()[i];
        moved = true;
      }
    }
  }
  return x;
}

}  // namespace

AffineWeylElement minimal_element(const AffineWeylElement& w, const Block& b, const Limits& limits) {
  const RootSystemPtr& rs = w.root_system_ptr();
  std::vector<AffineWeylElement> left;
  for (int i = 0; i < rs->rank(); ++i) left.push_back(AffineWeylElement::finite(rs, rs->simple_reflection(i)));

  AffineWeylElement best = descend(w, b);
  for (;;) {
    const std::int64_t best_len = length(best);
    const std::int64_t bound = best_len + limits.slack;
    std::unordered_set<AffineWeylElement, AffineWeylHash> seen{best};
    std::deque<AffineWeylElement> queue{best};
    std::optional<AffineWeylElement> lower;
    std::optional<AffineWeylElement> rival;
    while (!queue.empty() && !lower) {
      const AffineWeylElement x = queue.front();
      queue.pop_front();
      std::vector<AffineWeylElement> next;
      for (const auto& s : left) next.push_back(s * x);
      for (const auto& g : b.generator_reflections()) next.push_back(x * g);
      for (auto& y : next) {
        const std::int64_t l = length(y);
        if (l > bound || seen.count(y)) continue;
        if (l < best_len) {
          lower = y;
          break;
        }
        if (l == best_len && !rival) rival = y;
        if (seen.size() >= limits.node_budget) throw Inconclusive("minimal-element search exceeded its node budget");
        seen.insert(y);
        queue.push_back(std::move(y));
      }
    }
    if (!lower && rival) {
      throw IntegrityError("double coset has two minimal elements: " + best.to_string() + " and " +
                           rival->to_string());
    }
    if (!lower) return best;
    best = descend(*lower, b);
  }
}

std::vector<AffineCoroot> stabilizer_test(const AffineWeylElement& w_minus, const Block& b) {
  const RootSystem& rs = w_minus.root_system();
  const AffineWeylElement inv = w_minus.inverse();
  std::vector<AffineCoroot> out;
  for (int r = 0; r < rs.num_roots(); ++r) {
    const AffineCoroot c = act_on_coroot(inv, {r, 0});
    if (is_positive(rs, c) && b.is_integral(c)) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Factorization factorize(const AffineWeylElement& w, const Block& b, const Limits& limits) {
  const RootSystemPtr& rs = w.root_system_ptr();
  Factorization f;
  f.w_minus = minimal_element(w, b, limits);
  f.stabilizer_reflections = stabilizer_test(f.w_minus, b);
  f.good = f.stabilizer_reflections.empty();

  // w = u w_minus y for u in W_f and y in W_chi; scan u and keep the y of
  // least l_chi.
  const AffineWeylElement w_minus_inv = f.w_minus.inverse();
  std::optional<std::int64_t> best;
  bool tie = false;
  for (const FiniteWeyl& u : rs->enumerate_finite_weyl(limits.weyl_cap)) {
    const AffineWeylElement y = w_minus_inv * AffineWeylElement::finite(rs, rs->inverse(u)) * w;
    if (!b.contains(y)) continue;
    const std::int64_t l = b.length(y);
    if (!best || l < *best) {
      best = l;
      tie = false;
      f.w_f = u;
      f.w_chi = y;
    } else if (l == *best) {
      tie = true;
    }
  }
  if (!best) throw IntegrityError("no factorization through the minimal element of " + w.to_string());
  if (tie) throw IntegrityError("coset of the stabilizer has two minimal elements for " + w.to_string());
  f.w_chi_length = *best;
  if (f.good && !(AffineWeylElement::finite(rs, f.w_f) * f.w_minus * f.w_chi == w))
    throw IntegrityError("factorization identity fails for " + w.to_string());
  return f;
}

std::int64_t affine_height(const RootSystem& rs, const AffineCoroot& c) {
  return rs.coroot_height(c.root) + c.degree * rs.central_scale(c.root) * rs.h_dual();
}

Conjugation conjugate_to_simple(const Block& b, const AffineCoroot& c) {
  const RootSystemPtr& rs = b.root_system_ptr();
  if (!is_positive(*rs, c)) throw InputError("conjugate_to_simple needs a positive coroot");
  const auto simples = affine_simple_coroots(*rs);
  const auto reflections = affine_simple_reflections(rs);
  AffineWeylElement z = AffineWeylElement::identity(rs);
  AffineCoroot cur = c;
  for (;;) {
    if (std::find(simples.begin(), simples.end(), cur) != simples.end()) return {z, cur};
    const std::int64_t h = affine_height(*rs, cur);
    bool stepped = false;
    for (std::size_t j = 0; j < simples.size(); ++j) {
      const AffineCoroot next = act_on_coroot(reflections[j], cur);
      if (is_positive(*rs, next) && affine_height(*rs, next) < h) {
        z = z * reflections[j];
        cur = next;
        stepped = true;
        break;
      }
    }
    if (!stepped) throw IntegrityError("no simple reflection lowers " + to_string(*rs, cur));
  }
}

}  // namespace fkw
