#include "fkw/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace fkw::oracle {

Element from_affine(const AffineWeylElement& x) {
  // w e^{mu} = e^{w mu} w
  const RootSystem& rs = x.root_system();
  return {rs.apply(x.finite_part(), x.translation_part()), x.finite_part()};
}

AffineWeylElement to_affine(const RootSystemPtr& rs, const Element& x) {
  return AffineWeylElement(rs, x.w, rs->apply(rs->inverse(x.w), x.nu));
}

Element multiply(const RootSystem& rs, const Element& x, const Element& y) {
  return {x.nu + rs.apply(x.w, y.nu), rs.multiply(x.w, y.w)};
}

namespace {

std::int64_t scan_length(const RootSystem& rs, const Element& x) {
  std::int64_t bound = 0;
  for (int r = 0; r < rs.num_roots(); ++r) bound = std::max(bound, std::abs(rs.pair(x.nu, r)));
  bound += 1;
  std::int64_t count = 0;
  for (int r = 0; r < rs.num_roots(); ++r) {
    const int image = x.w.images[r];
    const std::int64_t shift = rs.pair(x.nu, image);
    for (std::int64_t n = rs.is_positive(r) ? 0 : 1; n <= bound; ++n) {
      const std::int64_t d = n + shift;
      if (d < 0 || (d == 0 && !rs.is_positive(image))) ++count;
    }
  }
  return count;
}

bool same(const Element& a, const Element& b) { return a.w == b.w && a.nu == b.nu; }

}  // namespace

std::int64_t oracle_length(const AffineWeylElement& x) { return scan_length(x.root_system(), from_affine(x)); }

std::vector<FiniteWeyl> finite_weyl_group(const RootSystem& rs) {
  std::vector<FiniteWeyl> group{rs.identity()};
  std::set<std::vector<int>> seen{group.front().images};
  for (std::size_t k = 0; k < group.size(); ++k) {
    for (int i = 0; i < rs.rank(); ++i) {
      FiniteWeyl next = rs.multiply(group[k], rs.simple_reflection(i));
      if (seen.insert(next.images).second) group.push_back(std::move(next));
    }
  }
  return group;
}

std::vector<std::int64_t> key(const AffineWeylElement& x) {
  const RootSystem& rs = x.root_system();
  std::vector<std::int64_t> out(x.finite_part().images.begin(), x.finite_part().images.begin() + rs.rank());
  out.insert(out.end(), x.translation_part().coords.begin(), x.translation_part().coords.end());
  return out;
}

std::map<std::vector<std::int64_t>, int> word_lengths(const RootSystemPtr& rs, int radius) {
  std::vector<Element> simples;
  for (int i = 0; i < rs->rank(); ++i) simples.push_back({Coweight::zero(rs->rank()), rs->simple_reflection(i)});
  // The reflection in (-theta, 1) is e^{-theta-check} s_theta.
  simples.push_back({-rs->coweight_of_coroot(rs->theta()), rs->reflection(rs->theta())});

  std::map<std::vector<std::int64_t>, int> dist;
  Element e{Coweight::zero(rs->rank()), rs->identity()};
  dist[key(to_affine(rs, e))] = 0;
  std::vector<Element> frontier{e};
  for (int d = 1; d <= radius; ++d) {
    std::vector<Element> next;
    for (const auto& x : frontier) {
      for (const auto& s : simples) {
        Element y = multiply(*rs, x, s);
        auto k = key(to_affine(rs, y));
        if (dist.emplace(std::move(k), d).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

MinResult oracle_min_double_coset(const AffineWeylElement& w, const Block& b, int radius) {
  const RootSystemPtr& rs = w.root_system_ptr();
  const Element x = from_affine(w);
  std::vector<Element> best;
  std::int64_t best_len = -1;
  for (const auto& u : finite_weyl_group(*rs)) {
    const Element ux = multiply(*rs, {Coweight::zero(rs->rank()), u}, x);
    for (const auto& entry : b.ball(radius, std::max(radius, default_ball_cap()))) {
      Element y = multiply(*rs, ux, from_affine(entry.element));
      const std::int64_t l = scan_length(*rs, y);
      if (best_len < 0 || l < best_len) {
        best_len = l;
        best = {std::move(y)};
      } else if (l == best_len &&
                 std::none_of(best.begin(), best.end(), [&](const Element& z) { return same(z, y); })) {
        best.push_back(std::move(y));
      }
    }
  }
  return {to_affine(rs, best.front()), best.size()};
}

TorsorResult oracle_torsor(const AffineWeylElement& w_minus, const Block& b, int radius) {
  const RootSystemPtr& rs = w_minus.root_system_ptr();
  const Element x = from_affine(w_minus);
  const auto ball = b.ball(radius, std::max(radius, default_ball_cap()));
  TorsorResult out;
  for (const auto& u : finite_weyl_group(*rs)) {
    const Element ux = multiply(*rs, {Coweight::zero(rs->rank()), u}, x);
    for (const auto& entry : ball) {
      if (same(multiply(*rs, ux, from_affine(entry.element)), x)) ++out.fixing_pairs;
    }
  }
  out.torsor = out.fixing_pairs == 1;
  return out;
}

}  // namespace fkw::oracle
