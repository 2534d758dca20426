#include "fkw/intweyl.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include <boost/integer/mod_inverse.hpp>

#include "fkw/errors.hpp"

namespace fkw {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

Progression Progression::solve(const Rational& a, const Rational& r) {
  Progression p;
  if (r == 0) {
    p.empty = !is_integer(a);
    return p;
  }
  const std::int64_t d = std::lcm(a.denominator(), r.denominator());
  const std::int64_t big_a = (a * d).numerator();
  const std::int64_t big_r = (r * d).numerator();
  // big_a + n big_r == 0 (mod d)
  const std::int64_t g = std::gcd(big_r, d);
  if (big_a % g != 0) return p;
  p.empty = false;
  p.modulus = d / g;
  if (p.modulus == 1) return p;
  const std::int64_t rr = mod(big_r / g, p.modulus);
  const std::int64_t inv = boost::integer::mod_inverse(rr, p.modulus);
  p.residue = mod(-mod(big_a / g, p.modulus) * inv, p.modulus);
  return p;
}

bool Progression::contains(std::int64_t n) const { return !empty && mod(n - residue, modulus) == 0; }

std::optional<std::int64_t> Progression::first_at_least(std::int64_t n) const {
  if (empty) return std::nullopt;
  return n + mod(residue - n, modulus);
}

std::int64_t Progression::count_in(std::int64_t lo, std::int64_t hi) const {
  if (empty || hi < lo) return 0;
  const std::int64_t first = *first_at_least(lo);
  if (first > hi) return 0;
  return (hi - first) / modulus + 1;
}

std::shared_ptr<const Block> Block::build(RootSystemPtr rs, const Weight& lambda, const Level& level) {
  if (static_cast<int>(lambda.size()) != rs->rank()) throw InputError("weight has wrong dimension");
  std::shared_ptr<Block> b(new Block());
  b->rs_ = rs;
  b->level_ = level;
  b->lambda_ = lambda;
  const Weight shifted = lambda + rs->rho();
  for (int r = 0; r < rs->num_roots(); ++r) {
    b->patterns_.push_back(Progression::solve(rs->pair_root(shifted, r), level.t * rs->central_scale(r)));
  }

  // A generator s_c of the reflection subgroup inverts no positive integral
  // coroot but c itself; only the lowest integral degree of each direction
  // can qualify.
  for (int r = 0; r < rs->num_roots(); ++r) {
    const auto n = b->patterns_[r].first_at_least(rs->is_positive(r) ? 0 : 1);
    if (!n) continue;
    const AffineCoroot c{r, *n};
    const AffineWeylElement s = reflection_element(rs, c);
    if (b->integral_inversions(s) == 1) b->generators_.push_back(c);
  }
  std::sort(b->generators_.begin(), b->generators_.end());
  for (const auto& c : b->generators_) b->generator_elements_.push_back(reflection_element(rs, c));
  b->layers_.push_back({BallEntry{AffineWeylElement::identity(rs), {}}});
  return b;
}

std::int64_t Block::integral_inversions(const AffineWeylElement& y) const {
  const RootSystem& rs = *rs_;
  std::int64_t count = 0;
  for (int g = 0; g < rs.num_roots(); ++g) {
    const std::int64_t m = rs.pair(y.translation_part(), g);
    const std::int64_t lo = rs.is_positive(g) ? 0 : 1;
    const std::int64_t hi = -m - 1 + (rs.is_positive(y.finite_part().images[g]) ? 0 : 1);
    count += patterns_[g].count_in(lo, hi);
  }
  return count;
}

namespace {

// Peels right descents among the generators; returns the remainder and the
// peeled indices (rightmost first).
std::pair<AffineWeylElement, std::vector<int>> peel(const Block& b, AffineWeylElement y) {
  std::vector<int> peeled;
  const auto& gens = b.generators();
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (!is_positive(b.root_system(), act_on_coroot(y, gens[i]))) {
        y = y * b.generator_reflections()[i];
        peeled.push_back(static_cast<int>(i));
        moved = true;
        break;
      }
    }
  }
  return {std::move(y), std::move(peeled)};
}

}  // namespace

bool Block::contains(const AffineWeylElement& y) const { return peel(*this, y).first.is_identity(); }

std::vector<int> Block::reduced_word(const AffineWeylElement& y) const {
  auto [rest, word] = peel(*this, y);
  if (!rest.is_identity()) throw NotInBlock(y.to_string() + " is not in the integral Weyl group");
  std::reverse(word.begin(), word.end());
  return word;
}

std::int64_t Block::length(const AffineWeylElement& y) const {
  return static_cast<std::int64_t>(reduced_word(y).size());
}

std::vector<BallEntry> Block::ball(int radius, int cap) const {
  if (radius < 0) return {};
  if (radius > cap) {
    std::size_t estimate = 1;
    for (int k = 0; k < radius && estimate < (std::size_t{1} << 40); ++k) estimate *= std::max<std::size_t>(generators_.size(), 1);
    throw CapExceeded("block ball radius " + std::to_string(radius) + " exceeds cap " + std::to_string(cap) +
                          " (up to ~" + std::to_string(estimate) + " elements)",
                      estimate);
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  while (static_cast<int>(layers_.size()) <= radius && !layers_.back().empty()) {
    const auto& last = layers_.back();
    std::unordered_set<AffineWeylElement, AffineWeylHash> seen;
    std::vector<BallEntry> next;
    for (const auto& entry : last) {
      for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (!is_positive(*rs_, act_on_coroot(entry.element, generators_[i]))) continue;
        AffineWeylElement y = entry.element * generator_elements_[i];
        if (!seen.insert(y).second) continue;
        std::vector<int> word = entry.word;
        word.push_back(static_cast<int>(i));
        next.push_back({std::move(y), std::move(word)});
      }
    }
    std::sort(next.begin(), next.end(), [](const BallEntry& a, const BallEntry& b) { return a.element < b.element; });
    layers_.push_back(std::move(next));
  }
  std::vector<BallEntry> out;
  for (int k = 0; k <= radius && k < static_cast<int>(layers_.size()); ++k)
    out.insert(out.end(), layers_[k].begin(), layers_[k].end());
  return out;
}

}  // namespace fkw
