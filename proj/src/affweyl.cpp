#include "fkw/affweyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <unordered_set>

#include "fkw/errors.hpp"

namespace fkw {

bool is_positive(const RootSystem& rs, const AffineCoroot& c) {
  return c.degree > 0 || (c.degree == 0 && rs.is_positive(c.root));
}

AffineCoroot negate(const RootSystem& rs, const AffineCoroot& c) { return {rs.negate(c.root), -c.degree}; }

std::string to_string(const RootSystem& rs, const AffineCoroot& c) {
  std::ostringstream os;
  os << '(';
  const IntVec& v = rs.root(c.root);
  bool first = true;
  for (int i = 0; i < rs.rank(); ++i) {
    if (v[i] == 0) continue;
    if (v[i] < 0) os << '-';
    else if (!first) os << '+';
    if (std::abs(v[i]) != 1) os << std::abs(v[i]);
    os << 'a' << (i + 1);
    first = false;
  }
  os << ", " << c.degree << ')';
  return os.str();
}

AffineWeylElement::AffineWeylElement(RootSystemPtr rs, FiniteWeyl w, Coweight mu)
    : rs_(std::move(rs)), w_(std::move(w)), mu_(std::move(mu)) {}

AffineWeylElement AffineWeylElement::identity(RootSystemPtr rs) {
  FiniteWeyl w = rs->identity();
  Coweight mu = Coweight::zero(rs->rank());
  return AffineWeylElement(std::move(rs), std::move(w), std::move(mu));
}

AffineWeylElement AffineWeylElement::translation(RootSystemPtr rs, Coweight mu) {
  if (static_cast<int>(mu.coords.size()) != rs->rank()) throw InputError("coweight has wrong dimension");
  FiniteWeyl w = rs->identity();
  return AffineWeylElement(std::move(rs), std::move(w), std::move(mu));
}

AffineWeylElement AffineWeylElement::finite(RootSystemPtr rs, FiniteWeyl w) {
  Coweight mu = Coweight::zero(rs->rank());
  return AffineWeylElement(std::move(rs), std::move(w), std::move(mu));
}

AffineWeylElement AffineWeylElement::from_finite_word(RootSystemPtr rs, const std::vector<int>& word) {
  FiniteWeyl w = rs->from_word(word);
  return finite(std::move(rs), std::move(w));
}

bool AffineWeylElement::is_identity() const { return mu_.is_zero() && rs_->is_identity(w_); }

AffineWeylElement AffineWeylElement::inverse() const {
  // (w e^mu)^{-1} = e^{-mu} w^{-1} = w^{-1} e^{-w(mu)}
  return AffineWeylElement(rs_, rs_->inverse(w_), -rs_->apply(w_, mu_));
}

std::string AffineWeylElement::to_string() const {
  std::ostringstream os;
  const auto word = rs_->reduced_word(w_);
  if (word.empty()) {
    os << 'e';
  } else {
    for (std::size_t i = 0; i < word.size(); ++i) os << (i ? "." : "") << 's' << (word[i] + 1);
  }
  os << " * t[";
  for (std::size_t i = 0; i < mu_.coords.size(); ++i) os << (i ? "," : "") << mu_.coords[i];
  os << ']';
  return os.str();
}

bool operator<(const AffineWeylElement& a, const AffineWeylElement& b) {
  if (a.w_.images != b.w_.images) return a.w_.images < b.w_.images;
  return a.mu_.coords < b.mu_.coords;
}

std::size_t AffineWeylElement::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
  const int r = rs_ ? rs_->rank() : 0;
  for (int i = 0; i < r; ++i) mix(static_cast<std::size_t>(w_.images[i]));
  for (auto c : mu_.coords) mix(static_cast<std::size_t>(c));
  return h;
}

AffineWeylElement multiply(const AffineWeylElement& x, const AffineWeylElement& y) {
  const RootSystemPtr& rs = x.root_system_ptr();
  if (rs != y.root_system_ptr()) {
    if (!rs || !y.root_system_ptr() || rs->name() != y.root_system().name())
      throw InputError("cannot multiply elements of different affine Weyl groups");
  }
  // (w e^mu)(v e^nu) = wv e^{v^{-1}(mu) + nu}
  const FiniteWeyl& v = y.finite_part();
  return AffineWeylElement(rs, rs->multiply(x.finite_part(), v),
                           rs->apply(rs->inverse(v), x.translation_part()) + y.translation_part());
}

AffineCoroot act_on_coroot(const AffineWeylElement& x, const AffineCoroot& c) {
  const RootSystem& rs = x.root_system();
  return {rs.apply(x.finite_part(), c.root), c.degree + rs.pair(x.translation_part(), c.root)};
}

std::int64_t length(const AffineWeylElement& x) {
  const RootSystem& rs = x.root_system();
  std::int64_t l = 0;
  for (int b = 0; b < rs.num_positive(); ++b) {
    const std::int64_t m = rs.pair(x.translation_part(), b);
    const std::int64_t flip = rs.is_positive(x.finite_part().images[b]) ? 0 : 1;
    l += std::abs(m - flip);
  }
  return l;
}

void for_each_inversion(const AffineWeylElement& x, const std::function<void(const AffineCoroot&)>& visit) {
  const RootSystem& rs = x.root_system();
  for (int g = 0; g < rs.num_roots(); ++g) {
    const std::int64_t m = rs.pair(x.translation_part(), g);
    const std::int64_t lo = rs.is_positive(g) ? 0 : 1;
    const std::int64_t hi = -m - 1 + (rs.is_positive(x.finite_part().images[g]) ? 0 : 1);
    for (std::int64_t n = lo; n <= hi; ++n) visit({g, n});
  }
}

namespace {

bool sends_negative(const AffineWeylElement& x, const AffineCoroot& c) {
  return !is_positive(x.root_system(), act_on_coroot(x, c));
}

// Strips right descents among the affine simple reflections.
AffineWeylElement strip_right_descents(AffineWeylElement x, const std::vector<AffineWeylElement>& simples,
                                       const std::vector<AffineCoroot>& simple_coroots) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i < simples.size(); ++i) {
      if (sends_negative(x, simple_coroots[i])) {
        x = x * simples[i];
        moved = true;
        break;
      }
    }
  }
  return x;
}

}  // namespace

AffineWeylElement min_rep_in_Wf_coset(const AffineWeylElement& x) {
  const RootSystemPtr& rs = x.root_system_ptr();
  AffineWeylElement cur = x;
  bool moved = true;
  while (moved) {
    moved = false;
    const AffineWeylElement inv = cur.inverse();
    for (int i = 0; i < rs->rank(); ++i) {
      // l(s_i x) < l(x) iff x^{-1}(alpha_i, 0) < 0
      if (sends_negative(inv, {i, 0})) {
        cur = AffineWeylElement::finite(rs, rs->simple_reflection(i)) * cur;
        moved = true;
        break;
      }
    }
  }
  return cur;
}

AffineWeylElement coweight_to_fW(const RootSystemPtr& rs, const Coweight& mu) {
  return min_rep_in_Wf_coset(AffineWeylElement::translation(rs, mu));
}

std::vector<AffineCoroot> affine_simple_coroots(const RootSystem& rs) {
  std::vector<AffineCoroot> out;
  for (int i = 0; i < rs.rank(); ++i) out.push_back({i, 0});
  out.push_back({rs.negate(rs.theta()), 1});
  return out;
}

std::vector<AffineWeylElement> affine_simple_reflections(const RootSystemPtr& rs) {
  std::vector<AffineWeylElement> out;
  for (int i = 0; i < rs->rank(); ++i) out.push_back(AffineWeylElement::finite(rs, rs->simple_reflection(i)));
  // s_{(-theta, 1)} = s_theta e^{theta-check}
  out.emplace_back(rs, rs->reflection(rs->theta()), rs->coweight_of_coroot(rs->theta()));
  return out;
}

std::vector<AffineWeylElement> length_zero_elements(const RootSystemPtr& rs) {
  const auto simples = affine_simple_reflections(rs);
  const auto coroots = affine_simple_coroots(*rs);
  std::vector<AffineWeylElement> generators;
  for (int i = 0; i < rs->rank(); ++i) {
    Coweight w = Coweight::zero(rs->rank());
    w.coords[i] = 1;
    generators.push_back(strip_right_descents(AffineWeylElement::translation(rs, w), simples, coroots));
  }
  std::vector<AffineWeylElement> group{AffineWeylElement::identity(rs)};
  std::unordered_set<AffineWeylElement, AffineWeylHash> seen(group.begin(), group.end());
  for (std::size_t k = 0; k < group.size(); ++k) {
    for (const auto& g : generators) {
      AffineWeylElement y = group[k] * g;
      if (length(y) != 0) throw IntegrityError("length-zero subgroup is not closed: " + y.to_string());
      if (seen.insert(y).second) group.push_back(y);
    }
  }
  if (static_cast<std::int64_t>(group.size()) != rs->fundamental_group_order())
    throw IntegrityError("length-zero subgroup has wrong order");
  return group;
}

int default_ball_cap() {
  if (const char* env = std::getenv("FKW_BALL_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v < 1000) return static_cast<int>(v);
  }
  return 12;
}

std::vector<AffineWeylElement> enumerate_ball(const RootSystemPtr& rs, int radius, int cap) {
  if (radius < 0) return {};
  if (radius > cap) {
    std::size_t estimate = static_cast<std::size_t>(rs->fundamental_group_order());
    std::size_t layer = 1;
    for (int k = 1; k <= radius && estimate < (std::size_t{1} << 40); ++k) {
      layer *= static_cast<std::size_t>(rs->rank() + 1);
      estimate += static_cast<std::size_t>(rs->fundamental_group_order()) * layer;
    }
    throw CapExceeded("ball radius " + std::to_string(radius) + " exceeds cap " + std::to_string(cap) +
                          " (up to ~" + std::to_string(estimate) + " elements)",
                      estimate);
  }
  const auto simples = affine_simple_reflections(rs);
  const auto coroots = affine_simple_coroots(*rs);
  std::vector<AffineWeylElement> layer = length_zero_elements(rs);
  std::sort(layer.begin(), layer.end());
  std::vector<AffineWeylElement> out = layer;
  for (int k = 1; k <= radius; ++k) {
    std::unordered_set<AffineWeylElement, AffineWeylHash> next_set;
    std::vector<AffineWeylElement> next;
    for (const auto& x : layer) {
      for (std::size_t i = 0; i < simples.size(); ++i) {
        if (sends_negative(x, coroots[i])) continue;  // x s would be shorter
        AffineWeylElement y = x * simples[i];
        if (next_set.insert(y).second) next.push_back(std::move(y));
      }
    }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace fkw
