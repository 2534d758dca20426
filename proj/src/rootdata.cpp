#include "fkw/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>

#include "fkw/errors.hpp"

namespace fkw {

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& r) { return r == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

Weight operator*(const Rational& s, Weight a) {
  for (auto& c : a.coords) c *= s;
  return a;
}

bool Coweight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](std::int64_t c) { return c == 0; });
}

Coweight& Coweight::operator+=(const Coweight& o) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Coweight& Coweight::operator-=(const Coweight& o) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

Coweight Coweight::operator-() const {
  Coweight out = *this;
  for (auto& c : out.coords) c = -c;
  return out;
}

Coweight operator*(std::int64_t s, Coweight a) {
  for (auto& c : a.coords) c *= s;
  return a;
}

namespace {

using IntMatrix = std::vector<IntVec>;
using RatMatrix = std::vector<RatVec>;

IntMatrix cartan_matrix(char type, int n) {
  IntMatrix a(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      // alpha_n short
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case 'C':
      // alpha_n long
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      // Bourbaki: 1-3-4-5-6(-7-8), 2-4
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[2][1] = -2;  // alpha_3, alpha_4 short
      break;
    case 'G':
      a[0][1] = -3;  // alpha_1 short
      a[1][0] = -1;
      break;
    default:
      break;
  }
  return a;
}

bool valid_type(char type, int n) {
  switch (type) {
    case 'A': return n >= 1;
    case 'B': return n >= 2;
    case 'C': return n >= 2;
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

std::size_t weyl_order(char type, int n) {
  std::size_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= static_cast<std::size_t>(i);
  switch (type) {
    case 'A': return fact * static_cast<std::size_t>(n + 1);
    case 'B':
    case 'C': return fact << n;
    case 'D': return fact << (n - 1);
    case 'E': return n == 6 ? 51840u : n == 7 ? 2903040u : 696729600u;
    case 'F': return 1152;
    case 'G': return 12;
    default: return 0;
  }
}

RatMatrix invert(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  RatMatrix a(n, RatVec(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    const Rational p = a[col][col];
    for (auto& x : a[col]) x /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (int c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  RatMatrix inv(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

Rational determinant(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  RatMatrix a(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < n; ++r) {
      const Rational f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

}  // namespace

std::shared_ptr<const RootSystem> RootSystem::build(char type_label, int rank) {
  const char type = static_cast<char>(std::toupper(static_cast<unsigned char>(type_label)));
  if (!valid_type(type, rank)) {
    throw InputError(std::string("invalid simple type ") + type_label + std::to_string(rank) +
                     " (valid: A>=1, B>=2, C>=2, D>=4, E6-8, F4, G2)");
  }
  std::shared_ptr<RootSystem> rs(new RootSystem());
  rs->type_ = type;
  rs->rank_ = rank;
  rs->cartan_ = cartan_matrix(type, rank);
  rs->generate();
  return rs;
}

std::shared_ptr<const RootSystem> RootSystem::build(const std::string& name) {
  if (name.size() < 2) throw InputError("invalid type name '" + name + "'");
  int rank = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i])))
      throw InputError("invalid type name '" + name + "'");
    rank = rank * 10 + (name[i] - '0');
    if (rank > 64) throw InputError("rank too large in '" + name + "'");
  }
  return build(name[0], rank);
}

void RootSystem::generate() {
  const int n = rank_;

  // Square lengths of simple roots from the symmetrizability relation
  // a_ij (a_i, a_i) = a_ji (a_j, a_j), propagated along the Dynkin diagram.
  simple_norms_.assign(n, Rational(0));
  simple_norms_[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      if (j == i || cartan_[i][j] == 0 || simple_norms_[j] != 0) continue;
      simple_norms_[j] = simple_norms_[i] * Rational(cartan_[i][j], cartan_[j][i]);
      queue.push_back(j);
    }
  }

  // Positive roots by reflection closure of the simple roots.
  std::vector<IntVec> positive;
  std::map<IntVec, int> seen;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    seen.emplace(e, static_cast<int>(positive.size()));
    positive.push_back(e);
  }
  for (std::size_t k = 0; k < positive.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      const IntVec beta = positive[k];
      std::int64_t p = 0;
      for (int j = 0; j < n; ++j) p += beta[j] * cartan_[i][j];
      if (p == 0) continue;
      IntVec image = beta;
      image[i] -= p;
      if (std::any_of(image.begin(), image.end(), [](std::int64_t c) { return c < 0; })) continue;
      if (seen.count(image)) continue;
      seen.emplace(image, static_cast<int>(positive.size()));
      positive.push_back(image);
    }
  }
  auto height_of = [](const IntVec& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); };
  std::stable_sort(positive.begin() + n, positive.end(), [&](const IntVec& a, const IntVec& b) {
    const auto ha = height_of(a), hb = height_of(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });

  const int num_pos = static_cast<int>(positive.size());
  roots_ = positive;
  for (const auto& p : positive) {
    IntVec neg = p;
    for (auto& c : neg) c = -c;
    roots_.push_back(neg);
  }
  index_.clear();
  for (int r = 0; r < 2 * num_pos; ++r) index_.emplace(roots_[r], r);

  // Norms, normalized so that the longest roots have square length 2.
  std::vector<Rational> raw(2 * num_pos);
  Rational longest = 0;
  for (int r = 0; r < 2 * num_pos; ++r) {
    Rational s = 0;
    for (int i = 0; i < n; ++i) {
      if (roots_[r][i] == 0) continue;
      for (int j = 0; j < n; ++j) {
        // (a_i, a_j) = a_ij (a_i, a_i) / 2
        s += Rational(roots_[r][i] * roots_[r][j] * cartan_[i][j]) * simple_norms_[i] / 2;
      }
    }
    raw[r] = s;
    longest = std::max(longest, s);
  }
  const Rational scale = Rational(2) / longest;
  for (auto& s : simple_norms_) s *= scale;
  norms_.resize(2 * num_pos);
  central_scale_.resize(2 * num_pos);
  coroots_.resize(2 * num_pos);
  heights_.resize(2 * num_pos);
  coroot_heights_.resize(2 * num_pos);
  for (int r = 0; r < 2 * num_pos; ++r) {
    norms_[r] = raw[r] * scale;
    const Rational cs = Rational(2) / norms_[r];
    central_scale_[r] = cs.numerator();
    IntVec co(n);
    std::int64_t ch = 0;
    for (int i = 0; i < n; ++i) {
      const Rational c = Rational(roots_[r][i]) * simple_norms_[i] / norms_[r];
      co[i] = c.numerator();
      ch += co[i];
    }
    coroots_[r] = co;
    heights_[r] = height_of(roots_[r]);
    coroot_heights_[r] = ch;
  }

  theta_ = static_cast<int>(std::max_element(heights_.begin(), heights_.begin() + num_pos) - heights_.begin());

  rho_ = Weight::zero(n);
  rho_check_.assign(n, Rational(0));
  for (int r = 0; r < num_pos; ++r) {
    for (int i = 0; i < n; ++i) {
      rho_.coords[i] += Rational(roots_[r][i], 2);
      rho_check_[i] += Rational(coroots_[r][i], 2);
    }
  }
  const Rational hd = Rational(1) + pair_root(rho_, theta_);
  h_dual_ = static_cast<int>(hd.numerator());
  det_ = determinant(cartan_).numerator();
  IntMatrix at(n, IntVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) at[i][j] = cartan_[j][i];
  cartan_t_inv_ = invert(at);
  order_ = weyl_order(type_, n);

  simple_reflections_.clear();
  for (int i = 0; i < n; ++i) simple_reflections_.push_back(reflection(i));

  longest_ = identity();
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 0; i < n; ++i) {
      if (is_positive(longest_.images[i])) {
        longest_ = multiply(longest_, simple_reflections_[i]);
        grew = true;
      }
    }
  }
}

std::optional<int> RootSystem::find_root(const IntVec& coords) const {
  auto it = index_.find(coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Rational RootSystem::pair(const Weight& lambda, const IntVec& g) const {
  Rational s = 0;
  for (int j = 0; j < rank_; ++j) {
    if (g[j] == 0) continue;
    Rational row = 0;
    for (int i = 0; i < rank_; ++i) row += lambda.coords[i] * cartan_[j][i];
    s += row * g[j];
  }
  return s;
}

Rational RootSystem::pair(const Weight& lambda, const RatVec& g) const {
  Rational s = 0;
  for (int j = 0; j < rank_; ++j) {
    if (g[j] == 0) continue;
    Rational row = 0;
    for (int i = 0; i < rank_; ++i) row += lambda.coords[i] * cartan_[j][i];
    s += row * g[j];
  }
  return s;
}

Rational RootSystem::pair_root(const Weight& lambda, int r) const { return pair(lambda, coroots_[r]); }

std::int64_t RootSystem::pair(const Coweight& mu, int r) const {
  std::int64_t s = 0;
  for (int i = 0; i < rank_; ++i) s += mu.coords[i] * roots_[r][i];
  return s;
}

RatVec RootSystem::coroot_coords(const Coweight& mu) const {
  // Solve sum_j g_j a_ji = m_i, i.e. A^T g = m.
  RatVec g(rank_, Rational(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) g[i] += cartan_t_inv_[i][j] * mu.coords[j];
  return g;
}

Coweight RootSystem::coweight_from_coroot_coords(const RatVec& g) const {
  if (static_cast<int>(g.size()) != rank_)
    throw InputError("coweight needs " + std::to_string(rank_) + " coordinates");
  Coweight mu = Coweight::zero(rank_);
  for (int i = 0; i < rank_; ++i) {
    Rational m = 0;
    for (int j = 0; j < rank_; ++j) m += g[j] * cartan_[j][i];
    if (!is_integer(m))
      throw InputError("coweight " + to_string(g) + " is not in the coweight lattice (pairing " +
                       to_string(m) + " with simple root " + std::to_string(i + 1) + ")");
    mu.coords[i] = m.numerator();
  }
  return mu;
}

Coweight RootSystem::coweight_of_coroot(int r) const {
  Coweight mu = Coweight::zero(rank_);
  for (int i = 0; i < rank_; ++i) {
    std::int64_t m = 0;
    for (int j = 0; j < rank_; ++j) m += coroots_[r][j] * cartan_[j][i];
    mu.coords[i] = m;
  }
  return mu;
}

Weight RootSystem::nu(const Coweight& mu) const {
  const RatVec g = coroot_coords(mu);
  Weight out = Weight::zero(rank_);
  for (int j = 0; j < rank_; ++j) out.coords[j] = g[j] * 2 / simple_norms_[j];
  return out;
}

FiniteWeyl RootSystem::identity() const {
  FiniteWeyl w;
  w.images.resize(roots_.size());
  std::iota(w.images.begin(), w.images.end(), 0);
  w.preimages = w.images;
  return w;
}

FiniteWeyl RootSystem::reflection(int r) const {
  FiniteWeyl w;
  const int total = num_roots();
  w.images.resize(total);
  for (int k = 0; k < total; ++k) {
    const std::int64_t p = [&] {
      std::int64_t s = 0;
      for (int j = 0; j < rank_; ++j) {
        if (coroots_[r][j] == 0) continue;
        std::int64_t row = 0;
        for (int i = 0; i < rank_; ++i) row += roots_[k][i] * cartan_[j][i];
        s += row * coroots_[r][j];
      }
      return s;
    }();
    IntVec image = roots_[k];
    for (int i = 0; i < rank_; ++i) image[i] -= p * roots_[r][i];
    w.images[k] = index_.at(image);
  }
  w.preimages = w.images;  // involution
  return w;
}

FiniteWeyl RootSystem::multiply(const FiniteWeyl& w, const FiniteWeyl& v) const {
  FiniteWeyl out;
  const std::size_t total = roots_.size();
  out.images.resize(total);
  out.preimages.resize(total);
  for (std::size_t r = 0; r < total; ++r) {
    out.images[r] = w.images[v.images[r]];
    out.preimages[out.images[r]] = static_cast<int>(r);
  }
  return out;
}

FiniteWeyl RootSystem::inverse(const FiniteWeyl& w) const {
  FiniteWeyl out;
  out.images = w.preimages;
  out.preimages = w.images;
  return out;
}

FiniteWeyl RootSystem::from_word(const std::vector<int>& word) const {
  FiniteWeyl w = identity();
  for (int i : word) {
    if (i < 0 || i >= rank_) throw InputError("simple reflection index out of range");
    w = multiply(w, simple_reflections_[i]);
  }
  return w;
}

Weight RootSystem::apply(const FiniteWeyl& w, const Weight& lambda) const {
  Weight out = Weight::zero(rank_);
  for (int j = 0; j < rank_; ++j) {
    if (lambda.coords[j] == 0) continue;
    const IntVec& img = roots_[w.images[j]];
    for (int i = 0; i < rank_; ++i) out.coords[i] += lambda.coords[j] * img[i];
  }
  return out;
}

Coweight RootSystem::apply(const FiniteWeyl& w, const Coweight& mu) const {
  // <alpha_i, w mu> = <w^{-1} alpha_i, mu>
  Coweight out = Coweight::zero(rank_);
  for (int i = 0; i < rank_; ++i) out.coords[i] = pair(mu, w.preimages[i]);
  return out;
}

bool RootSystem::is_identity(const FiniteWeyl& w) const {
  for (int i = 0; i < rank_; ++i)
    if (w.images[i] != i) return false;
  return true;
}

int RootSystem::length(const FiniteWeyl& w) const {
  int l = 0;
  for (int r = 0; r < num_positive(); ++r)
    if (!is_positive(w.images[r])) ++l;
  return l;
}

std::vector<int> RootSystem::reduced_word(const FiniteWeyl& w) const {
  std::vector<int> word;
  FiniteWeyl cur = w;
  while (!is_identity(cur)) {
    int i = 0;
    while (is_positive(cur.images[i])) ++i;
    word.push_back(i);
    cur = multiply(cur, simple_reflections_[i]);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Weight RootSystem::finite_dot(const FiniteWeyl& w, const Weight& lambda) const {
  return apply(w, lambda + rho_) - rho_;
}

std::vector<FiniteWeyl> RootSystem::enumerate_finite_weyl(std::size_t cap) const {
  if (order_ > cap) {
    throw CapExceeded("finite Weyl group of " + name() + " has " + std::to_string(order_) +
                          " elements, above the cap " + std::to_string(cap),
                      order_);
  }
  std::vector<FiniteWeyl> out{identity()};
  std::map<std::vector<int>, bool> seen;
  auto key = [&](const FiniteWeyl& w) { return std::vector<int>(w.images.begin(), w.images.begin() + rank_); };
  seen[key(out[0])] = true;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i = 0; i < rank_; ++i) {
      FiniteWeyl next = multiply(out[k], simple_reflections_[i]);
      auto [it, inserted] = seen.emplace(key(next), true);
      if (inserted) out.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace fkw
