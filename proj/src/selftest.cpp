#include "fkw/selftest.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "fkw/cosetfact.hpp"
#include "fkw/errors.hpp"
#include "fkw/oracle.hpp"
#include "fkw/reduction.hpp"

namespace fkw {

namespace {

struct Failure {
  std::string what;
};

void check(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

CheckResult guarded(const std::string& name, const std::function<std::string()>& body) {
  CheckResult out{name, CheckStatus::Pass, ""};
  try {
    out.detail = body();
  } catch (const Failure& f) {
    out.status = CheckStatus::Fail;
    out.detail = f.what;
  } catch (const CapExceeded& e) {
    out.status = CheckStatus::Inconclusive;
    out.detail = e.what();
  } catch (const Inconclusive& e) {
    out.status = CheckStatus::Inconclusive;
    out.detail = e.what();
  } catch (const std::exception& e) {
    out.status = CheckStatus::Fail;
    out.detail = e.what();
  }
  return out;
}

Weight weight_of(const RootSystem& rs, std::initializer_list<Rational> coords) {
  Weight w = Weight::zero(rs.rank());
  std::size_t i = 0;
  for (const auto& c : coords) w.coords[i++] = c;
  return w;
}

struct TestBlock {
  RootSystemPtr rs;
  BlockPtr block;
};

std::vector<TestBlock> small_blocks() {
  std::vector<TestBlock> out;
  auto a1 = RootSystem::build("A1");
  for (const Rational t : {Rational(3, 2), Rational(5, 2), Rational(4, 3)}) {
    for (const Rational c : {Rational(0), Rational(-1, 4), Rational(-1, 3)})
      out.push_back({a1, build_block(a1, weight_of(*a1, {c}), Level::from_shifted(*a1, t))});
  }
  auto a2 = RootSystem::build("A2");
  out.push_back({a2, build_block(a2, Weight::zero(2), Level::from_level(*a2, Rational(0)))});
  out.push_back({a2, build_block(a2, weight_of(*a2, {Rational(-1, 3), Rational(1, 3)}),
                                 Level::from_shifted(*a2, Rational(5, 3)))});
  return out;
}

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

std::vector<CheckResult> run_selftest(const SelftestOptions& options) {
  std::vector<CheckResult> results;
  const int cap = options.ball_cap;

  results.push_back(guarded("length_identity", [&] {
    std::ostringstream os;
    for (const char* name : {"A1", "A2", "A3", "B2", "G2"}) {
      auto rs = RootSystem::build(name);
      const Coweight t = (options.corrupt_sign ? -1 : 1) * rs->rho_check_coweight();
      const AffineWeylElement x(rs, rs->longest_element(), t);
      std::int64_t expected = 0;
      for (int r = 0; r < rs->num_positive(); ++r) expected += rs->height(r) - 1;
      const std::int64_t l = length(x);
      check(l == expected && oracle::oracle_length(x) == l,
            std::string(name) + ": length " + std::to_string(l) + ", expected " + std::to_string(expected));
      os << name << "=" << l << " ";
    }
    return os.str();
  }));

  results.push_back(guarded("length_oracle", [&] {
    std::size_t n = 0;
    for (const char* name : {"A1", "A2", "B2"}) {
      auto rs = RootSystem::build(name);
      const int radius = 4;
      const auto words = oracle::word_lengths(rs, radius);
      for (const auto& x : enumerate_ball(rs, radius, cap)) {
        check(length(x) == oracle::oracle_length(x), std::string(name) + ": " + x.to_string());
        auto it = words.find(oracle::key(x));
        if (it != words.end()) check(it->second == length(x), std::string(name) + " word length: " + x.to_string());
        ++n;
      }
    }
    return std::to_string(n) + " elements";
  }));

  results.push_back(guarded("convention_lock", [&] {
    std::mt19937 rng(20240611);
    std::size_t n = 0;
    for (const char* name : {"A1", "A2", "B2", "G2"}) {
      auto rs = RootSystem::build(name);
      const auto ball = enumerate_ball(rs, 3, cap);
      std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
      std::uniform_int_distribution<int> num(-9, 9), den(1, 5), root(0, rs->num_roots() - 1), deg(-3, 3);
      for (const Rational t : {Rational(3, 2), Rational(5, 2), Rational(3)}) {
        const Level level = Level::from_shifted(*rs, t);
        for (int i = 0; i < 50; ++i) {
          Weight lambda = Weight::zero(rs->rank());
          for (auto& c : lambda.coords) c = Rational(num(rng), den(rng));
          const auto& x = ball[pick(rng)];
          const AffineCoroot c{root(rng), deg(rng)};
          check(affine_pairing(*rs, dot(x, lambda, level), level, act_on_coroot(x, c)) ==
                    affine_pairing(*rs, lambda, level, c),
                std::string(name) + ": " + x.to_string());
          ++n;
        }
      }
    }
    return std::to_string(n) + " triples";
  }));

  results.push_back(guarded("double_coset_minimality", [&] {
    std::size_t n = 0;
    for (const auto& tb : small_blocks()) {
      for (const auto& w : enumerate_ball(tb.rs, 2, cap)) {
        const auto w_minus = minimal_element(w, *tb.block);
        const auto o = oracle::oracle_min_double_coset(w, *tb.block, std::min(4, cap));
        if (cap < 4) throw Inconclusive("oracle ball limited by cap " + std::to_string(cap));
        check(o.element == w_minus && o.minimizers == 1, w.to_string());
        ++n;
      }
    }
    return std::to_string(n) + " cosets";
  }));

  results.push_back(guarded("goodness_equivalence", [&] {
    std::size_t n = 0;
    for (const auto& tb : small_blocks()) {
      for (const auto& w : enumerate_ball(tb.rs, 2, cap)) {
        const auto w_minus = minimal_element(w, *tb.block);
        const auto o = oracle::oracle_torsor(w_minus, *tb.block, std::min(4, cap));
        if (cap < 4) throw Inconclusive("oracle ball limited by cap " + std::to_string(cap));
        check(o.torsor == stabilizer_test(w_minus, *tb.block).empty(), w.to_string());
        ++n;
      }
    }
    return std::to_string(n) + " cosets";
  }));

  results.push_back(guarded("sl2_fixtures", [&] {
    auto rs = RootSystem::build("A1");
    const Level level = Level::from_shifted(*rs, Rational(3, 2));
    const Weight zero = Weight::zero(1);
    const Weight quarter = weight_of(*rs, {Rational(-1, 4)});
    const HCClass target = hc_project(*rs, quarter);
    struct Row {
      Weight lambda;
      std::int64_t mu;
      bool vanishes;
      std::int64_t shift;
    };
    for (const Row& row : {Row{zero, 1, false, 0}, Row{zero, -1, false, 1}, Row{zero, 0, true, 0},
                           Row{quarter, 1, true, 0}, Row{quarter, 0, false, 0}}) {
      const auto r = reduce(rs, Coweight({row.mu}), row.lambda, level);
      const std::string tag = to_string(row.lambda.coords) + " mu=" + std::to_string(row.mu);
      check(r.vanishes && *r.vanishes == row.vanishes, tag + ": vanishing");
      if (!row.vanishes) check(r.hc && *r.hc == target && r.shift == row.shift, tag + ": class or shift");
    }
    return std::string("5 fixtures");
  }));

  return results;
}

}  // namespace fkw
