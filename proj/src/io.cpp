#include "fkw/io.hpp"

namespace fkw {

json to_json(const Rational& r) { return to_string(r); }

json to_json(const Weight& w) {
  json out = json::array();
  for (const auto& c : w.coords) out.push_back(to_json(c));
  return out;
}

json to_json(const RootSystem& rs) {
  json out;
  out["type"] = rs.name();
  out["rank"] = rs.rank();
  out["cartan"] = rs.cartan();
  out["positive_roots"] = rs.num_positive();
  out["highest_root"] = rs.root(rs.theta());
  out["dual_coxeter_number"] = rs.h_dual();
  out["finite_weyl_order"] = rs.finite_weyl_order();
  out["fundamental_group_order"] = rs.fundamental_group_order();
  return out;
}

json to_json(const RootSystem& rs, const AffineCoroot& c) {
  json out;
  out["root"] = rs.root(c.root);
  out["degree"] = c.degree;
  out["text"] = to_string(rs, c);
  return out;
}

json to_json(const Block& b) {
  const RootSystem& rs = b.root_system();
  json out;
  out["level"] = {{"k", to_json(b.level().k)}, {"t", to_json(b.level().t)}};
  out["base_weight"] = to_json(b.base_weight());
  json pattern = json::array();
  for (int r = 0; r < rs.num_positive(); ++r) {
    const Progression& p = b.progression(r);
    json row;
    row["root"] = rs.root(r);
    row["a"] = to_json(rs.pair_root(b.base_weight() + rs.rho(), r));
    row["r"] = to_json(b.level().t * rs.central_scale(r));
    if (p.empty) {
      row["integral_degrees"] = nullptr;
    } else {
      row["integral_degrees"] = {{"residue", p.residue}, {"modulus", p.modulus}};
    }
    pattern.push_back(std::move(row));
  }
  out["integral_pattern"] = std::move(pattern);
  json gens = json::array();
  for (const auto& g : b.generators()) gens.push_back(to_json(rs, g));
  out["generators"] = std::move(gens);
  return out;
}

json to_json(const Factorization& f) {
  const RootSystem& rs = f.w_minus.root_system();
  json out;
  const auto word = rs.reduced_word(f.w_f);
  std::string w_f;
  for (std::size_t i = 0; i < word.size(); ++i) w_f += (i ? "." : "") + std::string("s") + std::to_string(word[i] + 1);
  out["w_f"] = word.empty() ? "e" : w_f;
  out["w_minus"] = f.w_minus.to_string();
  out["w_chi"] = f.w_chi.to_string();
  out["w_chi_length"] = f.w_chi_length;
  out["good"] = f.good;
  json stab = json::array();
  for (const auto& c : f.stabilizer_reflections) stab.push_back(to_json(rs, c));
  out["stabilizer_reflections"] = std::move(stab);
  return out;
}

namespace {

json verdict_json(const PathVerdict& v) {
  json out;
  out["vanishes"] = v.vanishes;
  json orbit = json::array();
  if (v.hc)
    for (const auto& w : v.hc->orbit) orbit.push_back(to_json(w));
  out["hc_orbit"] = std::move(orbit);
  out["shift"] = v.shift;
  return out;
}

}  // namespace

json to_json(const ReductionResult& r) {
  json out;
  if (r.vanishes) out["vanishes"] = *r.vanishes;
  else out["vanishes"] = nullptr;
  json orbit = json::array();
  if (r.hc)
    for (const auto& w : r.hc->orbit) orbit.push_back(to_json(w));
  out["hc_orbit"] = std::move(orbit);
  out["shift"] = r.shift;
  out["amplitude"] = {r.amplitude.first, r.amplitude.second};
  out["w_minus"] = r.witness.w_minus.to_string();
  out["w_chi"] = r.witness.w_chi.to_string();
  out["w_chi_length"] = r.witness.w_chi_length;
  out["good"] = r.witness.good;
  out["finite_antidominant"] = r.finite_antidominant;
  out["paths_agree"] = r.paths_agree;
  if (!r.paths_agree) {
    out["discrepancy"] = {{"goodness_path", verdict_json(r.goodness_path)},
                          {"antidominance_path", verdict_json(r.antidominance_path)},
                          {"star_weight", to_json(r.star)}};
  }
  return out;
}

}  // namespace fkw
