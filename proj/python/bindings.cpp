#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fkw/affweyl.hpp"
#include "fkw/dotaction.hpp"
#include "fkw/errors.hpp"
#include "fkw/io.hpp"
#include "fkw/reduction.hpp"
#include "fkw/selftest.hpp"

namespace py = pybind11;
using namespace fkw;

namespace {

RootSystemPtr root_system(const std::string& type, int rank) {
  if (type.size() == 1) return RootSystem::build(type[0], rank);
  auto rs = RootSystem::build(type);
  if (rank > 0 && rank != rs->rank()) throw InputError("rank contradicts type " + type);
  return rs;
}

Level level_of(const RootSystem& rs, const std::string& level, const std::string& shifted_level) {
  if (level.empty() == shifted_level.empty()) throw InputError("exactly one of level and shifted_level is required");
  if (!level.empty()) return Level::from_level(rs, parse_rational(level));
  return Level::from_shifted(rs, parse_rational(shifted_level));
}

Weight weight_of(const RootSystem& rs, const std::string& text) {
  if (text.empty()) return Weight::zero(rs.rank());
  RatVec coords = parse_rational_list(text);
  if (static_cast<int>(coords.size()) != rs.rank())
    throw InputError("weight needs " + std::to_string(rs.rank()) + " coordinates");
  return Weight(std::move(coords));
}

Coweight coweight_of(const RootSystem& rs, const std::vector<std::int64_t>& coords) {
  if (coords.empty()) return Coweight::zero(rs.rank());
  if (static_cast<int>(coords.size()) != rs.rank())
    throw InputError("coweight needs " + std::to_string(rs.rank()) + " coordinates");
  return Coweight(coords);
}

AffineWeylElement element_of(const RootSystemPtr& rs, const std::vector<int>& word,
                             const std::vector<std::int64_t>& mu) {
  for (int i : word)
    if (i < 1 || i > rs->rank()) throw InputError("simple reflection index out of range");
  std::vector<int> zero_based;
  for (int i : word) zero_based.push_back(i - 1);
  return AffineWeylElement::from_finite_word(rs, zero_based) * AffineWeylElement::translation(rs, coweight_of(*rs, mu));
}

std::string reduce_json(const std::string& type, int rank, const std::string& level, const std::string& shifted_level,
                        const std::string& lambda, const std::vector<std::int64_t>& mu, int ball) {
  auto rs = root_system(type, rank);
  const Level lv = level_of(*rs, level, shifted_level);
  Limits limits;
  if (ball >= 0) limits.ball_cap = ball;
  return to_json(reduce(rs, coweight_of(*rs, mu), weight_of(*rs, lambda), lv, limits)).dump();
}

std::string weylinfo_json(const std::string& type, int rank, const std::string& level, const std::string& shifted_level,
                          const std::string& lambda) {
  auto rs = root_system(type, rank);
  json doc;
  doc["root_system"] = to_json(*rs);
  if (!level.empty() || !shifted_level.empty())
    doc["block"] = to_json(*build_block(rs, weight_of(*rs, lambda), level_of(*rs, level, shifted_level)));
  json omega = json::array();
  for (const auto& x : length_zero_elements(rs)) omega.push_back(x.to_string());
  doc["length_zero_elements"] = std::move(omega);
  return doc.dump();
}

std::string dot_json(const std::string& type, int rank, const std::string& level, const std::string& shifted_level,
                     const std::vector<int>& word, const std::vector<std::int64_t>& mu, const std::string& lambda) {
  auto rs = root_system(type, rank);
  const Level lv = level_of(*rs, level, shifted_level);
  return to_json(dot(element_of(rs, word, mu), weight_of(*rs, lambda), lv)).dump();
}

std::int64_t length_of(const std::string& type, int rank, const std::vector<int>& word,
                       const std::vector<std::int64_t>& mu) {
  auto rs = root_system(type, rank);
  return length(element_of(rs, word, mu));
}

std::vector<std::string> dominant_in_block(const std::string& type, int rank, const std::string& level,
                                           const std::string& shifted_level, const std::string& lambda, int radius) {
  auto rs = root_system(type, rank);
  std::vector<std::string> out;
  for (const auto& w : list_dominant_in_block(rs, weight_of(*rs, lambda), level_of(*rs, level, shifted_level), radius))
    out.push_back(to_json(w).dump());
  return out;
}

std::vector<std::tuple<std::string, std::string, std::string>> selftest(int ball) {
  SelftestOptions options;
  options.ball_cap = ball >= 0 ? ball : default_ball_cap();
  std::vector<std::tuple<std::string, std::string, std::string>> out;
  for (const auto& r : run_selftest(options)) out.emplace_back(r.name, to_string(r.status), r.detail);
  return out;
}

}  // namespace

PYBIND11_MODULE(_fkw, m) {
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<Inconclusive>(m, "Inconclusive", PyExc_RuntimeError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<IntegrityError>(m, "IntegrityError", PyExc_RuntimeError);

  m.def("reduce_json", &reduce_json, py::arg("type"), py::arg("rank"), py::arg("level"), py::arg("shifted_level"),
        py::arg("lambda_"), py::arg("mu"), py::arg("ball"), py::call_guard<py::gil_scoped_release>());
  m.def("weylinfo_json", &weylinfo_json, py::arg("type"), py::arg("rank"), py::arg("level"),
        py::arg("shifted_level"), py::arg("lambda_"));
  m.def("dot_json", &dot_json, py::arg("type"), py::arg("rank"), py::arg("level"), py::arg("shifted_level"),
        py::arg("word"), py::arg("mu"), py::arg("lambda_"));
  m.def("length", &length_of, py::arg("type"), py::arg("rank"), py::arg("word"), py::arg("mu"));
  m.def("dominant_in_block", &dominant_in_block, py::arg("type"), py::arg("rank"), py::arg("level"),
        py::arg("shifted_level"), py::arg("lambda_"), py::arg("radius"), py::call_guard<py::gil_scoped_release>());
  m.def("selftest", &selftest, py::arg("ball"), py::call_guard<py::gil_scoped_release>());
}
