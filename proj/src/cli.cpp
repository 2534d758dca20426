#include "fkw/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "fkw/errors.hpp"
#include "fkw/io.hpp"
#include "fkw/reduction.hpp"
#include "fkw/selftest.hpp"

namespace fkw::cli {

namespace {

struct RunConfig {
  std::string type;
  int rank = 0;
  std::string level;
  std::string shifted_level;
  std::string lambda;
  std::string mu;
  std::string mu_basis = "fundamental";
  std::string mu_range;
  int ball = -1;
  int radius = 4;
  int slack = 2;
  std::string format = "json";
  std::string out;
  bool corrupt_sign = false;
};

RootSystemPtr root_system(const RunConfig& cfg) {
  if (cfg.type.empty()) throw InputError("--type is required");
  if (cfg.type.size() == 1) {
    if (cfg.rank <= 0) throw InputError("--rank is required when --type is a single letter");
    return RootSystem::build(cfg.type[0], cfg.rank);
  }
  auto rs = RootSystem::build(cfg.type);
  if (cfg.rank > 0 && cfg.rank != rs->rank()) throw InputError("--rank contradicts --type " + cfg.type);
  return rs;
}

Level level_of(const RootSystem& rs, const RunConfig& cfg) {
  if (cfg.level.empty() == cfg.shifted_level.empty())
    throw InputError("exactly one of --level and --shifted-level is required");
  if (!cfg.level.empty()) return Level::from_level(rs, parse_rational(cfg.level));
  return Level::from_shifted(rs, parse_rational(cfg.shifted_level));
}

Weight weight_of(const RootSystem& rs, const std::string& text) {
  if (text.empty()) return Weight::zero(rs.rank());
  RatVec coords = parse_rational_list(text);
  if (static_cast<int>(coords.size()) != rs.rank())
    throw InputError("--lambda needs " + std::to_string(rs.rank()) + " coordinates");
  return Weight(std::move(coords));
}

Coweight coweight_of(const RootSystem& rs, const std::string& text, const std::string& basis) {
  if (text.empty()) return Coweight::zero(rs.rank());
  const RatVec coords = parse_rational_list(text);
  if (static_cast<int>(coords.size()) != rs.rank())
    throw InputError("--mu needs " + std::to_string(rs.rank()) + " coordinates");
  if (basis == "coroot") return rs.coweight_from_coroot_coords(coords);
  Coweight mu = Coweight::zero(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) {
    if (!is_integer(coords[i])) throw InputError("--mu coordinates must be integers in the fundamental basis");
    mu.coords[i] = coords[i].numerator();
  }
  return mu;
}

Limits limits_of(const RunConfig& cfg) {
  Limits limits;
  if (cfg.ball >= 0) limits.ball_cap = cfg.ball;
  limits.slack = cfg.slack;
  return limits;
}

std::string join(const IntVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string join(const RatVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s;
}

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string vanishes_text(const ReductionResult& r) {
  if (!r.vanishes) return "disagree";
  return *r.vanishes ? "true" : "false";
}

std::string hc_text(const ReductionResult& r) { return r.hc ? "[" + join(r.hc->orbit_rep.coords) + "]" : ""; }

const char* kCsvHeader = "lambda,mu,vanishes,good,shift,amplitude_lo,amplitude_hi,hc_rep,w_minus,w_chi,paths_agree";

std::string csv_row(const Weight& lambda, const Coweight& mu, const ReductionResult& r) {
  std::ostringstream os;
  os << quote(join(lambda.coords)) << ',' << quote(join(mu.coords)) << ',' << vanishes_text(r) << ','
     << (r.witness.good ? "true" : "false") << ',' << r.shift << ',' << r.amplitude.first << ','
     << r.amplitude.second << ',' << quote(hc_text(r)) << ',' << r.witness.w_minus.to_string() << ','
     << r.witness.w_chi.to_string() << ',' << (r.paths_agree ? "true" : "false");
  return os.str();
}

std::string text_report(const ReductionResult& r) {
  std::ostringstream os;
  os << "vanishes:            " << vanishes_text(r) << '\n';
  os << "hc class:            " << (r.hc ? hc_text(r) : "-") << '\n';
  os << "shift:               " << r.shift << '\n';
  os << "amplitude:           [" << r.amplitude.first << ", " << r.amplitude.second << "]\n";
  os << "w_minus:             " << r.witness.w_minus.to_string() << '\n';
  os << "w_chi:               " << r.witness.w_chi.to_string() << " (length " << r.witness.w_chi_length << ")\n";
  os << "good:                " << (r.witness.good ? "yes" : "no") << '\n';
  os << "finite antidominant: " << (r.finite_antidominant ? "yes" : "no") << '\n';
  os << "paths agree:         " << (r.paths_agree ? "yes" : "no") << '\n';
  return os.str();
}

void emit(const RunConfig& cfg, const std::string& body, std::ostream& out) {
  if (cfg.out.empty()) {
    out << body;
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw InputError("cannot open " + cfg.out + " for writing");
  file << body;
}

void check_format(const RunConfig& cfg) {
  if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "text")
    throw InputError("--format must be json, csv or text");
}

int cmd_reduce(const RunConfig& cfg, std::ostream& out) {
  check_format(cfg);
  auto rs = root_system(cfg);
  const Level level = level_of(*rs, cfg);
  const Weight lambda = weight_of(*rs, cfg.lambda);
  const Coweight mu = coweight_of(*rs, cfg.mu, cfg.mu_basis);
  const ReductionResult r = reduce(rs, mu, lambda, level, limits_of(cfg));
  std::string body;
  if (cfg.format == "json") body = to_json(r).dump(2) + "\n";
  else if (cfg.format == "csv") body = std::string(kCsvHeader) + "\n" + csv_row(lambda, mu, r) + "\n";
  else body = text_report(r);
  emit(cfg, body, out);
  return r.paths_agree ? kComputed : kPathsDisagree;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("--mu-range must look like LO:HI");
  const Rational lo = parse_rational(text.substr(0, colon));
  const Rational hi = parse_rational(text.substr(colon + 1));
  if (!is_integer(lo) || !is_integer(hi)) throw InputError("--mu-range bounds must be integers");
  return {lo.numerator(), hi.numerator()};
}

struct BlockRow {
  Weight lambda;
  Coweight mu;
  std::optional<ReductionResult> result;
  std::string status;  // "ok", "inconclusive: ..."
};

int cmd_block(const RunConfig& cfg, std::ostream& out) {
  check_format(cfg);
  auto rs = root_system(cfg);
  const Level level = level_of(*rs, cfg);
  const Weight lambda = weight_of(*rs, cfg.lambda);
  const auto [lo, hi] = parse_range(cfg.mu_range.empty() ? "-2:2" : cfg.mu_range);
  const Limits limits = limits_of(cfg);

  std::vector<Coweight> mus;
  if (lo <= hi) {
    const std::int64_t width = hi - lo + 1;
    std::int64_t total = 1;
    for (int i = 0; i < rs->rank(); ++i) {
      total *= width;
      if (total > 1000000) throw InputError("--mu-range produces too many coweights");
    }
    for (std::int64_t k = 0; k < total; ++k) {
      Coweight mu = Coweight::zero(rs->rank());
      std::int64_t rest = k;
      for (int i = rs->rank() - 1; i >= 0; --i) {
        mu.coords[i] = lo + rest % width;
        rest /= width;
      }
      mus.push_back(std::move(mu));
    }
  }

  std::vector<BlockRow> rows;
  if (!mus.empty()) {
    for (const auto& dom : list_dominant_in_block(rs, lambda, level, cfg.radius, limits.ball_cap))
      for (const auto& mu : mus) rows.push_back({dom, mu, std::nullopt, "ok"});
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      try {
        rows[i].result = reduce(rs, rows[i].mu, rows[i].lambda, level, limits);
      } catch (const Inconclusive& e) {
        rows[i].status = std::string("inconclusive: ") + e.what();
      } catch (const CapExceeded& e) {
        rows[i].status = std::string("inconclusive: ") + e.what();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (std::size_t t = 0; t < std::min(threads, rows.size()); ++t) {
    pool.emplace_back([&] {
      try {
        worker();
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  int code = kComputed;
  for (const auto& row : rows) {
    if (!row.result) code = std::max<int>(code, kInconclusive);
    else if (!row.result->paths_agree && code == kComputed) code = kPathsDisagree;
  }

  std::ostringstream os;
  if (cfg.format == "json") {
    json table = json::array();
    for (const auto& row : rows) {
      json entry;
      entry["lambda"] = to_json(row.lambda);
      entry["mu"] = row.mu.coords;
      if (row.result) entry["result"] = to_json(*row.result);
      else entry["status"] = row.status;
      table.push_back(std::move(entry));
    }
    json doc;
    doc["type"] = rs->name();
    doc["level"] = {{"k", to_json(level.k)}, {"t", to_json(level.t)}};
    doc["rows"] = std::move(table);
    os << doc.dump(2) << '\n';
  } else {
    os << kCsvHeader << '\n';
    for (const auto& row : rows) {
      if (row.result) os << csv_row(row.lambda, row.mu, *row.result) << '\n';
      else os << quote(join(row.lambda.coords)) << ',' << quote(join(row.mu.coords)) << ",inconclusive,,,,,,,,\n";
    }
  }
  emit(cfg, os.str(), out);
  return code;
}

int cmd_weylinfo(const RunConfig& cfg, std::ostream& out) {
  auto rs = root_system(cfg);
  json doc;
  doc["root_system"] = to_json(*rs);
  if (!cfg.level.empty() || !cfg.shifted_level.empty()) {
    const Level level = level_of(*rs, cfg);
    const auto block = build_block(rs, weight_of(*rs, cfg.lambda), level);
    doc["block"] = to_json(*block);
  }
  json simples = json::array();
  for (const auto& c : affine_simple_coroots(*rs)) simples.push_back(to_json(*rs, c));
  doc["affine_simple_coroots"] = std::move(simples);
  json omega = json::array();
  for (const auto& x : length_zero_elements(rs)) omega.push_back(x.to_string());
  doc["length_zero_elements"] = std::move(omega);
  emit(cfg, doc.dump(2) + "\n", out);
  return kComputed;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
  SelftestOptions options;
  options.ball_cap = cfg.ball >= 0 ? cfg.ball : default_ball_cap();
  options.corrupt_sign = cfg.corrupt_sign;
  const auto results = run_selftest(options);
  std::ostringstream os;
  int code = kComputed;
  for (const auto& r : results) {
    os << std::left << std::setw(13) << to_string(r.status) << std::setw(26) << r.name << r.detail << '\n';
    if (r.status == CheckStatus::Fail) code = kInternalError;
    else if (r.status == CheckStatus::Inconclusive && code == kComputed) code = kInconclusive;
  }
  emit(cfg, os.str(), out);
  return code;
}

void add_system_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--type", cfg.type, "Cartan type, e.g. A1, G2, or a letter with --rank")->required();
  sub->add_option("--rank", cfg.rank, "Rank, when --type is a single letter");
}

void add_level_options(CLI::App* sub, RunConfig& cfg) {
  auto* k = sub->add_option("--level", cfg.level, "Level k as p/q");
  auto* t = sub->add_option("--shifted-level", cfg.shifted_level, "Shifted level t = k + h^dual as p/q");
  k->excludes(t);
}

void add_search_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--ball", cfg.ball, "Enumeration cap on ball radii (default: FKW_BALL_CAP or 12)");
  sub->add_option("--slack", cfg.slack, "Extra length explored when certifying minimal elements")
      ->check(CLI::NonNegativeNumber);
}

void add_output_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "Output format: json, csv or text");
  sub->add_option("--out", cfg.out, "Write output to this file instead of stdout");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Spectrally flowed reductions of simple highest-weight modules over affine Weyl groups"};
  app.require_subcommand(1);

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce the simple module L(lambda) by a coweight");
  add_system_options(reduce_cmd, cfg);
  add_level_options(reduce_cmd, cfg);
  reduce_cmd->add_option("--lambda", cfg.lambda, "Highest weight, simple-root coordinates (e.g. -1/4)");
  reduce_cmd->add_option("--mu", cfg.mu, "Coweight, fundamental-coweight coordinates (e.g. 1,-1)");
  reduce_cmd->add_option("--mu-basis", cfg.mu_basis, "Basis of --mu: fundamental or coroot")
      ->check(CLI::IsMember({"fundamental", "coroot"}));
  add_search_options(reduce_cmd, cfg);
  add_output_options(reduce_cmd, cfg);

  auto* block_cmd = app.add_subcommand(
      "block",
      "Sweep dominant weights of a block against a box of coweights.\n"
      "CSV columns: lambda,mu,vanishes,good,shift,amplitude_lo,amplitude_hi,hc_rep,w_minus,w_chi,paths_agree");
  add_system_options(block_cmd, cfg);
  add_level_options(block_cmd, cfg);
  block_cmd->add_option("--lambda", cfg.lambda, "A weight of the block, simple-root coordinates");
  block_cmd->add_option("--mu-range", cfg.mu_range, "Coordinate range LO:HI for every coweight coordinate");
  block_cmd->add_option("--radius", cfg.radius, "Integral Weyl group ball radius for dominant weights")
      ->check(CLI::NonNegativeNumber);
  add_search_options(block_cmd, cfg);
  add_output_options(block_cmd, cfg);

  auto* info_cmd = app.add_subcommand("weylinfo", "Describe the root system and, given a level, a block");
  add_system_options(info_cmd, cfg);
  add_level_options(info_cmd, cfg);
  info_cmd->add_option("--lambda", cfg.lambda, "A weight of the block, simple-root coordinates");
  info_cmd->add_option("--out", cfg.out, "Write output to this file instead of stdout");

  auto* self_cmd = app.add_subcommand("selftest", "Cross-check the library against brute-force oracles");
  self_cmd->add_option("--ball", cfg.ball, "Enumeration cap on ball radii");
  self_cmd->add_flag("--corrupt-sign", cfg.corrupt_sign, "Debug: flip a sign to exercise failure detection");
  self_cmd->add_option("--out", cfg.out, "Write output to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kComputed;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kComputed;
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kInputError;
  }

  try {
    if (*reduce_cmd) return cmd_reduce(cfg, out);
    if (*block_cmd) return cmd_block(cfg, out);
    if (*info_cmd) return cmd_weylinfo(cfg, out);
    return cmd_selftest(cfg, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const NotInBlock& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Inconclusive& e) {
    err << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const CapExceeded& e) {
    err << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const IntegrityError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace fkw::cli
