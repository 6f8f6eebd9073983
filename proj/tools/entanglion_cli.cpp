// Copyright 2026 the entanglion authors
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

// Command-line front end.
//
//   entanglion measure       all measures for a state and focus cut
//   entanglion check         theorem checks at given alpha(s)
//   entanglion sweep         alpha sweep producing figure data (CSV)
//   entanglion random-suite  seeded Haar property sweep with pass counts
//   entanglion catalog       named states
//
// Exit codes: 0 all checks hold or violations are expected, 1 usage error,
// 2 unexpected violation. Violations of the tangle-based qubit bound (ckw)
// on states with a local dimension above two are expected; everything else
// that reports `violated` is unexpected.

#include "entanglion/inequalities.hpp"
#include "entanglion/measures.hpp"
#include "entanglion/parallel.hpp"
#include "entanglion/states.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace entanglion;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_output(const std::optional<std::string>& out_path, const std::string& text) {
  if (!out_path) {
    std::cout << text;
    return;
  }
  // write once, atomically
  const std::filesystem::path target(*out_path);
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file: " + tmp.string());
    out << text;
  }
  std::filesystem::rename(tmp, target);
}

QuantumState resolve_state(const std::string& source) {
  constexpr const char* kPrefix = "catalog:";
  if (source.rfind(kPrefix, 0) == 0) return catalog_state(source.substr(8));
  return load_state_file(source);
}

std::vector<double> parse_grid(const std::string& spec) {
  double lo = 0.0, hi = 0.0;
  int steps = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(spec);
  if (!(in >> lo >> c1 >> hi >> c2 >> steps) || c1 != ':' || c2 != ':' || steps < 1 ||
      !(in >> std::ws).eof())
    throw std::invalid_argument("bad --alpha-grid, expected lo:hi:steps");
  if (steps > 1 && !(hi >= lo))
    throw std::invalid_argument("bad --alpha-grid, hi must be >= lo");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k)
    grid.push_back(steps == 1 ? lo : lo + (hi - lo) * k / (steps - 1));
  return grid;
}

json measure_to_json(const MeasureValue& m) {
  return {{"name", to_string(m.name)},
          {"value", m.value},
          {"method", to_string(m.method)},
          {"error_bound", m.error_bound}};
}

json report_to_json(const InequalityReport& r) {
  json terms = json::array();
  for (const RhsTerm& t : r.rhs_terms)
    terms.push_back({{"j", t.sorted_index},
                     {"subsystem", t.subsystem},
                     {"weight", t.weight},
                     {"base", t.base},
                     {"term", t.term}});
  json conds = json::array();
  for (const ConditionVerdict& c : r.condition_verdicts)
    conds.push_back({{"id", c.id}, {"satisfied", c.satisfied}, {"gating", c.gating}});
  return {{"theorem", to_string(r.theorem_id)},
          {"alpha", r.alpha},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"rhs_terms", terms},
          {"margin", r.margin},
          {"holds", r.holds},
          {"verdict", to_string(r.verdict)},
          {"error_bound", r.error_bound},
          {"conditions", conds}};
}

bool unexpected_violation(const InequalityReport& r) {
  if (r.verdict != Verdict::violated) return false;
  if (r.theorem_id == TheoremId::ckw) {
    for (const auto& c : r.condition_verdicts)
      if (c.id == "all_qubits" && !c.satisfied) return false;  // known to break beyond qubits
  }
  return true;
}

struct CommonArgs {
  std::string state_source;
  int focus = 0;
  std::uint64_t seed = 0;
  std::optional<std::string> out;
  std::string format = "json";
  RoofConfig roof;
};

void add_roof_flags(CLI::App* cmd, RoofConfig& roof) {
  cmd->add_option("--restarts", roof.restarts, "roof optimizer restarts");
  cmd->add_option("--iterations", roof.max_iterations,
                  "roof optimizer iterations per restart");
  cmd->add_option("--ensemble", roof.ensemble_size, "roof ensemble size (0 = rank^2)");
  cmd->add_option("--tolerance", roof.tolerance, "roof step-size floor");
}

// ---------------------------------------------------------------------------

int cmd_measure(const CommonArgs& args) {
  QuantumState state = resolve_state(args.state_source);
  RoofConfig cfg = args.roof;
  cfg.seed = args.seed;
  const Bipartition cut{{args.focus}};

  std::vector<MeasureValue> values;
  values.push_back(negativity(state, cut));
  values.push_back(log_negativity(state, cut));
  values.push_back(cren(state, cut, cfg));
  values.push_back(crenoa(state, cut, cfg));
  values.push_back(lcren(state, cut, cfg));
  values.push_back(lcrenoa(state, cut, cfg));
  values.push_back(tangle(state, cut, cfg));
  if (state.shape.dims == std::vector<int>{2, 2} && !state.is_pure()) {
    values.push_back(concurrence_2qubit(state));
    values.push_back(concurrence_assist_2qubit(state));
  }

  if (args.format == "csv") {
    std::ostringstream out;
    out << "name,value,method,error_bound\n";
    for (const MeasureValue& m : values)
      out << to_string(m.name) << ',' << fmt17(m.value) << ',' << to_string(m.method)
          << ',' << fmt17(m.error_bound) << '\n';
    write_output(args.out, out.str());
  } else {
    json j;
    j["state"] = args.state_source;
    j["dims"] = state.shape.dims;
    j["focus"] = args.focus;
    j["seed"] = args.seed;
    j["rng_algorithm"] = kRngAlgorithmId;
    j["measures"] = json::array();
    for (const MeasureValue& m : values) j["measures"].push_back(measure_to_json(m));
    write_output(args.out, j.dump(2) + "\n");
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

std::vector<TheoremId> default_theorems(double alpha) {
  if (alpha < 0.0) return {TheoremId::thm4, TheoremId::thm8};
  if (alpha >= kFourLn2 - 1e-12)
    return {TheoremId::baseline_mono, TheoremId::thm1, TheoremId::thm2};
  if (alpha <= 2.0 + 1e-12)
    return {TheoremId::baseline_poly, TheoremId::thm5, TheoremId::thm6};
  throw std::invalid_argument("alpha " + std::to_string(alpha) +
                              " is outside every theorem's range");
}

struct SessionCache {
  const QuantumState& state;
  int focus;
  CheckOptions opt;
  std::map<std::string, std::unique_ptr<InequalitySession>> sessions;

  const InequalitySession& get(PairMeasure m) {
    const std::string key = to_string(m);
    auto it = sessions.find(key);
    if (it == sessions.end()) {
      it = sessions
               .emplace(key, std::make_unique<InequalitySession>(state, focus, m, opt))
               .first;
    }
    return *it->second;
  }
};

InequalityReport run_theorem(SessionCache& cache, TheoremId id, double alpha,
                             const QuantumState& state, const CheckOptions& opt) {
  switch (id) {
    case TheoremId::baseline_mono:
    case TheoremId::thm4:
      return cache.get(PairMeasure::lcren).check(alpha, WeightScheme::baseline);
    case TheoremId::thm1:
      return cache.get(PairMeasure::lcren).check(alpha, WeightScheme::hamming);
    case TheoremId::thm2:
      return cache.get(PairMeasure::lcren).check(alpha, WeightScheme::geometric);
    case TheoremId::thm3:
      return cache.get(PairMeasure::lcren).check(alpha, WeightScheme::hybrid);
    case TheoremId::baseline_poly:
    case TheoremId::thm8:
      return cache.get(PairMeasure::lcrenoa).check(alpha, WeightScheme::baseline);
    case TheoremId::thm5:
      return cache.get(PairMeasure::lcrenoa).check(alpha, WeightScheme::hamming);
    case TheoremId::thm6:
      return cache.get(PairMeasure::lcrenoa).check(alpha, WeightScheme::geometric);
    case TheoremId::thm7:
      return cache.get(PairMeasure::lcrenoa).check(alpha, WeightScheme::hybrid);
    case TheoremId::ckw:
      return ckw_check(state, opt);
  }
  throw std::logic_error("unreachable");
}

int cmd_check(const CommonArgs& args, const std::vector<double>& alphas,
              const std::vector<std::string>& theorem_names, int hybrid_t) {
  QuantumState state = resolve_state(args.state_source);
  CheckOptions opt;
  opt.roof = args.roof;
  opt.roof.seed = args.seed;
  opt.hybrid_t = hybrid_t;

  SessionCache cache{state, args.focus, opt, {}};
  std::vector<InequalityReport> reports;
  for (double alpha : alphas) {
    std::vector<TheoremId> ids;
    if (theorem_names.empty()) {
      ids = default_theorems(alpha);
    } else {
      for (const std::string& name : theorem_names)
        ids.push_back(theorem_from_string(name));
    }
    for (TheoremId id : ids) reports.push_back(run_theorem(cache, id, alpha, state, opt));
  }
  const std::vector<TightnessVerdict> tightness = compare_tightness(reports);

  bool violation = false;
  for (const InequalityReport& r : reports) violation = violation || unexpected_violation(r);

  if (args.format == "csv") {
    std::ostringstream out;
    out << "theorem,alpha,lhs,rhs,margin,holds,verdict,error_bound\n";
    for (const InequalityReport& r : reports)
      out << to_string(r.theorem_id) << ',' << fmt17(r.alpha) << ',' << fmt17(r.lhs) << ','
          << fmt17(r.rhs) << ',' << fmt17(r.margin) << ',' << (r.holds ? "true" : "false")
          << ',' << to_string(r.verdict) << ',' << fmt17(r.error_bound) << '\n';
    write_output(args.out, out.str());
  } else {
    json j;
    j["state"] = args.state_source;
    j["dims"] = state.shape.dims;
    j["focus"] = args.focus;
    j["seed"] = args.seed;
    j["reports"] = json::array();
    for (const InequalityReport& r : reports) j["reports"].push_back(report_to_json(r));
    j["tightness"] = json::array();
    for (const TightnessVerdict& t : tightness)
      j["tightness"].push_back({{"tighter", to_string(t.tighter)},
                                {"looser", to_string(t.looser)},
                                {"alpha", t.alpha},
                                {"applicable", t.applicable},
                                {"ordered", t.ordered},
                                {"gap", t.gap}});
    write_output(args.out, j.dump(2) + "\n");
  }
  return violation ? kExitViolation : kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_sweep(const CommonArgs& args, const std::vector<double>& alphas,
              const std::string& measure_name, int hybrid_t) {
  const bool mono = measure_name == "lcren";

  QuantumState state = resolve_state(args.state_source);
  CheckOptions opt;
  opt.roof = args.roof;
  opt.roof.seed = args.seed;
  opt.hybrid_t = hybrid_t;
  const InequalitySession session(state, args.focus,
                                  mono ? PairMeasure::lcren : PairMeasure::lcrenoa, opt);

  struct Row {
    double alpha, lhs, rhs_baseline, rhs_tight;
    std::optional<double> rhs_geometric;
    double margin;
  };
  std::vector<Row> rows;
  rows.reserve(alphas.size());
  for (double alpha : alphas) {
    const InequalityReport base = session.check(alpha, WeightScheme::baseline);
    const InequalityReport tight = session.check(alpha, WeightScheme::hamming);
    const InequalityReport geo = session.check(alpha, WeightScheme::geometric);
    Row row{alpha, base.lhs, base.rhs, tight.rhs, std::nullopt, 0.0};
    if (geo.conditions_met()) row.rhs_geometric = geo.rhs;
    row.margin = mono ? row.lhs - row.rhs_tight : row.rhs_tight - row.lhs;
    rows.push_back(row);
  }

  const std::string tight_col = mono ? "rhs_thm1" : "rhs_thm5";
  const std::string geo_col = mono ? "rhs_thm2" : "rhs_thm6";
  if (args.format == "json") {
    json j = json::array();
    for (const Row& r : rows) {
      json row = {{"alpha", r.alpha},
                  {"lhs", r.lhs},
                  {"rhs_baseline", r.rhs_baseline},
                  {tight_col, r.rhs_tight},
                  {"margin", r.margin}};
      row[geo_col] = r.rhs_geometric ? json(*r.rhs_geometric) : json();
      j.push_back(row);
    }
    write_output(args.out, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "alpha,lhs,rhs_baseline," << tight_col << ',' << geo_col << ",margin\n";
    for (const Row& r : rows) {
      out << fmt17(r.alpha) << ',' << fmt17(r.lhs) << ',' << fmt17(r.rhs_baseline) << ','
          << fmt17(r.rhs_tight) << ',';
      if (r.rhs_geometric) out << fmt17(*r.rhs_geometric);
      out << ',' << fmt17(r.margin) << '\n';
    }
    write_output(args.out, out.str());
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_random_suite(const CommonArgs& args, int qubits, int count,
                     std::vector<double> alphas,
                     const std::vector<std::string>& theorem_names, int hybrid_t) {
  if (alphas.empty()) alphas = {kFourLn2, 3.0, 5.0, 0.5, 1.5, 2.0, -0.5, -2.0};

  struct Key {
    std::string theorem;
    double alpha;
    bool operator<(const Key& o) const {
      return theorem != o.theorem ? theorem < o.theorem : alpha < o.alpha;
    }
  };
  struct Stats {
    int checked = 0, held = 0, violated = 0, inconclusive = 0, condition_failed = 0;
    double worst_margin = std::numeric_limits<double>::infinity();
  };

  // per-state results, merged by index so output is schedule independent
  std::vector<std::vector<std::pair<Key, Verdict>>> per_state(
      static_cast<std::size_t>(count));
  std::vector<std::vector<double>> per_state_margin(static_cast<std::size_t>(count));
  std::vector<bool> per_state_violation(static_cast<std::size_t>(count), false);
  const SubsystemShape shape = SubsystemShape::qubits(qubits);

  parallel_for(static_cast<std::size_t>(count), [&](std::size_t k) {
    const QuantumState state = haar_random_pure(shape, mix_seed(args.seed, k));
    CheckOptions opt;
    opt.roof = args.roof;
    opt.roof.seed = mix_seed(args.seed, k ^ 0xABCDull);
    opt.hybrid_t = hybrid_t;
    SessionCache cache{state, 0, opt, {}};
    bool violation = false;
    for (double alpha : alphas) {
      std::vector<TheoremId> ids;
      if (theorem_names.empty()) {
        ids = default_theorems(alpha);
      } else {
        for (const std::string& name : theorem_names) {
          const TheoremId id = theorem_from_string(name);
          const bool neg = alpha < 0.0;
          const bool mono_range = alpha >= kFourLn2 - 1e-12;
          const bool poly_range = alpha >= 0.0 && alpha <= 2.0 + 1e-12;
          bool applicable = false;
          switch (id) {
            case TheoremId::baseline_mono:
            case TheoremId::thm1:
            case TheoremId::thm2:
            case TheoremId::thm3: applicable = mono_range; break;
            case TheoremId::baseline_poly:
            case TheoremId::thm5:
            case TheoremId::thm6:
            case TheoremId::thm7: applicable = poly_range; break;
            case TheoremId::thm4:
            case TheoremId::thm8: applicable = neg; break;
            case TheoremId::ckw: applicable = qubits == 3; break;
          }
          if (applicable) ids.push_back(id);
        }
      }
      for (TheoremId id : ids) {
        const InequalityReport r = run_theorem(cache, id, alpha, state, opt);
        per_state[k].push_back({Key{to_string(id), alpha}, r.verdict});
        per_state_margin[k].push_back(r.margin);
        violation = violation || unexpected_violation(r);
      }
    }
    per_state_violation[k] = violation;
  });

  std::map<Key, Stats> totals;
  bool violation = false;
  for (std::size_t k = 0; k < per_state.size(); ++k) {
    for (std::size_t i = 0; i < per_state[k].size(); ++i) {
      const auto& [key, verdict] = per_state[k][i];
      Stats& s = totals[key];
      ++s.checked;
      switch (verdict) {
        case Verdict::holds: ++s.held; break;
        case Verdict::violated: ++s.violated; break;
        case Verdict::inconclusive: ++s.inconclusive; break;
        case Verdict::condition_failed: ++s.condition_failed; break;
      }
      if (verdict != Verdict::condition_failed)
        s.worst_margin = std::min(s.worst_margin, per_state_margin[k][i]);
    }
    violation = violation || per_state_violation[k];
  }

  json j;
  j["qubits"] = qubits;
  j["count"] = count;
  j["seed"] = args.seed;
  j["rng_algorithm"] = kRngAlgorithmId;
  j["alphas"] = alphas;
  j["results"] = json::array();
  for (const auto& [key, s] : totals) {
    j["results"].push_back({{"theorem", key.theorem},
                            {"alpha", key.alpha},
                            {"checked", s.checked},
                            {"held", s.held},
                            {"violated", s.violated},
                            {"inconclusive", s.inconclusive},
                            {"condition_failed", s.condition_failed},
                            {"worst_margin", s.checked == s.condition_failed
                                                 ? json()
                                                 : json(s.worst_margin)}});
  }
  write_output(args.out, j.dump(2) + "\n");
  return violation ? kExitViolation : kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_catalog(const std::optional<std::string>& out, const std::string& format) {
  if (format == "csv") {
    std::ostringstream os;
    os << "name,dims,description\n";
    for (const CatalogEntry& e : state_catalog()) {
      const QuantumState s = catalog_state(e.name);
      os << e.name << ',';
      for (std::size_t i = 0; i < s.shape.dims.size(); ++i)
        os << (i ? "x" : "") << s.shape.dims[i];
      os << ',' << '"' << e.description << '"' << '\n';
    }
    write_output(out, os.str());
  } else {
    json j = json::array();
    for (const CatalogEntry& e : state_catalog()) {
      const QuantumState s = catalog_state(e.name);
      j.push_back(
          {{"name", e.name}, {"dims", s.shape.dims}, {"description", e.description}});
    }
    write_output(out, j.dump(2) + "\n");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bipartite entanglement measures and monogamy/polygamy bound checks"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string alpha_grid;
  std::vector<double> alphas;
  std::vector<std::string> theorems;
  std::string measure_name = "lcren";
  int hybrid_t = 0;
  int qubits = 3;
  int count = 100;

  auto add_common = [&](CLI::App* cmd, bool needs_state) {
    if (needs_state)
      cmd->add_option("--state", args.state_source, "state file path or catalog:NAME")
          ->required();
    cmd->add_option("--focus", args.focus, "focus subsystem index (default 0)");
    cmd->add_option("--seed", args.seed, "random seed for optimizer / sampling");
    cmd->add_option("--out", args.out, "output path (stdout if omitted)");
    cmd->add_option("--format", args.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    add_roof_flags(cmd, args.roof);
  };

  CLI::App* measure = app.add_subcommand("measure", "compute all measures for a state/cut");
  add_common(measure, true);

  CLI::App* check = app.add_subcommand("check", "run theorem checks at given alpha(s)");
  add_common(check, true);
  check->add_option("--alpha", alphas, "alpha value (repeatable)");
  check->add_option("--alpha-grid", alpha_grid, "grid lo:hi:steps");
  check->add_option("--theorems", theorems, "comma separated theorem ids")->delimiter(',');
  check->add_option("--t", hybrid_t, "split parameter for thm3/thm7");

  CLI::App* sweep = app.add_subcommand("sweep", "alpha sweep producing figure data");
  add_common(sweep, true);
  sweep->add_option("--alpha-grid", alpha_grid, "grid lo:hi:steps")->required();
  sweep->add_option("--measure", measure_name, "lcren or lcrenoa")
      ->check(CLI::IsMember({"lcren", "lcrenoa"}));
  sweep->add_option("--t", hybrid_t, "split parameter for thm3/thm7");

  CLI::App* random_suite = app.add_subcommand("random-suite", "seeded Haar property sweep");
  add_common(random_suite, false);
  random_suite->add_option("--qubits", qubits, "number of qubits (default 3)")
      ->check(CLI::Range(2, 6));
  random_suite->add_option("--count", count, "number of sampled states")->required();
  random_suite->add_option("--alpha", alphas, "alpha value (repeatable)");
  random_suite->add_option("--alpha-grid", alpha_grid, "grid lo:hi:steps");
  random_suite->add_option("--theorems", theorems, "comma separated theorem ids")
      ->delimiter(',');
  random_suite->add_option("--t", hybrid_t, "split parameter for thm3/thm7");

  CLI::App* catalog = app.add_subcommand("catalog", "list named states");
  catalog->add_option("--out", args.out, "output path (stdout if omitted)");
  catalog->add_option("--format", args.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sweep->parsed() && !sweep->get_option("--format")->count()) args.format = "csv";
    if (!alpha_grid.empty()) {
      const std::vector<double> grid = parse_grid(alpha_grid);
      alphas.insert(alphas.end(), grid.begin(), grid.end());
    }
    if (measure->parsed()) return cmd_measure(args);
    if (check->parsed()) {
      if (alphas.empty()) throw std::invalid_argument("check needs --alpha or --alpha-grid");
      return cmd_check(args, alphas, theorems, hybrid_t);
    }
    if (sweep->parsed()) return cmd_sweep(args, alphas, measure_name, hybrid_t);
    if (random_suite->parsed())
      return cmd_random_suite(args, qubits, count, alphas, theorems, hybrid_t);
    if (catalog->parsed()) return cmd_catalog(args.out, args.format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
