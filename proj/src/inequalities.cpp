// Copyright 2026 the entanglion authors
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "entanglion/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace entanglion {

namespace {

constexpr double kCondTol = 1e-12;

double scale_for(PairMeasure m) { return m == PairMeasure::lcren ? kFourLn2 : 2.0; }

MeasureValue eval_measure(const QuantumState& s, const Bipartition& cut,
                          PairMeasure m, const RoofConfig& cfg) {
  switch (m) {
    case PairMeasure::lcren: return lcren(s, cut, cfg);
    case PairMeasure::lcrenoa: return lcrenoa(s, cut, cfg);
    case PairMeasure::tangle: return tangle(s, cut, cfg);
  }
  throw std::logic_error("unreachable");
}

// |d/dE E^alpha| * eb, guarded for E = 0
double power_error(double e, double alpha, double eb) {
  if (eb == 0.0) return 0.0;
  if (e <= 0.0) return alpha >= 1.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::abs(alpha) * std::pow(e, alpha - 1.0) * eb;
}

Verdict final_verdict(bool conditions_ok, double margin, double error_bound) {
  if (!conditions_ok) return Verdict::condition_failed;
  if (margin >= -kMarginTol) return Verdict::holds;
  if (-margin <= error_bound) return Verdict::inconclusive;
  return Verdict::violated;
}

}  // namespace

bool lemma1_check(double x, double alpha) {
  if (x < 0.0 || x > 1.0 || alpha < 0.0)
    throw std::invalid_argument("lemma1_check: x in [0,1] and alpha >= 0 required");
  const double lhs = std::pow(1.0 + x, alpha);
  const double rhs = 1.0 + alpha * std::pow(x, alpha);
  const double tol = 1e-12 * std::max(1.0, std::max(lhs, rhs));
  return alpha >= 1.0 ? lhs >= rhs - tol : lhs <= rhs + tol;
}

std::string to_string(PairMeasure m) {
  switch (m) {
    case PairMeasure::lcren: return "lcren";
    case PairMeasure::lcrenoa: return "lcrenoa";
    case PairMeasure::tangle: return "tangle";
  }
  return "?";
}

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::baseline_mono: return "baseline_mono";
    case TheoremId::baseline_poly: return "baseline_poly";
    case TheoremId::thm1: return "thm1";
    case TheoremId::thm2: return "thm2";
    case TheoremId::thm3: return "thm3";
    case TheoremId::thm4: return "thm4";
    case TheoremId::thm5: return "thm5";
    case TheoremId::thm6: return "thm6";
    case TheoremId::thm7: return "thm7";
    case TheoremId::thm8: return "thm8";
    case TheoremId::ckw: return "ckw";
  }
  return "?";
}

TheoremId theorem_from_string(const std::string& name) {
  static const std::pair<const char*, TheoremId> table[] = {
      {"baseline_mono", TheoremId::baseline_mono},
      {"baseline_poly", TheoremId::baseline_poly},
      {"thm1", TheoremId::thm1}, {"thm2", TheoremId::thm2},
      {"thm3", TheoremId::thm3}, {"thm4", TheoremId::thm4},
      {"thm5", TheoremId::thm5}, {"thm6", TheoremId::thm6},
      {"thm7", TheoremId::thm7}, {"thm8", TheoremId::thm8},
      {"ckw", TheoremId::ckw},
  };
  for (const auto& [n, id] : table)
    if (name == n) return id;
  throw std::invalid_argument("unknown theorem id: " + name);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::condition_failed: return "condition_failed";
  }
  return "?";
}

bool InequalityReport::conditions_met() const {
  for (const auto& c : condition_verdicts)
    if (c.gating && !c.satisfied) return false;
  return true;
}

MeasureProfile measure_profile(const QuantumState& s, int focus, PairMeasure m,
                               const RoofConfig& cfg) {
  s.validate();
  const int n = s.shape.subsystem_count();
  if (focus < 0 || focus >= n)
    throw std::out_of_range("measure_profile: focus index out of range");
  if (n < 2)
    throw std::invalid_argument("measure_profile: state has no partner subsystems");

  MeasureProfile profile;
  profile.focus = focus;
  profile.total = eval_measure(s, Bipartition{{focus}}, m, cfg);
  for (int b = 0; b < n; ++b) {
    if (b == focus) continue;
    profile.partners.push_back(b);
    const std::vector<int> keep = focus < b ? std::vector<int>{focus, b}
                                            : std::vector<int>{b, focus};
    const QuantumState pair = reduced_state(s, keep);
    const Bipartition cut{{focus < b ? 0 : 1}};
    profile.pairwise.push_back(eval_measure(pair, cut, m, cfg));
  }
  return profile;
}

SortedPairwise sort_pairwise(const MeasureProfile& profile) {
  const std::size_t n = profile.pairwise.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return profile.pairwise[a].value > profile.pairwise[b].value;
  });
  SortedPairwise sp;
  for (std::size_t i : order) {
    sp.e.push_back(profile.pairwise[i].value);
    sp.eb.push_back(profile.pairwise[i].error_bound);
    sp.subsystems.push_back(profile.partners[i]);
  }
  return sp;
}

std::vector<RhsTerm> weighted_bound(const std::vector<double>& e_desc, double alpha,
                                    WeightScheme scheme, double scale_c, int hybrid_t) {
  const int n = static_cast<int>(e_desc.size());
  if (n == 0) throw std::invalid_argument("weighted_bound: empty term list");
  for (int j = 1; j < n; ++j)
    if (e_desc[static_cast<std::size_t>(j)] > e_desc[static_cast<std::size_t>(j - 1)] + kCondTol)
      throw std::invalid_argument("weighted_bound: values not sorted descending");
  if (scheme == WeightScheme::hybrid && (hybrid_t < 0 || hybrid_t > n - 3))
    throw std::invalid_argument("weighted_bound: hybrid split t out of range [0, N-3]");

  std::vector<RhsTerm> terms;
  terms.reserve(static_cast<std::size_t>(n));
  const double ratio = alpha / scale_c;
  for (int j = 0; j < n; ++j) {
    int expo = 0;
    switch (scheme) {
      case WeightScheme::baseline: expo = 0; break;
      case WeightScheme::hamming: expo = hamming_weight(static_cast<std::uint64_t>(j)); break;
      case WeightScheme::geometric: expo = j; break;
      case WeightScheme::hybrid:
        expo = j <= hybrid_t ? j : (j == n - 1 ? hybrid_t + 1 : hybrid_t + 2);
        break;
    }
    RhsTerm t;
    t.sorted_index = j;
    t.weight = std::pow(ratio, expo);
    t.base = e_desc[static_cast<std::size_t>(j)];
    t.term = t.weight * std::pow(t.base, alpha);
    terms.push_back(t);
  }
  return terms;
}

InequalitySession::InequalitySession(const QuantumState& s, int focus, PairMeasure m,
                                     const CheckOptions& opt)
    : state_(s), measure_(m), opt_(opt),
      profile_(measure_profile(s, focus, m, opt.roof)),
      sorted_(sort_pairwise(profile_)) {}

const std::vector<double>& InequalitySession::grouped_tails() const {
  if (grouped_ready_) return grouped_tails_;
  const int n = static_cast<int>(sorted_.e.size());
  grouped_tails_.assign(static_cast<std::size_t>(n), 0.0);
  // entry i = measure across focus | {sorted partners i+1 .. n-1}
  for (int i = 0; i + 1 < n; ++i) {
    if (i + 1 == n - 1) {
      grouped_tails_[static_cast<std::size_t>(i)] = sorted_.e[static_cast<std::size_t>(n - 1)];
      continue;
    }
    std::vector<int> keep(sorted_.subsystems.begin() + i + 1, sorted_.subsystems.end());
    keep.push_back(profile_.focus);
    std::sort(keep.begin(), keep.end());
    const QuantumState sub = reduced_state(state_, keep);
    const int focus_pos = static_cast<int>(
        std::find(keep.begin(), keep.end(), profile_.focus) - keep.begin());
    grouped_tails_[static_cast<std::size_t>(i)] =
        eval_measure(sub, Bipartition{{focus_pos}}, measure_, opt_.roof).value;
  }
  grouped_ready_ = true;
  return grouped_tails_;
}

std::vector<ConditionVerdict> InequalitySession::scheme_conditions(WeightScheme scheme,
                                                                   int hybrid_t) const {
  std::vector<ConditionVerdict> out;
  const int n = static_cast<int>(sorted_.e.size());
  const double c = scale_for(measure_);

  if (scheme == WeightScheme::geometric) {
    // E_i^c must dominate the sum of every later E_j^c
    std::vector<double> powc(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      powc[static_cast<std::size_t>(j)] = std::pow(sorted_.e[static_cast<std::size_t>(j)], c);
    double tail = 0.0;
    for (int i = n - 2; i >= 0; --i) {
      tail += powc[static_cast<std::size_t>(i + 1)];
      out.push_back({"tail_dominance_" + std::to_string(i),
                     powc[static_cast<std::size_t>(i)] >= tail - kCondTol, true});
    }
    std::reverse(out.begin(), out.end());
  } else if (scheme == WeightScheme::hybrid) {
    const bool t_ok = n >= 3 && hybrid_t >= 0 && hybrid_t <= n - 3;
    out.push_back({"t_range", t_ok, true});
    if (t_ok) {
      const std::vector<double>& tails = grouped_tails();
      for (int i = 0; i <= hybrid_t; ++i)
        out.push_back({"head_" + std::to_string(i),
                       sorted_.e[static_cast<std::size_t>(i)] >=
                           tails[static_cast<std::size_t>(i)] - kCondTol,
                       true});
      for (int j = hybrid_t + 1; j <= n - 2; ++j)
        out.push_back({"tail_" + std::to_string(j),
                       sorted_.e[static_cast<std::size_t>(j)] <=
                           tails[static_cast<std::size_t>(j)] + kCondTol,
                       true});
    }
  }
  return out;
}

InequalityReport InequalitySession::check_positive(double alpha, WeightScheme scheme,
                                                   int hybrid_t) const {
  const bool mono = measure_ == PairMeasure::lcren;
  const double c = scale_for(measure_);
  if (mono && alpha < kFourLn2 - kCondTol)
    throw std::invalid_argument("monogamy bounds require alpha >= 4 ln 2");
  if (!mono && (alpha < 0.0 || alpha > 2.0 + kCondTol))
    throw std::invalid_argument("polygamy bounds require alpha in [0, 2]");

  InequalityReport report;
  report.alpha = alpha;
  switch (scheme) {
    case WeightScheme::baseline:
      report.theorem_id = mono ? TheoremId::baseline_mono : TheoremId::baseline_poly;
      break;
    case WeightScheme::hamming:
      report.theorem_id = mono ? TheoremId::thm1 : TheoremId::thm5;
      break;
    case WeightScheme::geometric:
      report.theorem_id = mono ? TheoremId::thm2 : TheoremId::thm6;
      break;
    case WeightScheme::hybrid:
      report.theorem_id = mono ? TheoremId::thm3 : TheoremId::thm7;
      break;
  }

  report.condition_verdicts = scheme_conditions(scheme, hybrid_t);
  if (!mono)
    report.condition_verdicts.push_back(
        {"alpha_ne_1", std::abs(alpha - 1.0) > kCondTol, false});

  report.lhs = std::pow(profile_.total.value, alpha);
  const bool hybrid_ok = scheme != WeightScheme::hybrid ||
                         (static_cast<int>(sorted_.e.size()) >= 3 && hybrid_t >= 0 &&
                          hybrid_t <= static_cast<int>(sorted_.e.size()) - 3);
  if (hybrid_ok) {
    report.rhs_terms = weighted_bound(sorted_.e, alpha, scheme, c, hybrid_t);
    for (std::size_t j = 0; j < report.rhs_terms.size(); ++j)
      report.rhs_terms[j].subsystem = sorted_.subsystems[j];
    for (const RhsTerm& t : report.rhs_terms) report.rhs += t.term;
  }

  report.margin = mono ? report.lhs - report.rhs : report.rhs - report.lhs;
  report.holds = report.margin >= -kMarginTol;

  double err = power_error(profile_.total.value, alpha, profile_.total.error_bound);
  for (std::size_t j = 0; j < report.rhs_terms.size(); ++j)
    err += report.rhs_terms[j].weight *
           power_error(report.rhs_terms[j].base, alpha, sorted_.eb[j]);
  report.error_bound = err;
  report.verdict = final_verdict(report.conditions_met(), report.margin, err);
  return report;
}

InequalityReport InequalitySession::check_negative(double alpha) const {
  const bool mono = measure_ == PairMeasure::lcren;

  InequalityReport report;
  report.theorem_id = mono ? TheoremId::thm4 : TheoremId::thm8;
  report.alpha = alpha;

  // zero-valued pairwise terms are removed and N becomes the survivor count
  std::vector<double> e, eb;
  std::vector<int> labels;
  int removed = 0;
  for (std::size_t j = 0; j < sorted_.e.size(); ++j) {
    if (sorted_.e[j] > kZeroMeasureTol) {
      e.push_back(sorted_.e[j]);
      eb.push_back(sorted_.eb[j]);
      labels.push_back(sorted_.subsystems[j]);
    } else {
      ++removed;
      report.condition_verdicts.push_back(
          {"removed_zero_pair_B" + std::to_string(sorted_.subsystems[j]), true, false});
    }
  }
  report.condition_verdicts.push_back({"total_nonzero",
                                       profile_.total.value > kZeroMeasureTol, true});
  report.condition_verdicts.push_back({"nonzero_pairs_remain", !e.empty(), true});
  report.condition_verdicts.push_back(
      {"zero_pairs_removed_" + std::to_string(removed), true, false});

  if (!report.conditions_met()) {
    report.verdict = Verdict::condition_failed;
    report.holds = true;
    return report;
  }

  const double n_eff = static_cast<double>(e.size());
  report.lhs = std::pow(profile_.total.value, alpha);
  double err = power_error(profile_.total.value, alpha, profile_.total.error_bound);
  for (std::size_t j = 0; j < e.size(); ++j) {
    RhsTerm t;
    t.sorted_index = static_cast<int>(j);
    t.subsystem = labels[j];
    t.weight = 1.0 / n_eff;
    t.base = e[j];
    t.term = t.weight * std::pow(e[j], alpha);
    report.rhs += t.term;
    err += t.weight * power_error(e[j], alpha, eb[j]);
    report.rhs_terms.push_back(t);
  }

  // thm4 is an upper bound on the lhs, thm8 a lower bound
  report.margin = mono ? report.rhs - report.lhs : report.lhs - report.rhs;
  report.holds = report.margin >= -kMarginTol;
  report.error_bound = err;
  report.verdict = final_verdict(true, report.margin, err);
  return report;
}

InequalityReport InequalitySession::check(double alpha, WeightScheme scheme,
                                          int hybrid_t) const {
  if (measure_ == PairMeasure::tangle)
    throw std::invalid_argument("tangle sessions only support ckw_check");
  if (alpha < 0.0) return check_negative(alpha);
  return check_positive(alpha, scheme, hybrid_t);
}

InequalityReport InequalitySession::check(double alpha, WeightScheme scheme) const {
  return check(alpha, scheme, opt_.hybrid_t);
}

std::vector<int> InequalitySession::admissible_hybrid_t() const {
  std::vector<int> out;
  const int n = static_cast<int>(sorted_.e.size());
  for (int t = 0; t + 3 <= n; ++t) {
    const auto conds = scheme_conditions(WeightScheme::hybrid, t);
    bool ok = true;
    for (const auto& c : conds) ok = ok && (!c.gating || c.satisfied);
    if (ok) out.push_back(t);
  }
  return out;
}

InequalityReport check_monogamy(const QuantumState& s, int focus, double alpha,
                                WeightScheme scheme, const CheckOptions& opt) {
  return InequalitySession(s, focus, PairMeasure::lcren, opt).check(alpha, scheme);
}

InequalityReport check_polygamy(const QuantumState& s, int focus, double alpha,
                                WeightScheme scheme, const CheckOptions& opt) {
  if (alpha < 0.0)
    throw std::invalid_argument("check_polygamy: alpha must be in [0, 2]");
  return InequalitySession(s, focus, PairMeasure::lcrenoa, opt).check(alpha, scheme);
}

InequalityReport check_negative_alpha(const QuantumState& s, int focus, double alpha,
                                      NegativeAlphaMode mode, const CheckOptions& opt) {
  if (alpha >= 0.0)
    throw std::invalid_argument("check_negative_alpha: alpha must be negative");
  const PairMeasure m = mode == NegativeAlphaMode::monogamy_upper ? PairMeasure::lcren
                                                                  : PairMeasure::lcrenoa;
  return InequalitySession(s, focus, m, opt).check(alpha, WeightScheme::baseline);
}

InequalityReport ckw_check(const QuantumState& s, const CheckOptions& opt) {
  s.validate();
  if (!s.is_pure() || s.shape.subsystem_count() != 3)
    throw std::invalid_argument("ckw_check: state must be pure and tripartite");

  const MeasureProfile profile = measure_profile(s, 0, PairMeasure::tangle, opt.roof);
  const SortedPairwise sp = sort_pairwise(profile);

  InequalityReport report;
  report.theorem_id = TheoremId::ckw;
  report.alpha = 1.0;
  report.lhs = profile.total.value;
  double err = profile.total.error_bound;
  for (std::size_t j = 0; j < sp.e.size(); ++j) {
    RhsTerm t;
    t.sorted_index = static_cast<int>(j);
    t.subsystem = sp.subsystems[j];
    t.weight = 1.0;
    t.base = sp.e[j];
    t.term = sp.e[j];
    report.rhs += t.term;
    err += sp.eb[j];
    report.rhs_terms.push_back(t);
  }
  bool all_qubits = true;
  for (int d : s.shape.dims) all_qubits = all_qubits && d == 2;
  report.condition_verdicts.push_back({"all_qubits", all_qubits, false});

  report.margin = report.lhs - report.rhs;
  report.holds = report.margin >= -kMarginTol;
  report.error_bound = err;
  report.verdict = final_verdict(true, report.margin, err);
  return report;
}

std::vector<TightnessVerdict> compare_tightness(const std::vector<InequalityReport>& reports) {
  struct Pair {
    TheoremId tighter, looser;
    bool mono;
  };
  static const Pair pairs[] = {
      {TheoremId::thm1, TheoremId::baseline_mono, true},
      {TheoremId::thm2, TheoremId::thm1, true},
      {TheoremId::thm5, TheoremId::baseline_poly, false},
      {TheoremId::thm6, TheoremId::thm5, false},
  };

  std::vector<TightnessVerdict> out;
  for (const Pair& p : pairs) {
    for (const InequalityReport& a : reports) {
      if (a.theorem_id != p.tighter) continue;
      for (const InequalityReport& b : reports) {
        if (b.theorem_id != p.looser) continue;
        if (std::abs(a.alpha - b.alpha) > kCondTol) continue;
        TightnessVerdict v;
        v.tighter = p.tighter;
        v.looser = p.looser;
        v.alpha = a.alpha;
        v.applicable = a.conditions_met();
        v.gap = a.rhs - b.rhs;
        v.ordered = !v.applicable ||
                    (p.mono ? v.gap >= -kCondTol : v.gap <= kCondTol);
        out.push_back(v);
      }
    }
  }
  return out;
}

}  // namespace entanglion
