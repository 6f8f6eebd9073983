// Copyright 2026 the entanglion authors
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

// Monogamy / polygamy bound evaluation for multipartite states.
//
// Families (alpha-powered, pairwise terms sorted descending first):
//   monogamy (LCREN, alpha >= 4 ln 2, scale c = 4 ln 2):
//     baseline_mono  E_tot^a >= sum_j E_j^a
//     thm1           weights (a/c)^{hamming(j)}
//     thm2           weights (a/c)^j, conditioned on tail dominance
//     thm3           split exponents driven by a parameter t
//     thm4 (a < 0)   E_tot^a <= (1/N) sum_j E_j^a
//   polygamy (LCRENoA, 0 <= alpha <= 2, scale c = 2): baseline_poly, thm5,
//     thm6, thm7 mirror the above with reversed direction; thm8 (a < 0) is
//     the reversed average bound.
//   ckw            tangle-based qubit monogamy, violated by the catalog
//                  higher-dimensional states.
//
// A report never promotes a numerical artifact to a violation: the verdict is
// `violated` only when the margin is below -1e-9 by more than the propagated
// optimizer error of every roof-computed term.

#pragma once

#include "entanglion/measures.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace entanglion {

inline constexpr double kFourLn2 = 2.7725887222397811;  // 4 ln 2
inline constexpr double kMarginTol = 1e-9;
// pairwise values at or below this count as zero for the negative-alpha rules
inline constexpr double kZeroMeasureTol = 1e-9;

inline int hamming_weight(std::uint64_t j) { return std::popcount(j); }

// (1+x)^a >= 1 + a x^a for a >= 1, and <= for 0 <= a <= 1, on x in [0,1].
bool lemma1_check(double x, double alpha);

enum class PairMeasure { lcren, lcrenoa, tangle };
std::string to_string(PairMeasure m);

struct MeasureProfile {
  int focus = 0;
  std::vector<int> partners;           // ascending, excludes focus
  MeasureValue total;                  // measure across focus | rest
  std::vector<MeasureValue> pairwise;  // aligned with partners
};

MeasureProfile measure_profile(const QuantumState& s, int focus, PairMeasure m,
                               const RoofConfig& cfg = {});

// pairwise values in descending order plus the matching labels/error bounds
struct SortedPairwise {
  std::vector<double> e;
  std::vector<double> eb;
  std::vector<int> subsystems;
};
SortedPairwise sort_pairwise(const MeasureProfile& profile);

enum class TheoremId {
  baseline_mono,
  baseline_poly,
  thm1,
  thm2,
  thm3,
  thm4,
  thm5,
  thm6,
  thm7,
  thm8,
  ckw,
};
std::string to_string(TheoremId id);
TheoremId theorem_from_string(const std::string& name);

enum class WeightScheme { baseline, hamming, geometric, hybrid };

struct RhsTerm {
  int index = 0;      // weight index j (post-sort position, or the natural
                      // position for the hybrid scheme)
  int subsystem = 0;  // original partner label
  double weight = 0.0;
  double base = 0.0;  // E_j
  double term = 0.0;  // weight * E_j^alpha
};

// Per-term weights and values of the right-hand side. scale_c is 4 ln 2 for
// LCREN bounds and 2 for LCRENoA bounds. The hamming and geometric schemes
// presuppose the descending relabeling and reject unsorted input; the hybrid
// scheme works on the given order (its side conditions encode the required
// ordering) and needs 0 <= hybrid_t <= N-3.
std::vector<RhsTerm> weighted_bound(const std::vector<double>& e_values, double alpha,
                                    WeightScheme scheme, double scale_c,
                                    int hybrid_t = 0);

struct ConditionVerdict {
  std::string id;
  bool satisfied = true;
  bool gating = true;  // informational flags do not gate the verdict
};

enum class Verdict { holds, violated, inconclusive, condition_failed };
std::string to_string(Verdict v);

struct InequalityReport {
  TheoremId theorem_id = TheoremId::baseline_mono;
  double alpha = 0.0;
  double lhs = 0.0;
  std::vector<RhsTerm> rhs_terms;
  double rhs = 0.0;
  bool holds = true;    // margin >= -1e-9
  double margin = 0.0;  // lhs - rhs for monogamy direction, rhs - lhs for polygamy
  std::vector<ConditionVerdict> condition_verdicts;
  double error_bound = 0.0;  // propagated optimizer error, margin scale
  Verdict verdict = Verdict::holds;

  bool conditions_met() const;
  bool is_violation() const { return verdict == Verdict::violated; }
};

struct CheckOptions {
  RoofConfig roof;
  int hybrid_t = 0;
};

// Precomputes the measure profile (and, lazily, the grouped tail measures
// needed by the hybrid conditions) so that many (alpha, scheme) pairs can be
// evaluated cheaply against one state.
class InequalitySession {
 public:
  InequalitySession(const QuantumState& s, int focus, PairMeasure m,
                    const CheckOptions& opt = {});

  const MeasureProfile& profile() const { return profile_; }
  const SortedPairwise& sorted() const { return sorted_; }

  // Dispatches on (measure, alpha): LCREN with alpha >= 4 ln 2 checks the
  // monogamy family, LCRENoA with alpha in [0,2] the polygamy family, and
  // alpha < 0 the averaged bounds (thm4 / thm8, scheme ignored). The hybrid
  // scheme works on the partners in their natural order; the others apply
  // the descending relabeling first.
  InequalityReport check(double alpha, WeightScheme scheme, int hybrid_t) const;
  InequalityReport check(double alpha, WeightScheme scheme) const;

  // t values in [0, N-3] whose hybrid side conditions all hold
  std::vector<int> admissible_hybrid_t() const;

 private:
  InequalityReport check_positive(double alpha, WeightScheme scheme, int hybrid_t) const;
  InequalityReport check_negative(double alpha) const;
  std::vector<ConditionVerdict> scheme_conditions(WeightScheme scheme, int hybrid_t) const;
  const std::vector<double>& grouped_tails() const;  // lazy

  QuantumState state_;
  PairMeasure measure_;
  CheckOptions opt_;
  MeasureProfile profile_;
  SortedPairwise sorted_;
  mutable std::vector<double> grouped_tails_;
  mutable bool grouped_ready_ = false;
};

InequalityReport check_monogamy(const QuantumState& s, int focus, double alpha,
                                WeightScheme scheme, const CheckOptions& opt = {});
InequalityReport check_polygamy(const QuantumState& s, int focus, double alpha,
                                WeightScheme scheme, const CheckOptions& opt = {});

enum class NegativeAlphaMode { monogamy_upper, polygamy_lower };
InequalityReport check_negative_alpha(const QuantumState& s, int focus, double alpha,
                                      NegativeAlphaMode mode,
                                      const CheckOptions& opt = {});

// tau(A|B0 B1) against tau(A|B0) + tau(A|B1) for a pure tripartite state;
// holds = false is the expected outcome for the catalog counterexamples.
InequalityReport ckw_check(const QuantumState& s, const CheckOptions& opt = {});

struct TightnessVerdict {
  TheoremId tighter;
  TheoremId looser;
  double alpha = 0.0;
  bool applicable = true;  // side conditions of the tighter bound hold
  bool ordered = true;     // rhs ordering as asserted
  double gap = 0.0;        // rhs(tighter) - rhs(looser), monogamy sign
};

// Ordering verdicts rhs(thm2) >= rhs(thm1) >= rhs(baseline) at equal alpha
// (dual directions for the polygamy family).
std::vector<TightnessVerdict> compare_tightness(const std::vector<InequalityReport>& reports);

}  // namespace entanglion
