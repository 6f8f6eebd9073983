// Copyright 2026 the entanglion authors
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

// Bipartite entanglement measures. Conventions:
//  - negativity is unnormalized, ||rho^{T_A}||_1 - 1 (a two-qutrit maximally
//    entangled state reaches 2);
//  - all logarithmic quantities use log base 2 and are reported in bits.
//
// cren/crenoa/tangle dispatch: pure states use the exact pure-state formula,
// two-qubit mixed states use the Wootters closed forms, everything else runs
// the convex-roof optimizer. MeasureValue::method records which path was
// taken so reports stay auditable.

#pragma once

#include "entanglion/roof.hpp"
#include "entanglion/states.hpp"

#include <string>
#include <vector>

namespace entanglion {

enum class MeasureKind {
  negativity,
  log_negativity,
  concurrence,
  concurrence_assist,
  cren,
  crenoa,
  lcren,
  lcrenoa,
  tangle,
};

enum class MeasureMethod { closed_form, pure_state, roof_optimizer };

struct MeasureValue {
  MeasureKind name;
  double value = 0.0;
  MeasureMethod method = MeasureMethod::closed_form;
  double error_bound = 0.0;
};

std::string to_string(MeasureKind k);
std::string to_string(MeasureMethod m);

// The A side of an A|B split: a nonempty proper subset of subsystem indices.
struct Bipartition {
  std::vector<int> side_a;

  void validate(const SubsystemShape& shape) const;
  std::vector<int> side_b(const SubsystemShape& shape) const;
};

// ||rho^{T_A}||_1 - 1
MeasureValue negativity(const QuantumState& s, const Bipartition& cut);
// log2(negativity + 1)
MeasureValue log_negativity(const QuantumState& s, const Bipartition& cut);

// Wootters closed form, shape must be [2,2]: max(0, mu1 - mu2 - mu3 - mu4)
MeasureValue concurrence_2qubit(const QuantumState& s);
// assistance closed form, sum of the mu_i
MeasureValue concurrence_assist_2qubit(const QuantumState& s);

MeasureValue cren(const QuantumState& s, const Bipartition& cut,
                  const RoofConfig& cfg = {});
MeasureValue crenoa(const QuantumState& s, const Bipartition& cut,
                    const RoofConfig& cfg = {});
MeasureValue lcren(const QuantumState& s, const Bipartition& cut,
                   const RoofConfig& cfg = {});
MeasureValue lcrenoa(const QuantumState& s, const Bipartition& cut,
                     const RoofConfig& cfg = {});

// pure: 2(1 - tr rho_A^2); two-qubit mixed: concurrence^2; otherwise the
// squared roof of sqrt(tangle)
MeasureValue tangle(const QuantumState& s, const Bipartition& cut,
                    const RoofConfig& cfg = {});

// Fast pure-state routes used as roof functionals (and cross-checked against
// the partial-transpose route in the tests).
double pure_state_negativity(const ComplexVector& ket, const SubsystemShape& shape,
                             const Bipartition& cut);
double pure_state_sqrt_tangle(const ComplexVector& ket, const SubsystemShape& shape,
                              const Bipartition& cut);

// Roof functionals bound to a fixed (shape, cut).
PureFunctional negativity_functional(const SubsystemShape& shape, const Bipartition& cut);
PureFunctional sqrt_tangle_functional(const SubsystemShape& shape, const Bipartition& cut);

// descending Wootters mu_i (square roots of the eigenvalues of
// rho (sy x sy) rho* (sy x sy)); shape must be [2,2]
std::array<double, 4> wootters_mu(const QuantumState& s);

}  // namespace entanglion
