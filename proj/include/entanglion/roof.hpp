// Copyright 2026 the entanglion authors
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

// Numerical convex-roof minimization/maximization over pure-state
// decompositions. Every size-m decomposition of rho with eigenpairs
// (q_j, |v_j>) is |psi~_k> = sum_j V_kj sqrt(q_j) |v_j> for an m x r isometry
// V (V^dag V = I). The optimizer searches isometry space with random
// two-member rotations (exactly isometry-preserving) and a step size driven
// by the 1/5 success rule; restarts decorrelate local minima.
//
// The returned value is an upper bound of the true roof for minimization and
// a lower bound for maximization: it is always the average of f over a
// concrete valid decomposition.

#pragma once

#include "entanglion/states.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace entanglion {

struct Ensemble {
  std::vector<double> weights;        // probabilities, sum 1
  std::vector<QuantumState> members;  // normalized pure states

  // max-entry deviation of sum_k p_k |psi_k><psi_k| from rho
  double reconstruction_error(const QuantumState& rho) const;
};

struct RoofConfig {
  int ensemble_size = 0;     // 0 -> r^2 (r = rank of rho); values < r are raised to r
  int restarts = 32;
  int max_iterations = 2000;
  double tolerance = 1e-6;   // step-size floor; a restart converges when reached
  std::uint64_t seed = 0;
};

using PureFunctional = std::function<double(const ComplexVector&)>;

struct RoofResult {
  double value = 0.0;
  Ensemble ensemble;
  double error_bound = 0.0;  // spread over the top 3 restarts; inflated when
                             // the best restart hit max_iterations unconverged
  bool converged = true;
  int best_restart = 0;
};

// Ensemble realized by an m x r isometry acting on the eigendecomposition of
// rho. V = identity reproduces the eigendecomposition itself. Throws on a
// non-isometric V or a column count different from rank(rho).
Ensemble decompose(const QuantumState& rho, const ComplexMatrix& isometry);

RoofResult roof_minimize(const QuantumState& rho, const PureFunctional& f,
                         const RoofConfig& cfg = {});
RoofResult roof_maximize(const QuantumState& rho, const PureFunctional& f,
                         const RoofConfig& cfg = {});

}  // namespace entanglion
