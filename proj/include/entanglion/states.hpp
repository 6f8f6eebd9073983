// Copyright 2026 the entanglion authors
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

// Construction, validation and sampling of quantum states, plus the named
// catalog used by the CLI and the test suites. Basis ordering everywhere:
// |j0 j1 ... j_{N-1}> with j0 most significant (see matrix.hpp).

#pragma once

#include "entanglion/matrix.hpp"
#include "entanglion/rng.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace entanglion {

enum class StateKind { pure, mixed };

struct QuantumState {
  StateKind kind = StateKind::pure;
  // column vector (d x 1) for pure states, d x d density matrix for mixed
  ComplexMatrix data;
  SubsystemShape shape;

  int dim() const { return shape.total_dim(); }
  bool is_pure() const { return kind == StateKind::pure; }

  ComplexVector ket() const;       // pure only; throws otherwise
  ComplexMatrix density() const;   // |psi><psi| or the stored matrix

  // pure: unit norm (+-1e-10); mixed: Hermitian, unit trace (+-1e-10),
  // eigenvalues >= -1e-10. Throws std::invalid_argument on violation.
  void validate() const;
};

QuantumState make_pure(const ComplexVector& amplitudes, SubsystemShape shape);
QuantumState make_mixed(const ComplexMatrix& density, SubsystemShape shape);

// Partial trace onto the kept subsystems (ascending order). The result is a
// mixed state unless every subsystem is kept.
QuantumState reduced_state(const QuantumState& s, const std::vector<int>& keep);

// --- named constructors ----------------------------------------------------

// Three-qubit pure state in generalized Schmidt form:
//   l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>
// Requires li >= 0 and sum li^2 = 1 (+-1e-9).
QuantumState gsd_state(double l0, double l1, double l2, double l3, double l4,
                       double phi);

// (|100> + |010> + |001>)/sqrt(3)
QuantumState w_state();

// Four-qubit family a|Psi0> + b|Psi1> with
//   |Psi0> = |1000>,
//   |Psi1> = [(1+sqrt3)|0100> + |0010> + (sqrt3-1)|0001>]/3.
// The two basis states are orthonormal; b = 0 gives a product state across
// every cut, and a = b = 1/sqrt2 gives the four-qubit W-class state whose
// pairwise concurrences are ((1+sqrt3)/3, 1/3, (sqrt3-1)/3).
// Requires a^2 + b^2 = 1 (+-1e-9).
QuantumState df4_state(double a, double b);

// Totally antisymmetric three-qutrit state
// (|012> - |021> + |120> - |102> + |201> - |210>)/sqrt(6)
QuantumState antisym_qutrit_state();

// (sqrt2|010> + sqrt2|101> + |200> + |211>)/sqrt(6) with shape [3,2,2]
QuantumState state_322();

// rho1 = projector onto the singlet (|01>-|10>)/sqrt2, rho2 = |01><01|
std::pair<QuantumState, QuantumState> nonconvexity_pair();
// (rho1 + rho2)/2
QuantumState nonconvexity_mixture();

// Pure state from the unitarily invariant measure, deterministic given seed.
QuantumState haar_random_pure(const SubsystemShape& shape, std::uint64_t seed);

// Haar-distributed unitary via QR of a Gaussian matrix.
ComplexMatrix haar_random_unitary(int dim, Prng& rng);

// --- catalog ---------------------------------------------------------------

struct CatalogEntry {
  std::string name;
  std::string description;
};

const std::vector<CatalogEntry>& state_catalog();
QuantumState catalog_state(const std::string& name);  // throws on unknown name

// --- JSON wire format ------------------------------------------------------
//
// pure:  {"dims":[..], "kind":"pure",  "amplitudes":[[re,im],..]}
// mixed: {"dims":[..], "kind":"mixed", "matrix":[[[re,im],..],..]}

nlohmann::json state_to_json(const QuantumState& s);
QuantumState state_from_json(const nlohmann::json& j);
QuantumState load_state_file(const std::string& path);

}  // namespace entanglion
