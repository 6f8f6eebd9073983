// Copyright 2026 the entanglion authors
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

// Dense complex linear algebra and multipartite index manipulation for small
// systems (total dimension <= 64). All index arithmetic uses mixed-radix
// unraveling in the order of SubsystemShape::dims, most significant first:
// |j0 j1 ... j_{n-1}> maps to j0*d1*...*d_{n-1} + ... + j_{n-1}.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace entanglion {

using Complex = std::complex<double>;

// Row-major storage so that the in-memory entry order matches the JSON wire
// format (a matrix is a list of rows).
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Hard cap on total Hilbert-space dimension (6 qubits).
inline constexpr int kMaxTotalDim = 64;

inline constexpr double kHermitianTol = 1e-12;

// Eigenvalues closer to zero than this are clamped to zero before any square
// root is taken inside the measure layer.
inline constexpr double kEigenvalueClampTol = 1e-10;

inline double clamp_eigenvalue(double x) {
  return (x > -kEigenvalueClampTol && x < kEigenvalueClampTol) ? 0.0 : x;
}

// Ordered list of local dimensions, each >= 2, product <= kMaxTotalDim.
struct SubsystemShape {
  std::vector<int> dims;

  int total_dim() const;
  int subsystem_count() const { return static_cast<int>(dims.size()); }
  // Throws std::invalid_argument on an empty shape, a dim < 2, or a total
  // dimension beyond the cap.
  void validate() const;

  static SubsystemShape qubits(int n);

  bool operator==(const SubsystemShape& other) const = default;
};

bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Reduced matrix over the kept subsystems (ascending index order, duplicates
// rejected); the trace is preserved. keep may list every subsystem, in which
// case the input is returned unchanged.
ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemShape& shape,
                            const std::vector<int>& keep);

// Transposition of the indices belonging to `subset`; involutive and
// trace-preserving.
ComplexMatrix partial_transpose(const ComplexMatrix& m,
                                const SubsystemShape& shape,
                                const std::vector<int>& subset);

// Eigenvalues of a Hermitian matrix, descending.
RealVector hermitian_eigenvalues(const ComplexMatrix& m);

// Sum of singular values. For Hermitian input this equals the sum of the
// absolute eigenvalues and is computed that way.
double trace_norm(const ComplexMatrix& m);

}  // namespace entanglion
