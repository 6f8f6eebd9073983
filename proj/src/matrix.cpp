// Copyright 2026 the entanglion authors
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "entanglion/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace entanglion {

int SubsystemShape::total_dim() const {
  int d = 1;
  for (int dim : dims) d *= dim;
  return d;
}

void SubsystemShape::validate() const {
  if (dims.empty()) throw std::invalid_argument("shape: no subsystems");
  long long d = 1;
  for (int dim : dims) {
    if (dim < 2) throw std::invalid_argument("shape: local dimension must be >= 2");
    d *= dim;
    if (d > kMaxTotalDim)
      throw std::invalid_argument("shape: total dimension exceeds cap of " +
                                  std::to_string(kMaxTotalDim));
  }
}

SubsystemShape SubsystemShape::qubits(int n) {
  SubsystemShape s;
  s.dims.assign(static_cast<std::size_t>(n), 2);
  s.validate();
  return s;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

namespace {

void check_square_with_shape(const ComplexMatrix& m, const SubsystemShape& shape) {
  shape.validate();
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
  if (m.rows() != shape.total_dim())
    throw std::invalid_argument("matrix dimension does not match shape");
}

// strides[i] = product of dims to the right of i (most significant first).
std::vector<int> strides_of(const SubsystemShape& shape) {
  const int n = shape.subsystem_count();
  std::vector<int> strides(static_cast<std::size_t>(n), 1);
  for (int i = n - 2; i >= 0; --i) strides[i] = strides[i + 1] * shape.dims[i + 1];
  return strides;
}

std::vector<int> checked_sorted_subset(const SubsystemShape& shape,
                                       const std::vector<int>& subset,
                                       const char* what) {
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= shape.subsystem_count())
      throw std::out_of_range(std::string(what) + ": subsystem index out of range");
    if (i > 0 && s[i] == s[i - 1])
      throw std::invalid_argument(std::string(what) + ": duplicate subsystem index");
  }
  return s;
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemShape& shape,
                            const std::vector<int>& keep) {
  check_square_with_shape(m, shape);
  const std::vector<int> kept = checked_sorted_subset(shape, keep, "partial_trace");
  const int n = shape.subsystem_count();

  std::vector<int> traced;
  for (int i = 0; i < n; ++i)
    if (!std::binary_search(kept.begin(), kept.end(), i)) traced.push_back(i);
  if (traced.empty()) return m;

  const std::vector<int> strides = strides_of(shape);

  int dk = 1;
  for (int i : kept) dk *= shape.dims[i];
  int dt = 1;
  for (int i : traced) dt *= shape.dims[i];

  // offset of each composite kept/traced index inside the full index space
  auto offsets = [&](const std::vector<int>& subs, int count) {
    std::vector<int> off(static_cast<std::size_t>(count), 0);
    for (int c = 0; c < count; ++c) {
      int rem = c;
      for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
        off[c] += (rem % shape.dims[*it]) * strides[*it];
        rem /= shape.dims[*it];
      }
    }
    return off;
  };
  const std::vector<int> koff = offsets(kept, dk);
  const std::vector<int> toff = offsets(traced, dt);

  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (int r = 0; r < dk; ++r)
    for (int c = 0; c < dk; ++c) {
      Complex acc{0.0, 0.0};
      for (int t = 0; t < dt; ++t) acc += m(koff[r] + toff[t], koff[c] + toff[t]);
      out(r, c) = acc;
    }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, const SubsystemShape& shape,
                                const std::vector<int>& subset) {
  check_square_with_shape(m, shape);
  const std::vector<int> sub = checked_sorted_subset(shape, subset, "partial_transpose");
  const int d = shape.total_dim();
  const std::vector<int> strides = strides_of(shape);

  // For every full index, the part belonging to `subset` and the rest.
  std::vector<int> sub_part(static_cast<std::size_t>(d), 0);
  for (int g = 0; g < d; ++g) {
    int acc = 0;
    for (int i : sub) acc += ((g / strides[i]) % shape.dims[i]) * strides[i];
    sub_part[g] = acc;
  }

  ComplexMatrix out(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      const int rs = sub_part[r], cs = sub_part[c];
      out((r - rs) + cs, (c - cs) + rs) = m(r, c);
    }
  }
  return out;
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
  if (!is_hermitian(m, 1e-9))
    throw std::invalid_argument("matrix is not Hermitian");
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  RealVector ev = solver.eigenvalues();
  return ev.reverse();
}

double trace_norm(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
  if (is_hermitian(m)) {
    const ComplexMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().sum();
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().sum();
}

}  // namespace entanglion
