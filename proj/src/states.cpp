// Copyright 2026 the entanglion authors
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "entanglion/states.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace entanglion {

namespace {

constexpr double kNormTol = 1e-10;
constexpr double kParamNormTol = 1e-9;

int basis_index(const SubsystemShape& shape, std::initializer_list<int> digits) {
  int idx = 0;
  auto it = digits.begin();
  for (int d : shape.dims) {
    idx = idx * d + *it++;
  }
  return idx;
}

}  // namespace

ComplexVector QuantumState::ket() const {
  if (kind != StateKind::pure)
    throw std::invalid_argument("ket(): state is not pure");
  return data.col(0);
}

ComplexMatrix QuantumState::density() const {
  if (kind == StateKind::pure) {
    const ComplexVector psi = data.col(0);
    return ComplexMatrix(psi * psi.adjoint());
  }
  return data;
}

void QuantumState::validate() const {
  shape.validate();
  const int d = dim();
  if (kind == StateKind::pure) {
    if (data.rows() != d || data.cols() != 1)
      throw std::invalid_argument("pure state: amplitude count does not match shape");
    const double norm = data.col(0).norm();
    if (std::abs(norm - 1.0) > kNormTol)
      throw std::invalid_argument("pure state: norm deviates from 1");
    return;
  }
  if (data.rows() != d || data.cols() != d)
    throw std::invalid_argument("mixed state: matrix dimension does not match shape");
  if (!is_hermitian(data, 1e-10))
    throw std::invalid_argument("mixed state: matrix is not Hermitian");
  if (std::abs(data.trace().real() - 1.0) > kNormTol)
    throw std::invalid_argument("mixed state: trace deviates from 1");
  const RealVector ev = hermitian_eigenvalues(data);
  if (ev(ev.size() - 1) < -1e-10)
    throw std::invalid_argument("mixed state: negative eigenvalue");
}

QuantumState make_pure(const ComplexVector& amplitudes, SubsystemShape shape) {
  QuantumState s;
  s.kind = StateKind::pure;
  s.data = ComplexMatrix(amplitudes.size(), 1);
  s.data.col(0) = amplitudes;
  s.shape = std::move(shape);
  s.validate();
  return s;
}

QuantumState make_mixed(const ComplexMatrix& density, SubsystemShape shape) {
  QuantumState s;
  s.kind = StateKind::mixed;
  s.data = density;
  s.shape = std::move(shape);
  s.validate();
  return s;
}

QuantumState reduced_state(const QuantumState& s, const std::vector<int>& keep) {
  if (keep.size() == s.shape.dims.size()) {
    // partial_trace validates the index set; nothing is traced out
    partial_trace(s.density(), s.shape, keep);
    return s;
  }
  SubsystemShape sub;
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  const ComplexMatrix rho = partial_trace(s.density(), s.shape, sorted);
  for (int i : sorted) sub.dims.push_back(s.shape.dims[static_cast<std::size_t>(i)]);
  QuantumState out;
  out.kind = StateKind::mixed;
  out.data = rho;
  out.shape = std::move(sub);
  out.validate();
  return out;
}

QuantumState gsd_state(double l0, double l1, double l2, double l3, double l4,
                       double phi) {
  const double lambdas[] = {l0, l1, l2, l3, l4};
  double sum = 0.0;
  for (double l : lambdas) {
    if (l < 0.0) throw std::invalid_argument("gsd_state: coefficients must be nonnegative");
    sum += l * l;
  }
  if (std::abs(sum - 1.0) > kParamNormTol)
    throw std::invalid_argument("gsd_state: coefficients are not normalized");

  const SubsystemShape shape = SubsystemShape::qubits(3);
  ComplexVector psi = ComplexVector::Zero(8);
  psi(basis_index(shape, {0, 0, 0})) = l0;
  psi(basis_index(shape, {1, 0, 0})) = l1 * Complex(std::cos(phi), std::sin(phi));
  psi(basis_index(shape, {1, 0, 1})) = l2;
  psi(basis_index(shape, {1, 1, 0})) = l3;
  psi(basis_index(shape, {1, 1, 1})) = l4;
  return make_pure(psi, shape);
}

QuantumState w_state() {
  const SubsystemShape shape = SubsystemShape::qubits(3);
  const double a = 1.0 / std::sqrt(3.0);
  ComplexVector psi = ComplexVector::Zero(8);
  psi(basis_index(shape, {1, 0, 0})) = a;
  psi(basis_index(shape, {0, 1, 0})) = a;
  psi(basis_index(shape, {0, 0, 1})) = a;
  return make_pure(psi, shape);
}

QuantumState df4_state(double a, double b) {
  if (std::abs(a * a + b * b - 1.0) > kParamNormTol)
    throw std::invalid_argument("df4_state: a^2 + b^2 must be 1");
  const SubsystemShape shape = SubsystemShape::qubits(4);
  const double s3 = std::sqrt(3.0);
  ComplexVector psi = ComplexVector::Zero(16);
  psi(basis_index(shape, {1, 0, 0, 0})) = a;
  psi(basis_index(shape, {0, 1, 0, 0})) = b * (1.0 + s3) / 3.0;
  psi(basis_index(shape, {0, 0, 1, 0})) = b / 3.0;
  psi(basis_index(shape, {0, 0, 0, 1})) = b * (s3 - 1.0) / 3.0;
  return make_pure(psi, shape);
}

QuantumState antisym_qutrit_state() {
  SubsystemShape shape{{3, 3, 3}};
  const double a = 1.0 / std::sqrt(6.0);
  ComplexVector psi = ComplexVector::Zero(27);
  psi(basis_index(shape, {0, 1, 2})) = a;
  psi(basis_index(shape, {0, 2, 1})) = -a;
  psi(basis_index(shape, {1, 2, 0})) = a;
  psi(basis_index(shape, {1, 0, 2})) = -a;
  psi(basis_index(shape, {2, 0, 1})) = a;
  psi(basis_index(shape, {2, 1, 0})) = -a;
  return make_pure(psi, shape);
}

QuantumState state_322() {
  SubsystemShape shape{{3, 2, 2}};
  const double a = 1.0 / std::sqrt(6.0);
  const double s2 = std::sqrt(2.0);
  ComplexVector psi = ComplexVector::Zero(12);
  psi(basis_index(shape, {0, 1, 0})) = s2 * a;
  psi(basis_index(shape, {1, 0, 1})) = s2 * a;
  psi(basis_index(shape, {2, 0, 0})) = a;
  psi(basis_index(shape, {2, 1, 1})) = a;
  return make_pure(psi, shape);
}

std::pair<QuantumState, QuantumState> nonconvexity_pair() {
  const SubsystemShape shape = SubsystemShape::qubits(2);
  ComplexVector singlet = ComplexVector::Zero(4);
  singlet(1) = 1.0 / std::sqrt(2.0);
  singlet(2) = -1.0 / std::sqrt(2.0);
  const ComplexMatrix rho1 = singlet * singlet.adjoint();
  ComplexMatrix rho2 = ComplexMatrix::Zero(4, 4);
  rho2(1, 1) = 1.0;
  return {make_mixed(rho1, shape), make_mixed(rho2, shape)};
}

QuantumState nonconvexity_mixture() {
  auto [rho1, rho2] = nonconvexity_pair();
  return make_mixed(0.5 * rho1.data + 0.5 * rho2.data, rho1.shape);
}

QuantumState haar_random_pure(const SubsystemShape& shape, std::uint64_t seed) {
  shape.validate();
  const int d = shape.total_dim();
  Prng rng(mix_seed(seed, 0x9e37u));
  ComplexVector psi(d);
  for (int i = 0; i < d; ++i) psi(i) = Complex(rng.normal(), rng.normal());
  psi /= psi.norm();
  return make_pure(psi, shape);
}

ComplexMatrix haar_random_unitary(int dim, Prng& rng) {
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  // fix the phase convention so the factorization is unique
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    if (a > 0) q.col(j) *= d / a;
  }
  return q;
}

const std::vector<CatalogEntry>& state_catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"example1",
       "three-qubit generalized-Schmidt-form state with lambda = "
       "(1/sqrt5, 0, 1/sqrt5, sqrt(2/5), 1/sqrt5), shape 2x2x2"},
      {"df4",
       "four-qubit W-class state: equal superposition of |1000> and "
       "[(1+sqrt3)|0100>+|0010>+(sqrt3-1)|0001>]/3, shape 2x2x2x2"},
      {"w", "three-qubit W state (|100>+|010>+|001>)/sqrt3, shape 2x2x2"},
      {"antisym333",
       "totally antisymmetric three-qutrit state, shape 3x3x3"},
      {"cex322",
       "(sqrt2|010>+sqrt2|101>+|200>+|211>)/sqrt6, shape 3x2x2"},
      {"nonconvex",
       "two-qubit mixture (P_singlet + |01><01|)/2, shape 2x2"},
  };
  return entries;
}

QuantumState catalog_state(const std::string& name) {
  if (name == "example1") {
    const double r5 = 1.0 / std::sqrt(5.0);
    return gsd_state(r5, 0.0, r5, std::sqrt(2.0 / 5.0), r5, 0.0);
  }
  if (name == "df4") {
    const double r2 = 1.0 / std::sqrt(2.0);
    return df4_state(r2, r2);
  }
  if (name == "w") return w_state();
  if (name == "antisym333") return antisym_qutrit_state();
  if (name == "cex322") return state_322();
  if (name == "nonconvex") return nonconvexity_mixture();
  throw std::invalid_argument("unknown catalog state: " + name);
}

nlohmann::json state_to_json(const QuantumState& s) {
  nlohmann::json j;
  j["dims"] = s.shape.dims;
  if (s.kind == StateKind::pure) {
    j["kind"] = "pure";
    auto& amps = j["amplitudes"] = nlohmann::json::array();
    for (Eigen::Index i = 0; i < s.data.rows(); ++i)
      amps.push_back({s.data(i, 0).real(), s.data(i, 0).imag()});
  } else {
    j["kind"] = "mixed";
    auto& rows = j["matrix"] = nlohmann::json::array();
    for (Eigen::Index r = 0; r < s.data.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index c = 0; c < s.data.cols(); ++c)
        row.push_back({s.data(r, c).real(), s.data(r, c).imag()});
      rows.push_back(std::move(row));
    }
  }
  return j;
}

namespace {

Complex parse_complex(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument("state JSON: complex entries must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

QuantumState state_from_json(const nlohmann::json& j) {
  if (!j.contains("dims") || !j["dims"].is_array())
    throw std::invalid_argument("state JSON: missing \"dims\"");
  SubsystemShape shape;
  for (const auto& d : j["dims"]) shape.dims.push_back(d.get<int>());
  shape.validate();

  const std::string kind = j.value("kind", std::string("pure"));
  const int dim = shape.total_dim();
  if (kind == "pure") {
    if (!j.contains("amplitudes"))
      throw std::invalid_argument("state JSON: pure state needs \"amplitudes\"");
    const auto& amps = j["amplitudes"];
    if (static_cast<int>(amps.size()) != dim)
      throw std::invalid_argument("state JSON: amplitude count does not match dims");
    ComplexVector psi(dim);
    for (int i = 0; i < dim; ++i) psi(i) = parse_complex(amps[static_cast<std::size_t>(i)]);
    return make_pure(psi, shape);
  }
  if (kind == "mixed") {
    if (!j.contains("matrix"))
      throw std::invalid_argument("state JSON: mixed state needs \"matrix\"");
    const auto& rows = j["matrix"];
    if (static_cast<int>(rows.size()) != dim)
      throw std::invalid_argument("state JSON: matrix row count does not match dims");
    ComplexMatrix rho(dim, dim);
    for (int r = 0; r < dim; ++r) {
      const auto& row = rows[static_cast<std::size_t>(r)];
      if (static_cast<int>(row.size()) != dim)
        throw std::invalid_argument("state JSON: matrix is not square");
      for (int c = 0; c < dim; ++c) rho(r, c) = parse_complex(row[static_cast<std::size_t>(c)]);
    }
    return make_mixed(rho, shape);
  }
  throw std::invalid_argument("state JSON: kind must be \"pure\" or \"mixed\"");
}

QuantumState load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open state file: " + path);
  nlohmann::json j;
  in >> j;
  return state_from_json(j);
}

}  // namespace entanglion
