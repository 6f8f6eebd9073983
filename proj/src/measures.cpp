// Copyright 2026 the entanglion authors
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "entanglion/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace entanglion {

namespace {

constexpr double kLn2 = 0.6931471805599453;

bool is_two_qubit(const SubsystemShape& shape) {
  return shape.dims.size() == 2 && shape.dims[0] == 2 && shape.dims[1] == 2;
}

// sigma_y (x) sigma_y is real: antidiag(-1, 1, 1, -1)
ComplexMatrix spin_flip_matrix() {
  ComplexMatrix y = ComplexMatrix::Zero(4, 4);
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  return y;
}

ComplexMatrix hermitian_sqrt(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  const int n = static_cast<int>(m.rows());
  Eigen::VectorXd root(n);
  for (int i = 0; i < n; ++i) {
    const double ev = clamp_eigenvalue(solver.eigenvalues()(i));
    root(i) = ev > 0.0 ? std::sqrt(ev) : 0.0;
  }
  return solver.eigenvectors() * root.asDiagonal() *
         solver.eigenvectors().adjoint();
}

double log2_shift(double x) { return std::log2(x + 1.0); }

// d log2(x+1)/dx * err
double log_error(double value, double err) {
  return err / ((value + 1.0) * kLn2);
}

MeasureValue as_log(MeasureKind name, const MeasureValue& linear) {
  return {name, log2_shift(linear.value), linear.method,
          log_error(linear.value, linear.error_bound)};
}

// index tables splitting each global basis index into (side_a, side_b) parts
struct CutIndex {
  int dim_a = 1;
  int dim_b = 1;
  std::vector<int> a_of;
  std::vector<int> b_of;
};

CutIndex cut_index(const SubsystemShape& shape, const Bipartition& cut) {
  const int n = shape.subsystem_count();
  std::vector<bool> in_a(static_cast<std::size_t>(n), false);
  for (int i : cut.side_a) in_a[static_cast<std::size_t>(i)] = true;

  CutIndex ci;
  for (int i = 0; i < n; ++i)
    (in_a[static_cast<std::size_t>(i)] ? ci.dim_a : ci.dim_b) *= shape.dims[static_cast<std::size_t>(i)];

  const int d = shape.total_dim();
  ci.a_of.resize(static_cast<std::size_t>(d));
  ci.b_of.resize(static_cast<std::size_t>(d));
  for (int g = 0; g < d; ++g) {
    int rem = g, a = 0, b = 0;
    for (int i = n - 1, place_a = 1, place_b = 1; i >= 0; --i) {
      const int dim = shape.dims[static_cast<std::size_t>(i)];
      const int digit = rem % dim;
      rem /= dim;
      if (in_a[static_cast<std::size_t>(i)]) {
        a += digit * place_a;
        place_a *= dim;
      } else {
        b += digit * place_b;
        place_b *= dim;
      }
    }
    ci.a_of[static_cast<std::size_t>(g)] = a;
    ci.b_of[static_cast<std::size_t>(g)] = b;
  }
  return ci;
}

ComplexMatrix reduced_a(const ComplexVector& ket, const CutIndex& ci) {
  ComplexMatrix rho = ComplexMatrix::Zero(ci.dim_a, ci.dim_a);
  // rho_A = M M^dag with M(a,b) = psi(a,b)
  ComplexMatrix m = ComplexMatrix::Zero(ci.dim_a, ci.dim_b);
  for (int g = 0; g < ket.size(); ++g)
    m(ci.a_of[static_cast<std::size_t>(g)], ci.b_of[static_cast<std::size_t>(g)]) = ket(g);
  rho = m * m.adjoint();
  return rho;
}

}  // namespace

std::string to_string(MeasureKind k) {
  switch (k) {
    case MeasureKind::negativity: return "negativity";
    case MeasureKind::log_negativity: return "log_negativity";
    case MeasureKind::concurrence: return "concurrence";
    case MeasureKind::concurrence_assist: return "concurrence_assist";
    case MeasureKind::cren: return "cren";
    case MeasureKind::crenoa: return "crenoa";
    case MeasureKind::lcren: return "lcren";
    case MeasureKind::lcrenoa: return "lcrenoa";
    case MeasureKind::tangle: return "tangle";
  }
  return "?";
}

std::string to_string(MeasureMethod m) {
  switch (m) {
    case MeasureMethod::closed_form: return "closed_form";
    case MeasureMethod::pure_state: return "pure_state";
    case MeasureMethod::roof_optimizer: return "roof_optimizer";
  }
  return "?";
}

void Bipartition::validate(const SubsystemShape& shape) const {
  if (side_a.empty())
    throw std::invalid_argument("bipartition: side A is empty");
  std::vector<int> s = side_a;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= shape.subsystem_count())
      throw std::out_of_range("bipartition: subsystem index out of range");
    if (i > 0 && s[i] == s[i - 1])
      throw std::invalid_argument("bipartition: duplicate subsystem index");
  }
  if (s.size() >= shape.dims.size())
    throw std::invalid_argument("bipartition: side B is empty");
}

std::vector<int> Bipartition::side_b(const SubsystemShape& shape) const {
  std::vector<int> b;
  for (int i = 0; i < shape.subsystem_count(); ++i)
    if (std::find(side_a.begin(), side_a.end(), i) == side_a.end()) b.push_back(i);
  return b;
}

MeasureValue negativity(const QuantumState& s, const Bipartition& cut) {
  cut.validate(s.shape);
  const ComplexMatrix pt = partial_transpose(s.density(), s.shape, cut.side_a);
  const double value = trace_norm(pt) - 1.0;
  return {MeasureKind::negativity, std::max(0.0, value),
          s.is_pure() ? MeasureMethod::pure_state : MeasureMethod::closed_form, 0.0};
}

MeasureValue log_negativity(const QuantumState& s, const Bipartition& cut) {
  const MeasureValue n = negativity(s, cut);
  return as_log(MeasureKind::log_negativity, n);
}

std::array<double, 4> wootters_mu(const QuantumState& s) {
  if (!is_two_qubit(s.shape))
    throw std::invalid_argument("wootters_mu: state is not two-qubit");
  static const ComplexMatrix y = spin_flip_matrix();
  const ComplexMatrix rho = s.density();
  const ComplexMatrix flipped = y * rho.conjugate() * y;
  const ComplexMatrix root = hermitian_sqrt(rho);
  const ComplexMatrix m = root * flipped * root;
  const RealVector ev = hermitian_eigenvalues(m);  // descending
  std::array<double, 4> mu{};
  for (int i = 0; i < 4; ++i) {
    const double v = clamp_eigenvalue(ev(i));
    mu[static_cast<std::size_t>(i)] = v > 0.0 ? std::sqrt(v) : 0.0;
  }
  return mu;
}

MeasureValue concurrence_2qubit(const QuantumState& s) {
  const auto mu = wootters_mu(s);
  const double c = std::max(0.0, mu[0] - mu[1] - mu[2] - mu[3]);
  return {MeasureKind::concurrence, c, MeasureMethod::closed_form, 0.0};
}

MeasureValue concurrence_assist_2qubit(const QuantumState& s) {
  const auto mu = wootters_mu(s);
  return {MeasureKind::concurrence_assist, mu[0] + mu[1] + mu[2] + mu[3],
          MeasureMethod::closed_form, 0.0};
}

double pure_state_negativity(const ComplexVector& ket, const SubsystemShape& shape,
                             const Bipartition& cut) {
  const CutIndex ci = cut_index(shape, cut);
  const ComplexMatrix rho_a = reduced_a(ket, ci);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho_a, Eigen::EigenvaluesOnly);
  double sum_sqrt = 0.0;
  for (int i = 0; i < rho_a.rows(); ++i) {
    const double ev = clamp_eigenvalue(solver.eigenvalues()(i));
    if (ev > 0.0) sum_sqrt += std::sqrt(ev);
  }
  return std::max(0.0, sum_sqrt * sum_sqrt - 1.0);
}

double pure_state_sqrt_tangle(const ComplexVector& ket, const SubsystemShape& shape,
                              const Bipartition& cut) {
  const CutIndex ci = cut_index(shape, cut);
  const ComplexMatrix rho_a = reduced_a(ket, ci);
  const double purity = rho_a.squaredNorm();  // tr rho_A^2 for Hermitian rho_A
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

PureFunctional negativity_functional(const SubsystemShape& shape, const Bipartition& cut) {
  cut.validate(shape);
  const CutIndex ci = cut_index(shape, cut);
  return [ci](const ComplexVector& ket) {
    const ComplexMatrix rho_a = reduced_a(ket, ci);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho_a, Eigen::EigenvaluesOnly);
    double sum_sqrt = 0.0;
    for (int i = 0; i < rho_a.rows(); ++i) {
      const double ev = clamp_eigenvalue(solver.eigenvalues()(i));
      if (ev > 0.0) sum_sqrt += std::sqrt(ev);
    }
    return std::max(0.0, sum_sqrt * sum_sqrt - 1.0);
  };
}

PureFunctional sqrt_tangle_functional(const SubsystemShape& shape, const Bipartition& cut) {
  cut.validate(shape);
  const CutIndex ci = cut_index(shape, cut);
  return [ci](const ComplexVector& ket) {
    const ComplexMatrix rho_a = reduced_a(ket, ci);
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - rho_a.squaredNorm())));
  };
}

namespace {

// common dispatch for cren (minimize) and crenoa (maximize)
MeasureValue roof_extended_negativity(const QuantumState& s, const Bipartition& cut,
                                      const RoofConfig& cfg, bool assist) {
  cut.validate(s.shape);
  const MeasureKind kind = assist ? MeasureKind::crenoa : MeasureKind::cren;
  if (s.is_pure()) {
    return {kind, negativity(s, cut).value, MeasureMethod::pure_state, 0.0};
  }
  if (is_two_qubit(s.shape)) {
    const MeasureValue c =
        assist ? concurrence_assist_2qubit(s) : concurrence_2qubit(s);
    return {kind, c.value, MeasureMethod::closed_form, 0.0};
  }
  const PureFunctional f = negativity_functional(s.shape, cut);
  const RoofResult res = assist ? roof_maximize(s, f, cfg) : roof_minimize(s, f, cfg);
  return {kind, res.value, MeasureMethod::roof_optimizer, res.error_bound};
}

}  // namespace

MeasureValue cren(const QuantumState& s, const Bipartition& cut, const RoofConfig& cfg) {
  return roof_extended_negativity(s, cut, cfg, false);
}

MeasureValue crenoa(const QuantumState& s, const Bipartition& cut, const RoofConfig& cfg) {
  return roof_extended_negativity(s, cut, cfg, true);
}

MeasureValue lcren(const QuantumState& s, const Bipartition& cut, const RoofConfig& cfg) {
  return as_log(MeasureKind::lcren, cren(s, cut, cfg));
}

MeasureValue lcrenoa(const QuantumState& s, const Bipartition& cut, const RoofConfig& cfg) {
  return as_log(MeasureKind::lcrenoa, crenoa(s, cut, cfg));
}

MeasureValue tangle(const QuantumState& s, const Bipartition& cut, const RoofConfig& cfg) {
  cut.validate(s.shape);
  if (s.is_pure()) {
    const double st = pure_state_sqrt_tangle(s.ket(), s.shape, cut);
    return {MeasureKind::tangle, st * st, MeasureMethod::pure_state, 0.0};
  }
  if (is_two_qubit(s.shape)) {
    const double c = concurrence_2qubit(s).value;
    return {MeasureKind::tangle, c * c, MeasureMethod::closed_form, 0.0};
  }
  const RoofResult res = roof_minimize(s, sqrt_tangle_functional(s.shape, cut), cfg);
  // d(v^2) = 2 v dv
  return {MeasureKind::tangle, res.value * res.value, MeasureMethod::roof_optimizer,
          2.0 * res.value * res.error_bound + res.error_bound * res.error_bound};
}

}  // namespace entanglion
