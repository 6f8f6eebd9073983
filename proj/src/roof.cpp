// Copyright 2026 the entanglion authors
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory of this
// source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "entanglion/roof.hpp"

#include "entanglion/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace entanglion {

namespace {

constexpr double kRankCut = 1e-12;
constexpr double kWeightCut = 1e-12;

// eigenpairs of rho with q > kRankCut, eigenvalues descending
struct Support {
  Eigen::VectorXd q;
  ComplexMatrix vectors;      // dim x r
  ComplexMatrix scaled;       // dim x r, column j = sqrt(q_j) v_j
  int rank() const { return static_cast<int>(q.size()); }
};

Support support_of(const QuantumState& rho) {
  const ComplexMatrix dm = rho.density();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(dm);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("roof: eigendecomposition failed");
  const Eigen::VectorXd ev = solver.eigenvalues();  // ascending
  const int d = static_cast<int>(ev.size());
  int r = 0;
  for (int i = 0; i < d; ++i)
    if (ev(i) > kRankCut) ++r;
  Support s;
  s.q.resize(r);
  s.vectors.resize(d, r);
  s.scaled.resize(d, r);
  for (int j = 0; j < r; ++j) {
    const int src = d - 1 - j;  // descending
    s.q(j) = ev(src);
    s.vectors.col(j) = solver.eigenvectors().col(src);
    s.scaled.col(j) = std::sqrt(ev(src)) * s.vectors.col(j);
  }
  return s;
}

Ensemble ensemble_from_kets(const ComplexMatrix& kets, const SubsystemShape& shape) {
  Ensemble e;
  for (Eigen::Index k = 0; k < kets.cols(); ++k) {
    const double p = kets.col(k).squaredNorm();
    if (p <= kWeightCut) continue;
    e.weights.push_back(p);
    QuantumState member;
    member.kind = StateKind::pure;
    member.data = ComplexMatrix(kets.rows(), 1);
    member.data.col(0) = kets.col(k) / std::sqrt(p);
    member.shape = shape;
    e.members.push_back(std::move(member));
  }
  return e;
}

struct RestartOutcome {
  double value = 0.0;  // sign-adjusted objective (always minimized)
  bool converged = false;
  ComplexMatrix kets;
};

RestartOutcome run_restart(const Support& sup, const SubsystemShape& shape,
                           const PureFunctional& f, double sign, int m,
                           const RoofConfig& cfg, std::uint64_t restart_seed,
                           bool identity_start) {
  const int r = sup.rank();
  const int dim = static_cast<int>(sup.scaled.rows());
  Prng rng(restart_seed);

  // kets column k = |psi~_k> = sum_j V_kj sqrt(q_j)|v_j>
  ComplexMatrix kets = ComplexMatrix::Zero(dim, m);
  if (identity_start) {
    kets.leftCols(r) = sup.scaled;
  } else {
    ComplexMatrix g(m, r);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < r; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    const ComplexMatrix v = ComplexMatrix(qr.householderQ()).leftCols(r);
    kets = sup.scaled * v.transpose();
  }

  auto member_value = [&](const ComplexVector& col) -> std::pair<double, double> {
    const double p = col.squaredNorm();
    if (p <= kWeightCut) return {p, 0.0};
    return {p, sign * f(col / std::sqrt(p))};
  };

  std::vector<double> weight(static_cast<std::size_t>(m));
  std::vector<double> fval(static_cast<std::size_t>(m));
  double total = 0.0;
  for (int k = 0; k < m; ++k) {
    auto [p, v] = member_value(kets.col(k));
    weight[static_cast<std::size_t>(k)] = p;
    fval[static_cast<std::size_t>(k)] = v;
    total += p * v;
  }

  // (1+1)-ES over two-member rotations with the 1/5 success rule.
  double sigma = 0.5;
  bool converged = false;
  for (int it = 0; it < cfg.max_iterations; ++it) {
    const int k = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(m)));
    int l = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(m - 1)));
    if (l >= k) ++l;
    const double theta = sigma * rng.normal();
    const double phase = 2.0 * std::numbers::pi * rng.uniform();
    const double c = std::cos(theta);
    const Complex s = std::sin(theta) * Complex(std::cos(phase), std::sin(phase));

    const ComplexVector ck = c * kets.col(k) + s * kets.col(l);
    const ComplexVector cl = -std::conj(s) * kets.col(k) + c * kets.col(l);
    const auto [pk, fk] = member_value(ck);
    const auto [pl, fl] = member_value(cl);
    const double delta = pk * fk + pl * fl -
                         (weight[static_cast<std::size_t>(k)] * fval[static_cast<std::size_t>(k)] +
                          weight[static_cast<std::size_t>(l)] * fval[static_cast<std::size_t>(l)]);
    if (delta < -1e-16) {
      kets.col(k) = ck;
      kets.col(l) = cl;
      weight[static_cast<std::size_t>(k)] = pk;
      fval[static_cast<std::size_t>(k)] = fk;
      weight[static_cast<std::size_t>(l)] = pl;
      fval[static_cast<std::size_t>(l)] = fl;
      total += delta;
      sigma = std::min(sigma * 1.4, 1.2);
    } else {
      sigma *= 0.93;
      if (sigma < cfg.tolerance) {
        converged = true;
        break;
      }
    }
  }

  RestartOutcome out;
  out.value = total;
  out.converged = converged;
  out.kets = std::move(kets);
  (void)shape;
  return out;
}

RoofResult roof_optimize(const QuantumState& rho, const PureFunctional& f,
                         const RoofConfig& cfg, bool maximize) {
  if (!f) throw std::invalid_argument("roof: functional is empty");
  if (cfg.restarts < 1) throw std::invalid_argument("roof: restarts must be >= 1");
  if (cfg.max_iterations < 1) throw std::invalid_argument("roof: max_iterations must be >= 1");
  if (!(cfg.tolerance > 0.0)) throw std::invalid_argument("roof: tolerance must be positive");
  rho.validate();

  const double sign = maximize ? -1.0 : 1.0;
  const Support sup = support_of(rho);
  const int r = sup.rank();

  RoofResult result;
  if (r == 1 || rho.is_pure()) {
    // single pure member: the roof is f itself
    const ComplexVector psi =
        rho.is_pure() ? rho.ket() : ComplexVector(sup.vectors.col(0));
    result.value = f(psi);
    result.ensemble.weights = {1.0};
    result.ensemble.members = {make_pure(psi, rho.shape)};
    result.error_bound = 0.0;
    result.converged = true;
    return result;
  }

  const int m = cfg.ensemble_size > 0 ? std::max(cfg.ensemble_size, r) : r * r;

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(cfg.restarts));
  parallel_for(static_cast<std::size_t>(cfg.restarts), [&](std::size_t rs) {
    outcomes[rs] = run_restart(sup, rho.shape, f, sign, m, cfg,
                               mix_seed(cfg.seed, rs), rs == 0);
  });

  int best = 0;
  for (int i = 1; i < cfg.restarts; ++i)
    if (outcomes[static_cast<std::size_t>(i)].value <
        outcomes[static_cast<std::size_t>(best)].value)
      best = i;

  std::vector<double> values;
  values.reserve(outcomes.size());
  for (const auto& o : outcomes) values.push_back(o.value);
  std::sort(values.begin(), values.end());
  const std::size_t top = std::min<std::size_t>(3, values.size());
  double spread = values[top - 1] - values[0];

  const RestartOutcome& winner = outcomes[static_cast<std::size_t>(best)];
  if (!winner.converged) spread = std::max(spread, cfg.tolerance * 10.0);

  result.value = sign * winner.value;
  result.ensemble = ensemble_from_kets(winner.kets, rho.shape);
  result.error_bound = spread;
  result.converged = winner.converged;
  result.best_restart = best;
  return result;
}

}  // namespace

double Ensemble::reconstruction_error(const QuantumState& rho) const {
  const int d = rho.dim();
  ComplexMatrix acc = ComplexMatrix::Zero(d, d);
  for (std::size_t k = 0; k < members.size(); ++k) {
    const ComplexVector psi = members[k].ket();
    acc += weights[k] * (psi * psi.adjoint());
  }
  return (acc - rho.density()).cwiseAbs().maxCoeff();
}

Ensemble decompose(const QuantumState& rho, const ComplexMatrix& isometry) {
  rho.validate();
  const Support sup = support_of(rho);
  const int r = sup.rank();
  if (isometry.cols() != r)
    throw std::invalid_argument("decompose: isometry must have rank(rho) columns");
  if (isometry.rows() < r)
    throw std::invalid_argument("decompose: isometry must have at least rank(rho) rows");
  const ComplexMatrix gram = isometry.adjoint() * isometry;
  if ((gram - ComplexMatrix::Identity(r, r)).cwiseAbs().maxCoeff() > 1e-9)
    throw std::invalid_argument("decompose: V is not an isometry (V^dag V != I)");
  const ComplexMatrix kets = sup.scaled * isometry.transpose();
  return ensemble_from_kets(kets, rho.shape);
}

RoofResult roof_minimize(const QuantumState& rho, const PureFunctional& f,
                         const RoofConfig& cfg) {
  return roof_optimize(rho, f, cfg, false);
}

RoofResult roof_maximize(const QuantumState& rho, const PureFunctional& f,
                         const RoofConfig& cfg) {
  return roof_optimize(rho, f, cfg, true);
}

}  // namespace entanglion
