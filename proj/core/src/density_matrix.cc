// Copyright 2026 The qiaswap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qiaswap/density_matrix.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qiaswap {
namespace {

constexpr double kEigenFloor = -1e-10;

}  // namespace

DensityMatrix::DensityMatrix(std::vector<QubitLabel> labels, Eigen::MatrixXcd matrix)
    : labels_(std::move(labels)), matrix_(std::move(matrix)) {
  // Reuse PureState's label checks on a throwaway basis state.
  (void)PureState::basis_state(labels_, 0);
  const Eigen::Index dim = Eigen::Index{1} << labels_.size();
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw std::invalid_argument("density matrix must be 2^q x 2^q");
  }
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > kTolerance) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(matrix_.trace() - Complex{1.0}) > kTolerance) {
    throw std::invalid_argument("density matrix trace differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < kEigenFloor) {
    throw std::invalid_argument("density matrix has a negative eigenvalue");
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& state) {
  const Eigen::VectorXcd& v = state.amplitudes();
  return DensityMatrix(state.labels(), v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(std::vector<QubitLabel> labels) {
  const Eigen::Index dim = Eigen::Index{1} << labels.size();
  return DensityMatrix(std::move(labels),
                       Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim));
}

void validate_ensemble(std::span<const EnsembleMember> ensemble) {
  if (ensemble.empty()) {
    throw std::invalid_argument("ensemble is empty");
  }
  double total = 0.0;
  for (const EnsembleMember& m : ensemble) {
    if (!(m.probability >= 0.0)) {
      throw std::invalid_argument("ensemble probability is negative");
    }
    if (m.state.labels() != ensemble.front().state.labels()) {
      throw std::invalid_argument("ensemble members act on different registers");
    }
    total += m.probability;
  }
  if (std::abs(total - 1.0) > kTolerance) {
    throw std::invalid_argument("ensemble probabilities do not sum to 1");
  }
}

DensityMatrix mixture(std::span<const EnsembleMember> ensemble) {
  validate_ensemble(ensemble);
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(ensemble.front().state.matrix().rows(),
                                                ensemble.front().state.matrix().cols());
  for (const EnsembleMember& m : ensemble) sum += m.probability * m.state.matrix();
  return DensityMatrix(ensemble.front().state.labels(), std::move(sum));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const QubitLabel> keep) {
  if (keep.empty()) {
    throw std::invalid_argument("partial_trace: keep set is empty");
  }
  const std::size_t n = rho.num_qubits();
  std::vector<bool> kept(n, false);
  for (QubitLabel l : keep) {
    auto it = std::find(rho.labels().begin(), rho.labels().end(), l);
    if (it == rho.labels().end()) {
      throw std::invalid_argument("partial_trace: unknown label");
    }
    kept[static_cast<std::size_t>(it - rho.labels().begin())] = true;
  }
  std::vector<QubitLabel> out_labels;
  for (std::size_t k = 0; k < n; ++k) {
    if (kept[k]) out_labels.push_back(rho.labels()[k]);
  }
  const std::size_t nk = out_labels.size();

  // Split a full index into (kept bits, traced bits), both MSB-first.
  auto split = [&](std::size_t i) {
    std::size_t a = 0, b = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t bit = (i >> (n - 1 - k)) & 1U;
      if (kept[k]) {
        a = (a << 1) | bit;
      } else {
        b = (b << 1) | bit;
      }
    }
    return std::pair{a, b};
  };

  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(Eigen::Index{1} << nk, Eigen::Index{1} << nk);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const auto [ia, ib] = split(static_cast<std::size_t>(i));
    for (Eigen::Index j = 0; j < dim; ++j) {
      const auto [ja, jb] = split(static_cast<std::size_t>(j));
      if (ib == jb) {
        out(static_cast<Eigen::Index>(ia), static_cast<Eigen::Index>(ja)) += rho.matrix()(i, j);
      }
    }
  }
  // Symmetrize away rounding so the Hermiticity check is exact.
  out = 0.5 * (out + out.adjoint()).eval();
  return DensityMatrix(std::move(out_labels), std::move(out));
}

Eigen::VectorXd clipped_eigenvalues(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix(), Eigen::EigenvaluesOnly);
  Eigen::VectorXd ev = solver.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < 0.0 && ev(i) >= kEigenFloor) ev(i) = 0.0;
  }
  return ev;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (double lambda : clipped_eigenvalues(rho)) {
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return s;
}

double holevo(std::span<const EnsembleMember> ensemble) {
  const DensityMatrix avg = mixture(ensemble);
  double conditional = 0.0;
  for (const EnsembleMember& m : ensemble) {
    if (m.probability > 0.0) conditional += m.probability * von_neumann_entropy(m.state);
  }
  return von_neumann_entropy(avg) - conditional;
}

}  // namespace qiaswap
