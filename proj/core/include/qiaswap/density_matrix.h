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

#ifndef QIASWAP_DENSITY_MATRIX_H_
#define QIASWAP_DENSITY_MATRIX_H_

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qiaswap/pure_state.h"

namespace qiaswap {

/// Density operator over labeled qubits, same basis convention as PureState.
/// Construction enforces Hermiticity, unit trace and eigenvalues >= -1e-10.
class DensityMatrix {
 public:
  DensityMatrix(std::vector<QubitLabel> labels, Eigen::MatrixXcd matrix);

  static DensityMatrix from_pure(const PureState& state);

  /// (1/2^q) I over `labels`.
  static DensityMatrix maximally_mixed(std::vector<QubitLabel> labels);

  const std::vector<QubitLabel>& labels() const { return labels_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  std::size_t num_qubits() const { return labels_.size(); }

 private:
  std::vector<QubitLabel> labels_;
  Eigen::MatrixXcd matrix_;
};

struct EnsembleMember {
  double probability;
  DensityMatrix state;
};

/// Throws std::invalid_argument unless probabilities are nonnegative, sum to
/// 1 within kTolerance and every member shares the first member's labels.
void validate_ensemble(std::span<const EnsembleMember> ensemble);

/// sum_i p_i rho_i.
DensityMatrix mixture(std::span<const EnsembleMember> ensemble);

/// Traces out every qubit not in `keep`. The result keeps the original
/// relative order of the surviving labels.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const QubitLabel> keep);

/// Eigenvalues in ascending order; values in [-1e-10, 0) are clipped to 0.
Eigen::VectorXd clipped_eigenvalues(const DensityMatrix& rho);

/// -Tr(rho log2 rho), in bits.
double von_neumann_entropy(const DensityMatrix& rho);

/// S(sum p_i rho_i) - sum p_i S(rho_i), in bits.
double holevo(std::span<const EnsembleMember> ensemble);

}  // namespace qiaswap

#endif  // QIASWAP_DENSITY_MATRIX_H_
