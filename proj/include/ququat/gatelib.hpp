// Copyright 2026 The ququat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Named single-ququat gates, measurement superoperators and Liouville
// projections.

#ifndef QUQUAT_GATELIB_HPP_
#define QUQUAT_GATELIB_HPP_

#include <optional>
#include <span>
#include <vector>

#include "ququat/superop.hpp"

namespace ququat {

/// diag(1, ...) with +1 at 0 and k, -1 elsewhere: the PTM of sigma_k.
GateMatrix pauli_gate(int k);

GateMatrix hadamard_gate();

/// Rotation by alpha in the (1,2) plane: conjugation by exp(-i alpha sigma_3 / 2).
GateMatrix rotation1(double alpha);

/// Rotation by theta in the (3,1) plane: conjugation by exp(-i theta sigma_2 / 2).
GateMatrix rotation2(double theta);

struct EulerAngles {
  double alpha = 0.0;
  double theta = 0.0;
  double beta = 0.0;

  /// 0 <= alpha < 2pi, 0 <= theta <= pi, 0 <= beta < 2pi.
  bool in_canonical_range() const;
};

/// rotation1(alpha) * rotation2(theta) * rotation1(beta). Any real angles are
/// accepted.
GateMatrix euler_gate(const EulerAngles& a);

/// U1(alpha) U2(theta) U1(beta) as a 2x2 unitary.
CMatrix euler_unitary(const EulerAngles& a);

/// Angles of the inverse rotation, (pi - beta, theta, pi - alpha) reduced
/// mod 2pi. Requires theta in [0, pi].
EulerAngles euler_inverse(const EulerAngles& a);

/// diag with -1 only at position k (k in 1..3).
GateMatrix reflection(int k);

/// diag(1, -1, -1, -1): rho -> I - rho. Orthogonal but not CP.
GateMatrix inversion();

/// Single-ququat computational measurement branch: projector |k><k|, k in {0,1}.
GateMatrix measurement_gate(int k);

/// E_{mu nu} = 2^-n Tr(sigma_mu P sigma_nu P). Throws ValidationError unless
/// P is a Hermitian idempotent.
GateMatrix measurement_gate(const CMatrix& projector);

/// Checks each projector is Hermitian and idempotent and that distinct
/// projectors are mutually orthogonal; throws ValidationError otherwise.
void validate_projectors(std::span<const CMatrix> projectors);

/// Projectors onto the computational basis of `targets` (qubit 0 most
/// significant) inside an n-qubit space. Outcome r lists the target bits
/// with targets[0] as the most significant bit.
std::vector<CMatrix> computational_projectors(int n, std::span<const int> targets);

struct MeasurementResult {
  std::vector<double> probabilities;
  /// Ensemble state after the non-selective measurement, normalised.
  PauliVector post_state;
  /// Normalised state for each outcome; empty when p(k) < 1e-12.
  std::vector<std::optional<PauliVector>> conditional_states;
};

/// p(k) = Tr E^(k)(rho); post state = nonlinear_apply(sum_k E^(k), P). Throws
/// ZeroProbabilityError when every p(k) is below tol::kZeroProbability.
MeasurementResult von_neumann_measure(std::span<const CMatrix> projectors, const PauliVector& p);

/// |mu)(mu|: a single 1 at (mu, mu).
GateMatrix projection_superoperator(const PauliIndex& mu);

}  // namespace ququat

#endif  // QUQUAT_GATELIB_HPP_
