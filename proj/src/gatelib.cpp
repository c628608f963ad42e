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

#include "ququat/gatelib.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ququat {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_axis(int k, const char* what) {
  if (k < 1 || k > 3) {
    throw DimensionError(std::string(what) + ": index " + std::to_string(k) + " not in {1,2,3}");
  }
}

GateMatrix diagonal(std::initializer_list<double> d) {
  RVector v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double x : d) v[i++] = x;
  return GateMatrix(v.asDiagonal().toDenseMatrix());
}

double wrap_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r >= kTwoPi ? 0.0 : r;
}

}  // namespace

GateMatrix pauli_gate(int k) {
  require_axis(k, "pauli_gate");
  RMatrix m = -RMatrix::Identity(4, 4);
  m(0, 0) = 1.0;
  m(k, k) = 1.0;
  return GateMatrix(std::move(m));
}

GateMatrix hadamard_gate() {
  RMatrix m = RMatrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(2, 2) = -1.0;
  m(1, 3) = 1.0;
  m(3, 1) = 1.0;
  return GateMatrix(std::move(m));
}

GateMatrix rotation1(double alpha) {
  const double c = std::cos(alpha), s = std::sin(alpha);
  RMatrix m = RMatrix::Identity(4, 4);
  m(1, 1) = c;
  m(1, 2) = -s;
  m(2, 1) = s;
  m(2, 2) = c;
  return GateMatrix(std::move(m));
}

GateMatrix rotation2(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  RMatrix m = RMatrix::Identity(4, 4);
  m(1, 1) = c;
  m(1, 3) = s;
  m(3, 1) = -s;
  m(3, 3) = c;
  return GateMatrix(std::move(m));
}

bool EulerAngles::in_canonical_range() const {
  return alpha >= 0.0 && alpha < kTwoPi && theta >= 0.0 && theta <= std::numbers::pi &&
         beta >= 0.0 && beta < kTwoPi;
}

GateMatrix euler_gate(const EulerAngles& a) {
  return GateMatrix(rotation1(a.alpha).matrix() * rotation2(a.theta).matrix() *
                    rotation1(a.beta).matrix());
}

CMatrix euler_unitary(const EulerAngles& a) {
  const auto u1 = [](double x) {
    CMatrix u = CMatrix::Zero(2, 2);
    u(0, 0) = std::polar(1.0, -x / 2.0);
    u(1, 1) = std::polar(1.0, x / 2.0);
    return u;
  };
  CMatrix u2(2, 2);
  const double c = std::cos(a.theta / 2.0), s = std::sin(a.theta / 2.0);
  u2 << c, -s, s, c;
  return u1(a.alpha) * u2 * u1(a.beta);
}

EulerAngles euler_inverse(const EulerAngles& a) {
  if (a.theta < 0.0 || a.theta > std::numbers::pi) {
    throw DimensionError("euler_inverse: theta must lie in [0, pi]");
  }
  return EulerAngles{wrap_angle(std::numbers::pi - a.beta), a.theta,
                     wrap_angle(std::numbers::pi - a.alpha)};
}

GateMatrix reflection(int k) {
  require_axis(k, "reflection");
  RMatrix m = RMatrix::Identity(4, 4);
  m(k, k) = -1.0;
  return GateMatrix(std::move(m));
}

GateMatrix inversion() { return diagonal({1.0, -1.0, -1.0, -1.0}); }

GateMatrix measurement_gate(int k) {
  if (k != 0 && k != 1) throw DimensionError("measurement_gate: outcome must be 0 or 1");
  const double off = k == 0 ? 0.5 : -0.5;
  RMatrix m = RMatrix::Zero(4, 4);
  m(0, 0) = 0.5;
  m(3, 3) = 0.5;
  m(0, 3) = off;
  m(3, 0) = off;
  return GateMatrix(std::move(m));
}

GateMatrix measurement_gate(const CMatrix& projector) {
  validate_projectors(std::span<const CMatrix>(&projector, 1));
  return ptm_from_kraus(KrausSet({projector}));
}

void validate_projectors(std::span<const CMatrix> projectors) {
  if (projectors.empty()) throw ValidationError("projectors: empty list");
  const auto d = projectors.front().rows();
  for (std::size_t i = 0; i < projectors.size(); ++i) {
    const CMatrix& p = projectors[i];
    if (p.rows() != d || p.cols() != d) {
      throw DimensionError("projectors: operators must share one square shape");
    }
    if (max_abs(p - p.adjoint()) > tol::kStructural) {
      throw ValidationError("projector " + std::to_string(i) + " is not Hermitian");
    }
    if (max_abs(p * p - p) > tol::kStructural) {
      throw ValidationError("projector " + std::to_string(i) + " is not idempotent (P^2 != P)");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (max_abs(projectors[j] * p) > tol::kStructural) {
        throw ValidationError("projectors " + std::to_string(j) + " and " + std::to_string(i) +
                              " are not orthogonal");
      }
    }
  }
}

std::vector<CMatrix> computational_projectors(int n, std::span<const int> targets) {
  if (n < 1 || n > kMaxQuquats) throw DimensionError("computational_projectors: bad qubit count");
  if (targets.empty()) throw DimensionError("computational_projectors: no targets");
  for (int t : targets) {
    if (t < 0 || t >= n) throw DimensionError("computational_projectors: target out of range");
  }
  const auto d = static_cast<Eigen::Index>(hilbert_dim(n));
  const std::size_t outcomes = std::size_t{1} << targets.size();
  std::vector<CMatrix> out(outcomes, CMatrix::Zero(d, d));
  for (Eigen::Index basis = 0; basis < d; ++basis) {
    std::size_t r = 0;
    for (int t : targets) r = (r << 1) | ((static_cast<std::size_t>(basis) >> (n - 1 - t)) & 1U);
    out[r](basis, basis) = 1.0;
  }
  return out;
}

MeasurementResult von_neumann_measure(std::span<const CMatrix> projectors, const PauliVector& p) {
  validate_projectors(projectors);
  if (qubits_for_hilbert_dim(static_cast<std::size_t>(projectors.front().rows())) != p.ququats()) {
    throw DimensionError("von_neumann_measure: projector dimension does not match the state");
  }
  std::vector<double> probs;
  std::vector<std::optional<PauliVector>> conditional;
  RMatrix total = RMatrix::Zero(static_cast<Eigen::Index>(liouville_dim(p.ququats())),
                                static_cast<Eigen::Index>(liouville_dim(p.ququats())));
  bool any = false;
  for (const auto& proj : projectors) {
    const GateMatrix e = ptm_from_kraus(KrausSet({proj}));
    total += e.matrix();
    const double pk = trace_functional(e, p);
    probs.push_back(pk);
    if (pk > tol::kZeroProbability) {
      any = true;
      conditional.emplace_back(nonlinear_apply(e, p));
    } else {
      conditional.emplace_back(std::nullopt);
    }
  }
  if (!any) throw ZeroProbabilityError("von_neumann_measure: every outcome has zero probability");
  return MeasurementResult{std::move(probs), nonlinear_apply(GateMatrix(std::move(total)), p),
                           std::move(conditional)};
}

GateMatrix projection_superoperator(const PauliIndex& mu) {
  const auto d = static_cast<Eigen::Index>(liouville_dim(mu.ququats()));
  RMatrix m = RMatrix::Zero(d, d);
  const auto i = static_cast<Eigen::Index>(mu.value());
  m(i, i) = 1.0;
  return GateMatrix(std::move(m));
}

}  // namespace ququat
