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

// Seeded random states, unitaries and channels for property tests.

#ifndef QUQUAT_SAMPLING_HPP_
#define QUQUAT_SAMPLING_HPP_

#include <cstdint>
#include <random>

#include "ququat/liouville.hpp"
#include "ququat/superop.hpp"

namespace ququat {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);
  Complex gaussian();

  /// Matrix of i.i.d. standard complex Gaussians.
  CMatrix ginibre(Eigen::Index rows, Eigen::Index cols);

  /// G G^dagger / Tr(G G^dagger) with G a 2^n x 2^n Ginibre matrix.
  DensityMatrix random_density(int n);

  /// Pure state |psi><psi| with Gaussian amplitudes.
  DensityMatrix random_pure(int n);

  /// Haar unitary of dimension d (QR of Ginibre with the phase fix).
  CMatrix random_unitary(Eigen::Index d);

  /// CPTP channel with `terms` Kraus operators, cut from a Haar isometry.
  KrausSet random_channel(int n, int terms);

  /// Trace-decreasing channel: random_channel scaled by sqrt(shrink).
  KrausSet random_subchannel(int n, int terms, double shrink);

  /// Unstructured complex 2^n x 2^n operator.
  CMatrix random_operator(int n);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ququat

#endif  // QUQUAT_SAMPLING_HPP_
