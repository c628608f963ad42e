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

#ifndef QUQUAT_PAULI_HPP_
#define QUQUAT_PAULI_HPP_

#include <span>
#include <vector>

#include "ququat/types.hpp"

namespace ququat {

/// Index of a Pauli string sigma_{mu_1} x ... x sigma_{mu_n}.
///
/// value = mu_1 4^(n-1) + ... + mu_n. Digit 0 (mu_1) is the most significant
/// and addresses ququat 0, the leftmost tensor factor.
class PauliIndex {
 public:
  PauliIndex(int n, std::size_t value);

  static PauliIndex from_digits(std::span<const int> digits);

  int ququats() const { return n_; }
  std::size_t value() const { return value_; }
  /// Digit for ququat i (0-based, leftmost first).
  int digit(int i) const;
  std::vector<int> digits() const;

  friend bool operator==(const PauliIndex&, const PauliIndex&) = default;

 private:
  int n_;
  std::size_t value_;
};

/// Pauli string in monomial form: exactly one nonzero per row,
/// sigma(r, col[r]) = val[r].
struct PauliString {
  std::vector<std::size_t> col;
  std::vector<Complex> val;

  CMatrix dense() const;
  /// Tr(sigma X).
  Complex trace_with(const CMatrix& x) const;
  /// sigma * X.
  CMatrix left_multiply(const CMatrix& x) const;
  /// X * sigma.
  CMatrix right_multiply(const CMatrix& x) const;
};

/// All 4^n Pauli strings on n qubits. Built once per n and shared read-only.
class PauliBasis {
 public:
  static const PauliBasis& get(int n);

  int ququats() const { return n_; }
  std::size_t size() const { return strings_.size(); }
  const PauliString& operator[](std::size_t mu) const { return strings_[mu]; }

 private:
  explicit PauliBasis(int n);

  int n_;
  std::vector<PauliString> strings_;
};

/// Dense single-qubit Pauli matrix sigma_k, k in {0,1,2,3}.
CMatrix pauli_matrix(int k);

/// Dense sigma_mu for a full index.
CMatrix pauli_matrix(const PauliIndex& mu);

}  // namespace ququat

#endif  // QUQUAT_PAULI_HPP_
