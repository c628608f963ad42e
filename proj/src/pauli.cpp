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

#include "ququat/pauli.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <string>

namespace ququat {

int qubits_for_hilbert_dim(std::size_t dim) {
  for (int n = 0; n <= 2 * kMaxQuquats; ++n) {
    if (hilbert_dim(n) == dim) return n;
  }
  return -1;
}

int ququats_for_liouville_dim(std::size_t dim) {
  for (int n = 0; n <= kMaxQuquats; ++n) {
    if (liouville_dim(n) == dim) return n;
  }
  return -1;
}

PauliIndex::PauliIndex(int n, std::size_t value) : n_(n), value_(value) {
  if (n < 1 || n > kMaxQuquats) {
    throw DimensionError("PauliIndex: ququat count " + std::to_string(n) +
                         " outside [1, " + std::to_string(kMaxQuquats) + "]");
  }
  if (value >= liouville_dim(n)) {
    throw DimensionError("PauliIndex: value " + std::to_string(value) +
                         " out of range for n = " + std::to_string(n));
  }
}

PauliIndex PauliIndex::from_digits(std::span<const int> digits) {
  std::size_t value = 0;
  for (int d : digits) {
    if (d < 0 || d > 3) {
      throw DimensionError("PauliIndex: digit " + std::to_string(d) +
                           " not in {0,1,2,3}");
    }
    value = 4 * value + static_cast<std::size_t>(d);
  }
  return PauliIndex(static_cast<int>(digits.size()), value);
}

int PauliIndex::digit(int i) const {
  if (i < 0 || i >= n_) throw DimensionError("PauliIndex: digit index out of range");
  return static_cast<int>((value_ >> (2 * (n_ - 1 - i))) & 3U);
}

std::vector<int> PauliIndex::digits() const {
  std::vector<int> out(n_);
  for (int i = 0; i < n_; ++i) out[i] = digit(i);
  return out;
}

CMatrix PauliString::dense() const {
  const auto d = static_cast<Eigen::Index>(col.size());
  CMatrix m = CMatrix::Zero(d, d);
  for (Eigen::Index r = 0; r < d; ++r) m(r, static_cast<Eigen::Index>(col[r])) = val[r];
  return m;
}

Complex PauliString::trace_with(const CMatrix& x) const {
  Complex acc{0.0, 0.0};
  for (std::size_t r = 0; r < col.size(); ++r) {
    acc += val[r] * x(static_cast<Eigen::Index>(col[r]), static_cast<Eigen::Index>(r));
  }
  return acc;
}

CMatrix PauliString::left_multiply(const CMatrix& x) const {
  CMatrix out(x.rows(), x.cols());
  for (std::size_t r = 0; r < col.size(); ++r) {
    out.row(static_cast<Eigen::Index>(r)) = val[r] * x.row(static_cast<Eigen::Index>(col[r]));
  }
  return out;
}

CMatrix PauliString::right_multiply(const CMatrix& x) const {
  CMatrix out(x.rows(), x.cols());
  for (std::size_t r = 0; r < col.size(); ++r) {
    out.col(static_cast<Eigen::Index>(col[r])) = val[r] * x.col(static_cast<Eigen::Index>(r));
  }
  return out;
}

namespace {

// Single-qubit Paulis in monomial form: column of row r and its value.
struct QubitPauli {
  bool flip;
  std::array<Complex, 2> value;
};

constexpr Complex kI{0.0, 1.0};

const std::array<QubitPauli, 4> kQubitPaulis = {{
    {false, {Complex{1.0}, Complex{1.0}}},
    {true, {Complex{1.0}, Complex{1.0}}},
    {true, {-kI, kI}},
    {false, {Complex{1.0}, Complex{-1.0}}},
}};

PauliString build_string(int n, std::size_t mu) {
  const std::size_t d = hilbert_dim(n);
  PauliString s;
  s.col.resize(d);
  s.val.resize(d);
  for (std::size_t r = 0; r < d; ++r) {
    std::size_t c = 0;
    Complex v{1.0, 0.0};
    for (int q = 0; q < n; ++q) {
      const int shift = n - 1 - q;
      const auto& p = kQubitPaulis[(mu >> (2 * shift)) & 3U];
      const std::size_t bit = (r >> shift) & 1U;
      v *= p.value[bit];
      c |= (p.flip ? bit ^ 1U : bit) << shift;
    }
    s.col[r] = c;
    s.val[r] = v;
  }
  return s;
}

}  // namespace

PauliBasis::PauliBasis(int n) : n_(n) {
  strings_.reserve(liouville_dim(n));
  for (std::size_t mu = 0; mu < liouville_dim(n); ++mu) {
    strings_.push_back(build_string(n, mu));
  }
}

const PauliBasis& PauliBasis::get(int n) {
  if (n < 1 || n > kMaxQuquats) {
    throw DimensionError("PauliBasis: ququat count " + std::to_string(n) +
                         " outside [1, " + std::to_string(kMaxQuquats) + "]");
  }
  static std::array<std::unique_ptr<PauliBasis>, kMaxQuquats + 1> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  auto& slot = cache[static_cast<std::size_t>(n)];
  if (!slot) slot.reset(new PauliBasis(n));
  return *slot;
}

CMatrix pauli_matrix(int k) {
  if (k < 0 || k > 3) throw DimensionError("pauli_matrix: index must be in {0,1,2,3}");
  CMatrix m(2, 2);
  switch (k) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -kI, kI, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

CMatrix pauli_matrix(const PauliIndex& mu) {
  CMatrix out = CMatrix::Identity(1, 1);
  for (int i = 0; i < mu.ququats(); ++i) {
    const CMatrix s = pauli_matrix(mu.digit(i));
    CMatrix next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index a = 0; a < out.rows(); ++a) {
      for (Eigen::Index b = 0; b < out.cols(); ++b) {
        next.block(2 * a, 2 * b, 2, 2) = out(a, b) * s;
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace ququat
