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

// Circuit descriptions, execution and reports. The JSON schema is described
// in docs/circuit_schema.md.

#ifndef QUQUAT_CIRCUIT_HPP_
#define QUQUAT_CIRCUIT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ququat/liouville.hpp"
#include "ququat/superop.hpp"

namespace ququat {

enum class StepKind { kGate, kUnitary, kKraus, kPtm, kMeasure, kLogic };

struct Step {
  StepKind kind = StepKind::kGate;
  std::string label;  // gate name or step kind, for reports
  std::vector<int> targets;

  /// Local gate matrix on the targets (all kinds except kMeasure).
  std::optional<GateMatrix> local;
  /// Operator-sum form when one exists; the dense replay uses it instead of
  /// the gate matrix.
  std::vector<CMatrix> kraus;

  /// Measurement projectors on the targets, 2^k x 2^k.
  std::vector<CMatrix> projectors;
  std::optional<int> branch;
};

struct CircuitDescription {
  int n = 0;
  PauliVector initial = PauliVector::maximally_mixed(1);
  std::vector<Step> ops;
};

/// Parses and validates the JSON text. Throws ParseError naming the
/// offending field, e.g. "ops[2].targets: index 4 out of range for n = 2".
CircuitDescription parse_circuit(std::string_view text);

/// Named gate on k targets. `kraus` is empty for gates without an
/// operator-sum form (reflections, inversion, classical-logic gates, ...).
struct NamedGate {
  GateMatrix ptm;
  std::vector<CMatrix> kraus;
  int targets;
};

/// Throws ParseError for unknown names or wrong parameter counts.
NamedGate named_gate(std::string_view name, const std::vector<double>& params);

/// Names accepted by named_gate, for help output.
std::vector<std::string> named_gate_names();

struct GateFlags {
  bool trace_preserving = false;
  bool unital = false;
  bool completely_positive = false;
  bool orthogonal = false;
  bool trace_bound = false;  // sum_mu E_{0 mu}^2 <= 1
};

GateFlags classify(const GateMatrix& e);

struct MeasurementRecord {
  std::size_t step = 0;
  std::vector<int> targets;
  std::vector<double> probabilities;
  std::optional<int> branch;
};

struct StepRecord {
  std::string label;
  std::vector<int> targets;
  std::optional<GateFlags> flags;  // absent for measurements
};

struct RunOptions {
  bool verify = false;
  double tolerance = 1e-9;
};

struct RunReport {
  int n = 0;
  PauliVector final_state = PauliVector::maximally_mixed(1);
  std::vector<StepRecord> steps;
  std::vector<MeasurementRecord> measurements;
  /// Largest Pauli-coefficient deviation from the dense replay; present
  /// iff verification was requested.
  std::optional<double> residual;
  double tolerance = 1e-9;
  bool physical = true;  // final reconstruction is PSD
  double min_eigenvalue = 0.0;

  bool verified() const { return !residual || *residual < tolerance; }
};

/// Applies the steps in order. Gates on target subsets are embedded by
/// permutation and tensoring with the identity. Throws ZeroProbabilityError
/// when a selected branch has probability below 1e-12.
RunReport run(const CircuitDescription& desc, const RunOptions& options = {});

std::string report_json(const RunReport& r);
std::string report_table(const RunReport& r);

struct GateAnalysis {
  int n = 0;
  GateFlags flags;
  RVector translation;
  /// Present for trace-preserving gates.
  std::optional<RVector> singular_values;
  double choi_min_eigenvalue = 0.0;
};

/// Payload JSON: {"unitary": M}, {"kraus": [M, ...]}, {"ptm": M} or
/// {"gate": name, "params": [...]}. Throws ParseError when malformed.
GateAnalysis analyze_gate(std::string_view payload);
GateAnalysis analyze_gate(const GateMatrix& e);

std::string analysis_json(const GateAnalysis& a);
std::string analysis_table(const GateAnalysis& a);

}  // namespace ququat

#endif  // QUQUAT_CIRCUIT_HPP_
