// Copyright 2026 The qecsplit Authors
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

#ifndef QECSPLIT_CIRCUIT_HPP_
#define QECSPLIT_CIRCUIT_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qecsplit {

enum class GateKind : std::uint8_t { kPrepZ, kPrepX, kCnot, kMeasZ, kMeasX };
inline constexpr std::size_t kNumGateKinds = 5;

std::string_view gate_kind_name(GateKind kind);

enum class CheckType : std::uint8_t { kX, kZ };

// Memory basis only changes how the final (noiseless) data readout is labelled
// in the serialized circuit; propagation tracks both logical operators.
enum class MemoryBasis : std::uint8_t { kZ, kX };

// Type of logical error being estimated. A logical Z error (kZ) is detected by
// X checks and flips the X logical operator.
enum class Observable : std::uint8_t { kX, kZ };

std::string_view observable_name(Observable obs);
Observable parse_observable(std::string_view text);

// Checks that detect errors contributing to `obs`.
constexpr CheckType detecting_check_type(Observable obs) {
  return obs == Observable::kZ ? CheckType::kX : CheckType::kZ;
}

inline constexpr std::uint32_t kNoCheck = 0xffffffffu;

struct Gate {
  std::uint32_t id = 0;
  GateKind kind = GateKind::kPrepZ;
  // CNOT: {control, target}. Single-qubit gates use qubits[0].
  std::array<std::uint32_t, 2> qubits{};
  std::uint32_t round = 0;
  // Global timestep; six per round (prep, four CNOT layers, measure).
  std::uint32_t timestep = 0;
  // Check whose ancilla this gate touches.
  std::uint32_t check = kNoCheck;

  std::size_t arity() const { return kind == GateKind::kCnot ? 2 : 1; }
};

// One stabilizer measured by an ancilla. Plaquette (row, col) covers data
// qubits (row..row+1, col..col+1); boundary plaquettes have row or col of -1
// or d-1 and keep only their in-lattice corners.
struct Check {
  CheckType type = CheckType::kX;
  std::uint32_t ancilla = 0;
  int row = 0;
  int col = 0;
  // Data qubit touched at each CNOT layer, or -1 where the layer idles.
  std::array<std::int64_t, 4> schedule{-1, -1, -1, -1};
  std::vector<std::uint32_t> support;

  std::size_t weight() const { return support.size(); }
};

struct DetectorDef {
  std::uint32_t check = 0;
  std::uint32_t round = 0;
  std::uint32_t record = 0;
  // -1 when round 0 compares against the ideal initial value.
  std::int64_t previous_record = -1;
};

class Circuit {
 public:
  std::uint32_t distance() const { return distance_; }
  std::uint32_t rounds() const { return rounds_; }
  MemoryBasis basis() const { return basis_; }

  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t num_gates() const { return gates_.size(); }
  const Gate& gate(std::uint32_t id) const { return gates_[id]; }
  std::uint32_t num_qubits() const { return num_qubits_; }

  const std::vector<std::uint32_t>& data_qubits() const { return data_qubits_; }
  const std::vector<std::uint32_t>& x_ancillas() const { return x_ancillas_; }
  const std::vector<std::uint32_t>& z_ancillas() const { return z_ancillas_; }

  const std::vector<Check>& checks() const { return checks_; }
  std::size_t num_checks() const { return checks_.size(); }
  // Indices into checks() of the given type, in ascending order.
  const std::vector<std::uint32_t>& checks_of_type(CheckType type) const {
    return type == CheckType::kX ? x_checks_ : z_checks_;
  }
  // Position of check `c` within checks_of_type(checks()[c].type).
  std::uint32_t check_local_index(std::uint32_t c) const { return check_local_index_[c]; }

  const std::vector<DetectorDef>& detectors() const { return detectors_; }
  std::size_t num_detectors() const { return detectors_.size(); }
  std::uint32_t detector_index(std::uint32_t check, std::uint32_t round) const {
    return round * static_cast<std::uint32_t>(checks_.size()) + check;
  }

  // Measurement record -> gate id, in measurement order.
  const std::vector<std::uint32_t>& measurement_gates() const { return measurement_gates_; }
  std::size_t num_measurements() const { return measurement_gates_.size(); }

  // Data-qubit supports of the logical operators. X_L runs down a column and
  // Z_L along a row, so each crosses the other exactly once.
  const std::vector<std::uint32_t>& logical_x() const { return logical_x_; }
  const std::vector<std::uint32_t>& logical_z() const { return logical_z_; }

  std::uint32_t data_qubit(std::uint32_t row, std::uint32_t col) const {
    return row * distance_ + col;
  }
  bool is_data_qubit(std::uint32_t q) const { return q < distance_ * distance_; }

  std::size_t gates_per_round() const { return gates_.size() / rounds_; }

 private:
  friend Circuit build_rotated_surface_code(int distance, int rounds, MemoryBasis basis);
  Circuit() = default;

  std::uint32_t distance_ = 0;
  std::uint32_t rounds_ = 0;
  MemoryBasis basis_ = MemoryBasis::kZ;
  std::uint32_t num_qubits_ = 0;
  std::vector<Gate> gates_;
  std::vector<std::uint32_t> data_qubits_;
  std::vector<std::uint32_t> x_ancillas_;
  std::vector<std::uint32_t> z_ancillas_;
  std::vector<Check> checks_;
  std::vector<std::uint32_t> x_checks_;
  std::vector<std::uint32_t> z_checks_;
  std::vector<std::uint32_t> check_local_index_;
  std::vector<DetectorDef> detectors_;
  std::vector<std::uint32_t> measurement_gates_;
  std::vector<std::uint32_t> logical_x_;
  std::vector<std::uint32_t> logical_z_;
};

// Distance-d rotated surface code memory circuit with `rounds` rounds of
// syndrome extraction. X checks use CNOT order NW, NE, SW, SE and Z checks
// NW, SW, NE, SE. Throws InvalidParameter for even d, d < 3 or rounds < 1.
Circuit build_rotated_surface_code(int distance, int rounds, MemoryBasis basis = MemoryBasis::kZ);

// Line-oriented dump: one gate per line as `id kind qubits... round timestep`,
// then DETECTOR and LOGICAL lines.
void write_circuit(std::ostream& out, const Circuit& circuit);
std::string serialize_circuit(const Circuit& circuit);

}  // namespace qecsplit

#endif  // QECSPLIT_CIRCUIT_HPP_
