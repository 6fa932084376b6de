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


#include "qecsplit/circuit.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>

#include "qecsplit/errors.hpp"

namespace qecsplit {

namespace {

constexpr std::uint32_t kStepsPerRound = 6;

// (row, col) offsets of the data qubit touched at each CNOT layer.
constexpr std::array<std::array<int, 2>, 4> kXOrder{{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};
constexpr std::array<std::array<int, 2>, 4> kZOrder{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};

}  // namespace

std::string_view gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::kPrepZ:
      return "PREP_Z";
    case GateKind::kPrepX:
      return "PREP_X";
    case GateKind::kCnot:
      return "CNOT";
    case GateKind::kMeasZ:
      return "MEAS_Z";
    case GateKind::kMeasX:
      return "MEAS_X";
  }
  return "?";
}

std::string_view observable_name(Observable obs) {
  return obs == Observable::kX ? "X" : "Z";
}

Observable parse_observable(std::string_view text) {
  if (text == "X" || text == "x") return Observable::kX;
  if (text == "Z" || text == "z") return Observable::kZ;
  throw InvalidParameter("observable must be X or Z, got '" + std::string(text) + "'");
}

Circuit build_rotated_surface_code(int distance, int rounds, MemoryBasis basis) {
  if (distance < 3 || distance % 2 == 0) {
    throw InvalidParameter("distance must be odd and >= 3, got " + std::to_string(distance));
  }
  if (rounds < 1) {
    throw InvalidParameter("rounds must be >= 1, got " + std::to_string(rounds));
  }
  const int d = distance;
  Circuit c;
  c.distance_ = static_cast<std::uint32_t>(d);
  c.rounds_ = static_cast<std::uint32_t>(rounds);
  c.basis_ = basis;

  const std::uint32_t num_data = c.distance_ * c.distance_;
  for (std::uint32_t q = 0; q < num_data; ++q) c.data_qubits_.push_back(q);

  // Plaquettes in row-major (row, col) order. Interior plaquettes alternate
  // type; the top/bottom edges keep only X checks and the left/right edges only
  // Z checks, which puts X_L on a column and Z_L on a row.
  for (int a = -1; a <= d - 1; ++a) {
    for (int b = -1; b <= d - 1; ++b) {
      const bool row_edge = (a == -1 || a == d - 1);
      const bool col_edge = (b == -1 || b == d - 1);
      if (row_edge && col_edge) continue;
      const CheckType type = ((a + b) % 2 == 0) ? CheckType::kZ : CheckType::kX;
      if (row_edge && type != CheckType::kX) continue;
      if (col_edge && type != CheckType::kZ) continue;

      Check check;
      check.type = type;
      check.row = a;
      check.col = b;
      check.ancilla = num_data + static_cast<std::uint32_t>(c.checks_.size());
      const auto& order = type == CheckType::kX ? kXOrder : kZOrder;
      for (std::size_t layer = 0; layer < 4; ++layer) {
        const int i = a + order[layer][0];
        const int j = b + order[layer][1];
        if (i < 0 || i >= d || j < 0 || j >= d) continue;
        const std::uint32_t q = c.data_qubit(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
        check.schedule[layer] = q;
        check.support.push_back(q);
      }
      std::sort(check.support.begin(), check.support.end());
      c.checks_.push_back(std::move(check));
    }
  }
  c.num_qubits_ = num_data + static_cast<std::uint32_t>(c.checks_.size());
  c.check_local_index_.resize(c.checks_.size());
  for (std::uint32_t k = 0; k < c.checks_.size(); ++k) {
    const Check& check = c.checks_[k];
    auto& list = check.type == CheckType::kX ? c.x_checks_ : c.z_checks_;
    auto& ancillas = check.type == CheckType::kX ? c.x_ancillas_ : c.z_ancillas_;
    c.check_local_index_[k] = static_cast<std::uint32_t>(list.size());
    list.push_back(k);
    ancillas.push_back(check.ancilla);
  }

  const auto num_checks = static_cast<std::uint32_t>(c.checks_.size());
  auto add_gate = [&c](GateKind kind, std::uint32_t q0, std::uint32_t q1,
                       std::uint32_t round, std::uint32_t step, std::uint32_t check) {
    Gate g;
    g.id = static_cast<std::uint32_t>(c.gates_.size());
    g.kind = kind;
    g.qubits = {q0, q1};
    g.round = round;
    g.timestep = round * kStepsPerRound + step;
    g.check = check;
    c.gates_.push_back(g);
  };

  for (std::uint32_t r = 0; r < c.rounds_; ++r) {
    for (std::uint32_t k = 0; k < num_checks; ++k) {
      const Check& check = c.checks_[k];
      add_gate(check.type == CheckType::kX ? GateKind::kPrepX : GateKind::kPrepZ,
               check.ancilla, check.ancilla, r, 0, k);
    }
    for (std::uint32_t layer = 0; layer < 4; ++layer) {
      for (std::uint32_t k = 0; k < num_checks; ++k) {
        const Check& check = c.checks_[k];
        if (check.schedule[layer] < 0) continue;
        const auto q = static_cast<std::uint32_t>(check.schedule[layer]);
        if (check.type == CheckType::kX) {
          add_gate(GateKind::kCnot, check.ancilla, q, r, layer + 1, k);
        } else {
          add_gate(GateKind::kCnot, q, check.ancilla, r, layer + 1, k);
        }
      }
    }
    for (std::uint32_t k = 0; k < num_checks; ++k) {
      const Check& check = c.checks_[k];
      c.measurement_gates_.push_back(static_cast<std::uint32_t>(c.gates_.size()));
      add_gate(check.type == CheckType::kX ? GateKind::kMeasX : GateKind::kMeasZ,
               check.ancilla, check.ancilla, r, 5, k);
    }
  }

  for (std::uint32_t r = 0; r < c.rounds_; ++r) {
    for (std::uint32_t k = 0; k < num_checks; ++k) {
      DetectorDef det;
      det.check = k;
      det.round = r;
      det.record = r * num_checks + k;
      det.previous_record = r == 0 ? -1 : static_cast<std::int64_t>((r - 1) * num_checks + k);
      c.detectors_.push_back(det);
    }
  }

  for (std::uint32_t i = 0; i < c.distance_; ++i) {
    c.logical_x_.push_back(c.data_qubit(i, 0));
    c.logical_z_.push_back(c.data_qubit(0, i));
  }
  return c;
}

void write_circuit(std::ostream& out, const Circuit& circuit) {
  out << "# rotated surface code d=" << circuit.distance() << " rounds=" << circuit.rounds()
      << " basis=" << (circuit.basis() == MemoryBasis::kZ ? "Z" : "X") << '\n';
  for (const Gate& g : circuit.gates()) {
    out << g.id << ' ' << gate_kind_name(g.kind) << ' ' << g.qubits[0];
    if (g.kind == GateKind::kCnot) out << ' ' << g.qubits[1];
    out << ' ' << g.round << ' ' << g.timestep << '\n';
  }
  for (const DetectorDef& det : circuit.detectors()) {
    const Check& check = circuit.checks()[det.check];
    out << "DETECTOR " << (check.type == CheckType::kX ? 'X' : 'Z') << ' ' << check.ancilla << ' '
        << det.round << ' ' << det.record << ' ' << det.previous_record << '\n';
  }
  // The noiseless final readout measures every data qubit in the memory basis.
  const bool z_memory = circuit.basis() == MemoryBasis::kZ;
  const auto& support = z_memory ? circuit.logical_z() : circuit.logical_x();
  out << "LOGICAL " << (z_memory ? 'Z' : 'X');
  for (std::uint32_t q : support) out << ' ' << q;
  out << '\n';
}

std::string serialize_circuit(const Circuit& circuit) {
  std::ostringstream out;
  write_circuit(out, circuit);
  return out.str();
}

}  // namespace qecsplit
