// Copyright 2026 The nisqkit Authors
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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nisq {

/// Gate set of the simulator. Rotations are exp(-i theta P / 2); controlled
/// rotations act as the identity when the control qubit is |0>.
enum class GateKind { RX, RY, RZ, CRX, CRY, CRZ, CNOT, H, X, Z };

std::string_view gate_name(GateKind kind) noexcept;
/// Throws DataError on an unknown name.
GateKind parse_gate_kind(std::string_view name);

bool is_rotation(GateKind kind) noexcept;
bool is_controlled(GateKind kind) noexcept;
std::size_t gate_arity(GateKind kind) noexcept;
/// 'X', 'Y' or 'Z' for the (controlled) rotations; '\0' otherwise.
char rotation_axis(GateKind kind) noexcept;

struct Gate {
    GateKind kind{GateKind::X};
    /// For controlled gates {control, target}.
    std::vector<std::size_t> qubits;
    /// Index into the owning circuit's parameter list. Empty for fixed gates.
    std::optional<std::size_t> param;
    /// Rotation angle when `param` is empty.
    double value = 0.0;

    bool operator==(const Gate&) const = default;
};

/// Ordered gate list over `num_qubits` qubits acting on |0...0>. Parameters
/// are named; their registration order defines the parameter index used by
/// the tangent, Gram and classification routines. A parameter may be shared
/// by several gates.
class ParametricCircuit {
  public:
    ParametricCircuit() = default;
    explicit ParametricCircuit(std::size_t num_qubits);

    /// Registers `name` (if new) and returns its index.
    std::size_t add_parameter(std::string_view name);

    /// Parametrized rotation.
    ParametricCircuit& add(GateKind kind, std::vector<std::size_t> qubits, std::string_view param);
    /// Fixed-angle rotation.
    ParametricCircuit& add(GateKind kind, std::vector<std::size_t> qubits, double value);
    /// Fixed gate (cnot, h, x, z).
    ParametricCircuit& add(GateKind kind, std::vector<std::size_t> qubits);
    /// Appends a gate whose `param` refers to this circuit's parameter list.
    ParametricCircuit& append(Gate gate);

    std::size_t num_qubits() const noexcept { return num_qubits_; }
    std::size_t num_parameters() const noexcept { return names_.size(); }
    const std::vector<Gate>& gates() const noexcept { return gates_; }
    const std::vector<std::string>& parameter_names() const noexcept { return names_; }
    std::optional<std::size_t> parameter_index(std::string_view name) const;

    /// Gate positions that use parameter `index`.
    std::vector<std::size_t> occurrences(std::size_t index) const;

    /// Throws DataError if some registered parameter is used by no gate.
    void validate() const;

    /// `*this` followed by `tail`; parameters are merged by name.
    ParametricCircuit concatenated(const ParametricCircuit& tail) const;

    bool operator==(const ParametricCircuit&) const = default;

  private:
    void check_gate(const Gate& gate) const;

    std::size_t num_qubits_ = 0;
    std::vector<Gate> gates_;
    std::vector<std::string> names_;
};

}  // namespace nisq
