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

#include "nisq/circuit.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "nisq/errors.hpp"

namespace nisq {

namespace {

struct GateInfo {
    GateKind kind;
    std::string_view name;
    std::size_t arity;
    bool rotation;
    bool controlled;
    char axis;
};

constexpr std::array<GateInfo, 10> kGateTable{{
    {GateKind::RX, "rx", 1, true, false, 'X'},
    {GateKind::RY, "ry", 1, true, false, 'Y'},
    {GateKind::RZ, "rz", 1, true, false, 'Z'},
    {GateKind::CRX, "crx", 2, true, true, 'X'},
    {GateKind::CRY, "cry", 2, true, true, 'Y'},
    {GateKind::CRZ, "crz", 2, true, true, 'Z'},
    {GateKind::CNOT, "cnot", 2, false, true, '\0'},
    {GateKind::H, "h", 1, false, false, '\0'},
    {GateKind::X, "x", 1, false, false, '\0'},
    {GateKind::Z, "z", 1, false, false, '\0'},
}};

const GateInfo& info(GateKind kind) noexcept {
    return kGateTable[static_cast<std::size_t>(kind)];
}

}  // namespace

std::string_view gate_name(GateKind kind) noexcept { return info(kind).name; }

GateKind parse_gate_kind(std::string_view name) {
    for (const auto& entry : kGateTable) {
        if (entry.name == name) return entry.kind;
    }
    throw DataError("unknown gate '" + std::string(name) + "'");
}

bool is_rotation(GateKind kind) noexcept { return info(kind).rotation; }
bool is_controlled(GateKind kind) noexcept { return info(kind).controlled; }
std::size_t gate_arity(GateKind kind) noexcept { return info(kind).arity; }
char rotation_axis(GateKind kind) noexcept { return info(kind).axis; }

ParametricCircuit::ParametricCircuit(std::size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0) throw DataError("a circuit needs at least one qubit");
}

std::size_t ParametricCircuit::add_parameter(std::string_view name) {
    if (name.empty()) throw DataError("parameter names must be non-empty");
    if (auto index = parameter_index(name)) return *index;
    names_.emplace_back(name);
    return names_.size() - 1;
}

ParametricCircuit& ParametricCircuit::add(GateKind kind, std::vector<std::size_t> qubits,
                                          std::string_view param) {
    if (!is_rotation(kind)) {
        throw DataError("gate '" + std::string(gate_name(kind)) + "' takes no parameter");
    }
    Gate gate{kind, std::move(qubits), std::nullopt, 0.0};
    check_gate(gate);
    gate.param = add_parameter(param);
    gates_.push_back(std::move(gate));
    return *this;
}

ParametricCircuit& ParametricCircuit::add(GateKind kind, std::vector<std::size_t> qubits,
                                          double value) {
    if (!is_rotation(kind)) {
        throw DataError("gate '" + std::string(gate_name(kind)) + "' takes no angle");
    }
    return append(Gate{kind, std::move(qubits), std::nullopt, value});
}

ParametricCircuit& ParametricCircuit::add(GateKind kind, std::vector<std::size_t> qubits) {
    return append(Gate{kind, std::move(qubits), std::nullopt, 0.0});
}

ParametricCircuit& ParametricCircuit::append(Gate gate) {
    check_gate(gate);
    if (gate.param && *gate.param >= names_.size()) {
        throw DataError("gate refers to unregistered parameter index " + std::to_string(*gate.param));
    }
    if (gate.param && !is_rotation(gate.kind)) {
        throw DataError("gate '" + std::string(gate_name(gate.kind)) + "' takes no parameter");
    }
    gates_.push_back(std::move(gate));
    return *this;
}

void ParametricCircuit::check_gate(const Gate& gate) const {
    const auto name = std::string(gate_name(gate.kind));
    if (gate.qubits.size() != gate_arity(gate.kind)) {
        throw DataError("gate '" + name + "' expects " + std::to_string(gate_arity(gate.kind)) +
                        " qubit(s), got " + std::to_string(gate.qubits.size()));
    }
    for (std::size_t q : gate.qubits) {
        if (q >= num_qubits_) {
            throw DataError("gate '" + name + "' acts on qubit " + std::to_string(q) +
                            " outside a " + std::to_string(num_qubits_) + "-qubit circuit");
        }
    }
    if (gate.qubits.size() == 2 && gate.qubits[0] == gate.qubits[1]) {
        throw DataError("gate '" + name + "' uses qubit " + std::to_string(gate.qubits[0]) + " twice");
    }
}

std::optional<std::size_t> ParametricCircuit::parameter_index(std::string_view name) const {
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

std::vector<std::size_t> ParametricCircuit::occurrences(std::size_t index) const {
    std::vector<std::size_t> positions;
    for (std::size_t g = 0; g < gates_.size(); ++g) {
        if (gates_[g].param == index) positions.push_back(g);
    }
    return positions;
}

void ParametricCircuit::validate() const {
    for (std::size_t j = 0; j < names_.size(); ++j) {
        if (occurrences(j).empty()) {
            throw DataError("parameter '" + names_[j] + "' is not used by any gate");
        }
    }
}

ParametricCircuit ParametricCircuit::concatenated(const ParametricCircuit& tail) const {
    if (tail.num_qubits_ != num_qubits_) {
        throw DataError("cannot concatenate circuits on different qubit counts");
    }
    ParametricCircuit out = *this;
    for (const Gate& gate : tail.gates_) {
        Gate copy = gate;
        if (gate.param) copy.param = out.add_parameter(tail.names_[*gate.param]);
        out.append(std::move(copy));
    }
    return out;
}

}  // namespace nisq
