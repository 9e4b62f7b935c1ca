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

#include "nisq/statevector.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "nisq/errors.hpp"

namespace nisq {

namespace {

using Matrix2 = std::array<Complex, 4>;  // row-major

constexpr Complex kI{0.0, 1.0};

Matrix2 gate_matrix(GateKind kind, double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    switch (kind) {
        case GateKind::RX:
        case GateKind::CRX:
            return {Complex{c, 0}, Complex{0, -s}, Complex{0, -s}, Complex{c, 0}};
        case GateKind::RY:
        case GateKind::CRY:
            return {Complex{c, 0}, Complex{-s, 0}, Complex{s, 0}, Complex{c, 0}};
        case GateKind::RZ:
        case GateKind::CRZ:
            return {Complex{c, -s}, Complex{0, 0}, Complex{0, 0}, Complex{c, s}};
        case GateKind::H: {
            const double r = 1.0 / std::numbers::sqrt2;
            return {Complex{r, 0}, Complex{r, 0}, Complex{r, 0}, Complex{-r, 0}};
        }
        case GateKind::X:
        case GateKind::CNOT:
            return {Complex{0, 0}, Complex{1, 0}, Complex{1, 0}, Complex{0, 0}};
        case GateKind::Z:
            return {Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{-1, 0}};
    }
    return {};
}

Matrix2 pauli_matrix(char pauli) {
    switch (pauli) {
        case 'X': return {Complex{0, 0}, Complex{1, 0}, Complex{1, 0}, Complex{0, 0}};
        case 'Y': return {Complex{0, 0}, Complex{0, -1}, Complex{0, 1}, Complex{0, 0}};
        case 'Z': return {Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{-1, 0}};
        default: break;
    }
    throw DataError(std::string("not a Pauli operator: '") + pauli + "'");
}

// Applies `m` to `target`, restricted to basis states whose control bit is
// set when `control_mask` is nonzero.
void apply_matrix(std::span<Complex> amps, std::size_t target, std::size_t control_mask,
                  const Matrix2& m) {
    const std::size_t bit = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & bit) != 0 || (i & control_mask) != control_mask) continue;
        const Complex a0 = amps[i];
        const Complex a1 = amps[i | bit];
        amps[i] = m[0] * a0 + m[1] * a1;
        amps[i | bit] = m[2] * a0 + m[3] * a1;
    }
}

// Applies -iG for the rotation gate `gate`, in place.
void apply_generator(QuantumState& state, const Gate& gate) {
    const bool controlled = is_controlled(gate.kind);
    const std::size_t target = controlled ? gate.qubits[1] : gate.qubits[0];
    apply_pauli(state, target, rotation_axis(gate.kind));
    if (controlled) {
        const std::size_t control_bit = std::size_t{1} << gate.qubits[0];
        auto amps = state.amplitudes();
        for (std::size_t i = 0; i < amps.size(); ++i) {
            if ((i & control_bit) == 0) amps[i] = 0.0;
        }
    }
    state *= -0.5 * kI;
}

void check_params(const ParametricCircuit& circuit, std::span<const double> params) {
    if (params.size() != circuit.num_parameters()) {
        throw DataError("circuit has " + std::to_string(circuit.num_parameters()) +
                        " parameter(s) but " + std::to_string(params.size()) + " value(s) were given");
    }
}

}  // namespace

QuantumState::QuantumState(std::size_t num_qubits)
    : num_qubits_(num_qubits), amplitudes_(std::size_t{1} << num_qubits) {
    amplitudes_[0] = 1.0;
}

QuantumState::QuantumState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty() || !std::has_single_bit(amplitudes_.size())) {
        throw DataError("amplitude vector length must be a power of two");
    }
    num_qubits_ = static_cast<std::size_t>(std::countr_zero(amplitudes_.size()));
}

QuantumState QuantumState::basis(std::size_t num_qubits, std::size_t index) {
    QuantumState state(num_qubits);
    if (index >= state.dimension()) throw DataError("basis index out of range");
    state.amplitudes_[0] = 0.0;
    state.amplitudes_[index] = 1.0;
    return state;
}

double QuantumState::norm() const {
    double sum = 0.0;
    for (const Complex& a : amplitudes_) sum += std::norm(a);
    return std::sqrt(sum);
}

Complex QuantumState::inner(const QuantumState& other) const {
    if (other.dimension() != dimension()) throw DataError("inner product of states of different size");
    Complex sum = 0.0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) sum += std::conj(amplitudes_[i]) * other.amplitudes_[i];
    return sum;
}

std::vector<double> QuantumState::probabilities() const {
    std::vector<double> p(amplitudes_.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(amplitudes_[i]);
    return p;
}

QuantumState& QuantumState::operator+=(const QuantumState& other) {
    if (other.dimension() != dimension()) throw DataError("sum of states of different size");
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) amplitudes_[i] += other.amplitudes_[i];
    return *this;
}

QuantumState& QuantumState::operator*=(Complex factor) {
    for (Complex& a : amplitudes_) a *= factor;
    return *this;
}

double gate_angle(const Gate& gate, std::span<const double> params) {
    return gate.param ? params[*gate.param] : gate.value;
}

void apply_gate(QuantumState& state, const Gate& gate, double angle) {
    for (std::size_t q : gate.qubits) {
        if (q >= state.num_qubits()) throw DataError("gate qubit outside the state");
    }
    const Matrix2 m = gate_matrix(gate.kind, angle);
    if (is_controlled(gate.kind)) {
        apply_matrix(state.amplitudes(), gate.qubits[1], std::size_t{1} << gate.qubits[0], m);
    } else {
        apply_matrix(state.amplitudes(), gate.qubits[0], 0, m);
    }
}

void apply_pauli(QuantumState& state, std::size_t qubit, char pauli) {
    if (qubit >= state.num_qubits()) throw DataError("Pauli qubit outside the state");
    apply_matrix(state.amplitudes(), qubit, 0, pauli_matrix(pauli));
}

void apply_circuit(QuantumState& state, const ParametricCircuit& circuit, std::span<const double> params) {
    check_params(circuit, params);
    if (state.num_qubits() != circuit.num_qubits()) throw DataError("state and circuit sizes differ");
    for (const Gate& gate : circuit.gates()) apply_gate(state, gate, gate_angle(gate, params));
}

QuantumState evaluate_circuit(const ParametricCircuit& circuit, std::span<const double> params) {
    QuantumState state(circuit.num_qubits());
    apply_circuit(state, circuit, params);
    return state;
}

namespace {

// Runs the circuit with -iG inserted after gate `position`, starting from
// the prefix state reached just after that gate.
QuantumState insert_generator(const ParametricCircuit& circuit, std::span<const double> params,
                              QuantumState prefix, std::size_t position) {
    const auto& gates = circuit.gates();
    apply_generator(prefix, gates[position]);
    for (std::size_t g = position + 1; g < gates.size(); ++g) {
        apply_gate(prefix, gates[g], gate_angle(gates[g], params));
    }
    return prefix;
}

}  // namespace

QuantumState tangent_vector(const ParametricCircuit& circuit, std::span<const double> params,
                            std::size_t j) {
    check_params(circuit, params);
    if (j >= circuit.num_parameters()) {
        throw DataError("parameter index " + std::to_string(j) + " out of range");
    }
    const auto& gates = circuit.gates();
    QuantumState result(circuit.num_qubits());
    result *= 0.0;
    QuantumState prefix(circuit.num_qubits());
    for (std::size_t g = 0; g < gates.size(); ++g) {
        apply_gate(prefix, gates[g], gate_angle(gates[g], params));
        if (gates[g].param == j) result += insert_generator(circuit, params, prefix, g);
    }
    return result;
}

std::vector<QuantumState> tangent_vectors(const ParametricCircuit& circuit,
                                          std::span<const double> params) {
    check_params(circuit, params);
    const auto& gates = circuit.gates();
    std::vector<QuantumState> tangents;
    tangents.reserve(circuit.num_parameters());
    for (std::size_t j = 0; j < circuit.num_parameters(); ++j) {
        QuantumState zero(circuit.num_qubits());
        zero *= 0.0;
        tangents.push_back(std::move(zero));
    }
    QuantumState prefix(circuit.num_qubits());
    for (std::size_t g = 0; g < gates.size(); ++g) {
        apply_gate(prefix, gates[g], gate_angle(gates[g], params));
        if (gates[g].param) tangents[*gates[g].param] += insert_generator(circuit, params, prefix, g);
    }
    return tangents;
}

}  // namespace nisq
