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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "nisq/circuit.hpp"

namespace nisq {

using Complex = std::complex<double>;

/// Dense amplitude vector of length 2^num_qubits. Qubit 0 is the least
/// significant bit of the basis-state index. Also used, unnormalized, for
/// tangent vectors.
class QuantumState {
  public:
    QuantumState() = default;
    /// |0...0>.
    explicit QuantumState(std::size_t num_qubits);
    /// Throws DataError unless the length is a power of two.
    explicit QuantumState(std::vector<Complex> amplitudes);

    static QuantumState basis(std::size_t num_qubits, std::size_t index);

    std::size_t num_qubits() const noexcept { return num_qubits_; }
    std::size_t dimension() const noexcept { return amplitudes_.size(); }

    Complex& operator[](std::size_t i) { return amplitudes_[i]; }
    const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }
    std::span<Complex> amplitudes() noexcept { return amplitudes_; }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }

    double norm() const;
    /// <this|other>
    Complex inner(const QuantumState& other) const;
    /// |amplitude|^2 per basis state.
    std::vector<double> probabilities() const;

    QuantumState& operator+=(const QuantumState& other);
    QuantumState& operator*=(Complex factor);

  private:
    std::size_t num_qubits_ = 0;
    std::vector<Complex> amplitudes_;
};

/// Angle a gate rotates by, resolving its parameter against `params`.
double gate_angle(const Gate& gate, std::span<const double> params);

/// Applies one gate in place.
void apply_gate(QuantumState& state, const Gate& gate, double angle);
/// Applies a Pauli ('X', 'Y' or 'Z') to one qubit in place.
void apply_pauli(QuantumState& state, std::size_t qubit, char pauli);
/// Applies all gates of `circuit` in order to `state`.
void apply_circuit(QuantumState& state, const ParametricCircuit& circuit, std::span<const double> params);

/// C(params)|0...0>. Throws DataError when params.size() != num_parameters().
QuantumState evaluate_circuit(const ParametricCircuit& circuit, std::span<const double> params);

/// |d_j C(params)>: sum over the occurrences of parameter j of the circuit
/// with -iG inserted after that gate, G = P/2 for rotations and
/// G = |1><1| (x) P/2 for controlled rotations.
QuantumState tangent_vector(const ParametricCircuit& circuit, std::span<const double> params,
                            std::size_t j);

/// All tangent vectors, sharing one forward pass.
std::vector<QuantumState> tangent_vectors(const ParametricCircuit& circuit,
                                          std::span<const double> params);

}  // namespace nisq
