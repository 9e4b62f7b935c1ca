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

#include <Eigen/Dense>

#include "nisq/pauli.hpp"
#include "nisq/statevector.hpp"

namespace nisq {

enum class Boundary { Periodic, Open };

/// H = J sum_i Z_i Z_{i+1} + h sum_i X_i on a chain of L sites (site i is
/// qubit i).
struct TransverseIsingModel {
    std::size_t sites = 4;
    double coupling = -1.0;  ///< J
    double field = 1.0;      ///< h
    Boundary boundary = Boundary::Periodic;

    bool operator==(const TransverseIsingModel&) const = default;
};

/// Throws DataError when sites < 2. For L = 2 with periodic boundaries the
/// two bonds coincide and merge into one Z0 Z1 term of weight 2J.
PauliSum build_ti_hamiltonian(const TransverseIsingModel& model);

/// Dense 2^n x 2^n matrix of `hamiltonian`; n defaults to its min_qubits().
Eigen::MatrixXcd hamiltonian_matrix(const PauliSum& hamiltonian, std::optional<std::size_t> num_qubits = {});

struct GroundState {
    double energy = 0.0;
    QuantumState state;
};

constexpr std::size_t kMaxExactQubits = 14;

/// Lowest eigenpair by dense Hermitian diagonalization. Throws DataError
/// for more than kMaxExactQubits qubits.
GroundState exact_ground_state(const PauliSum& hamiltonian, std::optional<std::size_t> num_qubits = {});

}  // namespace nisq
