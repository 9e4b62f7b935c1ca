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

#include "nisq/ising.hpp"

#include <algorithm>
#include <string>

#include "nisq/errors.hpp"

namespace nisq {

PauliSum build_ti_hamiltonian(const TransverseIsingModel& model) {
    if (model.sites < 2) throw DataError("the Ising chain needs at least two sites");
    PauliSum h;
    const std::size_t bonds = model.boundary == Boundary::Periodic ? model.sites : model.sites - 1;
    for (std::size_t i = 0; i < bonds; ++i) {
        h.add(model.coupling, PauliString{{i, 'Z'}, {(i + 1) % model.sites, 'Z'}});
    }
    for (std::size_t i = 0; i < model.sites; ++i) h.add(model.field, PauliString{{i, 'X'}});
    return h;
}

Eigen::MatrixXcd hamiltonian_matrix(const PauliSum& hamiltonian, std::optional<std::size_t> num_qubits) {
    const std::size_t n = num_qubits.value_or(std::max<std::size_t>(1, hamiltonian.min_qubits()));
    if (hamiltonian.min_qubits() > n) throw DataError("Hamiltonian acts outside the requested register");
    if (n > kMaxExactQubits) {
        throw DataError(std::to_string(n) + " qubits exceed the dense limit of " + std::to_string(kMaxExactQubits));
    }
    const std::size_t dim = std::size_t{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto& term : hamiltonian.terms()) {
        // P|col> = phase * |col ^ flip>
        std::size_t flip = 0;
        for (const auto& [q, op] : term.string.ops()) {
            if (op != 'Z') flip |= std::size_t{1} << q;
        }
        for (std::size_t col = 0; col < dim; ++col) {
            Complex phase = term.coefficient;
            for (const auto& [q, op] : term.string.ops()) {
                const bool bit = ((col >> q) & 1U) != 0;
                if (op == 'Z' && bit) phase = -phase;
                if (op == 'Y') phase *= bit ? Complex{0, -1} : Complex{0, 1};
            }
            m(static_cast<Eigen::Index>(col ^ flip), static_cast<Eigen::Index>(col)) += phase;
        }
    }
    return m;
}

GroundState exact_ground_state(const PauliSum& hamiltonian, std::optional<std::size_t> num_qubits) {
    const Eigen::MatrixXcd m = hamiltonian_matrix(hamiltonian, num_qubits);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver failed");
    const Eigen::VectorXcd v = solver.eigenvectors().col(0);
    std::vector<Complex> amps(v.data(), v.data() + v.size());
    QuantumState state(std::move(amps));
    state *= 1.0 / state.norm();
    return {solver.eigenvalues()(0), std::move(state)};
}

}  // namespace nisq
