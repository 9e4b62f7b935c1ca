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

#include "nisq/haar.hpp"

#include "nisq/errors.hpp"

namespace nisq {

QuantumState haar_random_state(std::size_t num_qubits, Rng& rng) {
    if (num_qubits == 0) throw DataError("a random state needs at least one qubit");
    std::vector<Complex> amps(std::size_t{1} << num_qubits);
    for (auto& a : amps) {
        const double re = rng.normal();
        const double im = rng.normal();
        a = Complex{re, im};
    }
    QuantumState state(std::move(amps));
    state *= 1.0 / state.norm();
    return state;
}

QuantumState haar_random_state(std::size_t num_qubits, std::uint64_t seed) {
    Rng rng(seed);
    return haar_random_state(num_qubits, rng);
}

}  // namespace nisq
