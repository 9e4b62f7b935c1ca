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
#include <cstdint>

#include "nisq/random.hpp"
#include "nisq/statevector.hpp"

namespace nisq {

/// Haar-distributed pure state: complex standard-normal amplitudes,
/// normalized.
QuantumState haar_random_state(std::size_t num_qubits, Rng& rng);
QuantumState haar_random_state(std::size_t num_qubits, std::uint64_t seed);

}  // namespace nisq
