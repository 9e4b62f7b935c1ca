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
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "nisq/random.hpp"
#include "nisq/statevector.hpp"

namespace nisq {

/// Histogram of measurement outcomes. Outcomes are basis-state indices
/// (qubit 0 = least significant bit). As bitstrings they are written
/// most-significant qubit first, so the last character is qubit 0.
class ShotCounts {
  public:
    ShotCounts() = default;
    explicit ShotCounts(std::size_t num_qubits) : num_qubits_(num_qubits) {}

    void add(std::uint64_t outcome, std::uint64_t count = 1);
    void add(std::string_view bitstring, std::uint64_t count);

    std::size_t num_qubits() const noexcept { return num_qubits_; }
    std::uint64_t shots() const noexcept { return shots_; }
    const std::map<std::uint64_t, std::uint64_t>& counts() const noexcept { return counts_; }
    std::uint64_t count(std::uint64_t outcome) const;

    std::string bitstring(std::uint64_t outcome) const;
    std::uint64_t parse_bitstring(std::string_view bitstring) const;

    bool operator==(const ShotCounts&) const = default;

  private:
    std::size_t num_qubits_ = 0;
    std::uint64_t shots_ = 0;
    std::map<std::uint64_t, std::uint64_t> counts_;
};

/// Sample mean of prod_{q in qubits} (-1)^{bit_q}, i.e. the measured
/// expectation of the Z-string on `qubits`. Throws DataError if a qubit is
/// outside the counts' bit width or the counts are empty.
double parity_mean(const ShotCounts& counts, std::span<const std::size_t> qubits);

/// Draws `shots` i.i.d. outcomes from |amplitude|^2. Throws DataError when
/// shots == 0 or the state is not normalized.
ShotCounts sample_measurements(const QuantumState& state, std::uint64_t shots, std::uint64_t seed);
ShotCounts sample_measurements(const QuantumState& state, std::uint64_t shots, Rng& rng);

}  // namespace nisq
