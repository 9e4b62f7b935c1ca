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

#include "nisq/sampling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

#include "nisq/errors.hpp"

namespace nisq {

void ShotCounts::add(std::uint64_t outcome, std::uint64_t count) {
    if (num_qubits_ < 64 && (outcome >> num_qubits_) != 0) {
        throw DataError("outcome " + std::to_string(outcome) + " does not fit in " +
                        std::to_string(num_qubits_) + " bit(s)");
    }
    if (count == 0) return;
    counts_[outcome] += count;
    shots_ += count;
}

void ShotCounts::add(std::string_view bitstring, std::uint64_t count) { add(parse_bitstring(bitstring), count); }

std::uint64_t ShotCounts::count(std::uint64_t outcome) const {
    const auto it = counts_.find(outcome);
    return it == counts_.end() ? 0 : it->second;
}

std::string ShotCounts::bitstring(std::uint64_t outcome) const {
    std::string bits(num_qubits_, '0');
    for (std::size_t q = 0; q < num_qubits_; ++q) {
        if ((outcome >> q) & 1U) bits[num_qubits_ - 1 - q] = '1';
    }
    return bits;
}

std::uint64_t ShotCounts::parse_bitstring(std::string_view bitstring) const {
    if (bitstring.size() != num_qubits_) {
        throw DataError("bitstring '" + std::string(bitstring) + "' does not have " +
                        std::to_string(num_qubits_) + " character(s)");
    }
    std::uint64_t outcome = 0;
    for (std::size_t q = 0; q < num_qubits_; ++q) {
        const char c = bitstring[num_qubits_ - 1 - q];
        if (c == '1') {
            outcome |= std::uint64_t{1} << q;
        } else if (c != '0') {
            throw DataError("bitstring '" + std::string(bitstring) + "' has a non-binary character");
        }
    }
    return outcome;
}

double parity_mean(const ShotCounts& counts, std::span<const std::size_t> qubits) {
    if (counts.shots() == 0) throw DataError("no shots recorded");
    std::uint64_t mask = 0;
    for (std::size_t q : qubits) {
        if (q >= counts.num_qubits()) {
            throw DataError("qubit " + std::to_string(q) + " is outside the " +
                            std::to_string(counts.num_qubits()) + "-bit counts");
        }
        mask |= std::uint64_t{1} << q;
    }
    std::int64_t signed_total = 0;
    for (const auto& [outcome, n] : counts.counts()) {
        const bool odd = (std::popcount(outcome & mask) & 1) != 0;
        signed_total += odd ? -static_cast<std::int64_t>(n) : static_cast<std::int64_t>(n);
    }
    return static_cast<double>(signed_total) / static_cast<double>(counts.shots());
}

ShotCounts sample_measurements(const QuantumState& state, std::uint64_t shots, std::uint64_t seed) {
    Rng rng(seed);
    return sample_measurements(state, shots, rng);
}

ShotCounts sample_measurements(const QuantumState& state, std::uint64_t shots, Rng& rng) {
    if (shots == 0) throw DataError("shots must be positive");
    const auto probs = state.probabilities();
    std::vector<double> cumulative(probs.size());
    double running = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        running += probs[i];
        cumulative[i] = running;
    }
    if (std::abs(running - 1.0) > 1e-9) throw DataError("cannot sample from an unnormalized state");

    ShotCounts counts(state.num_qubits());
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform() * running;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        // Never land on a zero-probability outcome through rounding at the top end.
        while (it == cumulative.end() || probs[static_cast<std::size_t>(it - cumulative.begin())] == 0.0) {
            if (it == cumulative.begin()) break;
            --it;
        }
        counts.add(static_cast<std::uint64_t>(it - cumulative.begin()));
    }
    return counts;
}

}  // namespace nisq
