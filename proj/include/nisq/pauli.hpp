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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nisq/statevector.hpp"

namespace nisq {

/// Tensor product of Pauli operators; qubits absent from the map carry the
/// identity. Letters are 'X', 'Y' or 'Z'.
class PauliString {
  public:
    PauliString() = default;
    PauliString(std::initializer_list<std::pair<const std::size_t, char>> ops);

    /// Parses "Z0 Z1", "X3", or "" / "I" for the identity.
    static PauliString parse(std::string_view text);

    void set(std::size_t qubit, char op);
    std::optional<char> at(std::size_t qubit) const;

    const std::map<std::size_t, char>& ops() const noexcept { return ops_; }
    std::size_t weight() const noexcept { return ops_.size(); }
    bool is_identity() const noexcept { return ops_.empty(); }
    /// True when every factor is `op`.
    bool only(char op) const;
    /// Support qubits in increasing order.
    std::vector<std::size_t> support() const;
    /// Smallest register that holds the string.
    std::size_t min_qubits() const;

    std::string to_string() const;

    auto operator<=>(const PauliString&) const = default;

  private:
    std::map<std::size_t, char> ops_;
};

struct PauliTerm {
    double coefficient = 0.0;
    PauliString string;

    bool operator==(const PauliTerm&) const = default;
};

/// Real-weighted sum of distinct Pauli strings.
class PauliSum {
  public:
    PauliSum() = default;
    PauliSum(std::initializer_list<PauliTerm> terms);

    /// Adds `coefficient * string`, merging with an existing equal string.
    /// Throws DataError on a non-finite coefficient.
    void add(double coefficient, const PauliString& string);
    void add(const PauliSum& other, double scale = 1.0);

    const std::vector<PauliTerm>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    /// Coefficient of `string`, zero when absent.
    double coefficient(const PauliString& string) const;
    /// Only Z factors and identities.
    bool is_diagonal() const;
    std::size_t min_qubits() const;

    /// Copy without terms whose |coefficient| <= tolerance.
    PauliSum pruned(double tolerance = 0.0) const;

    bool operator==(const PauliSum&) const = default;

  private:
    std::vector<PauliTerm> terms_;
};

/// Applies `string` to `state` in place.
void apply_pauli_string(QuantumState& state, const PauliString& string);

/// <psi|O|psi>. Throws DataError on dimension mismatch and std::logic_error
/// if the imaginary residue exceeds 1e-10 (relative to the coefficient mass).
double expectation(const QuantumState& state, const PauliSum& observable);
double expectation(const QuantumState& state, const PauliString& string);

}  // namespace nisq
