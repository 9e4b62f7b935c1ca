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

#include "nisq/pauli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "nisq/errors.hpp"

namespace nisq {

PauliString::PauliString(std::initializer_list<std::pair<const std::size_t, char>> ops) {
    for (const auto& [qubit, op] : ops) set(qubit, op);
}

PauliString PauliString::parse(std::string_view text) {
    PauliString out;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        if (token == "I") continue;
        const char op = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
        const std::string digits = token.substr(1);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                           [](unsigned char c) { return std::isdigit(c) != 0; })) {
            throw DataError("malformed Pauli factor '" + token + "'");
        }
        const std::size_t qubit = std::stoull(digits);
        if (out.at(qubit)) throw DataError("qubit " + digits + " repeated in Pauli string");
        out.set(qubit, op);
    }
    return out;
}

void PauliString::set(std::size_t qubit, char op) {
    if (op == 'I') {
        ops_.erase(qubit);
        return;
    }
    if (op != 'X' && op != 'Y' && op != 'Z') {
        throw DataError(std::string("not a Pauli operator: '") + op + "'");
    }
    ops_[qubit] = op;
}

std::optional<char> PauliString::at(std::size_t qubit) const {
    const auto it = ops_.find(qubit);
    if (it == ops_.end()) return std::nullopt;
    return it->second;
}

bool PauliString::only(char op) const {
    return std::all_of(ops_.begin(), ops_.end(), [op](const auto& kv) { return kv.second == op; });
}

std::vector<std::size_t> PauliString::support() const {
    std::vector<std::size_t> qubits;
    qubits.reserve(ops_.size());
    for (const auto& kv : ops_) qubits.push_back(kv.first);
    return qubits;
}

std::size_t PauliString::min_qubits() const { return ops_.empty() ? 0 : ops_.rbegin()->first + 1; }

std::string PauliString::to_string() const {
    std::string out;
    for (const auto& [qubit, op] : ops_) {
        if (!out.empty()) out += ' ';
        out += op;
        out += std::to_string(qubit);
    }
    return out;
}

PauliSum::PauliSum(std::initializer_list<PauliTerm> terms) {
    for (const auto& term : terms) add(term.coefficient, term.string);
}

void PauliSum::add(double coefficient, const PauliString& string) {
    if (!std::isfinite(coefficient)) throw DataError("Pauli coefficient must be finite");
    for (auto& term : terms_) {
        if (term.string == string) {
            term.coefficient += coefficient;
            return;
        }
    }
    terms_.push_back({coefficient, string});
}

void PauliSum::add(const PauliSum& other, double scale) {
    for (const auto& term : other.terms_) add(scale * term.coefficient, term.string);
}

double PauliSum::coefficient(const PauliString& string) const {
    for (const auto& term : terms_) {
        if (term.string == string) return term.coefficient;
    }
    return 0.0;
}

bool PauliSum::is_diagonal() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const PauliTerm& t) { return t.string.only('Z'); });
}

std::size_t PauliSum::min_qubits() const {
    std::size_t n = 0;
    for (const auto& term : terms_) n = std::max(n, term.string.min_qubits());
    return n;
}

PauliSum PauliSum::pruned(double tolerance) const {
    PauliSum out;
    for (const auto& term : terms_) {
        if (std::abs(term.coefficient) > tolerance) out.terms_.push_back(term);
    }
    return out;
}

void apply_pauli_string(QuantumState& state, const PauliString& string) {
    for (const auto& [qubit, op] : string.ops()) apply_pauli(state, qubit, op);
}

namespace {

Complex raw_expectation(const QuantumState& state, const PauliString& string) {
    if (string.min_qubits() > state.num_qubits()) {
        throw DataError("observable acts on qubit " + std::to_string(string.min_qubits() - 1) +
                        " outside a " + std::to_string(state.num_qubits()) + "-qubit state");
    }
    QuantumState image = state;
    apply_pauli_string(image, string);
    return state.inner(image);
}

}  // namespace

double expectation(const QuantumState& state, const PauliString& string) {
    const Complex value = raw_expectation(state, string);
    if (std::abs(value.imag()) > 1e-10) {
        throw std::logic_error("Pauli expectation has imaginary residue " + std::to_string(value.imag()));
    }
    return value.real();
}

double expectation(const QuantumState& state, const PauliSum& observable) {
    Complex total = 0.0;
    double mass = 0.0;
    for (const auto& term : observable.terms()) {
        total += term.coefficient * raw_expectation(state, term.string);
        mass += std::abs(term.coefficient);
    }
    if (std::abs(total.imag()) > 1e-10 * std::max(1.0, mass)) {
        throw std::logic_error("observable expectation has imaginary residue " + std::to_string(total.imag()));
    }
    return total.real();
}

}  // namespace nisq
