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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nisq/circuit.hpp"
#include "nisq/errors.hpp"
#include "nisq/haar.hpp"
#include "nisq/pauli.hpp"
#include "nisq/sampling.hpp"
#include "nisq/statevector.hpp"
#include "oracles.hpp"

using namespace nisq;
using std::numbers::pi;

namespace {

double max_diff(const QuantumState& a, const oracle::CVec& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dimension(); ++i) worst = std::max(worst, std::abs(a[i] - b(Eigen::Index(i))));
    return worst;
}

}  // namespace

TEST_CASE("circuit construction rejects invalid gates") {
    ParametricCircuit c(2);
    CHECK_THROWS_AS(c.add(GateKind::RX, {2}, "a"), DataError);
    CHECK_THROWS_AS(c.add(GateKind::CNOT, {1, 1}), DataError);
    CHECK_THROWS_AS(c.add(GateKind::CRX, {0}, "a"), DataError);
    CHECK_THROWS_AS(parse_gate_kind("toffoli"), DataError);
    CHECK_THROWS_AS(ParametricCircuit(0), DataError);
    c.add_parameter("unused");
    CHECK_THROWS_AS(c.validate(), DataError);
}

TEST_CASE("gate names round trip") {
    for (auto kind : {GateKind::RX, GateKind::RY, GateKind::RZ, GateKind::CRX, GateKind::CRY, GateKind::CRZ,
                      GateKind::CNOT, GateKind::H, GateKind::X, GateKind::Z}) {
        CHECK(parse_gate_kind(gate_name(kind)) == kind);
    }
}

TEST_CASE("single gates match the 2x2 reference matrices") {
    Rng rng(11);
    const GateKind kinds[] = {GateKind::RX, GateKind::RY, GateKind::RZ, GateKind::H, GateKind::X, GateKind::Z};
    for (auto kind : kinds) {
        for (std::size_t q = 0; q < 3; ++q) {
            ParametricCircuit c(3);
            // Scramble the input so every amplitude matters.
            for (std::size_t k = 0; k < 3; ++k) c.add(GateKind::RY, {k}, 0.3 + k).add(GateKind::RZ, {k}, 1.1 * k + 0.2);
            c.add(GateKind::CNOT, {0, 2});
            if (is_rotation(kind)) {
                c.add(kind, {q}, rng.uniform(0, 2 * pi));
            } else {
                c.add(kind, {q});
            }
            CHECK(max_diff(evaluate_circuit(c, {}), oracle::dense_state(c, {})) < 1e-13);
        }
    }
}

TEST_CASE("controlled rotations act only when the control is set") {
    for (auto kind : {GateKind::CRX, GateKind::CRY, GateKind::CRZ}) {
        ParametricCircuit off(2);
        off.add(kind, {0, 1}, 1.3);
        CHECK(std::abs(evaluate_circuit(off, {})[0] - 1.0) < 1e-15);

        ParametricCircuit on(2);
        on.add(GateKind::H, {0}).add(GateKind::RY, {1}, 0.4).add(kind, {0, 1}, 1.3).add(kind, {1, 0}, -0.8);
        CHECK(max_diff(evaluate_circuit(on, {}), oracle::dense_state(on, {})) < 1e-13);
    }
}

TEST_CASE("rx tangent at zero") {
    ParametricCircuit c(1);
    c.add(GateKind::RX, {0}, "t");
    const std::vector<double> p{0.0};
    const auto t = tangent_vector(c, p, 0);
    CHECK(std::abs(t[0]) < 1e-15);
    CHECK(std::abs(t[1] - Complex(0, -0.5)) < 1e-15);
}

TEST_CASE("single-occurrence rotation tangents have norm 1/2") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto c = oracle::random_circuit(rng, 3, 6, false);
        // Keep only circuits whose parameters occur once.
        bool single = true;
        for (std::size_t j = 0; j < c.num_parameters(); ++j) single &= c.occurrences(j).size() == 1;
        if (!single) continue;
        const auto p = oracle::random_params(rng, c.num_parameters());
        for (std::size_t j = 0; j < c.num_parameters(); ++j) CHECK(tangent_vector(c, p, j).norm() == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("tangent_vector rejects a bad index and a bad parameter count") {
    ParametricCircuit c(1);
    c.add(GateKind::RX, {0}, "t");
    const std::vector<double> p{0.1};
    CHECK_THROWS(tangent_vector(c, p, 1));
    CHECK_THROWS_AS(evaluate_circuit(c, std::vector<double>{}), DataError);
}

TEST_CASE("property: circuit outputs are normalized") {
    Rng rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        const auto c = oracle::random_circuit(rng, 4, 12);
        const auto p = oracle::random_params(rng, c.num_parameters());
        CHECK(std::abs(evaluate_circuit(c, p).norm() - 1.0) < 1e-12);
    }
}

TEST_CASE("property: simulator agrees with the dense reference") {
    Rng rng(102);
    for (int trial = 0; trial < 60; ++trial) {
        const auto c = oracle::random_circuit(rng, 4, 12);
        const auto p = oracle::random_params(rng, c.num_parameters());
        CHECK(max_diff(evaluate_circuit(c, p), oracle::dense_state(c, p)) < 1e-12);
    }
}

TEST_CASE("property: tangents agree with central differences") {
    Rng rng(103);
    double worst = 0.0;
    for (int trial = 0; trial < 60; ++trial) {
        const auto c = oracle::random_circuit(rng, 4, 12);
        const auto p = oracle::random_params(rng, c.num_parameters());
        const auto all = tangent_vectors(c, p);
        for (std::size_t j = 0; j < c.num_parameters(); ++j) {
            const double d = max_diff(all[j], oracle::fd_tangent(c, p, j, 1e-5));
            worst = std::max(worst, d);
            CHECK(max_diff(tangent_vector(c, p, j), oracle::fd_tangent(c, p, j, 1e-5)) < 1e-8);
        }
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("property: composition") {
    Rng rng(104);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = oracle::random_circuit(rng, 3, 5);
        ParametricCircuit b(a.num_qubits());
        b.add(GateKind::RY, {0}, "q").add(GateKind::RX, {a.num_qubits() - 1}, "p0");
        const auto ab = a.concatenated(b);
        const auto p = oracle::random_params(rng, ab.num_parameters());

        const std::vector<double> pa(p.begin(), p.begin() + static_cast<long>(a.num_parameters()));
        auto state = evaluate_circuit(a, pa);
        std::vector<double> pb(b.num_parameters());
        for (std::size_t j = 0; j < b.num_parameters(); ++j) pb[j] = p[*ab.parameter_index(b.parameter_names()[j])];
        apply_circuit(state, b, pb);
        CHECK(max_diff(state, oracle::dense_state(ab, p)) < 1e-12);
    }
}

TEST_CASE("expectation values") {
    QuantumState zero(1);
    CHECK(expectation(zero, PauliString::parse("Z0")) == doctest::Approx(1.0));
    QuantumState plus({Complex(1 / std::sqrt(2.0)), Complex(1 / std::sqrt(2.0))});
    CHECK(std::abs(expectation(plus, PauliString::parse("Z0"))) < 1e-15);
    CHECK(expectation(plus, PauliString::parse("X0")) == doctest::Approx(1.0));

    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto psi = haar_random_state(1, rng);
        const double c1 = std::norm(psi[0]), c2 = std::norm(psi[1]);
        CHECK(expectation(psi, PauliString::parse("Z0")) == doctest::Approx(c1 - c2).epsilon(1e-12));
    }
}

TEST_CASE("property: Pauli expectations match dense matrices") {
    Rng rng(105);
    const char ops[] = {'X', 'Y', 'Z'};
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng.below(3);
        const auto psi = haar_random_state(n, rng);
        PauliString s;
        oracle::CMat m = oracle::CMat::Identity(Eigen::Index(1) << n, Eigen::Index(1) << n);
        for (std::size_t q = 0; q < n; ++q) {
            if (rng.uniform() < 0.3) continue;
            const char op = ops[rng.below(3)];
            s.set(q, op);
            Gate g{op == 'X' ? GateKind::X : op == 'Z' ? GateKind::Z : GateKind::RY, {q}, {}, 0.0};
            if (op == 'Y') {
                // Y = i X Z
                Gate x{GateKind::X, {q}, {}, 0.0}, z{GateKind::Z, {q}, {}, 0.0};
                m = oracle::gate_operator(x, 0, n) * oracle::gate_operator(z, 0, n) * m * Complex(0, 1);
            } else {
                m = oracle::gate_operator(g, 0, n) * m;
            }
        }
        oracle::CVec v(psi.dimension());
        for (std::size_t i = 0; i < psi.dimension(); ++i) v(Eigen::Index(i)) = psi[i];
        const double ref = (v.adjoint() * m * v)(0).real();
        CHECK(expectation(psi, s) == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("Pauli strings parse and print") {
    const auto s = PauliString::parse("Z0 X3");
    CHECK(s.to_string() == "Z0 X3");
    CHECK(s.weight() == 2);
    CHECK(s.min_qubits() == 4);
    CHECK(PauliString::parse("I").is_identity());
    CHECK(PauliString::parse("").is_identity());
    CHECK_THROWS_AS(PauliString::parse("Q1"), DataError);
    CHECK_THROWS_AS(PauliString::parse("Z0 X0"), DataError);

    PauliSum h;
    h.add(1.0, PauliString::parse("Z0 Z1"));
    h.add(0.5, PauliString::parse("Z1 Z0"));
    CHECK(h.size() == 1);
    CHECK(h.coefficient(PauliString::parse("Z0 Z1")) == 1.5);
}

TEST_CASE("sampling basics") {
    const auto zero = sample_measurements(QuantumState(1), 1000, 1);
    CHECK(zero.count(0) == 1000);
    CHECK(zero.shots() == 1000);

    QuantumState plus({Complex(1 / std::sqrt(2.0)), Complex(1 / std::sqrt(2.0))});
    const auto counts = sample_measurements(plus, 1'000'000, 7);
    const double freq = static_cast<double>(counts.count(1)) / 1e6;
    CHECK(std::abs(freq - 0.5) < 5 * std::sqrt(0.25 / 1e6));

    QuantumState bell({Complex(1 / std::sqrt(2.0)), 0, 0, Complex(1 / std::sqrt(2.0))});
    const auto bc = sample_measurements(bell, 1'000'000, 8);
    CHECK(bc.count(0) + bc.count(3) == 1'000'000);

    CHECK_THROWS_AS(sample_measurements(plus, 0, 1), DataError);
    CHECK(sample_measurements(plus, 5000, 99) == sample_measurements(plus, 5000, 99));
}

TEST_CASE("bitstrings are little-endian") {
    ShotCounts counts(3);
    counts.add("001", 4);
    CHECK(counts.count(1) == 4);
    CHECK(counts.bitstring(4) == "100");
    CHECK_THROWS_AS(counts.add("01", 1), DataError);
    CHECK_THROWS_AS(counts.add("0a1", 1), DataError);
}

TEST_CASE("property: sampled frequencies converge like 1/sqrt(s)") {
    Rng rng(106);
    for (int trial = 0; trial < 10; ++trial) {
        const auto psi = haar_random_state(2, rng);
        const auto probs = psi.probabilities();
        for (std::uint64_t shots : {1000u, 100000u}) {
            const auto counts = sample_measurements(psi, shots, rng);
            for (std::uint64_t x = 0; x < 4; ++x) {
                const double sigma = std::sqrt(probs[x] * (1 - probs[x]) / static_cast<double>(shots));
                CHECK(std::abs(static_cast<double>(counts.count(x)) / static_cast<double>(shots) - probs[x]) <= 5 * sigma + 1e-12);
            }
        }
    }
}

TEST_CASE("Haar states") {
    CHECK(haar_random_state(3, 1).norm() == doctest::Approx(1.0).epsilon(1e-12));
    const auto a = haar_random_state(2, 5), b = haar_random_state(2, 5), c = haar_random_state(2, 6);
    CHECK(std::equal(a.amplitudes().begin(), a.amplitudes().end(), b.amplitudes().begin()));
    CHECK(!std::equal(a.amplitudes().begin(), a.amplitudes().end(), c.amplitudes().begin()));

    Rng rng(77);
    const int draws = 100000;
    double sum = 0.0, sum2 = 0.0;
    for (int k = 0; k < draws; ++k) {
        const double z = expectation(haar_random_state(1, rng), PauliString::parse("Z0"));
        sum += z;
        sum2 += z * z;
    }
    const double mean = sum / draws, var = sum2 / draws - mean * mean;
    CHECK(std::abs(mean) < 5 * std::sqrt(var / draws));
    // <Z^2> over the Bloch sphere is 1/3.
    CHECK(std::abs(var - 1.0 / 3.0) < 0.01);
}

TEST_CASE("Haar distribution is invariant under a fixed unitary") {
    // Compare <X> moments after a random fixed rotation with <Z> moments.
    ParametricCircuit u(1);
    u.add(GateKind::RY, {0}, 1.1).add(GateKind::RZ, {0}, 0.4);
    Rng rng(78);
    const int draws = 50000;
    double z2 = 0.0, uz2 = 0.0, uz = 0.0;
    for (int k = 0; k < draws; ++k) {
        auto psi = haar_random_state(1, rng);
        z2 += std::pow(expectation(psi, PauliString::parse("Z0")), 2);
        apply_circuit(psi, u, {});
        const double e = expectation(psi, PauliString::parse("Z0"));
        uz += e;
        uz2 += e * e;
    }
    CHECK(std::abs(uz / draws) < 5 * std::sqrt(1.0 / 3.0 / draws));
    CHECK(std::abs(uz2 / draws - z2 / draws) < 0.01);
}

TEST_CASE("RNG streams are deterministic and distinct") {
    Rng a = Rng::stream(1, 0), b = Rng::stream(1, 0), c = Rng::stream(1, 1);
    for (int k = 0; k < 10; ++k) {
        const auto x = a.next_u64();
        CHECK(x == b.next_u64());
        CHECK(x != c.next_u64());
    }
    Rng u(9);
    for (int k = 0; k < 1000; ++k) {
        const double v = u.uniform();
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
    }
}
