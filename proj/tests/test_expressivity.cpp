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

#include "nisq/errors.hpp"
#include "nisq/expressivity.hpp"
#include "nisq/haar.hpp"
#include "oracles.hpp"

using namespace nisq;
using std::numbers::pi;

namespace {

ParametricCircuit ryrzrx() {
    // R_Y(t3) R_Z(t2) R_X(t1)|0>, rightmost first.
    ParametricCircuit c(1);
    c.add(GateKind::RX, {0}, "t1").add(GateKind::RZ, {0}, "t2").add(GateKind::RY, {0}, "t3");
    return c;
}

ParametricCircuit rxrx() {
    ParametricCircuit c(1);
    c.add(GateKind::RX, {0}, "t1").add(GateKind::RX, {0}, "t2");
    return c;
}

std::size_t rank_of(const ParametricCircuit& c, std::span<const double> p) {
    return oracle::numerical_rank(oracle::fd_jacobian(c, p));
}

/// Rank of the finite-difference Jacobian with the global-phase direction
/// i|psi> projected out.
std::size_t rank_mod_phase(const ParametricCircuit& c, std::span<const double> p) {
    Eigen::MatrixXd jac = oracle::fd_jacobian(c, p);
    const oracle::CVec psi = oracle::dense_state(c, p);
    Eigen::VectorXd phase(jac.rows());
    phase << -psi.imag(), psi.real();
    phase.normalize();
    for (Eigen::Index k = 0; k < jac.cols(); ++k) jac.col(k) -= phase.dot(jac.col(k)) * phase;
    return oracle::numerical_rank(jac);
}

}  // namespace

TEST_CASE("state space dimensions") {
    CHECK(dim_with_phase(1) == 3);
    CHECK(dim_mod_phase(1) == 2);
    CHECK(dim_with_phase(3) == 15);
    CHECK(dim_mod_phase(2) == 6);
}

TEST_CASE("Gram matrix examples") {
    ParametricCircuit one(1);
    one.add(GateKind::RY, {0}, "a");
    const std::vector<double> p1{0.7};
    const std::vector<std::size_t> s1{0};
    CHECK(gram_matrix(one, p1, s1).entries(0, 0) == doctest::Approx(0.25).epsilon(1e-14));

    const std::vector<double> p2{0.3, 1.9};
    const std::vector<std::size_t> s2{0, 1};
    const auto g = gram_matrix(rxrx(), p2, s2);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) CHECK(g.entries(r, c) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(std::abs(g.entries.determinant()) < 1e-15);
    CHECK_THROWS(gram_matrix(rxrx(), p2, std::vector<std::size_t>{2}));
}

TEST_CASE("property: Gram matrix equals J^T J from finite differences") {
    Rng rng(201);
    for (int trial = 0; trial < 60; ++trial) {
        const auto c = oracle::random_circuit(rng, 3, 10);
        const auto p = oracle::random_params(rng, c.num_parameters());
        std::vector<std::size_t> all(c.num_parameters());
        for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
        const auto g = gram_matrix(c, p, all);
        const Eigen::MatrixXd jac = oracle::fd_jacobian(c, p);
        const Eigen::MatrixXd ref = jac.transpose() * jac;
        CHECK((g.entries - ref).cwiseAbs().maxCoeff() < 1e-7);
        CHECK((g.entries - g.entries.transpose()).cwiseAbs().maxCoeff() < 1e-10);
        CHECK(g.eigenvalues().minCoeff() >= -1e-9);
        // Same entries from the library's own real Jacobian.
        const Eigen::MatrixXd rj = real_jacobian(c, p);
        CHECK((rj.transpose() * rj - g.entries).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("Hadamard-test estimates") {
    const std::vector<double> p{0.3, 1.9};
    const double sigma = 1.0 / (4.0 * std::sqrt(8000.0));
    CHECK(std::abs(estimate_gram_entry(rxrx(), p, 0, 1, 8000, 1) - 0.25) < 5 * sigma);
    CHECK(estimate_gram_entry(rxrx(), p, 0, 0, 1'000'000, 2) == doctest::Approx(0.25).epsilon(1e-12));

    ParametricCircuit ortho(2);
    ortho.add(GateKind::RX, {0}, "a").add(GateKind::RX, {1}, "b");
    const std::vector<double> zero{0.0, 0.0};
    CHECK(std::abs(estimate_gram_entry(ortho, zero, 0, 1, 8000, 3)) < 5 * sigma);
    CHECK_THROWS(estimate_gram_entry(ortho, zero, 0, 1, 0, 3));
}

TEST_CASE("property: Hadamard-test estimates are unbiased, controlled gates included") {
    Rng rng(202);
    for (int trial = 0; trial < 20; ++trial) {
        const auto c = oracle::random_circuit(rng, 3, 5);
        const auto p = oracle::random_params(rng, c.num_parameters());
        const std::size_t j = rng.below(c.num_parameters()), l = rng.below(c.num_parameters());
        const std::vector<std::size_t> sub{j, l};
        const double exact = gram_matrix(c, p, sub).entries(0, 1);
        Rng local(trial);
        const auto sample = sample_gram_entry(c, p, j, l, 20000, local);
        const double se = sample.standard_error();
        CHECK(std::abs(sample.value() - exact) <= 5 * se + 1e-12);
        // Each pair's exact overlap reproduces the entry.
        double recombined = 0.0;
        for (const auto& o : sample.overlaps) recombined += o.weight * o.exact;
        CHECK(recombined == doctest::Approx(exact).epsilon(1e-12));
    }
}

TEST_CASE("classification examples") {
    const auto p = random_point(3, 1);
    const auto r = classify_parameters(ryrzrx(), p, {.dim_target = dim_with_phase(1)});
    CHECK(r.independent_count == 3);
    CHECK(r.maximally_expressive);
    CHECK(r.dim_target == 3);

    const auto r2 = classify_parameters(rxrx(), random_point(2, 2));
    CHECK(r2.independent_count == 1);
    REQUIRE(r2.verdicts.size() == 2);
    CHECK(r2.verdicts[0].independent);
    CHECK_FALSE(r2.verdicts[1].independent);
    CHECK(*r2.verdicts[1].min_eigenvalue < 1e-10);
    CHECK(r2.redundant_indices() == std::vector<std::size_t>{1});
}

TEST_CASE("Fig. 2 style ansatz: independents equal the Jacobian rank") {
    const auto c = efficient_su2(3, 1);
    CHECK(c.num_parameters() == 12);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const auto p = random_point(c.num_parameters(), seed);
        const auto r = classify_parameters(c, p);
        CHECK(r.independent_count == rank_of(c, p));

        const auto pruned = remove_redundant(c, r);
        const auto again = classify_parameters(pruned, r.independent_point());
        CHECK(again.independent_count == r.independent_count);
        CHECK(again.redundant_indices().empty());
    }
}

TEST_CASE("property: rank consistency, coverage, monotonicity, idempotent pruning") {
    Rng rng(203);
    for (int trial = 0; trial < 60; ++trial) {
        const auto c = oracle::random_circuit(rng, 3, 10);
        const auto p = oracle::random_params(rng, c.num_parameters());
        const auto r = classify_parameters(c, p);
        CHECK(r.independent_count == rank_of(c, p));
        CHECK(r.verdicts.size() == c.num_parameters());
        for (std::size_t j = 0; j < c.num_parameters(); ++j) {
            CHECK(r.verdicts[j].param == c.parameter_names()[j]);
            REQUIRE(r.verdicts[j].min_eigenvalue.has_value());
            CHECK(*r.verdicts[j].min_eigenvalue >= -1e-9);
        }
        CHECK(r.independent_count <= std::min(c.num_parameters(), dim_with_phase(c.num_qubits())));

        const auto pruned = remove_redundant(c, r);
        CHECK(pruned.num_parameters() == r.independent_count);
        const auto again = classify_parameters(pruned, r.independent_point());
        CHECK(again.redundant_indices().empty());
    }
}

TEST_CASE("property: sampled classification agrees with exact on single-qubit examples") {
    const std::uint64_t shots = 8000;
    int agree = 0, total = 0;
    for (const auto& c : {ryrzrx(), rxrx()}) {
        // Trials vary the shot noise at fixed generic points.
        for (std::uint64_t point = 1; point <= 4; ++point) {
            const auto p = random_point(c.num_parameters(), point);
            const auto exact = classify_parameters(c, p);
            for (std::uint64_t seed = 0; seed < 10; ++seed) {
                const auto sampled = classify_parameters(
                    c, p, {.epsilon = sampled_epsilon(shots), .mode = GramMode::Sampled, .shots = shots, .seed = seed});
                CHECK(sampled.mode == GramMode::Sampled);
                agree += exact.independent_indices() == sampled.independent_indices();
                ++total;
            }
        }
    }
    CHECK(static_cast<double>(agree) >= 0.95 * total);
}

TEST_CASE("remove_redundant") {
    const std::vector<double> p{0.4, 1.3};
    const auto r = classify_parameters(rxrx(), p);
    const auto frozen = remove_redundant(rxrx(), r, {{"t2", 1.3}});
    CHECK(frozen.num_parameters() == 1);
    CHECK(frozen.parameter_names() == std::vector<std::string>{"t1"});
    const auto a = evaluate_circuit(rxrx(), p), b = evaluate_circuit(frozen, r.independent_point());
    for (std::size_t i = 0; i < 2; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-14);

    CHECK_THROWS_AS(remove_redundant(rxrx(), r, {{"t1", 0.0}}), DataError);
    CHECK_THROWS_AS(remove_redundant(rxrx(), r, {{"nope", 0.0}}), DataError);

    // Reachable sets agree: every state of rx(a) rx(b) lies on rx(a) rx(0).
    const auto zero = remove_redundant(rxrx(), r);
    double worst = 0.0;
    for (int i = 0; i < 40; ++i) {
        for (int k = 0; k < 40; ++k) {
            const std::vector<double> q{2 * pi * i / 40, 2 * pi * k / 40};
            const auto target = evaluate_circuit(rxrx(), q);
            double best = 10.0;
            for (int g = 0; g < 4000; ++g) {
                const std::vector<double> t{4 * pi * g / 4000};
                best = std::min(best, phase_distance(target, evaluate_circuit(zero, t)));
            }
            worst = std::max(worst, best);
        }
    }
    CHECK(worst < 2e-3);
}

TEST_CASE("phase symmetry removal") {
    const auto p = random_point(3, 4);
    const auto removed = remove_phase_symmetry(ryrzrx(), p);
    CHECK(removed.report.independent_count == 2);
    CHECK(removed.report.dim_target == dim_mod_phase(1));
    CHECK(removed.report.maximally_expressive);
    CHECK(removed.circuit.num_parameters() == 2);
    CHECK(rank_mod_phase(ryrzrx(), p) == 2);
    CHECK(rank_mod_phase(removed.circuit, removed.report.independent_point()) == 2);

    // rz on a qubit still in |0> only contributes a global phase.
    ParametricCircuit c(2);
    c.add(GateKind::RY, {0}, "a").add(GateKind::RZ, {1}, "b");
    const std::vector<double> q{0.8, 1.7};
    const auto r = remove_phase_symmetry(c, q);
    CHECK(r.report.verdicts[0].independent);
    CHECK_FALSE(r.report.verdicts[1].independent);
    CHECK(r.circuit.num_parameters() == 1);

    const ParametricCircuit empty(1);
    const auto e = remove_phase_symmetry(empty, std::vector<double>{});
    CHECK(e.circuit == empty);
    CHECK(e.report.verdicts.empty());
}

TEST_CASE("inductive ansatz") {
    for (std::size_t q = 1; q <= 3; ++q) {
        const auto c = inductive_ansatz(q);
        CHECK(c.num_qubits() == q);
        CHECK(c.num_parameters() == dim_with_phase(q));
        for (std::uint64_t seed = 11; seed < 14; ++seed) {
            const auto p = random_point(c.num_parameters(), seed);
            const auto r = classify_parameters(c, p, {.dim_target = dim_with_phase(q)});
            CHECK(r.independent_count == dim_with_phase(q));
            CHECK(r.maximally_expressive);
            CHECK(rank_of(c, p) == dim_with_phase(q));
        }
        const auto np = inductive_ansatz(q, false);
        CHECK(np.num_parameters() == dim_mod_phase(q));
        const auto p = random_point(np.num_parameters(), 21);
        CHECK(rank_mod_phase(np, p) == dim_mod_phase(q));
    }
    CHECK(inductive_ansatz(1) == ryrzrx());
}

TEST_CASE("best-approximation bounds") {
    const auto full = best_approximation_bounds(ryrzrx(), 64, 8, 3);
    CHECK(full.lower < 1e-3);
    CHECK(full.lower <= full.upper);

    ParametricCircuit rx(1);
    rx.add(GateKind::RX, {0}, "t");
    Rng rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<QuantumState> targets{trial == 0 ? QuantumState({Complex(1 / std::sqrt(2.0)), Complex(1 / std::sqrt(2.0))})
                                                     : haar_random_state(1, rng)};
        const auto b = best_approximation_bounds(rx, targets, 16, 100 + trial);
        // Dense grid over the angle; the phase is minimized in closed form
        // and cross-checked on a phase grid for the best angle.
        double grid = 10.0, best_angle = 0.0;
        for (int g = 0; g < 200000; ++g) {
            const double t = 4 * pi * g / 200000;
            const std::vector<double> tp{t};
            const double d = phase_distance(targets[0], evaluate_circuit(rx, tp));
            if (d < grid) grid = d, best_angle = t;
        }
        const auto s = evaluate_circuit(rx, std::vector<double>{best_angle});
        double phase_grid = 10.0;
        for (int k = 0; k < 20000; ++k) {
            const Complex ph = std::polar(1.0, 2 * pi * k / 20000);
            const double d = std::sqrt(std::norm(targets[0][0] - ph * s[0]) + std::norm(targets[0][1] - ph * s[1]));
            phase_grid = std::min(phase_grid, d);
        }
        CHECK(phase_grid == doctest::Approx(grid).epsilon(1e-6));
        CHECK(b.lower <= b.upper);
        CHECK(b.lower >= grid - 1e-6);
        CHECK(b.lower <= grid + 1e-6);
        CHECK(b.upper >= grid - 1e-9);
    }

    const auto single = best_approximation_bounds(rx, 1, 4, 9);
    CHECK(single.upper >= single.lower);
}
