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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nisq/circuit.hpp"
#include "nisq/random.hpp"
#include "nisq/statevector.hpp"

namespace nisq {

/// Real dimension of the unit sphere in C^(2^Q): 2^(Q+1) - 1.
std::size_t dim_with_phase(std::size_t num_qubits);
/// Same with the global phase quotiented out: 2^(Q+1) - 2.
std::size_t dim_mod_phase(std::size_t num_qubits);

/// S_jl = Re<d_j C|d_l C> over an ordered parameter subset. Equals J^T J for
/// the real Jacobian that stacks real and imaginary parts of the tangents.
struct GramMatrix {
    std::vector<std::size_t> subset;
    Eigen::MatrixXd entries;

    std::size_t size() const noexcept { return subset.size(); }
    /// Ascending eigenvalues.
    Eigen::VectorXd eigenvalues() const;
};

GramMatrix gram_matrix(const ParametricCircuit& circuit, std::span<const double> params,
                       std::span<const std::size_t> subset);

/// Real Jacobian: column j holds (Re d_j C ; Im d_j C).
Eigen::MatrixXd real_jacobian(const ParametricCircuit& circuit, std::span<const double> params);

// ---------------------------------------------------------------------------
// Shot-noise estimation of Gram entries (simulated Hadamard test).
//
// Every generator insertion -iG is written as a sum of unitary insertions
// i*beta*U with real beta: a rotation contributes beta = -1/2 with U = P, a
// controlled rotation uses |1><1| = (I - Z_c)/2 and contributes
// (-1/4, P_t) and (+1/4, Z_c P_t). Then
//   Re<d_j C|d_l C> = sum_ab beta_a beta_b Re<psi_a|psi_b>
// and each Re<psi_a|psi_b> is a Hadamard test: a Bernoulli variable with
// success probability (1 + Re<psi_a|psi_b>) / 2.

struct OverlapSample {
    double weight = 0.0;  // beta_a * beta_b
    double exact = 0.0;   // Re<psi_a|psi_b>, kept for reference only
    std::uint64_t successes = 0;
    std::uint64_t shots = 0;

    double estimate() const { return 2.0 * static_cast<double>(successes) / static_cast<double>(shots) - 1.0; }
};

struct GramEntrySample {
    std::vector<OverlapSample> overlaps;

    double value() const;
    /// Binomial standard error of value().
    double standard_error() const;
};

GramEntrySample sample_gram_entry(const ParametricCircuit& circuit, std::span<const double> params,
                                  std::size_t j, std::size_t l, std::uint64_t shots, Rng& rng);

/// Unbiased shot-based estimate of Re<d_j C|d_l C>. For two single-occurrence
/// rotation parameters the standard error is at most 1/(4 sqrt(shots)).
double estimate_gram_entry(const ParametricCircuit& circuit, std::span<const double> params,
                           std::size_t j, std::size_t l, std::uint64_t shots, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Iterative classification.

enum class GramMode { Exact, Sampled };

struct ClassifyOptions {
    double epsilon = 1e-8;
    GramMode mode = GramMode::Exact;
    std::uint64_t shots = 8000;
    std::uint64_t seed = 0;
    /// Defaults to dim_with_phase(num_qubits).
    std::optional<std::size_t> dim_target;
    /// Stop once the independent count reaches the target; the remaining
    /// parameters are then redundant without a recorded eigenvalue.
    bool stop_at_target = false;
};

/// Default epsilon for sampled mode: five standard errors of a single-pair
/// entry estimate, 5 / (4 sqrt(shots)).
double sampled_epsilon(std::uint64_t shots);

struct ParameterVerdict {
    std::string param;
    bool independent = false;
    /// Smallest eigenvalue of S over {accepted independents, this parameter}.
    std::optional<double> min_eigenvalue;

    bool operator==(const ParameterVerdict&) const = default;
};

struct ExpressivityReport {
    std::vector<double> point;
    double epsilon = 0.0;
    GramMode mode = GramMode::Exact;
    std::uint64_t shots = 0;
    std::vector<ParameterVerdict> verdicts;
    std::size_t independent_count = 0;
    std::size_t dim_target = 0;
    bool maximally_expressive = false;
    /// Distinct Gram entries computed or estimated.
    std::size_t gram_entries = 0;

    std::vector<std::size_t> independent_indices() const;
    std::vector<std::size_t> redundant_indices() const;
    /// Values of the independent parameters at the evaluation point.
    std::vector<double> independent_point() const;

    bool operator==(const ExpressivityReport&) const = default;
};

/// Adds one parameter at a time: a candidate is redundant iff the smallest
/// eigenvalue of S over {accepted independents, candidate} is below epsilon.
/// Redundant parameters do not enter later matrices. The first parameter is
/// tested like every other one (S_1 = ||d_1 C||^2).
ExpressivityReport classify_parameters(const ParametricCircuit& circuit, std::span<const double> params,
                                       const ClassifyOptions& options = {});

/// Uniform draw in [0, 2pi) per parameter.
std::vector<double> random_point(std::size_t num_parameters, std::uint64_t seed);

/// Replaces redundant parameters by fixed-angle gates (default angle 0).
/// The reduced circuit's parameter order is the independent subsequence.
/// Throws DataError when a freeze value names an independent or unknown
/// parameter, or the report does not match the circuit.
ParametricCircuit remove_redundant(const ParametricCircuit& circuit, const ExpressivityReport& report,
                                   const std::map<std::string, double>& freeze_values = {});

struct SymmetryRemoval {
    ParametricCircuit circuit;
    /// Verdicts over the original parameters only; dim_target is reduced by
    /// the number of independent symmetry parameters.
    ExpressivityReport report;
};

/// Prepends `symmetry` (whose parameters must not clash with `circuit`'s),
/// classifies the symmetry parameters first, then strips them along with
/// every original parameter found redundant.
SymmetryRemoval remove_symmetry(const ParametricCircuit& symmetry, const ParametricCircuit& circuit,
                                std::span<const double> params, const ClassifyOptions& options = {});

/// remove_symmetry with a single R_Z(phi) on qubit 0 acting on |0...0>,
/// which generates exactly the global phase.
SymmetryRemoval remove_phase_symmetry(const ParametricCircuit& circuit, std::span<const double> params,
                                      const ClassifyOptions& options = {});

/// Candidate minimal maximally expressive circuit on `num_qubits` qubits.
/// Q = 1 is R_Y(t3) R_Z(t2) R_X(t1)|0>. Q + 1 appends to the Q-qubit
/// candidate a uniformly controlled R_Y and a uniformly controlled R_Z on
/// the new qubit, controlled by the existing ones (2^Q free angles each,
/// CNOT ladders in Gray-code order). Without phase, the global phase is then
/// removed. The candidate is validated by classification at a seeded generic
/// point; std::runtime_error if that fails.
ParametricCircuit inductive_ansatz(std::size_t num_qubits, bool include_phase = true, std::uint64_t seed = 7);

/// Hardware-efficient 2-local layout: `reps` + 1 layers of R_Y and R_Z on
/// every qubit separated by linear CNOT chains.
ParametricCircuit efficient_su2(std::size_t num_qubits, std::size_t reps);

/// min over global phase of || a - e^{i alpha} b || = sqrt(2 - 2|<a|b>|)
/// for normalized states.
double phase_distance(const QuantumState& a, const QuantumState& b);

struct ApproximationBounds {
    double lower = 0.0;
    double upper = 0.0;
};

struct BoundsOptions {
    std::size_t max_iterations = 200;
    double tolerance = 1e-10;
};

/// Sampling estimate of the worst-case best-approximation error. Sites are
/// circuit states at random parameter draws. `upper` is the maximum over
/// targets of the distance to the nearest site; `lower` the maximum over
/// targets of the distance after local coordinate search started at the
/// nearest site. lower <= upper always.
ApproximationBounds best_approximation_bounds(const ParametricCircuit& circuit, std::size_t n_sites,
                                              std::size_t n_targets, std::uint64_t seed,
                                              const BoundsOptions& options = {});
/// Same with explicit target states.
ApproximationBounds best_approximation_bounds(const ParametricCircuit& circuit,
                                              std::span<const QuantumState> targets, std::size_t n_sites,
                                              std::uint64_t seed, const BoundsOptions& options = {});

}  // namespace nisq
