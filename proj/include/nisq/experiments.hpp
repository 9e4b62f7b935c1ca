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
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nisq/circuit.hpp"
#include "nisq/haar.hpp"
#include "nisq/ising.hpp"
#include "nisq/optimize.hpp"
#include "nisq/pauli.hpp"
#include "nisq/readout.hpp"

namespace nisq {

// ---------------------------------------------------------------------------
// Energy histogram under readout noise.

struct HistogramConfig {
    TransverseIsingModel model;
    ReadoutNoiseModel noise;
    std::size_t experiments = 2048;
    /// Shots per measurement setting; an experiment uses 2 * shots in total.
    std::uint64_t shots = 2048;
    std::uint64_t seed = 1;
    /// Mitigate with a fresh calibration per experiment (true) or with the
    /// true noise model (false).
    bool calibrated = true;
    std::uint64_t calibration_shots = 8192;
    std::size_t bins = 40;
    /// Prepare this state instead of the exact ground state.
    std::optional<QuantumState> prepared_state;
};

struct HistogramResult {
    std::vector<double> noisy_energies;
    std::vector<double> mitigated_energies;
    double exact_energy = 0.0;
    /// <prepared|H|prepared>; equals exact_energy for the exact ground state.
    double noiseless_energy = 0.0;
    /// Termwise gamma-damped exact expectations.
    double predicted_mean = 0.0;
    /// Per-shot noisy outcome variance of the estimator, scaled by 1/shots.
    double predicted_std = 0.0;
    /// Gaussian fit (sample mean and standard deviation) of noisy_energies.
    double fitted_mean = 0.0;
    double fitted_std = 0.0;
    std::vector<double> bin_edges;
    std::vector<std::size_t> bin_counts;
};

HistogramResult histogram_experiment(const HistogramConfig& config);

/// Outcome distribution after independent readout flips.
std::vector<double> noisy_distribution(std::span<const double> probabilities, const ReadoutNoiseModel& model);

// ---------------------------------------------------------------------------
// Error scaling with the number of shots.

struct PowerLawFit {
    double a = 0.0;
    double beta = 0.0;
};

/// All points, or the `lowest_k` points with the smallest s.
struct FitSubset {
    std::optional<std::size_t> lowest_k;
};

/// Least squares of log(error) on log(s) for error = a s^-beta. Throws
/// DataError with fewer than two points or a nonpositive coordinate.
PowerLawFit power_law_fit(std::span<const std::pair<double, double>> points, FitSubset subset = {});

struct ScalingConfig {
    std::size_t num_states = 1024;
    std::vector<std::uint64_t> shots_grid;  ///< defaults to 2^4 ... 2^13
    ReadoutNoiseModel noise = ReadoutNoiseModel::uniform(2, 0.05);
    std::uint64_t seed = 1;
    /// Fresh calibration per run with this many shots; 0 means "same as s".
    std::uint64_t calibration_shots = 0;
    /// Mitigate with the true model instead of a calibration.
    bool use_true_model = false;
    std::size_t bootstrap_resamples = 200;
};

std::vector<std::uint64_t> default_shots_grid();

struct ScalingRow {
    std::uint64_t shots = 0;
    double mean_err_mitigated = 0.0;
    double std_mitigated = 0.0;
    double mean_err_raw = 0.0;
    double std_raw = 0.0;
};

struct ScalingResult {
    std::vector<ScalingRow> rows;
    PowerLawFit fit_mitigated;
    PowerLawFit fit_mitigated_lowest4;
    PowerLawFit fit_raw;
    /// Bootstrap over states of the fitted exponents.
    double beta_stderr = 0.0;
    double beta_lowest4_stderr = 0.0;
};

/// Absolute error of the measured <Z1 Z0> on Haar-random two-qubit states,
/// with and without mitigation.
ScalingResult scaling_experiment(const ScalingConfig& config);

// ---------------------------------------------------------------------------
// Gram eigenvalues under shot noise.

struct EigenvalueRow {
    std::uint64_t shots = 0;
    double smallest = 0.0;
    double smallest_stderr = 0.0;
    double second = 0.0;
    double second_stderr = 0.0;
    /// Standard error of a single-pair entry, 1 / (4 sqrt(shots)).
    double entry_stderr = 0.0;
};

struct EigenvalueResult {
    std::vector<EigenvalueRow> rows;
    std::vector<double> exact_eigenvalues;  ///< ascending
};

/// Every entry of S is estimated by simulated Hadamard tests, the matrix is
/// symmetrized as (S + S^T)/2 and diagonalized. Error bars come from a
/// bootstrap that redraws every Hadamard-test count.
EigenvalueResult eigenvalue_shot_experiment(const ParametricCircuit& circuit, std::span<const double> params,
                                            std::span<const std::uint64_t> shots_list, std::uint64_t seed,
                                            std::size_t bootstrap_resamples = 200);

// ---------------------------------------------------------------------------
// Variational minimization.

struct VqeOptions {
    CompassSearchOptions search{500, 0.5, 1e-9};
    std::size_t restarts = 4;
    /// 0 evaluates the exact energy; otherwise shots per measurement setting
    /// (the Hamiltonian must then consist of Z- and X-strings).
    std::uint64_t shots = 0;
};

struct VqeResult {
    std::vector<double> params;
    double energy = 0.0;
    std::size_t evaluations = 0;
};

VqeResult vqe_minimize(const ParametricCircuit& circuit, const PauliSum& hamiltonian, const VqeOptions& options,
                       std::uint64_t seed);

}  // namespace nisq
