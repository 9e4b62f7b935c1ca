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

#include "nisq/experiments.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Dense>

#include "nisq/errors.hpp"
#include "nisq/expressivity.hpp"
#include "nisq/sampling.hpp"
#include "nisq/statevector.hpp"

namespace nisq {

namespace {

double mean_of(std::span<const double> xs) {
    return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

// Sample standard deviation (n - 1 denominator); zero for a single value.
double std_of(std::span<const double> xs) {
    if (xs.size() < 2) return 0.0;
    const double m = mean_of(xs);
    double ss = 0.0;
    for (double x : xs) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

QuantumState rotated(const QuantumState& state, MeasurementSetting setting) {
    QuantumState out = state;
    apply_circuit(out, basis_rotation(setting, state.num_qubits()), {});
    return out;
}

// Value of a diagonal operator on one outcome.
double diagonal_value(const PauliSum& diagonal, std::uint64_t outcome) {
    double v = 0.0;
    for (const auto& term : diagonal.terms()) {
        std::uint64_t mask = 0;
        for (const auto& kv : term.string.ops()) mask |= std::uint64_t{1} << kv.first;
        v += (std::popcount(outcome & mask) & 1) ? -term.coefficient : term.coefficient;
    }
    return v;
}

}  // namespace

std::vector<double> noisy_distribution(std::span<const double> probabilities, const ReadoutNoiseModel& model) {
    std::vector<double> dist(probabilities.begin(), probabilities.end());
    if (dist.empty() || !std::has_single_bit(dist.size())) throw DataError("distribution length must be a power of two");
    const auto n = static_cast<std::size_t>(std::countr_zero(dist.size()));
    if (model.num_qubits() < n) throw DataError("noise model does not cover every qubit");
    for (std::size_t q = 0; q < n; ++q) {
        const std::size_t bit = std::size_t{1} << q;
        const double p0 = model[q].p0;
        const double p1 = model[q].p1;
        for (std::size_t i = 0; i < dist.size(); ++i) {
            if (i & bit) continue;
            const double zero = dist[i];
            const double one = dist[i | bit];
            dist[i] = (1.0 - p0) * zero + p1 * one;
            dist[i | bit] = p0 * zero + (1.0 - p1) * one;
        }
    }
    return dist;
}

HistogramResult histogram_experiment(const HistogramConfig& config) {
    if (config.experiments == 0) throw DataError("at least one experiment is required");
    if (config.shots == 0) throw DataError("shots must be positive");
    const PauliSum hamiltonian = build_ti_hamiltonian(config.model);
    const std::size_t n = config.model.sites;
    if (config.noise.num_qubits() < n) throw DataError("noise model does not cover every site");

    const GroundState ground = exact_ground_state(hamiltonian, n);
    const QuantumState& state = config.prepared_state ? *config.prepared_state : ground.state;
    if (state.num_qubits() != n) throw DataError("prepared state has the wrong number of qubits");

    HistogramResult result;
    result.exact_energy = ground.energy;
    result.noiseless_energy = expectation(state, hamiltonian);

    struct Setting {
        MeasurementSetting kind;
        PauliSum diagonal;
        QuantumState state;
    };
    std::vector<Setting> settings;
    double predicted_variance = 0.0;
    for (auto& [kind, diagonal] : split_settings(hamiltonian)) {
        QuantumState r = rotated(state, kind);
        result.predicted_mean += expectation(r, forward_operator(diagonal, config.noise));
        const auto dist = noisy_distribution(r.probabilities(), config.noise);
        double m1 = 0.0, m2 = 0.0;
        for (std::size_t y = 0; y < dist.size(); ++y) {
            const double f = diagonal_value(diagonal, y);
            m1 += dist[y] * f;
            m2 += dist[y] * f * f;
        }
        predicted_variance += (m2 - m1 * m1) / static_cast<double>(config.shots);
        settings.push_back({kind, diagonal, std::move(r)});
    }
    result.predicted_std = std::sqrt(std::max(0.0, predicted_variance));

    const Executor executor = simulated_executor(config.noise);
    for (std::size_t e = 0; e < config.experiments; ++e) {
        Rng rng = Rng::stream(config.seed, e);
        const ReadoutNoiseModel model =
            config.calibrated ? calibrate(executor, n, config.calibration_shots, rng.next_u64(), e).model : config.noise;
        double noisy = 0.0, mitigated = 0.0;
        for (const Setting& s : settings) {
            const ShotCounts counts = apply_readout_noise(sample_measurements(s.state, config.shots, rng), config.noise, rng);
            noisy += raw_expectation(counts, s.diagonal);
            mitigated += mitigated_expectation(counts, s.diagonal, model);
        }
        result.noisy_energies.push_back(noisy);
        result.mitigated_energies.push_back(mitigated);
    }

    result.fitted_mean = mean_of(result.noisy_energies);
    result.fitted_std = std_of(result.noisy_energies);

    const auto [lo_it, hi_it] = std::minmax_element(result.noisy_energies.begin(), result.noisy_energies.end());
    double lo = *lo_it, hi = *hi_it;
    if (hi <= lo) hi = lo + 1e-9;
    const std::size_t bins = std::max<std::size_t>(1, config.bins);
    for (std::size_t b = 0; b <= bins; ++b) result.bin_edges.push_back(lo + (hi - lo) * static_cast<double>(b) / static_cast<double>(bins));
    result.bin_counts.assign(bins, 0);
    for (double x : result.noisy_energies) {
        auto b = static_cast<std::size_t>((x - lo) / (hi - lo) * static_cast<double>(bins));
        result.bin_counts[std::min(b, bins - 1)] += 1;
    }
    return result;
}

// ---------------------------------------------------------------------------

PowerLawFit power_law_fit(std::span<const std::pair<double, double>> points, FitSubset subset) {
    std::vector<std::pair<double, double>> selected(points.begin(), points.end());
    for (const auto& [s, err] : selected) {
        if (!(s > 0.0) || !(err > 0.0)) throw DataError("power-law fit needs positive shots and errors");
    }
    if (subset.lowest_k) {
        std::sort(selected.begin(), selected.end());
        if (selected.size() > *subset.lowest_k) selected.resize(*subset.lowest_k);
    }
    if (selected.size() < 2) throw DataError("power-law fit needs at least two points");
    const double n = static_cast<double>(selected.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [s, err] : selected) {
        const double x = std::log(s), y = std::log(err);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw DataError("power-law fit needs at least two distinct shot counts");
    const double slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / n;
    return {std::exp(intercept), -slope};
}

std::vector<std::uint64_t> default_shots_grid() {
    std::vector<std::uint64_t> grid;
    for (int k = 4; k <= 13; ++k) grid.push_back(std::uint64_t{1} << k);
    return grid;
}

ScalingResult scaling_experiment(const ScalingConfig& config) {
    if (config.num_states == 0) throw DataError("at least one random state is required");
    const auto grid = config.shots_grid.empty() ? default_shots_grid() : config.shots_grid;
    if (config.noise.num_qubits() < 2) throw DataError("noise model must cover two qubits");

    const PauliSum zz{{1.0, PauliString{{0, 'Z'}, {1, 'Z'}}}};
    const Executor executor = simulated_executor(config.noise);
    const std::size_t runs = config.num_states;
    std::vector<std::vector<double>> err_mit(grid.size(), std::vector<double>(runs));
    std::vector<std::vector<double>> err_raw(grid.size(), std::vector<double>(runs));

    for (std::size_t r = 0; r < runs; ++r) {
        Rng state_rng = Rng::stream(config.seed, r);
        const QuantumState psi = haar_random_state(2, state_rng);
        const double exact = expectation(psi, zz);
        for (std::size_t k = 0; k < grid.size(); ++k) {
            Rng rng = Rng::stream(derive_seed(config.seed, r), k);
            const ShotCounts noisy = apply_readout_noise(sample_measurements(psi, grid[k], rng), config.noise, rng);
            const std::uint64_t cal_shots = config.calibration_shots == 0 ? grid[k] : config.calibration_shots;
            const ReadoutNoiseModel model =
                config.use_true_model ? config.noise : calibrate(executor, 2, cal_shots, rng.next_u64(), k).model;
            err_raw[k][r] = std::abs(raw_expectation(noisy, zz) - exact);
            err_mit[k][r] = std::abs(mitigated_expectation(noisy, zz, model) - exact);
        }
    }

    ScalingResult result;
    std::vector<std::pair<double, double>> mit_points, raw_points;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        ScalingRow row{grid[k], mean_of(err_mit[k]), std_of(err_mit[k]), mean_of(err_raw[k]), std_of(err_raw[k])};
        result.rows.push_back(row);
        mit_points.emplace_back(static_cast<double>(grid[k]), row.mean_err_mitigated);
        raw_points.emplace_back(static_cast<double>(grid[k]), row.mean_err_raw);
    }
    result.fit_mitigated = power_law_fit(mit_points);
    result.fit_mitigated_lowest4 = power_law_fit(mit_points, {4});
    result.fit_raw = power_law_fit(raw_points);

    if (config.bootstrap_resamples > 1) {
        Rng boot(derive_seed(config.seed, 0xB0075));
        std::vector<double> betas, betas4;
        std::vector<std::size_t> pick(runs);
        for (std::size_t b = 0; b < config.bootstrap_resamples; ++b) {
            for (auto& i : pick) i = boot.below(runs);
            std::vector<std::pair<double, double>> pts;
            for (std::size_t k = 0; k < grid.size(); ++k) {
                double m = 0.0;
                for (std::size_t i : pick) m += err_mit[k][i];
                pts.emplace_back(static_cast<double>(grid[k]), m / static_cast<double>(runs));
            }
            betas.push_back(power_law_fit(pts).beta);
            betas4.push_back(power_law_fit(pts, {4}).beta);
        }
        result.beta_stderr = std_of(betas);
        result.beta_lowest4_stderr = std_of(betas4);
    }
    return result;
}

// ---------------------------------------------------------------------------

namespace {

std::pair<double, double> two_smallest(const Eigen::MatrixXd& s) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s, Eigen::EigenvaluesOnly);
    return {solver.eigenvalues()(0), solver.eigenvalues()(1)};
}

}  // namespace

EigenvalueResult eigenvalue_shot_experiment(const ParametricCircuit& circuit, std::span<const double> params,
                                            std::span<const std::uint64_t> shots_list, std::uint64_t seed,
                                            std::size_t bootstrap_resamples) {
    const std::size_t np = circuit.num_parameters();
    if (np < 2) throw DataError("the eigenvalue experiment needs at least two parameters");

    std::vector<std::size_t> all(np);
    std::iota(all.begin(), all.end(), std::size_t{0});
    EigenvalueResult result;
    const Eigen::VectorXd exact = gram_matrix(circuit, params, all).eigenvalues();
    result.exact_eigenvalues.assign(exact.data(), exact.data() + exact.size());

    for (std::size_t k = 0; k < shots_list.size(); ++k) {
        const std::uint64_t shots = shots_list[k];
        Rng rng = Rng::stream(seed, k);
        std::vector<GramEntrySample> samples;
        samples.reserve(np * np);
        for (std::size_t j = 0; j < np; ++j) {
            for (std::size_t l = 0; l < np; ++l) samples.push_back(sample_gram_entry(circuit, params, j, l, shots, rng));
        }
        auto assemble = [&](const std::vector<GramEntrySample>& entries) {
            Eigen::MatrixXd s(np, np);
            for (std::size_t j = 0; j < np; ++j) {
                for (std::size_t l = 0; l < np; ++l) s(j, l) = entries[j * np + l].value();
            }
            return Eigen::MatrixXd(0.5 * (s + s.transpose()));
        };

        EigenvalueRow row;
        row.shots = shots;
        row.entry_stderr = 1.0 / (4.0 * std::sqrt(static_cast<double>(shots)));
        std::tie(row.smallest, row.second) = two_smallest(assemble(samples));

        if (bootstrap_resamples > 1) {
            Rng boot = Rng::stream(derive_seed(seed, 0xB0075), k);
            std::vector<double> smallest, second;
            auto resampled = samples;
            for (std::size_t b = 0; b < bootstrap_resamples; ++b) {
                for (std::size_t e = 0; e < samples.size(); ++e) {
                    for (std::size_t o = 0; o < samples[e].overlaps.size(); ++o) {
                        const auto& orig = samples[e].overlaps[o];
                        const double p = static_cast<double>(orig.successes) / static_cast<double>(orig.shots);
                        resampled[e].overlaps[o].successes = boot.binomial(orig.shots, p);
                    }
                }
                const auto [a, c] = two_smallest(assemble(resampled));
                smallest.push_back(a);
                second.push_back(c);
            }
            row.smallest_stderr = std_of(smallest);
            row.second_stderr = std_of(second);
        }
        result.rows.push_back(row);
    }
    return result;
}

// ---------------------------------------------------------------------------

VqeResult vqe_minimize(const ParametricCircuit& circuit, const PauliSum& hamiltonian, const VqeOptions& options,
                       std::uint64_t seed) {
    struct Setting {
        MeasurementSetting kind;
        PauliSum diagonal;
        ParametricCircuit rotation;
    };
    std::vector<Setting> settings;
    if (options.shots > 0) {
        for (auto& [kind, diagonal] : split_settings(hamiltonian)) {
            settings.push_back({kind, diagonal, basis_rotation(kind, circuit.num_qubits())});
        }
    }
    Rng shot_rng(derive_seed(seed, 0x5407));
    const auto energy = [&](std::span<const double> theta) {
        const QuantumState psi = evaluate_circuit(circuit, theta);
        if (options.shots == 0) return expectation(psi, hamiltonian);
        double e = 0.0;
        for (const auto& s : settings) {
            QuantumState r = psi;
            apply_circuit(r, s.rotation, {});
            e += raw_expectation(sample_measurements(r, options.shots, shot_rng), s.diagonal);
        }
        return e;
    };

    VqeResult best;
    best.energy = std::numeric_limits<double>::infinity();
    const std::size_t restarts = std::max<std::size_t>(1, options.restarts);
    for (std::size_t r = 0; r < restarts; ++r) {
        auto found = compass_search(energy, random_point(circuit.num_parameters(), derive_seed(seed, r)), options.search);
        best.evaluations += found.evaluations;
        if (found.value < best.energy) {
            best.energy = found.value;
            best.params = std::move(found.point);
        }
    }
    return best;
}

}  // namespace nisq
