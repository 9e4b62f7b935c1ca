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

#include "nisq/experiment_config.hpp"

#include <set>
#include <sstream>

#include "nisq/errors.hpp"
#include "nisq/experiments.hpp"
#include "nisq/expressivity.hpp"
#include "nisq/statevector.hpp"

namespace nisq {

namespace {

void check_keys(const Json& config, const std::set<std::string>& allowed) {
    for (const auto& [key, value] : config.items()) {
        if (!allowed.contains(key)) throw DataError("unknown config key '" + key + "'");
    }
}

template <typename T>
T value_or(const Json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("bad value for '") + key + "': " + e.what());
    }
}

ReadoutNoiseModel parse_noise(const Json& j, std::size_t num_qubits) {
    if (j.is_object() && j.contains("uniform")) {
        return ReadoutNoiseModel::uniform(num_qubits, value_or<double>(j, "uniform", 0.0));
    }
    auto model = noise_from_json(j);
    if (model.num_qubits() != num_qubits) {
        throw DataError("noise model covers " + std::to_string(model.num_qubits()) + " qubits, the experiment needs " +
                        std::to_string(num_qubits));
    }
    return model;
}

std::vector<std::uint64_t> shots_list(const Json& config) {
    if (!config.contains("shots")) return {};
    const Json& s = config.at("shots");
    if (s.is_number_unsigned()) return {s.get<std::uint64_t>()};
    try {
        return s.get<std::vector<std::uint64_t>>();
    } catch (const nlohmann::json::exception&) {
        throw DataError("'shots' must be a positive integer or a list of them");
    }
}

TransverseIsingModel parse_model(const Json& j) {
    TransverseIsingModel model;
    model.sites = value_or<std::size_t>(j, "sites", model.sites);
    model.coupling = value_or<double>(j, "coupling", model.coupling);
    model.field = value_or<double>(j, "field", model.field);
    const auto boundary = value_or<std::string>(j, "boundary", "periodic");
    if (boundary == "periodic") {
        model.boundary = Boundary::Periodic;
    } else if (boundary == "open") {
        model.boundary = Boundary::Open;
    } else {
        throw DataError("unknown boundary '" + boundary + "'");
    }
    return model;
}

std::string csv_line(std::initializer_list<std::string> fields) {
    std::string line;
    for (const auto& f : fields) {
        if (!line.empty()) line += ',';
        line += f;
    }
    return line + '\n';
}

ExperimentOutput run_histogram(const Json& config, std::uint64_t seed) {
    check_keys(config, {"experiment", "model", "noise", "shots", "repetitions", "seed", "output", "state",
                        "ansatz_reps", "calibration_shots", "calibrated", "bins"});
    HistogramConfig hc;
    hc.model = parse_model(config.value("model", Json::object()));
    hc.noise = config.contains("noise") ? parse_noise(config.at("noise"), hc.model.sites)
                                        : ReadoutNoiseModel::uniform(hc.model.sites, 0.05);
    const auto shots = shots_list(config);
    if (shots.size() > 1) throw DataError("histogram takes a single 'shots' value");
    if (!shots.empty()) hc.shots = shots.front();
    hc.experiments = value_or<std::size_t>(config, "repetitions", hc.experiments);
    hc.seed = seed;
    hc.calibrated = value_or<bool>(config, "calibrated", hc.calibrated);
    hc.calibration_shots = value_or<std::uint64_t>(config, "calibration_shots", hc.calibration_shots);
    hc.bins = value_or<std::size_t>(config, "bins", hc.bins);

    const auto state = value_or<std::string>(config, "state", "exact");
    Json vqe_meta = nullptr;
    if (state == "vqe") {
        const auto circuit = efficient_su2(hc.model.sites, value_or<std::size_t>(config, "ansatz_reps", 2));
        const auto vqe = vqe_minimize(circuit, build_ti_hamiltonian(hc.model), {}, derive_seed(seed, 0x5C0E));
        hc.prepared_state = evaluate_circuit(circuit, vqe.params);
        vqe_meta = {{"energy", vqe.energy}, {"params", vqe.params}, {"evaluations", vqe.evaluations}};
    } else if (state != "exact") {
        throw DataError("unknown state preparation '" + state + "'");
    }

    const auto result = histogram_experiment(hc);
    std::string csv = csv_line({"experiment_index", "noisy_energy", "mitigated_energy"});
    for (std::size_t e = 0; e < result.noisy_energies.size(); ++e) {
        csv += csv_line({std::to_string(e), format_real(result.noisy_energies[e]),
                         format_real(result.mitigated_energies[e])});
    }
    Json meta{{"exact_energy", result.exact_energy},
              {"noiseless_energy", result.noiseless_energy},
              {"predicted_mean", result.predicted_mean},
              {"predicted_std", result.predicted_std},
              {"fit_family", "gaussian"},
              {"fitted_mean", result.fitted_mean},
              {"fitted_std", result.fitted_std},
              {"bin_edges", result.bin_edges},
              {"bin_counts", result.bin_counts},
              {"state", state},
              {"noise", noise_to_json(hc.noise)},
              {"shots_per_setting", hc.shots},
              {"total_shots_per_experiment", 2 * hc.shots}};
    if (!vqe_meta.is_null()) meta["vqe"] = vqe_meta;
    return {"histogram", std::move(csv), std::move(meta), std::nullopt};
}

ExperimentOutput run_scaling(const Json& config, std::uint64_t seed) {
    check_keys(config, {"experiment", "noise", "shots", "repetitions", "seed", "output", "calibration_shots",
                        "use_true_model", "bootstrap"});
    ScalingConfig sc;
    if (config.contains("noise")) sc.noise = parse_noise(config.at("noise"), 2);
    sc.shots_grid = shots_list(config);
    if (sc.shots_grid.empty()) sc.shots_grid = default_shots_grid();
    sc.num_states = value_or<std::size_t>(config, "repetitions", sc.num_states);
    sc.seed = seed;
    sc.calibration_shots = value_or<std::uint64_t>(config, "calibration_shots", sc.calibration_shots);
    sc.use_true_model = value_or<bool>(config, "use_true_model", sc.use_true_model);
    sc.bootstrap_resamples = value_or<std::size_t>(config, "bootstrap", sc.bootstrap_resamples);

    const auto result = scaling_experiment(sc);
    std::string csv = csv_line({"shots", "mean_err_mitigated", "std_mitigated", "mean_err_raw", "std_raw"});
    for (const auto& row : result.rows) {
        csv += csv_line({std::to_string(row.shots), format_real(row.mean_err_mitigated), format_real(row.std_mitigated),
                         format_real(row.mean_err_raw), format_real(row.std_raw)});
    }
    auto fit = [](const PowerLawFit& f) { return Json{{"a", f.a}, {"beta", f.beta}}; };
    Json meta{{"fit_family", "a * s^-beta, least squares in log-log"},
              {"fit_mitigated", fit(result.fit_mitigated)},
              {"fit_mitigated_lowest4", fit(result.fit_mitigated_lowest4)},
              {"fit_raw", fit(result.fit_raw)},
              {"beta_stderr", result.beta_stderr},
              {"beta_lowest4_stderr", result.beta_lowest4_stderr},
              {"noise", noise_to_json(sc.noise)},
              {"num_states", sc.num_states}};
    return {"scaling", std::move(csv), std::move(meta), std::nullopt};
}

ExperimentOutput run_eigenvalue(const Json& config, std::uint64_t seed) {
    check_keys(config, {"experiment", "circuit", "params", "shots", "repetitions", "seed", "output"});
    if (!config.contains("circuit")) throw DataError("eigenvalue experiment needs a 'circuit'");
    const auto circuit = circuit_from_json(config.at("circuit"));
    const auto params = config.contains("params") ? value_or<std::vector<double>>(config, "params", {})
                                                  : random_point(circuit.num_parameters(), derive_seed(seed, 0x9A8A));
    if (params.size() != circuit.num_parameters()) throw DataError("'params' does not match the circuit");
    auto shots = shots_list(config);
    if (shots.empty()) shots = {1000, 4000, 8000};
    const auto result =
        eigenvalue_shot_experiment(circuit, params, shots, seed, value_or<std::size_t>(config, "repetitions", 200));
    std::string csv = csv_line({"shots", "eig_smallest", "eig_smallest_stderr", "eig_second", "eig_second_stderr"});
    for (const auto& row : result.rows) {
        csv += csv_line({std::to_string(row.shots), format_real(row.smallest), format_real(row.smallest_stderr),
                         format_real(row.second), format_real(row.second_stderr)});
    }
    Json meta{{"exact_eigenvalues", result.exact_eigenvalues}, {"params", params}};
    return {"eigenvalue", std::move(csv), std::move(meta), std::nullopt};
}

}  // namespace

ExperimentOutput run_experiment(const Json& config, std::optional<std::uint64_t> seed) {
    if (!config.is_object()) throw DataError("experiment config must be a JSON object");
    const auto kind = value_or<std::string>(config, "experiment", "");
    const std::uint64_t s = seed.value_or(value_or<std::uint64_t>(config, "seed", kDefaultSeed));
    ExperimentOutput out;
    if (kind == "histogram") {
        out = run_histogram(config, s);
    } else if (kind == "scaling") {
        out = run_scaling(config, s);
    } else if (kind == "eigenvalue") {
        out = run_eigenvalue(config, s);
    } else {
        throw DataError("unknown experiment '" + kind + "'");
    }
    if (config.contains("output")) out.output = value_or<std::string>(config, "output", "");
    out.metadata["experiment"] = kind;
    out.metadata["seed"] = s;
    out.metadata["config"] = config;
    out.metadata["bit_order"] = "little-endian: qubit 0 is the least significant bit";
    return out;
}

}  // namespace nisq
