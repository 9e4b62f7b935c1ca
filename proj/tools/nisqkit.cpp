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

// nisqkit: command-line front end.
//
//   nisqkit analyze    --circuit c.json [--epsilon e] [--mode exact|sampled] [--shots s]
//   nisqkit prune      --circuit c.json [--epsilon e] [--mode ...] [--shots s]
//   nisqkit ansatz     --qubits Q [--no-phase]
//   nisqkit calibrate  --noise n.json [--shots s] [--run-index k]
//   nisqkit experiment --config x.json [--out results.csv] [--no-timestamp]
//   nisqkit mitigate   --counts c.json --observable o.json --noise n.json
//
// Every subcommand takes --seed (default 20240501) and --out (default stdout).
// Exit status: 0 success, 1 usage error, 2 data or format error.

#include <chrono>
#include <ctime>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nisq/errors.hpp"
#include "nisq/experiment_config.hpp"
#include "nisq/experiments.hpp"
#include "nisq/expressivity.hpp"
#include "nisq/json_io.hpp"
#include "nisq/readout.hpp"

namespace {

using nisq::Json;

struct Options {
    std::uint64_t seed = nisq::kDefaultSeed;
    std::string out;
    std::string circuit;
    std::string config;
    std::string noise;
    std::string counts;
    std::string observable;
    std::optional<double> epsilon;
    std::optional<std::uint64_t> shots;
    std::string mode = "exact";
    std::vector<double> params;
    std::size_t qubits = 0;
    bool no_phase = false;
    std::uint64_t run_index = 0;
    bool no_timestamp = false;
    bool seed_given = false;
};

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty() || opt.out == "-") {
        std::cout << text;
    } else {
        nisq::write_text_file(opt.out, text);
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

nisq::ExpressivityReport classify(const Options& opt, const nisq::ParametricCircuit& circuit) {
    nisq::ClassifyOptions co;
    if (opt.mode == "sampled") {
        co.mode = nisq::GramMode::Sampled;
        co.shots = opt.shots.value_or(8000);
        co.epsilon = opt.epsilon.value_or(nisq::sampled_epsilon(co.shots));
    } else if (opt.mode == "exact") {
        co.epsilon = opt.epsilon.value_or(co.epsilon);
    } else {
        throw CLI::ValidationError("--mode", "expected 'exact' or 'sampled'");
    }
    co.seed = nisq::derive_seed(opt.seed, 1);
    const auto params = opt.params.empty() ? nisq::random_point(circuit.num_parameters(), nisq::derive_seed(opt.seed, 0))
                                           : opt.params;
    if (params.size() != circuit.num_parameters()) {
        throw nisq::DataError("--params has " + std::to_string(params.size()) + " values, the circuit has " +
                              std::to_string(circuit.num_parameters()) + " parameters");
    }
    return nisq::classify_parameters(circuit, params, co);
}

void run_analyze(const Options& opt) {
    const auto circuit = nisq::circuit_from_json(nisq::read_json_file(opt.circuit));
    emit(opt, dump(nisq::report_to_json(classify(opt, circuit))));
}

void run_prune(const Options& opt) {
    const auto circuit = nisq::circuit_from_json(nisq::read_json_file(opt.circuit));
    const auto report = classify(opt, circuit);
    emit(opt, dump(nisq::circuit_to_json(nisq::remove_redundant(circuit, report))));
}

void run_ansatz(const Options& opt) {
    emit(opt, dump(nisq::circuit_to_json(nisq::inductive_ansatz(opt.qubits, !opt.no_phase))));
}

void run_calibrate(const Options& opt) {
    const auto model = nisq::noise_from_json(nisq::read_json_file(opt.noise));
    const auto record = nisq::calibrate(nisq::simulated_executor(model), model.num_qubits(), opt.shots.value_or(8192),
                                        opt.seed, opt.run_index);
    Json j = nisq::calibration_to_json(record);
    if (!opt.no_timestamp) j["timestamp"] = utc_timestamp();
    emit(opt, dump(j));
}

void run_experiment(const Options& opt) {
    auto result = nisq::run_experiment(nisq::read_json_file(opt.config),
                                       opt.seed_given ? std::optional<std::uint64_t>(opt.seed) : std::nullopt);
    if (!opt.no_timestamp) result.metadata["timestamp"] = utc_timestamp();
    std::string path = !opt.out.empty() ? opt.out : result.output.value_or("");
    if (path.empty() || path == "-") {
        std::cout << result.csv;
        return;
    }
    nisq::write_text_file(path, result.csv);
    nisq::write_text_file(path + ".meta.json", dump(result.metadata));
}

void run_mitigate(const Options& opt) {
    const auto counts = nisq::counts_from_json(nisq::read_json_file(opt.counts));
    const auto observable = nisq::pauli_sum_from_json(nisq::read_json_file(opt.observable));
    const auto model = nisq::noise_from_json(nisq::read_json_file(opt.noise));
    if (model.num_qubits() != counts.num_qubits()) {
        throw nisq::DataError("noise model covers " + std::to_string(model.num_qubits()) + " qubits, counts have " +
                              std::to_string(counts.num_qubits()));
    }
    emit(opt, nisq::format_real(nisq::mitigated_expectation(counts, observable, model)) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Expressivity analysis and readout-error mitigation for parametric circuits"};
    app.require_subcommand(1);
    Options opt;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--seed", opt.seed, "Top-level seed")->each([&](const std::string&) { opt.seed_given = true; });
        sub->add_option("--out", opt.out, "Output path (default: stdout)");
    };
    auto classify_flags = [&](CLI::App* sub) {
        sub->add_option("--circuit", opt.circuit, "Circuit JSON")->required()->check(CLI::ExistingFile);
        sub->add_option("--epsilon", opt.epsilon, "Eigenvalue threshold");
        sub->add_option("--mode", opt.mode, "exact or sampled")->check(CLI::IsMember({"exact", "sampled"}));
        sub->add_option("--shots", opt.shots, "Shots per Hadamard test in sampled mode")->check(CLI::PositiveNumber);
        sub->add_option("--params", opt.params, "Evaluation point (default: seeded uniform in [0, 2pi))");
        common(sub);
    };

    auto* analyze = app.add_subcommand("analyze", "Classify circuit parameters");
    classify_flags(analyze);
    auto* prune = app.add_subcommand("prune", "Remove redundant parameters");
    classify_flags(prune);

    auto* ansatz = app.add_subcommand("ansatz", "Write the inductive maximally expressive candidate");
    ansatz->add_option("--qubits", opt.qubits, "Number of qubits")->required()->check(CLI::Range(1, 12));
    ansatz->add_flag("--no-phase", opt.no_phase, "Drop the global phase parameter");
    common(ansatz);

    auto* calibrate = app.add_subcommand("calibrate", "Estimate readout flip rates on a simulated device");
    calibrate->add_option("--noise", opt.noise, "True noise model JSON")->required()->check(CLI::ExistingFile);
    calibrate->add_option("--shots", opt.shots, "Shots per calibration circuit")->check(CLI::PositiveNumber);
    calibrate->add_option("--run-index", opt.run_index, "Run index stored in the record");
    calibrate->add_flag("--no-timestamp", opt.no_timestamp, "Omit the timestamp field");
    common(calibrate);

    auto* experiment = app.add_subcommand("experiment", "Run an experiment config and write CSV");
    experiment->add_option("--config", opt.config, "Experiment config JSON")->required()->check(CLI::ExistingFile);
    experiment->add_flag("--no-timestamp", opt.no_timestamp, "Omit the metadata timestamp");
    common(experiment);

    auto* mitigate = app.add_subcommand("mitigate", "Print a readout-mitigated expectation value");
    mitigate->add_option("--counts", opt.counts, "Counts JSON")->required()->check(CLI::ExistingFile);
    mitigate->add_option("--observable", opt.observable, "Diagonal observable JSON")->required()->check(CLI::ExistingFile);
    mitigate->add_option("--noise", opt.noise, "Noise model or calibration record JSON")
        ->required()
        ->check(CLI::ExistingFile);
    common(mitigate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*analyze) run_analyze(opt);
        if (*prune) run_prune(opt);
        if (*ansatz) run_ansatz(opt);
        if (*calibrate) run_calibrate(opt);
        if (*experiment) run_experiment(opt);
        if (*mitigate) run_mitigate(opt);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nisq::DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
