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

#include <clocale>
#include <sstream>

#include "nisq/errors.hpp"
#include "nisq/experiment_config.hpp"
#include "nisq/expressivity.hpp"
#include "nisq/json_io.hpp"
#include "oracles.hpp"

using namespace nisq;

namespace {

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("circuit JSON") {
    const auto j = Json::parse(R"({"num_qubits": 3, "gates": [
        {"gate": "ry", "qubits": [0], "param": "t1"},
        {"gate": "cnot", "qubits": [0, 1]},
        {"gate": "rz", "qubits": [2], "value": 1.5707963267948966},
        {"gate": "crx", "qubits": [2, 0], "param": "t2"},
        {"gate": "ry", "qubits": [1], "param": "t1"}],
        "parameter_order": ["t2", "t1"]})");
    const auto c = circuit_from_json(j);
    CHECK(c.num_parameters() == 2);
    CHECK(c.parameter_names() == std::vector<std::string>{"t2", "t1"});
    CHECK(c.occurrences(1).size() == 2);
    CHECK(c.gates()[2].value == 1.5707963267948966);
    CHECK(circuit_from_json(circuit_to_json(c)) == c);

    auto bad = j;
    bad["gates"][1]["gate"] = "swap";
    CHECK_THROWS_AS(circuit_from_json(bad), DataError);
    bad = j;
    bad["parameter_order"] = {"t1"};
    CHECK_THROWS_AS(circuit_from_json(bad), DataError);
    bad = j;
    bad["parameter_order"] = {"t1", "t2", "t3"};
    CHECK_THROWS_AS(circuit_from_json(bad), DataError);
    bad = j;
    bad["gates"][0].erase("param");
    CHECK_THROWS_AS(circuit_from_json(bad), DataError);
    bad = j;
    bad["gates"][1]["qubits"] = {0, 3};
    CHECK_THROWS_AS(circuit_from_json(bad), DataError);
    CHECK_THROWS_AS(circuit_from_json(Json::parse(R"({"gates": []})")), DataError);
    CHECK_THROWS_AS(circuit_from_json(Json::parse("[1, 2]")), DataError);
}

TEST_CASE("property: JSON artifacts round trip") {
    Rng rng(501);
    for (int trial = 0; trial < 30; ++trial) {
        const auto c = oracle::random_circuit(rng, 4, 8);
        CHECK(circuit_from_json(Json::parse(circuit_to_json(c).dump())) == c);

        const auto p = oracle::random_params(rng, c.num_parameters());
        const auto report = classify_parameters(c, p);
        CHECK(report_from_json(Json::parse(report_to_json(report).dump())) == report);
        const auto sampled =
            classify_parameters(c, p, {.epsilon = sampled_epsilon(500), .mode = GramMode::Sampled, .shots = 500, .seed = 2});
        CHECK(report_from_json(Json::parse(report_to_json(sampled).dump())) == sampled);

        std::vector<QubitReadout> q(c.num_qubits());
        for (auto& r : q) r = {rng.uniform(0, 0.3), rng.uniform(0, 0.3)};
        const ReadoutNoiseModel model(q);
        CHECK(noise_from_json(Json::parse(noise_to_json(model).dump())) == model);

        const auto rec = calibrate(simulated_executor(model), model.num_qubits(), 300, trial, trial);
        CHECK(calibration_from_json(Json::parse(calibration_to_json(rec).dump())) == rec);
        CHECK(noise_from_json(calibration_to_json(rec)) == rec.model);

        ShotCounts counts(c.num_qubits());
        for (int k = 0; k < 5; ++k) counts.add(rng.below(std::uint64_t{1} << c.num_qubits()), 1 + rng.below(100));
        CHECK(counts_from_json(Json::parse(counts_to_json(counts).dump())) == counts);

        PauliSum sum;
        sum.add(rng.uniform(-1, 1), PauliString::parse("Z0"));
        sum.add(rng.uniform(-1, 1), PauliString::parse("X1 Y2"));
        sum.add(rng.uniform(-1, 1), PauliString{});
        CHECK(pauli_sum_from_json(Json::parse(pauli_sum_to_json(sum).dump())) == sum);
    }
}

TEST_CASE("noise model and counts JSON validation") {
    CHECK_THROWS_AS(noise_from_json(Json::parse(R"({"qubits": [{"q": 1, "p0": 0.1, "p1": 0.1}]})")), DataError);
    CHECK_THROWS_AS(noise_from_json(Json::parse(R"({"qubits": [{"q": 0, "p0": 1.1, "p1": 0.1}]})")), DataError);
    CHECK_THROWS_AS(noise_from_json(Json::parse(R"({"qubits": [{"q": 0, "p0": 0.1}]})")), DataError);
    CHECK_THROWS_AS(noise_from_json(Json::parse(R"({"qubits": [{"q": 0, "p0": 0.1, "p1": 0.1},
                                                               {"q": 0, "p0": 0.1, "p1": 0.1}]})")),
                    DataError);
    const auto c = counts_from_json(Json::parse(R"({"num_qubits": 2, "counts": {"01": 3, "10": 4}})"));
    CHECK(c.count(1) == 3);
    CHECK(c.count(2) == 4);
    CHECK_THROWS_AS(counts_from_json(Json::parse(R"({"num_qubits": 2, "counts": {"011": 3}})")), DataError);
    CHECK_THROWS_AS(counts_from_json(Json::parse(R"({"num_qubits": 2, "counts": {"01": -3}})")), DataError);
    CHECK_THROWS_AS(pauli_sum_from_json(Json::parse(R"({"terms": [{"coefficient": 1, "pauli": "Z0"},
                                                                   {"coefficient": 2, "pauli": "Z0"}]})")),
                    DataError);
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), DataError);
}

TEST_CASE("reals print with 17 significant digits and a dot") {
    CHECK(format_real(0.1) == "0.10000000000000001");
    CHECK(format_real(-2.5) == "-2.5");
    CHECK(std::stod(format_real(1.0 / 3.0)) == 1.0 / 3.0);
    // A comma-decimal locale, when installed, must not leak into the output.
    if (std::setlocale(LC_ALL, "de_DE.UTF-8") != nullptr) {
        CHECK(format_real(0.5) == "0.5");
        std::setlocale(LC_ALL, "C");
    }
}

TEST_CASE("experiment configs") {
    const auto hist = Json::parse(R"({"experiment": "histogram", "model": {"sites": 2},
        "noise": {"uniform": 0.05}, "shots": 64, "repetitions": 10, "calibration_shots": 128, "seed": 4})");
    const auto out = run_experiment(hist);
    auto rows = lines(out.csv);
    REQUIRE(rows.size() == 11);
    CHECK(rows[0] == "experiment_index,noisy_energy,mitigated_energy");
    CHECK(rows[1].rfind("0,", 0) == 0);
    CHECK(out.metadata["fit_family"] == "gaussian");
    CHECK(out.metadata["seed"] == 4);
    CHECK(run_experiment(hist).csv == out.csv);
    CHECK(run_experiment(hist, 5).csv != out.csv);

    const auto scaling = Json::parse(R"({"experiment": "scaling", "noise": {"uniform": 0.05},
        "shots": [16, 64, 256], "repetitions": 8, "bootstrap": 5})");
    rows = lines(run_experiment(scaling).csv);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "shots,mean_err_mitigated,std_mitigated,mean_err_raw,std_raw");
    CHECK(rows[3].rfind("256,", 0) == 0);

    const auto eig = Json::parse(R"({"experiment": "eigenvalue", "circuit": {"num_qubits": 1, "gates": [
        {"gate": "rx", "qubits": [0], "param": "a"}, {"gate": "rx", "qubits": [0], "param": "b"}]},
        "params": [0.1, 0.2], "shots": [100, 200], "repetitions": 10})");
    rows = lines(run_experiment(eig).csv);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "shots,eig_smallest,eig_smallest_stderr,eig_second,eig_second_stderr");

    CHECK_THROWS_AS(run_experiment(Json::parse(R"({"experiment": "teleport"})")), DataError);
    CHECK_THROWS_AS(run_experiment(Json::parse(R"({"experiment": "scaling", "noize": {}})")), DataError);
    CHECK_THROWS_AS(run_experiment(Json::parse(R"({"experiment": "histogram", "model": {"sites": 3},
        "noise": {"qubits": [{"q": 0, "p0": 0, "p1": 0}]}})")), DataError);
}
