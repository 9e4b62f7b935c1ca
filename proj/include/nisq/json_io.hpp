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

#include <filesystem>
#include <string>

#include <json.hpp>

#include "nisq/circuit.hpp"
#include "nisq/expressivity.hpp"
#include "nisq/pauli.hpp"
#include "nisq/readout.hpp"
#include "nisq/sampling.hpp"

namespace nisq {

using Json = nlohmann::json;

// All parsers throw DataError on malformed input.

/// {"num_qubits": Q, "gates": [{"gate": "ry", "qubits": [0], "param": "t1"},
///  {"gate": "rz", "qubits": [2], "value": 1.57}, ...], "parameter_order": [...]}
Json circuit_to_json(const ParametricCircuit& circuit);
ParametricCircuit circuit_from_json(const Json& j);

Json report_to_json(const ExpressivityReport& report);
ExpressivityReport report_from_json(const Json& j);

/// {"qubits": [{"q": 0, "p0": 0.05, "p1": 0.05}, ...]}
Json noise_to_json(const ReadoutNoiseModel& model);
ReadoutNoiseModel noise_from_json(const Json& j);

/// Noise model format with "stderr0"/"stderr1" per qubit plus top-level
/// "shots" and "run_index". Readable as a noise model.
Json calibration_to_json(const CalibrationRecord& record);
CalibrationRecord calibration_from_json(const Json& j);

/// {"num_qubits": n, "counts": {"01": 12, ...}}; the last character of a
/// bitstring is qubit 0.
Json counts_to_json(const ShotCounts& counts);
ShotCounts counts_from_json(const Json& j);

/// {"terms": [{"coefficient": -1.0, "pauli": "Z0 Z1"}, ...]}
Json pauli_sum_to_json(const PauliSum& sum);
PauliSum pauli_sum_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Locale-independent, 17 significant digits.
std::string format_real(double value);

}  // namespace nisq
