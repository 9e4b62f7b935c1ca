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

#include <cstdint>
#include <optional>
#include <string>

#include "nisq/json_io.hpp"

namespace nisq {

/// A parsed experiment config. The "experiment" key selects the run:
///
///   histogram   "model": {"sites", "coupling", "field", "boundary"},
///               "noise", "shots" (per setting), "repetitions", "state"
///               ("exact" or "vqe"), "calibration_shots", "calibrated", "bins"
///   scaling     "noise" (2 qubits), "shots": [..], "repetitions",
///               "calibration_shots", "use_true_model", "bootstrap"
///   eigenvalue  "circuit" (circuit JSON), "params", "shots": [..],
///               "repetitions" (bootstrap resamples)
///
/// "noise" is either a noise model ({"qubits": [...]}) or {"uniform": p}.
/// Every kind accepts "seed" and "output".
struct ExperimentOutput {
    std::string kind;
    std::string csv;
    Json metadata;
    std::optional<std::string> output;  ///< config "output", if any
};

/// Runs the experiment; `seed` overrides the config seed. Throws DataError
/// on a malformed config.
ExperimentOutput run_experiment(const Json& config, std::optional<std::uint64_t> seed = {});

constexpr std::uint64_t kDefaultSeed = 20240501;

}  // namespace nisq
