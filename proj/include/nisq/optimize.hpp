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
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace nisq {

struct CompassSearchOptions {
    /// Full sweeps over all coordinates.
    std::size_t max_iterations = 200;
    double initial_step = 0.5;
    /// Stop once every coordinate step has shrunk below this.
    double step_tolerance = 1e-10;
    /// Stop once the objective is at or below this value.
    double target_value = -std::numeric_limits<double>::infinity();
};

struct CompassSearchResult {
    std::vector<double> point;
    double value = 0.0;
    std::size_t iterations = 0;
    std::size_t evaluations = 0;
};

/// Derivative-free coordinate search: each sweep tries +step and -step on
/// every coordinate, keeps strict improvements and halves the step of a
/// coordinate on failure. The returned value never exceeds f(start).
CompassSearchResult compass_search(const std::function<double(std::span<const double>)>& objective,
                                   std::vector<double> start, const CompassSearchOptions& options = {});

}  // namespace nisq
