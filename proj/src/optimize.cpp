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

#include "nisq/optimize.hpp"

#include <algorithm>

namespace nisq {

CompassSearchResult compass_search(const std::function<double(std::span<const double>)>& objective,
                                   std::vector<double> start, const CompassSearchOptions& options) {
    CompassSearchResult result;
    result.point = std::move(start);
    result.value = objective(result.point);
    result.evaluations = 1;
    std::vector<double> steps(result.point.size(), options.initial_step);

    for (std::size_t it = 0; it < options.max_iterations; ++it) {
        if (result.value <= options.target_value) break;
        if (std::all_of(steps.begin(), steps.end(), [&](double s) { return s < options.step_tolerance; })) break;
        ++result.iterations;
        for (std::size_t k = 0; k < result.point.size(); ++k) {
            if (steps[k] < options.step_tolerance) continue;
            bool improved = false;
            for (double direction : {+1.0, -1.0}) {
                auto trial = result.point;
                trial[k] += direction * steps[k];
                const double value = objective(trial);
                ++result.evaluations;
                if (value < result.value) {
                    result.point = std::move(trial);
                    result.value = value;
                    improved = true;
                    break;
                }
            }
            if (!improved) steps[k] *= 0.5;
        }
    }
    return result;
}

}  // namespace nisq
