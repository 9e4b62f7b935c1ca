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

#include <stdexcept>
#include <string>

namespace nisq {

/// Malformed or inconsistent input data (file formats, dimension
/// mismatches, invalid indices). The CLI maps this to exit status 2.
class DataError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Readout mitigation is impossible because gamma(Z_q) vanishes.
class SingularMitigationError : public DataError {
  public:
    explicit SingularMitigationError(std::size_t qubit)
        : DataError("readout mitigation is singular on qubit " + std::to_string(qubit) +
                    ": 1 - p0 - p1 == 0"),
          qubit_(qubit) {}

    std::size_t qubit() const noexcept { return qubit_; }

  private:
    std::size_t qubit_;
};

}  // namespace nisq
