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
#include <functional>
#include <map>
#include <vector>

#include "nisq/circuit.hpp"
#include "nisq/pauli.hpp"
#include "nisq/random.hpp"
#include "nisq/sampling.hpp"

namespace nisq {

/// Bit-flip probabilities of one qubit's readout.
struct QubitReadout {
    double p0 = 0.0;  ///< P(read 1 | prepared 0)
    double p1 = 0.0;  ///< P(read 0 | prepared 1)

    bool operator==(const QubitReadout&) const = default;
};

/// Independent per-qubit readout flips.
class ReadoutNoiseModel {
  public:
    ReadoutNoiseModel() = default;
    /// Throws DataError unless every probability lies in [0, 1].
    explicit ReadoutNoiseModel(std::vector<QubitReadout> qubits);

    static ReadoutNoiseModel uniform(std::size_t num_qubits, double p);
    static ReadoutNoiseModel noiseless(std::size_t num_qubits) { return uniform(num_qubits, 0.0); }

    std::size_t num_qubits() const noexcept { return qubits_.size(); }
    const QubitReadout& operator[](std::size_t q) const;
    const std::vector<QubitReadout>& qubits() const noexcept { return qubits_; }

    bool operator==(const ReadoutNoiseModel&) const = default;

  private:
    std::vector<QubitReadout> qubits_;
};

enum class DiagonalFactor { Z, Identity };

/// gamma(Z_q) = 1 - p0 - p1, gamma(1_q) = p1 - p0: the noisy Z_q averages to
/// gamma(Z_q) Z_q + gamma(1_q) 1.
double gamma(DiagonalFactor op, std::size_t qubit, const ReadoutNoiseModel& model);

/// Flips every bit of every shot independently: 0 -> 1 with p0, 1 -> 0 with p1.
ShotCounts apply_readout_noise(const ShotCounts& counts, const ReadoutNoiseModel& model, Rng& rng);
ShotCounts apply_readout_noise(const ShotCounts& counts, const ReadoutNoiseModel& model, std::uint64_t seed);

/// Expected noisy Z-string as an operator on exact Z-strings:
/// prod_{q in A} (gamma(Z_q) Z_q + gamma(1_q) 1). Always 2^|A| terms.
PauliSum forward_operator(const PauliString& zstring, const ReadoutNoiseModel& model);
/// Corrected operator over noisy Z-strings:
/// prod_{q in A} (Z~_q - gamma(1_q) 1) / gamma(Z_q). Always 2^|A| terms (zero
/// coefficients are kept). Throws SingularMitigationError if gamma(Z_q) == 0
/// for some q in A, DataError for non-Z strings.
PauliSum correct_operator(const PauliString& zstring, const ReadoutNoiseModel& model);

/// Termwise forward_operator / correct_operator of a diagonal sum.
PauliSum forward_operator(const PauliSum& diagonal, const ReadoutNoiseModel& model);
PauliSum correct_operator(const PauliSum& diagonal, const ReadoutNoiseModel& model);

/// Sample mean of a diagonal observable, no correction.
double raw_expectation(const ShotCounts& counts, const PauliSum& diagonal);

/// Unbiased estimate of the exact expectation of `diagonal` from noisy
/// counts: every corrected term is evaluated on the same counts.
double mitigated_expectation(const ShotCounts& noisy_counts, const PauliSum& diagonal,
                             const ReadoutNoiseModel& model);

enum class MeasurementSetting { Computational, Hadamard };

std::string_view setting_name(MeasurementSetting setting) noexcept;

/// Gates that rotate `setting` into the computational basis.
ParametricCircuit basis_rotation(MeasurementSetting setting, std::size_t num_qubits);

/// Splits a Hamiltonian of pure Z-strings and pure X-strings into diagonal
/// operators per setting (X-strings become Z-strings in the Hadamard
/// setting). The identity goes to the computational setting. Throws
/// DataError for Y factors or mixed strings.
std::map<MeasurementSetting, PauliSum> split_settings(const PauliSum& hamiltonian);

struct MitigatedOperator {
    PauliSum original;   ///< diagonal, in the setting's rotated frame
    PauliSum corrected;  ///< its noisy expectation equals original's exact one

    bool operator==(const MitigatedOperator&) const = default;
};

std::map<MeasurementSetting, MitigatedOperator> preprocess_hamiltonian(const PauliSum& hamiltonian,
                                                                      const ReadoutNoiseModel& model);

struct CalibrationRecord {
    ReadoutNoiseModel model;
    std::uint64_t shots = 0;
    std::vector<double> stderr0;
    std::vector<double> stderr1;
    std::uint64_t run_index = 0;

    bool operator==(const CalibrationRecord&) const = default;
};

/// Runs a parameter-free circuit and returns measured (possibly noisy) counts.
using Executor = std::function<ShotCounts(const ParametricCircuit&, std::uint64_t shots, Rng&)>;

/// Statevector sampling followed by apply_readout_noise.
Executor simulated_executor(ReadoutNoiseModel model);

/// Prepares |0...0> and |1...1> and reads p0_q = freq(read 1) and
/// p1_q = freq(read 0) per qubit, with binomial standard errors.
CalibrationRecord calibrate(const Executor& executor, std::size_t num_qubits, std::uint64_t shots,
                            std::uint64_t seed, std::uint64_t run_index = 0);

struct MitigatedValue {
    double value = 0.0;
    /// First-order propagation of the calibration standard errors.
    double calibration_stderr = 0.0;
};

MitigatedValue mitigated_expectation(const ShotCounts& noisy_counts, const PauliSum& diagonal,
                                     const CalibrationRecord& calibration);

/// Relaxation model: Z~ = p_t Z + (1 - p_t) 1.
double t1_forward(double exact_z, double p_t);
/// Inverse of t1_forward. Throws DataError unless 0 < p_t <= 1.
double t1_correct(double noisy_z, double p_t);

}  // namespace nisq
