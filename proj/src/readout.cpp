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

#include "nisq/readout.hpp"

#include <cmath>
#include <string>

#include "nisq/errors.hpp"
#include "nisq/statevector.hpp"

namespace nisq {

ReadoutNoiseModel::ReadoutNoiseModel(std::vector<QubitReadout> qubits) : qubits_(std::move(qubits)) {
    for (std::size_t q = 0; q < qubits_.size(); ++q) {
        for (double p : {qubits_[q].p0, qubits_[q].p1}) {
            if (!(p >= 0.0 && p <= 1.0)) {
                throw DataError("flip probability " + std::to_string(p) + " on qubit " + std::to_string(q) +
                                " is outside [0, 1]");
            }
        }
    }
}

ReadoutNoiseModel ReadoutNoiseModel::uniform(std::size_t num_qubits, double p) {
    return ReadoutNoiseModel(std::vector<QubitReadout>(num_qubits, QubitReadout{p, p}));
}

const QubitReadout& ReadoutNoiseModel::operator[](std::size_t q) const {
    if (q >= qubits_.size()) {
        throw DataError("noise model has no entry for qubit " + std::to_string(q));
    }
    return qubits_[q];
}

double gamma(DiagonalFactor op, std::size_t qubit, const ReadoutNoiseModel& model) {
    const QubitReadout& r = model[qubit];
    return op == DiagonalFactor::Z ? 1.0 - r.p0 - r.p1 : r.p1 - r.p0;
}

ShotCounts apply_readout_noise(const ShotCounts& counts, const ReadoutNoiseModel& model, Rng& rng) {
    const std::size_t n = counts.num_qubits();
    if (model.num_qubits() < n) {
        throw DataError("noise model covers " + std::to_string(model.num_qubits()) + " qubit(s), counts have " +
                        std::to_string(n));
    }
    ShotCounts noisy(n);
    for (const auto& [outcome, count] : counts.counts()) {
        for (std::uint64_t s = 0; s < count; ++s) {
            std::uint64_t read = outcome;
            for (std::size_t q = 0; q < n; ++q) {
                const bool one = ((outcome >> q) & 1U) != 0;
                const double flip = one ? model[q].p1 : model[q].p0;
                if (rng.bernoulli(flip)) read ^= std::uint64_t{1} << q;
            }
            noisy.add(read);
        }
    }
    return noisy;
}

ShotCounts apply_readout_noise(const ShotCounts& counts, const ReadoutNoiseModel& model, std::uint64_t seed) {
    Rng rng(seed);
    return apply_readout_noise(counts, model, rng);
}

namespace {

void require_z_string(const PauliString& s) {
    if (!s.only('Z')) throw DataError("readout correction needs a Z-string, got '" + s.to_string() + "'");
}

// Expands prod_{q in A} (a_q Z_q + b_q 1) into its 2^|A| Z-strings.
PauliSum expand_product(const std::vector<std::size_t>& support, const std::vector<double>& z_factor,
                        const std::vector<double>& identity_factor) {
    PauliSum out;
    const std::size_t k = support.size();
    for (std::size_t mask = (std::size_t{1} << k); mask-- > 0;) {
        PauliString string;
        double coefficient = 1.0;
        for (std::size_t i = 0; i < k; ++i) {
            if ((mask >> i) & 1U) {
                string.set(support[i], 'Z');
                coefficient *= z_factor[i];
            } else {
                coefficient *= identity_factor[i];
            }
        }
        out.add(coefficient, string);
    }
    return out;
}

}  // namespace

PauliSum forward_operator(const PauliString& zstring, const ReadoutNoiseModel& model) {
    require_z_string(zstring);
    const auto support = zstring.support();
    std::vector<double> a, b;
    for (std::size_t q : support) {
        a.push_back(gamma(DiagonalFactor::Z, q, model));
        b.push_back(gamma(DiagonalFactor::Identity, q, model));
    }
    return expand_product(support, a, b);
}

PauliSum correct_operator(const PauliString& zstring, const ReadoutNoiseModel& model) {
    require_z_string(zstring);
    const auto support = zstring.support();
    std::vector<double> a, b;
    for (std::size_t q : support) {
        const double gz = gamma(DiagonalFactor::Z, q, model);
        if (gz == 0.0) throw SingularMitigationError(q);
        a.push_back(1.0 / gz);
        b.push_back(-gamma(DiagonalFactor::Identity, q, model) / gz);
    }
    return expand_product(support, a, b);
}

PauliSum forward_operator(const PauliSum& diagonal, const ReadoutNoiseModel& model) {
    PauliSum out;
    for (const auto& term : diagonal.terms()) out.add(forward_operator(term.string, model), term.coefficient);
    return out;
}

PauliSum correct_operator(const PauliSum& diagonal, const ReadoutNoiseModel& model) {
    PauliSum out;
    for (const auto& term : diagonal.terms()) out.add(correct_operator(term.string, model), term.coefficient);
    return out;
}

double raw_expectation(const ShotCounts& counts, const PauliSum& diagonal) {
    double total = 0.0;
    for (const auto& term : diagonal.terms()) {
        require_z_string(term.string);
        const auto support = term.string.support();
        total += term.coefficient * parity_mean(counts, support);
    }
    return total;
}

double mitigated_expectation(const ShotCounts& noisy_counts, const PauliSum& diagonal,
                             const ReadoutNoiseModel& model) {
    double total = 0.0;
    for (const auto& term : diagonal.terms()) {
        total += term.coefficient * raw_expectation(noisy_counts, correct_operator(term.string, model));
    }
    return total;
}

std::string_view setting_name(MeasurementSetting setting) noexcept {
    return setting == MeasurementSetting::Computational ? "computational" : "hadamard";
}

ParametricCircuit basis_rotation(MeasurementSetting setting, std::size_t num_qubits) {
    ParametricCircuit circuit(num_qubits);
    if (setting == MeasurementSetting::Hadamard) {
        for (std::size_t q = 0; q < num_qubits; ++q) circuit.add(GateKind::H, {q});
    }
    return circuit;
}

std::map<MeasurementSetting, PauliSum> split_settings(const PauliSum& hamiltonian) {
    std::map<MeasurementSetting, PauliSum> out;
    for (const auto& term : hamiltonian.terms()) {
        const PauliString& s = term.string;
        if (s.only('Z')) {
            out[MeasurementSetting::Computational].add(term.coefficient, s);
        } else if (s.only('X')) {
            PauliString rotated;
            for (std::size_t q : s.support()) rotated.set(q, 'Z');
            out[MeasurementSetting::Hadamard].add(term.coefficient, rotated);
        } else {
            throw DataError("unsupported Hamiltonian term '" + s.to_string() +
                            "': only pure Z-strings and pure X-strings can be measured");
        }
    }
    return out;
}

std::map<MeasurementSetting, MitigatedOperator> preprocess_hamiltonian(const PauliSum& hamiltonian,
                                                                      const ReadoutNoiseModel& model) {
    std::map<MeasurementSetting, MitigatedOperator> out;
    for (auto& [setting, diagonal] : split_settings(hamiltonian)) {
        out[setting] = MitigatedOperator{diagonal, correct_operator(diagonal, model)};
    }
    return out;
}

Executor simulated_executor(ReadoutNoiseModel model) {
    return [model = std::move(model)](const ParametricCircuit& circuit, std::uint64_t shots, Rng& rng) {
        const QuantumState state = evaluate_circuit(circuit, {});
        return apply_readout_noise(sample_measurements(state, shots, rng), model, rng);
    };
}

CalibrationRecord calibrate(const Executor& executor, std::size_t num_qubits, std::uint64_t shots,
                            std::uint64_t seed, std::uint64_t run_index) {
    if (shots == 0) throw DataError("calibration shots must be positive");
    ParametricCircuit zeros(num_qubits);
    ParametricCircuit ones(num_qubits);
    for (std::size_t q = 0; q < num_qubits; ++q) ones.add(GateKind::X, {q});

    Rng rng(seed);
    const ShotCounts from_zero = executor(zeros, shots, rng);
    const ShotCounts from_one = executor(ones, shots, rng);

    const double n = static_cast<double>(shots);
    std::vector<QubitReadout> estimates(num_qubits);
    CalibrationRecord record;
    record.shots = shots;
    record.run_index = run_index;
    for (std::size_t q = 0; q < num_qubits; ++q) {
        std::uint64_t read_one = 0;
        for (const auto& [outcome, count] : from_zero.counts()) read_one += ((outcome >> q) & 1U) ? count : 0;
        std::uint64_t read_zero = 0;
        for (const auto& [outcome, count] : from_one.counts()) read_zero += ((outcome >> q) & 1U) ? 0 : count;
        const double p0 = static_cast<double>(read_one) / n;
        const double p1 = static_cast<double>(read_zero) / n;
        estimates[q] = {p0, p1};
        record.stderr0.push_back(std::sqrt(p0 * (1.0 - p0) / n));
        record.stderr1.push_back(std::sqrt(p1 * (1.0 - p1) / n));
    }
    record.model = ReadoutNoiseModel(std::move(estimates));
    return record;
}

MitigatedValue mitigated_expectation(const ShotCounts& noisy_counts, const PauliSum& diagonal,
                                     const CalibrationRecord& calibration) {
    MitigatedValue out;
    out.value = mitigated_expectation(noisy_counts, diagonal, calibration.model);
    constexpr double h = 1e-6;
    double variance = 0.0;
    auto qubits = calibration.model.qubits();
    for (std::size_t q = 0; q < qubits.size(); ++q) {
        for (int which = 0; which < 2; ++which) {
            double& p = which == 0 ? qubits[q].p0 : qubits[q].p1;
            const double sigma = which == 0 ? calibration.stderr0.at(q) : calibration.stderr1.at(q);
            if (sigma == 0.0) continue;
            const double saved = p;
            const double lo = std::max(0.0, saved - h);
            const double hi = std::min(1.0, saved + h);
            p = hi;
            const double f_hi = mitigated_expectation(noisy_counts, diagonal, ReadoutNoiseModel(qubits));
            p = lo;
            const double f_lo = mitigated_expectation(noisy_counts, diagonal, ReadoutNoiseModel(qubits));
            p = saved;
            const double derivative = (f_hi - f_lo) / (hi - lo);
            variance += derivative * derivative * sigma * sigma;
        }
    }
    out.calibration_stderr = std::sqrt(variance);
    return out;
}

double t1_forward(double exact_z, double p_t) { return p_t * exact_z + (1.0 - p_t); }

double t1_correct(double noisy_z, double p_t) {
    if (!(p_t > 0.0 && p_t <= 1.0)) throw DataError("relaxation survival probability must lie in (0, 1]");
    return noisy_z / p_t - (1.0 - p_t) / p_t;
}

}  // namespace nisq
