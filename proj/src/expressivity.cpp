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

#include "nisq/expressivity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "nisq/errors.hpp"
#include "nisq/haar.hpp"
#include "nisq/optimize.hpp"

namespace nisq {

std::size_t dim_with_phase(std::size_t num_qubits) { return (std::size_t{1} << (num_qubits + 1)) - 1; }
std::size_t dim_mod_phase(std::size_t num_qubits) { return (std::size_t{1} << (num_qubits + 1)) - 2; }

Eigen::VectorXd GramMatrix::eigenvalues() const {
    if (entries.size() == 0) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(entries, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

namespace {

void check_index(const ParametricCircuit& circuit, std::size_t j) {
    if (j >= circuit.num_parameters()) {
        throw DataError("parameter index " + std::to_string(j) + " out of range for a circuit with " +
                        std::to_string(circuit.num_parameters()) + " parameter(s)");
    }
}

double min_eigenvalue(const Eigen::MatrixXd& s) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
}

}  // namespace

GramMatrix gram_matrix(const ParametricCircuit& circuit, std::span<const double> params,
                       std::span<const std::size_t> subset) {
    if (subset.empty()) throw DataError("Gram matrix needs a nonempty parameter subset");
    for (std::size_t j : subset) check_index(circuit, j);
    const auto tangents = tangent_vectors(circuit, params);
    GramMatrix gram{{subset.begin(), subset.end()}, Eigen::MatrixXd(subset.size(), subset.size())};
    for (std::size_t a = 0; a < subset.size(); ++a) {
        for (std::size_t b = a; b < subset.size(); ++b) {
            const double v = tangents[subset[a]].inner(tangents[subset[b]]).real();
            gram.entries(a, b) = v;
            gram.entries(b, a) = v;
        }
    }
    return gram;
}

Eigen::MatrixXd real_jacobian(const ParametricCircuit& circuit, std::span<const double> params) {
    const auto tangents = tangent_vectors(circuit, params);
    const std::size_t dim = std::size_t{1} << circuit.num_qubits();
    Eigen::MatrixXd jac(2 * dim, tangents.size());
    for (std::size_t j = 0; j < tangents.size(); ++j) {
        for (std::size_t i = 0; i < dim; ++i) {
            jac(i, j) = tangents[j][i].real();
            jac(dim + i, j) = tangents[j][i].imag();
        }
    }
    return jac;
}

// ---------------------------------------------------------------------------

namespace {

struct UnitaryInsertion {
    double beta = 0.0;
    QuantumState state;  // rest * U * prefix |0>
};

// Unitary decomposition of d_j C; see the header.
std::vector<UnitaryInsertion> unitary_insertions(const ParametricCircuit& circuit,
                                                 std::span<const double> params, std::size_t j) {
    const auto& gates = circuit.gates();
    std::vector<UnitaryInsertion> out;
    QuantumState prefix(circuit.num_qubits());
    auto finish = [&](QuantumState s, std::size_t position) {
        for (std::size_t g = position + 1; g < gates.size(); ++g) apply_gate(s, gates[g], gate_angle(gates[g], params));
        return s;
    };
    for (std::size_t g = 0; g < gates.size(); ++g) {
        const Gate& gate = gates[g];
        apply_gate(prefix, gate, gate_angle(gate, params));
        if (gate.param != j) continue;
        const char axis = rotation_axis(gate.kind);
        if (!is_controlled(gate.kind)) {
            QuantumState s = prefix;
            apply_pauli(s, gate.qubits[0], axis);
            out.push_back({-0.5, finish(std::move(s), g)});
        } else {
            QuantumState plain = prefix;
            apply_pauli(plain, gate.qubits[1], axis);
            QuantumState with_z = plain;
            apply_pauli(with_z, gate.qubits[0], 'Z');
            out.push_back({-0.25, finish(std::move(plain), g)});
            out.push_back({0.25, finish(std::move(with_z), g)});
        }
    }
    return out;
}

}  // namespace

double GramEntrySample::value() const {
    double v = 0.0;
    for (const auto& o : overlaps) v += o.weight * o.estimate();
    return v;
}

double GramEntrySample::standard_error() const {
    double var = 0.0;
    for (const auto& o : overlaps) {
        const double p = static_cast<double>(o.successes) / static_cast<double>(o.shots);
        var += o.weight * o.weight * 4.0 * p * (1.0 - p) / static_cast<double>(o.shots);
    }
    return std::sqrt(var);
}

GramEntrySample sample_gram_entry(const ParametricCircuit& circuit, std::span<const double> params,
                                  std::size_t j, std::size_t l, std::uint64_t shots, Rng& rng) {
    if (shots == 0) throw DataError("shots must be positive");
    check_index(circuit, j);
    check_index(circuit, l);
    if (params.size() != circuit.num_parameters()) throw DataError("parameter vector has the wrong length");
    const auto left = unitary_insertions(circuit, params, j);
    const auto right = j == l ? left : unitary_insertions(circuit, params, l);
    GramEntrySample sample;
    for (const auto& a : left) {
        for (const auto& b : right) {
            OverlapSample o;
            o.weight = a.beta * b.beta;
            o.exact = a.state.inner(b.state).real();
            o.shots = shots;
            const double p = std::clamp((1.0 + o.exact) / 2.0, 0.0, 1.0);
            o.successes = rng.binomial(shots, p);
            sample.overlaps.push_back(o);
        }
    }
    return sample;
}

double estimate_gram_entry(const ParametricCircuit& circuit, std::span<const double> params,
                           std::size_t j, std::size_t l, std::uint64_t shots, std::uint64_t seed) {
    Rng rng(seed);
    return sample_gram_entry(circuit, params, j, l, shots, rng).value();
}

// ---------------------------------------------------------------------------

double sampled_epsilon(std::uint64_t shots) { return 5.0 / (4.0 * std::sqrt(static_cast<double>(shots))); }

std::vector<std::size_t> ExpressivityReport::independent_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < verdicts.size(); ++j) {
        if (verdicts[j].independent) out.push_back(j);
    }
    return out;
}

std::vector<std::size_t> ExpressivityReport::redundant_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < verdicts.size(); ++j) {
        if (!verdicts[j].independent) out.push_back(j);
    }
    return out;
}

std::vector<double> ExpressivityReport::independent_point() const {
    std::vector<double> out;
    for (std::size_t j : independent_indices()) out.push_back(point.at(j));
    return out;
}

namespace {

// Lazily computed symmetric Gram entries, exact or shot-based.
class GramOracle {
  public:
    GramOracle(const ParametricCircuit& circuit, std::span<const double> params, const ClassifyOptions& options)
        : circuit_(circuit), params_(params), options_(options) {
        if (options.mode == GramMode::Exact) tangents_ = tangent_vectors(circuit, params);
    }

    double operator()(std::size_t j, std::size_t l) {
        if (j > l) std::swap(j, l);
        const std::uint64_t key = static_cast<std::uint64_t>(j) * circuit_.num_parameters() + l;
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        double v = 0.0;
        if (options_.mode == GramMode::Exact) {
            v = tangents_[j].inner(tangents_[l]).real();
        } else {
            Rng rng = Rng::stream(options_.seed, key);
            v = sample_gram_entry(circuit_, params_, j, l, options_.shots, rng).value();
        }
        cache_.emplace(key, v);
        return v;
    }

    std::size_t evaluated() const noexcept { return cache_.size(); }

  private:
    const ParametricCircuit& circuit_;
    std::span<const double> params_;
    const ClassifyOptions& options_;
    std::vector<QuantumState> tangents_;
    std::unordered_map<std::uint64_t, double> cache_;
};

}  // namespace

ExpressivityReport classify_parameters(const ParametricCircuit& circuit, std::span<const double> params,
                                       const ClassifyOptions& options) {
    if (!(options.epsilon > 0.0)) throw DataError("epsilon must be positive");
    if (params.size() != circuit.num_parameters()) {
        throw DataError("circuit has " + std::to_string(circuit.num_parameters()) + " parameter(s) but " +
                        std::to_string(params.size()) + " value(s) were given");
    }
    if (options.mode == GramMode::Sampled && options.shots == 0) throw DataError("shots must be positive");

    ExpressivityReport report;
    report.point.assign(params.begin(), params.end());
    report.epsilon = options.epsilon;
    report.mode = options.mode;
    report.shots = options.mode == GramMode::Sampled ? options.shots : 0;
    report.dim_target = options.dim_target.value_or(dim_with_phase(circuit.num_qubits()));

    GramOracle gram(circuit, params, options);
    std::vector<std::size_t> accepted;
    for (std::size_t j = 0; j < circuit.num_parameters(); ++j) {
        ParameterVerdict verdict{circuit.parameter_names()[j], false, std::nullopt};
        if (options.stop_at_target && accepted.size() >= report.dim_target) {
            report.verdicts.push_back(std::move(verdict));
            continue;
        }
        const std::size_t k = accepted.size() + 1;
        Eigen::MatrixXd s(k, k);
        for (std::size_t a = 0; a < k; ++a) {
            const std::size_t pa = a < accepted.size() ? accepted[a] : j;
            for (std::size_t b = a; b < k; ++b) {
                const std::size_t pb = b < accepted.size() ? accepted[b] : j;
                s(a, b) = s(b, a) = gram(pa, pb);
            }
        }
        const double lambda = min_eigenvalue(s);
        verdict.min_eigenvalue = lambda;
        verdict.independent = lambda >= options.epsilon;
        if (verdict.independent) accepted.push_back(j);
        report.verdicts.push_back(std::move(verdict));
    }
    report.independent_count = accepted.size();
    report.maximally_expressive = report.independent_count == report.dim_target;
    report.gram_entries = gram.evaluated();
    return report;
}

std::vector<double> random_point(std::size_t num_parameters, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> point(num_parameters);
    for (double& v : point) v = rng.uniform(0.0, 2.0 * std::numbers::pi);
    return point;
}

ParametricCircuit remove_redundant(const ParametricCircuit& circuit, const ExpressivityReport& report,
                                   const std::map<std::string, double>& freeze_values) {
    if (report.verdicts.size() != circuit.num_parameters()) {
        throw DataError("report covers " + std::to_string(report.verdicts.size()) + " parameter(s), circuit has " +
                        std::to_string(circuit.num_parameters()));
    }
    for (std::size_t j = 0; j < circuit.num_parameters(); ++j) {
        if (report.verdicts[j].param != circuit.parameter_names()[j]) {
            throw DataError("report does not belong to this circuit (parameter '" + report.verdicts[j].param + "')");
        }
    }
    for (const auto& [name, value] : freeze_values) {
        const auto index = circuit.parameter_index(name);
        if (!index) throw DataError("freeze value for unknown parameter '" + name + "'");
        if (report.verdicts[*index].independent) {
            throw DataError("freeze value supplied for independent parameter '" + name + "'");
        }
    }

    ParametricCircuit reduced(circuit.num_qubits());
    std::vector<std::optional<std::size_t>> remap(circuit.num_parameters());
    for (std::size_t j = 0; j < circuit.num_parameters(); ++j) {
        if (report.verdicts[j].independent) remap[j] = reduced.add_parameter(circuit.parameter_names()[j]);
    }
    for (const Gate& gate : circuit.gates()) {
        Gate copy = gate;
        if (gate.param) {
            copy.param = remap[*gate.param];
            if (!copy.param) {
                const auto it = freeze_values.find(circuit.parameter_names()[*gate.param]);
                copy.value = it == freeze_values.end() ? 0.0 : it->second;
            }
        }
        reduced.append(std::move(copy));
    }
    return reduced;
}

SymmetryRemoval remove_symmetry(const ParametricCircuit& symmetry, const ParametricCircuit& circuit,
                                std::span<const double> params, const ClassifyOptions& options) {
    if (symmetry.num_qubits() != circuit.num_qubits()) {
        throw DataError("symmetry gates and circuit act on different qubit counts");
    }
    for (const auto& name : symmetry.parameter_names()) {
        if (circuit.parameter_index(name)) throw DataError("symmetry parameter '" + name + "' clashes with the circuit");
    }
    if (params.size() != circuit.num_parameters()) throw DataError("parameter vector has the wrong length");

    const ParametricCircuit augmented = symmetry.concatenated(circuit);
    std::vector<double> point = random_point(symmetry.num_parameters(), derive_seed(options.seed, 0x5E77));
    point.insert(point.end(), params.begin(), params.end());

    ClassifyOptions inner = options;
    inner.stop_at_target = false;
    const std::size_t full_target = options.dim_target.value_or(dim_with_phase(circuit.num_qubits()));
    inner.dim_target = full_target;
    const ExpressivityReport full = classify_parameters(augmented, point, inner);

    const std::size_t ns = symmetry.num_parameters();
    std::size_t symmetry_independent = 0;
    for (std::size_t j = 0; j < ns; ++j) symmetry_independent += full.verdicts[j].independent ? 1 : 0;

    ExpressivityReport report = full;
    report.point.assign(params.begin(), params.end());
    report.verdicts.assign(full.verdicts.begin() + static_cast<std::ptrdiff_t>(ns), full.verdicts.end());
    report.independent_count = full.independent_count - symmetry_independent;
    report.dim_target = full_target - symmetry_independent;
    report.maximally_expressive = report.independent_count == report.dim_target;

    return {remove_redundant(circuit, report), std::move(report)};
}

SymmetryRemoval remove_phase_symmetry(const ParametricCircuit& circuit, std::span<const double> params,
                                      const ClassifyOptions& options) {
    std::string name = "phase";
    while (circuit.parameter_index(name)) name = "_" + name;
    ParametricCircuit phase(circuit.num_qubits());
    phase.add(GateKind::RZ, {0}, name);
    return remove_symmetry(phase, circuit, params, options);
}

namespace {

// Uniformly controlled rotation on `target` controlled by qubits
// [0, num_controls): alternating free rotations and CNOTs in Gray-code order.
void append_uniformly_controlled(ParametricCircuit& circuit, GateKind rotation, std::size_t target,
                                 std::size_t num_controls, std::size_t& counter) {
    const std::size_t count = std::size_t{1} << num_controls;
    for (std::size_t i = 0; i < count; ++i) {
        circuit.add(rotation, {target}, "t" + std::to_string(++counter));
        const std::size_t control =
            i + 1 < count ? static_cast<std::size_t>(std::countr_zero(i + 1)) : num_controls - 1;
        circuit.add(GateKind::CNOT, {control, target});
    }
}

}  // namespace

ParametricCircuit inductive_ansatz(std::size_t num_qubits, bool include_phase, std::uint64_t seed) {
    if (num_qubits == 0) throw DataError("the ansatz needs at least one qubit");
    ParametricCircuit circuit(num_qubits);
    std::size_t counter = 0;
    circuit.add(GateKind::RX, {0}, "t" + std::to_string(++counter));
    circuit.add(GateKind::RZ, {0}, "t" + std::to_string(++counter));
    circuit.add(GateKind::RY, {0}, "t" + std::to_string(++counter));
    for (std::size_t q = 1; q < num_qubits; ++q) {
        append_uniformly_controlled(circuit, GateKind::RY, q, q, counter);
        append_uniformly_controlled(circuit, GateKind::RZ, q, q, counter);
    }

    ClassifyOptions options;
    options.seed = seed;
    const auto point = random_point(circuit.num_parameters(), seed);
    if (!include_phase) {
        options.dim_target = dim_with_phase(num_qubits);
        circuit = remove_phase_symmetry(circuit, point, options).circuit;
    }
    const std::size_t target = include_phase ? dim_with_phase(num_qubits) : dim_mod_phase(num_qubits);
    options.dim_target = target;
    const auto check = classify_parameters(circuit, random_point(circuit.num_parameters(), derive_seed(seed, 1)), options);
    if (check.independent_count != target || check.independent_count != circuit.num_parameters()) {
        throw std::runtime_error("inductive ansatz on " + std::to_string(num_qubits) + " qubit(s) has " +
                                 std::to_string(check.independent_count) + " independent parameter(s), expected " +
                                 std::to_string(target));
    }
    return circuit;
}

ParametricCircuit efficient_su2(std::size_t num_qubits, std::size_t reps) {
    ParametricCircuit circuit(num_qubits);
    std::size_t counter = 0;
    auto rotation_layer = [&] {
        for (std::size_t q = 0; q < num_qubits; ++q) circuit.add(GateKind::RY, {q}, "t" + std::to_string(++counter));
        for (std::size_t q = 0; q < num_qubits; ++q) circuit.add(GateKind::RZ, {q}, "t" + std::to_string(++counter));
    };
    rotation_layer();
    for (std::size_t r = 0; r < reps; ++r) {
        for (std::size_t q = 0; q + 1 < num_qubits; ++q) circuit.add(GateKind::CNOT, {q, q + 1});
        rotation_layer();
    }
    return circuit;
}

double phase_distance(const QuantumState& a, const QuantumState& b) {
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::abs(a.inner(b))));
}

ApproximationBounds best_approximation_bounds(const ParametricCircuit& circuit, std::size_t n_sites,
                                              std::size_t n_targets, std::uint64_t seed,
                                              const BoundsOptions& options) {
    if (n_targets == 0) throw DataError("n_targets must be positive");
    std::vector<QuantumState> targets;
    targets.reserve(n_targets);
    for (std::size_t t = 0; t < n_targets; ++t) {
        targets.push_back(haar_random_state(circuit.num_qubits(), derive_seed(seed, 0x7A26E7 + t)));
    }
    return best_approximation_bounds(circuit, targets, n_sites, seed, options);
}

ApproximationBounds best_approximation_bounds(const ParametricCircuit& circuit,
                                              std::span<const QuantumState> targets, std::size_t n_sites,
                                              std::uint64_t seed, const BoundsOptions& options) {
    if (n_sites == 0) throw DataError("n_sites must be positive");
    if (targets.empty()) throw DataError("at least one target state is required");

    std::vector<std::vector<double>> site_points;
    std::vector<QuantumState> sites;
    for (std::size_t s = 0; s < n_sites; ++s) {
        site_points.push_back(random_point(circuit.num_parameters(), derive_seed(seed, s)));
        sites.push_back(evaluate_circuit(circuit, site_points.back()));
    }

    ApproximationBounds bounds;
    for (const QuantumState& target : targets) {
        if (target.num_qubits() != circuit.num_qubits()) throw DataError("target state has the wrong size");
        std::size_t nearest = 0;
        double nearest_distance = std::numeric_limits<double>::infinity();
        for (std::size_t s = 0; s < n_sites; ++s) {
            const double d = phase_distance(target, sites[s]);
            if (d < nearest_distance) {
                nearest_distance = d;
                nearest = s;
            }
        }
        const auto infidelity = [&](std::span<const double> theta) {
            return 1.0 - std::abs(target.inner(evaluate_circuit(circuit, theta)));
        };
        CompassSearchOptions search;
        search.max_iterations = options.max_iterations;
        search.step_tolerance = options.tolerance;
        search.target_value = 0.0;
        const auto refined = compass_search(infidelity, site_points[nearest], search);
        const double refined_distance =
            std::min(nearest_distance, std::sqrt(std::max(0.0, 2.0 * refined.value)));
        bounds.upper = std::max(bounds.upper, nearest_distance);
        bounds.lower = std::max(bounds.lower, refined_distance);
    }
    return bounds;
}

}  // namespace nisq
