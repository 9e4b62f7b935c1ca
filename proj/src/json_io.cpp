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

#include "nisq/json_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "nisq/errors.hpp"

namespace nisq {

namespace {

constexpr const char* kBitOrder = "little-endian: the last character is qubit 0";

template <typename T>
T get(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw DataError(std::string("missing key '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("bad value for '") + key + "': " + e.what());
    }
}

std::size_t get_index(const Json& j, const char* key) {
    const Json& v = j.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        throw DataError(std::string("'") + key + "' must be a nonnegative integer");
    }
    return v.get<std::size_t>();
}

}  // namespace

Json circuit_to_json(const ParametricCircuit& circuit) {
    Json gates = Json::array();
    for (const Gate& gate : circuit.gates()) {
        Json g{{"gate", std::string(gate_name(gate.kind))}, {"qubits", gate.qubits}};
        if (gate.param) {
            g["param"] = circuit.parameter_names()[*gate.param];
        } else if (is_rotation(gate.kind)) {
            g["value"] = gate.value;
        }
        gates.push_back(std::move(g));
    }
    return Json{{"num_qubits", circuit.num_qubits()}, {"gates", gates}, {"parameter_order", circuit.parameter_names()}};
}

ParametricCircuit circuit_from_json(const Json& j) {
    if (!j.is_object()) throw DataError("circuit must be a JSON object");
    if (!j.contains("num_qubits")) throw DataError("missing key 'num_qubits'");
    ParametricCircuit circuit(get_index(j, "num_qubits"));
    std::set<std::string> declared;
    if (j.contains("parameter_order")) {
        for (const auto& name : get<std::vector<std::string>>(j, "parameter_order")) {
            if (!declared.insert(name).second) throw DataError("parameter '" + name + "' declared twice");
            circuit.add_parameter(name);
        }
    }
    const Json& gates = j.contains("gates") ? j.at("gates") : Json::array();
    if (!gates.is_array()) throw DataError("'gates' must be an array");
    for (const Json& g : gates) {
        const GateKind kind = parse_gate_kind(get<std::string>(g, "gate"));
        const auto qubits = get<std::vector<std::size_t>>(g, "qubits");
        if (g.contains("param") && g.contains("value")) throw DataError("a gate has both 'param' and 'value'");
        if (g.contains("param")) {
            const auto name = get<std::string>(g, "param");
            if (j.contains("parameter_order") && !declared.contains(name)) {
                throw DataError("parameter '" + name + "' is missing from parameter_order");
            }
            circuit.add(kind, qubits, name);
        } else if (is_rotation(kind)) {
            if (!g.contains("value")) throw DataError("rotation '" + std::string(gate_name(kind)) + "' needs 'param' or 'value'");
            circuit.add(kind, qubits, get<double>(g, "value"));
        } else {
            if (g.contains("value")) throw DataError("gate '" + std::string(gate_name(kind)) + "' takes no angle");
            circuit.add(kind, qubits);
        }
    }
    circuit.validate();
    return circuit;
}

Json report_to_json(const ExpressivityReport& report) {
    Json verdicts = Json::array();
    for (const auto& v : report.verdicts) {
        verdicts.push_back({{"param", v.param},
                            {"independent", v.independent},
                            {"min_eigenvalue", v.min_eigenvalue ? Json(*v.min_eigenvalue) : Json(nullptr)}});
    }
    return Json{{"point", report.point},
                {"epsilon", report.epsilon},
                {"mode", report.mode == GramMode::Exact ? "exact" : "sampled"},
                {"shots", report.shots},
                {"verdicts", verdicts},
                {"independent_count", report.independent_count},
                {"dim_target", report.dim_target},
                {"maximally_expressive", report.maximally_expressive},
                {"gram_entries", report.gram_entries}};
}

ExpressivityReport report_from_json(const Json& j) {
    ExpressivityReport r;
    r.point = get<std::vector<double>>(j, "point");
    r.epsilon = get<double>(j, "epsilon");
    const auto mode = j.contains("mode") ? get<std::string>(j, "mode") : std::string("exact");
    if (mode != "exact" && mode != "sampled") throw DataError("unknown classification mode '" + mode + "'");
    r.mode = mode == "exact" ? GramMode::Exact : GramMode::Sampled;
    r.shots = j.contains("shots") ? get<std::uint64_t>(j, "shots") : 0;
    for (const Json& v : get<Json>(j, "verdicts")) {
        ParameterVerdict verdict{get<std::string>(v, "param"), get<bool>(v, "independent"), std::nullopt};
        if (v.contains("min_eigenvalue") && !v.at("min_eigenvalue").is_null()) {
            verdict.min_eigenvalue = get<double>(v, "min_eigenvalue");
        }
        r.verdicts.push_back(std::move(verdict));
    }
    r.independent_count = get<std::size_t>(j, "independent_count");
    r.dim_target = get<std::size_t>(j, "dim_target");
    r.maximally_expressive = get<bool>(j, "maximally_expressive");
    r.gram_entries = j.contains("gram_entries") ? get<std::size_t>(j, "gram_entries") : 0;
    return r;
}

Json noise_to_json(const ReadoutNoiseModel& model) {
    Json qubits = Json::array();
    for (std::size_t q = 0; q < model.num_qubits(); ++q) {
        qubits.push_back({{"q", q}, {"p0", model[q].p0}, {"p1", model[q].p1}});
    }
    return Json{{"qubits", qubits}};
}

ReadoutNoiseModel noise_from_json(const Json& j) {
    const Json qubits = get<Json>(j, "qubits");
    if (!qubits.is_array()) throw DataError("'qubits' must be an array");
    std::vector<std::optional<QubitReadout>> slots(qubits.size());
    for (const Json& entry : qubits) {
        const std::size_t q = get_index(entry, "q");
        if (q >= slots.size()) throw DataError("qubit index " + std::to_string(q) + " leaves a gap in the noise model");
        if (slots[q]) throw DataError("qubit " + std::to_string(q) + " listed twice in the noise model");
        slots[q] = QubitReadout{get<double>(entry, "p0"), get<double>(entry, "p1")};
    }
    std::vector<QubitReadout> out;
    for (auto& s : slots) out.push_back(*s);
    return ReadoutNoiseModel(std::move(out));
}

Json calibration_to_json(const CalibrationRecord& record) {
    Json j = noise_to_json(record.model);
    for (std::size_t q = 0; q < record.model.num_qubits(); ++q) {
        j["qubits"][q]["stderr0"] = record.stderr0.at(q);
        j["qubits"][q]["stderr1"] = record.stderr1.at(q);
    }
    j["shots"] = record.shots;
    j["run_index"] = record.run_index;
    return j;
}

CalibrationRecord calibration_from_json(const Json& j) {
    CalibrationRecord record;
    record.model = noise_from_json(j);
    record.stderr0.resize(record.model.num_qubits());
    record.stderr1.resize(record.model.num_qubits());
    for (const Json& entry : j.at("qubits")) {
        const std::size_t q = get_index(entry, "q");
        record.stderr0[q] = get<double>(entry, "stderr0");
        record.stderr1[q] = get<double>(entry, "stderr1");
    }
    record.shots = get<std::uint64_t>(j, "shots");
    record.run_index = get<std::uint64_t>(j, "run_index");
    return record;
}

Json counts_to_json(const ShotCounts& counts) {
    Json table = Json::object();
    for (const auto& [outcome, n] : counts.counts()) table[counts.bitstring(outcome)] = n;
    return Json{{"num_qubits", counts.num_qubits()}, {"bit_order", kBitOrder}, {"counts", table}};
}

ShotCounts counts_from_json(const Json& j) {
    ShotCounts counts(get_index(j, "num_qubits"));
    const Json table = get<Json>(j, "counts");
    if (!table.is_object()) throw DataError("'counts' must be an object");
    for (const auto& [bits, n] : table.items()) {
        if (!n.is_number_integer() || n.get<long long>() < 0) throw DataError("count for '" + bits + "' must be a nonnegative integer");
        counts.add(bits, n.get<std::uint64_t>());
    }
    return counts;
}

Json pauli_sum_to_json(const PauliSum& sum) {
    Json terms = Json::array();
    for (const auto& t : sum.terms()) terms.push_back({{"coefficient", t.coefficient}, {"pauli", t.string.to_string()}});
    return Json{{"terms", terms}};
}

PauliSum pauli_sum_from_json(const Json& j) {
    PauliSum sum;
    const Json terms = get<Json>(j, "terms");
    if (!terms.is_array()) throw DataError("'terms' must be an array");
    for (const Json& t : terms) {
        const auto string = PauliString::parse(get<std::string>(t, "pauli"));
        if (std::any_of(sum.terms().begin(), sum.terms().end(), [&](const PauliTerm& x) { return x.string == string; })) {
            throw DataError("Pauli string '" + string.to_string() + "' appears twice");
        }
        sum.add(get<double>(t, "coefficient"), string);
    }
    return sum;
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw DataError("malformed JSON in '" + path.string() + "': " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path.string() + "'");
    out << text;
}

std::string format_real(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

}  // namespace nisq
