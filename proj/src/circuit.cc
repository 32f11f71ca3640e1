// Copyright 2026 The qgd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgd/circuit.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qgd/errors.h"

namespace qgd {

namespace {

constexpr double kPayloadTolerance = 1e-12;

Mat2 pauli_x() {
    Mat2 x;
    x << 0, 1, 1, 0;
    return x;
}

void check_qubit(int q, int num_qubits, const char *what) {
    if (q < 1 || q > num_qubits) {
        throw InvalidGateError(std::string(what) + " qubit " + std::to_string(q) + " outside 1.." +
                               std::to_string(num_qubits));
    }
}

void check_unitary(const Mat2 &m) {
    double deviation = (m.adjoint() * m - Mat2::Identity()).norm();
    if (!(deviation <= kPayloadTolerance)) {
        throw InvalidGateError("gate payload is not unitary (deviation " + std::to_string(deviation) + ")");
    }
}

}  // namespace

void validate_gate(const Gate &gate, int num_qubits) {
    std::visit(
        [&](const auto &g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, SingleQubitGate>) {
                check_qubit(g.target, num_qubits, "target");
                check_unitary(g.matrix);
            } else if constexpr (std::is_same_v<T, CnotGate>) {
                check_qubit(g.control, num_qubits, "control");
                check_qubit(g.target, num_qubits, "target");
                if (g.control == g.target) {
                    throw InvalidGateError("cnot control equals target");
                }
            } else {
                g.spec.validate(num_qubits);
                check_unitary(g.matrix);
                if (std::abs(g.matrix.determinant() - 1.0) > kPayloadTolerance) {
                    throw InvalidGateError("controlled payload determinant is not 1");
                }
            }
        },
        gate);
}

void validate_circuit(const Circuit &circuit) {
    if (circuit.num_qubits < 1 || circuit.num_qubits > kMaxQubits) {
        throw InvalidGateError("circuit qubit count " + std::to_string(circuit.num_qubits) + " outside 1.." +
                               std::to_string(kMaxQubits));
    }
    for (const auto &gate : circuit.gates) {
        validate_gate(gate, circuit.num_qubits);
    }
}

Gate adjoint(const Gate &gate) {
    return std::visit(
        [](const auto &g) -> Gate {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, CnotGate>) {
                return g;
            } else {
                T inv = g;
                inv.matrix = g.matrix.adjoint();
                return inv;
            }
        },
        gate);
}

void apply_gate_in_place(Matrix &a, const Gate &gate) {
    std::visit(
        [&](const auto &g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, SingleQubitGate>) {
                apply_controlled_in_place(a, ControlSpec{g.target, {}}, g.matrix);
            } else if constexpr (std::is_same_v<T, CnotGate>) {
                apply_controlled_in_place(a, ControlSpec{g.target, {{g.control, 1}}}, pauli_x());
            } else {
                apply_controlled_in_place(a, g.spec, g.matrix);
            }
        },
        gate);
}

UnitaryMatrix simulate(const Circuit &circuit) {
    validate_circuit(circuit);
    Eigen::Index dim = Eigen::Index{1} << circuit.num_qubits;
    Matrix acc = Matrix::Identity(dim, dim);
    for (const auto &gate : circuit.gates) {
        apply_gate_in_place(acc, gate);
    }
    acc *= std::polar(1.0, circuit.global_phase.angle);
    return UnitaryMatrix(std::move(acc));
}

Circuit concatenate(const Circuit &a, const Circuit &b) {
    if (a.num_qubits != b.num_qubits) {
        throw std::invalid_argument("concatenate: qubit count mismatch");
    }
    Circuit out = a;
    out.gates.insert(out.gates.end(), b.gates.begin(), b.gates.end());
    out.global_phase.angle = wrap_angle(a.global_phase.angle + b.global_phase.angle);
    return out;
}

GateCounts count_gates(const Circuit &circuit) {
    GateCounts counts;
    for (const auto &gate : circuit.gates) {
        if (std::holds_alternative<SingleQubitGate>(gate)) {
            ++counts.single_qubit;
        } else if (std::holds_alternative<CnotGate>(gate)) {
            ++counts.cnot;
        } else {
            ++counts.controlled;
            ++counts.by_controls[std::get<ControlledU2Gate>(gate).spec.controls.size()];
        }
    }
    return counts;
}

// ---------------------------------------------------------------------------------------------------
// JSON

namespace {

using nlohmann::json;

json matrix_to_json(const Mat2 &m) {
    json out = json::array();
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            out.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
        }
    }
    return out;
}

[[noreturn]] void schema_error(const std::string &field, const std::string &what) {
    throw ParseError("circuit field '" + field + "': " + what);
}

const json &require(const json &obj, const char *key, const std::string &path) {
    if (!obj.is_object() || !obj.contains(key)) {
        schema_error(path + "." + key, "missing");
    }
    return obj.at(key);
}

int read_int(const json &obj, const char *key, const std::string &path) {
    const json &v = require(obj, key, path);
    if (!v.is_number_integer()) {
        schema_error(path + "." + key, "expected an integer");
    }
    return v.get<int>();
}

double read_number(const json &v, const std::string &path) {
    if (!v.is_number()) {
        schema_error(path, "expected a number");
    }
    return v.get<double>();
}

Mat2 matrix_from_json(const json &obj, const std::string &path) {
    const json &entries = require(obj, "matrix", path);
    std::string field = path + ".matrix";
    if (!entries.is_array() || entries.size() != 4) {
        schema_error(field, "expected four [re, im] pairs");
    }
    Mat2 m;
    for (std::size_t e = 0; e < 4; ++e) {
        const json &pair = entries[e];
        std::string sub = field + "[" + std::to_string(e) + "]";
        if (!pair.is_array() || pair.size() != 2) {
            schema_error(sub, "expected [re, im]");
        }
        m(static_cast<Eigen::Index>(e / 2), static_cast<Eigen::Index>(e % 2)) =
            Complex(read_number(pair[0], sub + "[0]"), read_number(pair[1], sub + "[1]"));
    }
    return m;
}

}  // namespace

std::string serialize_circuit(const Circuit &circuit) {
    json doc;
    doc["n"] = circuit.num_qubits;
    doc["global_phase"] = circuit.global_phase.angle;
    json gates = json::array();
    for (const auto &gate : circuit.gates) {
        json g;
        std::visit(
            [&](const auto &x) {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, SingleQubitGate>) {
                    g["kind"] = "single";
                    g["target"] = x.target;
                    g["matrix"] = matrix_to_json(x.matrix);
                } else if constexpr (std::is_same_v<T, CnotGate>) {
                    g["kind"] = "cnot";
                    g["control"] = x.control;
                    g["target"] = x.target;
                } else {
                    g["kind"] = "controlled";
                    g["target"] = x.spec.target;
                    json controls = json::array();
                    for (const auto &c : x.spec.controls) {
                        controls.push_back({{"qubit", c.qubit}, {"value", c.value}});
                    }
                    g["controls"] = controls;
                    g["matrix"] = matrix_to_json(x.matrix);
                }
            },
            gate);
        gates.push_back(std::move(g));
    }
    doc["gates"] = std::move(gates);
    return doc.dump(1) + "\n";
}

Circuit parse_circuit(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("circuit document is not valid JSON: ") + e.what());
    }
    Circuit circuit;
    circuit.num_qubits = read_int(doc, "n", "$");
    if (circuit.num_qubits < 1 || circuit.num_qubits > kMaxQubits) {
        schema_error("$.n", "qubit count outside 1.." + std::to_string(kMaxQubits));
    }
    circuit.global_phase.angle = read_number(require(doc, "global_phase", "$"), "$.global_phase");
    const json &gates = require(doc, "gates", "$");
    if (!gates.is_array()) {
        schema_error("$.gates", "expected an array");
    }
    for (std::size_t idx = 0; idx < gates.size(); ++idx) {
        const json &g = gates[idx];
        std::string path = "$.gates[" + std::to_string(idx) + "]";
        const json &kind = require(g, "kind", path);
        if (!kind.is_string()) {
            schema_error(path + ".kind", "expected a string");
        }
        std::string k = kind.get<std::string>();
        Gate gate;
        if (k == "single") {
            gate = SingleQubitGate{read_int(g, "target", path), matrix_from_json(g, path)};
        } else if (k == "cnot") {
            gate = CnotGate{read_int(g, "control", path), read_int(g, "target", path)};
        } else if (k == "controlled") {
            ControlledU2Gate cg;
            cg.spec.target = read_int(g, "target", path);
            const json &controls = require(g, "controls", path);
            if (!controls.is_array()) {
                schema_error(path + ".controls", "expected an array");
            }
            for (std::size_t c = 0; c < controls.size(); ++c) {
                std::string cpath = path + ".controls[" + std::to_string(c) + "]";
                cg.spec.controls.push_back({read_int(controls[c], "qubit", cpath), read_int(controls[c], "value", cpath)});
            }
            cg.matrix = matrix_from_json(g, path);
            gate = std::move(cg);
        } else {
            schema_error(path + ".kind", "unknown gate kind '" + k + "'");
        }
        try {
            validate_gate(gate, circuit.num_qubits);
        } catch (const InvalidGateError &e) {
            schema_error(path, e.what());
        }
        circuit.gates.push_back(std::move(gate));
    }
    return circuit;
}

Circuit read_circuit_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open circuit file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_circuit(buffer.str());
}

void write_circuit_file(const std::string &path, const Circuit &circuit) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write circuit file '" + path + "'");
    }
    out << serialize_circuit(circuit);
}

// ---------------------------------------------------------------------------------------------------
// QASM

U3Angles u3_angles(const Mat2 &u) {
    U3Angles a;
    double c = std::abs(u(0, 0));
    double s = std::abs(u(1, 0));
    a.theta = 2.0 * std::atan2(s, c);
    if (c > kZeroThreshold) {
        a.phase = std::arg(u(0, 0));
        if (s > kZeroThreshold) {
            a.phi = std::arg(u(1, 0)) - a.phase;
            a.lambda = std::arg(-u(0, 1)) - a.phase;
        } else {
            a.phi = 0.0;
            a.lambda = std::arg(u(1, 1)) - a.phase;
        }
    } else {
        a.lambda = 0.0;
        a.phase = std::arg(-u(0, 1));
        a.phi = std::arg(u(1, 0)) - a.phase;
    }
    a.phi = wrap_angle(a.phi);
    a.lambda = wrap_angle(a.lambda);
    return a;
}

std::string export_qasm(const Circuit &circuit, bool emit_identities) {
    validate_circuit(circuit);
    std::ostringstream body;
    double phase = circuit.global_phase.angle;
    char buf[160];
    for (const auto &gate : circuit.gates) {
        if (const auto *g = std::get_if<SingleQubitGate>(&gate)) {
            U3Angles a = u3_angles(g->matrix);
            phase += a.phase;
            if (!emit_identities && (g->matrix - Mat2::Identity()).norm() <= kPayloadTolerance) {
                continue;
            }
            std::snprintf(buf, sizeof(buf), "u3(%.17g,%.17g,%.17g) q[%d];\n", a.theta, a.phi, a.lambda, g->target - 1);
            body << buf;
        } else if (const auto *cx = std::get_if<CnotGate>(&gate)) {
            body << "cx q[" << cx->control - 1 << "],q[" << cx->target - 1 << "];\n";
        } else {
            throw UnsupportedGateError("export_qasm: multi-controlled gate present; expand the circuit first");
        }
    }
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    std::snprintf(buf, sizeof(buf), "// global_phase %.17g\n", wrap_angle(phase));
    out << buf;
    out << "qreg q[" << circuit.num_qubits << "];\n";
    out << body.str();
    return out.str();
}

}  // namespace qgd
