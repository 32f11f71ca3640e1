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

#ifndef QGD_CIRCUIT_H
#define QGD_CIRCUIT_H

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qgd/matrix.h"

namespace qgd {

/// Arbitrary 2x2 unitary on one qubit.
struct SingleQubitGate {
    int target = 1;
    Mat2 matrix = Mat2::Identity();
    bool operator==(const SingleQubitGate &) const = default;
};

struct CnotGate {
    int control = 1;
    int target = 2;
    bool operator==(const CnotGate &) const = default;
};

/// Special-unitary payload applied to the target when every control (either polarity) matches.
struct ControlledU2Gate {
    ControlSpec spec;
    Mat2 matrix = Mat2::Identity();
    bool operator==(const ControlledU2Gate &) const = default;
};

using Gate = std::variant<SingleQubitGate, CnotGate, ControlledU2Gate>;

/// Ordered gate list, first applied first, plus a scalar phase.
///
/// The represented operator is e^{i global_phase} * G_M * ... * G_2 * G_1 where G_1 = gates[0].
struct Circuit {
    int num_qubits = 1;
    std::vector<Gate> gates;
    GlobalPhase global_phase;

    bool operator==(const Circuit &other) const {
        return num_qubits == other.num_qubits && gates == other.gates &&
               global_phase.angle == other.global_phase.angle;
    }
};

/// Throws InvalidGateError for out-of-range qubits, target-in-controls, non-unitary payloads, or a
/// controlled payload whose determinant is not 1 (all within 1e-12).
void validate_gate(const Gate &gate, int num_qubits);
void validate_circuit(const Circuit &circuit);

/// The inverse gate.
Gate adjoint(const Gate &gate);

/// Left-multiplies a (rows indexed by BCB) by the gate's full operator.
void apply_gate_in_place(Matrix &a, const Gate &gate);

/// e^{i phase} G_M ... G_1 as a dense matrix.
UnitaryMatrix simulate(const Circuit &circuit);

/// Appends b's gates after a's and adds the phases.
Circuit concatenate(const Circuit &a, const Circuit &b);

struct GateCounts {
    std::size_t single_qubit = 0;
    std::size_t cnot = 0;
    std::size_t controlled = 0;
    /// Controlled gates by number of controls.
    std::map<std::size_t, std::size_t> by_controls;
};
GateCounts count_gates(const Circuit &circuit);

/// JSON document: {"n", "global_phase", "gates": [...]}. Each gate has "kind" (single|cnot|controlled),
/// qubit fields, and 2x2 payloads as four [re, im] pairs in row-major order. Doubles round-trip exactly.
std::string serialize_circuit(const Circuit &circuit);
/// Throws ParseError naming the offending field.
Circuit parse_circuit(std::string_view text);

Circuit read_circuit_file(const std::string &path);
void write_circuit_file(const std::string &path, const Circuit &circuit);

/// OpenQASM 2.0 with u3/cx instructions. Qubit q maps to q[q-1]. The phase needed to make the QASM
/// program equal the circuit exactly (circuit phase plus the phases dropped by u3) goes in a comment.
/// Throws UnsupportedGateError if a ControlledU2Gate is present.
std::string export_qasm(const Circuit &circuit, bool emit_identities = true);

/// U3(theta, phi, lambda) = [[cos(t/2), -e^{i l} sin(t/2)], [e^{i p} sin(t/2), e^{i(p+l)} cos(t/2)]].
struct U3Angles {
    double theta = 0;
    double phi = 0;
    double lambda = 0;
    /// u = e^{i phase} U3(theta, phi, lambda).
    double phase = 0;
};
U3Angles u3_angles(const Mat2 &u);

}  // namespace qgd

#endif
