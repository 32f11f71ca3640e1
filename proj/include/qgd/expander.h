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

#ifndef QGD_EXPANDER_H
#define QGD_EXPANDER_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qgd/circuit.h"
#include "qgd/matrix.h"

namespace qgd {

Mat2 rz(double angle);
Mat2 ry(double angle);

/// V = Rz(alpha) Ry(theta) Rz(beta) for V in SU(2).
struct EulerAngles {
    double alpha = 0;
    double theta = 0;
    double beta = 0;
};

/// ZYZ angles of a special-unitary matrix. At theta = 0 or pi, beta is set to 0.
EulerAngles euler_zyz(const Mat2 &v);
Mat2 euler_matrix(const EulerAngles &angles);

struct AbcFactors {
    Mat2 a;
    Mat2 b;
    Mat2 c;
};

/// A X B X C = V and A B C = I, with A = Rz(alpha) Ry(theta/2), B = Ry(-theta/2) Rz(-(alpha+beta)/2),
/// C = Rz((beta-alpha)/2). Throws InvalidGateError if v is not special unitary.
AbcFactors abc_decompose(const Mat2 &v);

/// Principal square root of V in SU(2): V = cos(phi) I - i sin(phi) n.sigma with phi in [0, pi] maps to
/// cos(phi/2) I - i sin(phi/2) n.sigma. At V = -I the axis is z.
Mat2 sqrt_su2(const Mat2 &v);

/// Square root of any 2x2 unitary, via sqrt_su2 of its determinant-normalized part.
Mat2 sqrt_u2(const Mat2 &u);

/// Expands a controlled gate into single-qubit gates and CNOTs.
///
/// Negative controls are flipped with X before and after. With k positive controls:
///   k = 0: [V]
///   k = 1: [C, CNOT, B, CNOT, A]
///   k >= 2: C(S) on (last control, target), C^{k-1}(X) onto the last control, C(S^dagger),
///           C^{k-1}(X), C^{k-1}(S) on the target, where S^2 = V; every factor is expanded again.
/// Factors whose payload is not special unitary get an extra phase gate on their control.
/// Throws InvalidGateError if the payload is not special unitary.
std::vector<Gate> expand_gate(const ControlledU2Gate &gate);

/// Gate-wise expansion, order and global phase preserved.
Circuit expand_circuit(const Circuit &circuit);

/// CNOT cost of a k-controlled special-unitary gate.
struct CostModel {
    enum class Kind { Emitted, Linear };
    Kind kind = Kind::Emitted;
    /// Linear model: a*k + b CNOTs for k >= 2.
    std::int64_t a = 0;
    std::int64_t b = 0;

    static CostModel emitted() {
        return {};
    }
    static CostModel linear(std::int64_t a, std::int64_t b) {
        return {Kind::Linear, a, b};
    }
    /// Parses "emitted" or "linear:a,b". Throws std::invalid_argument.
    static CostModel parse(std::string_view text);
    std::string name() const;
};

/// CNOTs for a k-controlled special-unitary gate under the model. Emitted: exactly what expand_gate
/// produces (0, 2, 8, 28, 88, ...). Linear: 0, 2, then a*k + b.
std::uint64_t cnot_cost(int k, const CostModel &model);

/// Single-qubit gates for a k-controlled special-unitary gate with positive controls. Emitted: what
/// expand_gate produces. Linear: 1 for k = 0, cnot_cost + 1 otherwise (one single-qubit layer around
/// each CNOT). Negative-control X conjugations are not included.
std::uint64_t single_qubit_cost(int k, const CostModel &model);

}  // namespace qgd

#endif
