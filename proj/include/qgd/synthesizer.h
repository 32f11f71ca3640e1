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

#ifndef QGD_SYNTHESIZER_H
#define QGD_SYNTHESIZER_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qgd/analytics.h"
#include "qgd/circuit.h"
#include "qgd/matrix.h"

namespace qgd {

/// One step of the diagonalization: nullify Gray position j of Gray column i against position j-1.
struct ScheduledRotation {
    std::size_t column = 1;  // i
    std::size_t row = 2;     // j
    bool operator==(const ScheduledRotation &) const = default;
};

/// Columns i = 1..N-1 ascending; within each column rows j = N..i+1 descending.
std::vector<ScheduledRotation> schedule(int n);

/// Fewest controls that keep the rotation for (i, j) from disturbing already-zero entries.
///
/// The target is the bit changed between Gray positions j-1 and j. Working on the current 2^d block
/// (initially the whole matrix):
///   - j in the lower half, i in the upper half: control bits 1..m-1 with the values of code(j), plus
///     the top block bit (value of code(j), i.e. the lower half) when i-1 >= 2^{m-1};
///   - j in the upper half: recurse into the upper-left block;
///   - i in the lower half: recurse into the lower-right block and control its top bit.
/// Throws std::out_of_range unless 1 <= i < j <= 2^n.
ControlSpec minimal_controls(int n, std::size_t i, std::size_t j);

/// All n-1 other qubits controlled with the values of code(j): a plain two-level rotation.
ControlSpec full_controls(int n, std::size_t j);

/// A Givens rotation realized as a controlled single-qubit gate.
struct ControlledRotationGate {
    ControlSpec controls;
    /// Special-unitary payload in the (|0>, |1>) basis of the target qubit.
    Mat2 payload = Mat2::Identity();
    std::size_t column = 1;  // Gray position i
    std::size_t row = 2;     // Gray position j
    int num_qubits = 1;

    int num_controls() const {
        return static_cast<int>(controls.controls.size());
    }
    int removed_controls() const {
        return num_qubits - 1 - num_controls();
    }
};

Matrix apply_controlled_rotation(Matrix a, const ControlledRotationGate &gate);

/// Entries (BCB, 1-based) that are zero and must stay zero.
class ZeroPattern {
   public:
    explicit ZeroPattern(int n);

    int num_qubits() const {
        return n_;
    }
    std::size_t dim() const {
        return dim_;
    }
    bool masked(std::size_t row, std::size_t col) const {
        return mask_[(row - 1) * dim_ + (col - 1)] != 0;
    }
    void mark(std::size_t row, std::size_t col);
    /// Marks the whole row except its diagonal entry (a finished column's unit pivot).
    void mark_row_forced(std::size_t row);
    std::size_t count() const;

   private:
    int n_;
    std::size_t dim_;
    std::vector<std::uint8_t> mask_;
};

/// A row pair acted on by a gate whose entries in one column are masked in one row but not the other.
struct SafetyViolation {
    std::size_t row = 0;          // BCB, target bit 0
    std::size_t partner_row = 0;  // BCB, target bit 1
    std::size_t column = 0;       // BCB
    bool operator==(const SafetyViolation &) const = default;
};

/// Empty iff every acted row pair agrees on the mask in every column.
std::vector<SafetyViolation> safety_check(const ZeroPattern &pattern, const ControlSpec &spec);

struct DecomposeOptions {
    /// Use minimal_controls; otherwise every gate is fully controlled.
    bool minimize = true;
    /// After each gate, check that no masked entry exceeds 1e-10 (std::logic_error otherwise).
    bool verify_zero_pattern = false;
    /// Allowed ||diagonalized - I||_F; defaults to 1e-9 * 2^n.
    std::optional<double> residual_tolerance;
};

struct DecompositionResult {
    /// e^{i phase} * product of gates reconstructs the input.
    Circuit circuit;
    GateCountProfile profile;
    GlobalPhase global_phase;
    /// Gates whose closed-form control set failed safety_check and needed controls re-added.
    std::size_t escalations = 0;
    /// Scheduled rotations skipped because the entry was already zero.
    std::size_t identity_rotations = 0;
    /// ||diagonalized - I||_F.
    double residual = 0;
    /// The gates as applied during diagonalization (before taking adjoints and reversing).
    std::vector<ControlledRotationGate> applied;
};

/// Diagonalizes U with Gray-ordered Givens rotations and returns the equivalent circuit.
///
/// Throws ResidualError if the residual exceeds the tolerance.
DecompositionResult decompose(const UnitaryMatrix &u, const DecomposeOptions &options = {});

/// Control count of every scheduled rotation under minimal_controls.
struct ControlCountTable {
    int n = 1;
    std::vector<ScheduledRotation> entries;
    std::vector<int> controls;

    /// Control count for (i, j). Throws std::out_of_range if (i, j) is not scheduled.
    int at(std::size_t i, std::size_t j) const;
    GateCountProfile distribution() const;
};

ControlCountTable control_count_table(int n);

}  // namespace qgd

#endif
