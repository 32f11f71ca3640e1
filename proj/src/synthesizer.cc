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

#include "qgd/synthesizer.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qgd/errors.h"
#include "qgd/gray_code.h"

namespace qgd {

namespace {

std::uint64_t code_at(std::size_t position) {
    std::uint64_t x = position - 1;
    return x ^ (x >> 1);
}

int bit_of(std::uint64_t code, int b) {
    return static_cast<int>((code >> (b - 1)) & 1);
}

// Block of 2^bits Gray positions starting after `offset`; bits above `bits` are fixed inside it.
void block_controls(std::size_t offset, int bits, std::size_t i, std::size_t j, std::vector<Control> &out) {
    const std::size_t half = std::size_t{1} << (bits - 1);
    if (j > half && i <= half) {
        std::size_t global_j = offset + j;
        std::uint64_t code = code_at(global_j);
        int m = 1 + std::countr_zero(static_cast<std::uint64_t>(global_j - 1));
        for (int q = 1; q < m; ++q) {
            out.push_back({q, bit_of(code, q)});
        }
        if (i - 1 >= (std::size_t{1} << (m - 1))) {
            out.push_back({bits, bit_of(code, bits)});
        }
        return;
    }
    if (j <= half) {
        block_controls(offset, bits - 1, i, j, out);
        return;
    }
    block_controls(offset + half, bits - 1, i - half, j - half, out);
    out.push_back({bits, bit_of(code_at(offset + j), bits)});
}

}  // namespace

std::vector<ScheduledRotation> schedule(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::out_of_range("schedule: qubit count outside 1.." + std::to_string(kMaxQubits));
    }
    const std::size_t dim = std::size_t{1} << n;
    std::vector<ScheduledRotation> out;
    out.reserve(dim * (dim - 1) / 2);
    for (std::size_t i = 1; i < dim; ++i) {
        for (std::size_t j = dim; j > i; --j) {
            out.push_back({i, j});
        }
    }
    return out;
}

ControlSpec minimal_controls(int n, std::size_t i, std::size_t j) {
    if (n < 1 || n > kMaxGrayBits) {
        throw std::out_of_range("minimal_controls: bad qubit count");
    }
    const std::size_t dim = std::size_t{1} << n;
    if (i < 1 || j <= i || j > dim) {
        throw std::out_of_range("minimal_controls: need 1 <= i < j <= 2^n, got i = " + std::to_string(i) +
                                ", j = " + std::to_string(j));
    }
    ControlSpec spec;
    spec.target = changed_bit(j, n);
    block_controls(0, n, i, j, spec.controls);
    std::sort(spec.controls.begin(), spec.controls.end(),
              [](const Control &a, const Control &b) { return a.qubit < b.qubit; });
    return spec;
}

ControlSpec full_controls(int n, std::size_t j) {
    ControlSpec spec;
    spec.target = changed_bit(j, n);
    std::uint64_t code = code_at(j);
    for (int q = 1; q <= n; ++q) {
        if (q != spec.target) {
            spec.controls.push_back({q, bit_of(code, q)});
        }
    }
    return spec;
}

Matrix apply_controlled_rotation(Matrix a, const ControlledRotationGate &gate) {
    return apply_controlled_rotation(std::move(a), gate.controls, gate.payload);
}

ZeroPattern::ZeroPattern(int n) : n_(n), dim_(std::size_t{1} << n), mask_(dim_ * dim_, 0) {
}

void ZeroPattern::mark(std::size_t row, std::size_t col) {
    if (row == col) {
        throw std::logic_error("ZeroPattern: diagonal entries are never masked");
    }
    mask_[(row - 1) * dim_ + (col - 1)] = 1;
}

void ZeroPattern::mark_row_forced(std::size_t row) {
    for (std::size_t c = 1; c <= dim_; ++c) {
        if (c != row) {
            mask_[(row - 1) * dim_ + (c - 1)] = 1;
        }
    }
}

std::size_t ZeroPattern::count() const {
    return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), std::uint8_t{1}));
}

std::vector<SafetyViolation> safety_check(const ZeroPattern &pattern, const ControlSpec &spec) {
    std::vector<SafetyViolation> out;
    const std::uint64_t bit = std::uint64_t{1} << (spec.target - 1);
    const std::size_t dim = pattern.dim();
    for (std::uint64_t r0 = 0; r0 < dim; ++r0) {
        if ((r0 & bit) != 0 || !spec.matches(r0)) {
            continue;
        }
        std::size_t row0 = r0 + 1;
        std::size_t row1 = (r0 | bit) + 1;
        for (std::size_t c = 1; c <= dim; ++c) {
            if (pattern.masked(row0, c) != pattern.masked(row1, c)) {
                out.push_back({row0, row1, c});
            }
        }
    }
    return out;
}

DecompositionResult decompose(const UnitaryMatrix &u, const DecomposeOptions &options) {
    const int n = u.num_qubits();
    const std::size_t dim = u.dim();
    const double tolerance = options.residual_tolerance.value_or(1e-9 * static_cast<double>(dim));

    auto [normalized, phase] = phase_normalize(u);
    Matrix a = normalized.matrix();
    const BasisMap basis(gray_code(n));
    ZeroPattern zeros(n);

    DecompositionResult result;
    result.global_phase = phase;
    result.profile = GateCountProfile(n);

    for (std::size_t i = 1; i < dim; ++i) {
        const std::size_t col = basis.gamma(i);
        for (std::size_t j = dim; j > i; --j) {
            const std::size_t row_j = basis.gamma(j);
            const std::size_t row_k = basis.gamma(j - 1);
            GivensRotation rotation = givens_of(a, col, row_j, row_k);
            if (rotation.identity) {
                ++result.identity_rotations;
                zeros.mark(row_j, col);
                continue;
            }

            ControlSpec spec = options.minimize ? minimal_controls(n, i, j) : full_controls(n, j);
            if (!safety_check(zeros, spec).empty()) {
                ++result.escalations;
                const std::uint64_t code = code_at(j);
                for (int q = n; q >= 1 && !safety_check(zeros, spec).empty(); --q) {
                    bool used = q == spec.target || std::any_of(spec.controls.begin(), spec.controls.end(),
                                                                [q](const Control &c) { return c.qubit == q; });
                    if (!used) {
                        spec.controls.push_back({q, bit_of(code, q)});
                    }
                }
                std::sort(spec.controls.begin(), spec.controls.end(),
                          [](const Control &x, const Control &y) { return x.qubit < y.qubit; });
            }

            ControlledRotationGate gate;
            gate.controls = std::move(spec);
            gate.payload = gamma_in_target_basis(rotation.gamma, row_k, gate.controls.target);
            gate.column = i;
            gate.row = j;
            gate.num_qubits = n;
            apply_controlled_in_place(a, gate.controls, gate.payload);
            zeros.mark(row_j, col);

            if (options.verify_zero_pattern) {
                for (std::size_t r = 1; r <= dim; ++r) {
                    for (std::size_t c = 1; c <= dim; ++c) {
                        if (zeros.masked(r, c) && std::abs(a(r - 1, c - 1)) > 1e-10) {
                            throw std::logic_error("gate for (i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                                                   ") wrote into masked entry (" + std::to_string(r) + ", " +
                                                   std::to_string(c) + ")");
                        }
                    }
                }
            }

            ++result.profile.counts[static_cast<std::size_t>(gate.num_controls())];
            result.applied.push_back(std::move(gate));
        }
        zeros.mark_row_forced(col);
    }

    result.residual = (a - Matrix::Identity(a.rows(), a.cols())).norm();
    if (!(result.residual <= tolerance)) {
        throw ResidualError("decomposition residual " + std::to_string(result.residual) + " exceeds tolerance " +
                                std::to_string(tolerance),
                            result.residual);
    }

    result.circuit.num_qubits = n;
    result.circuit.global_phase = phase;
    result.circuit.gates.reserve(result.applied.size());
    for (auto it = result.applied.rbegin(); it != result.applied.rend(); ++it) {
        result.circuit.gates.push_back(ControlledU2Gate{it->controls, it->payload.adjoint()});
    }
    return result;
}

int ControlCountTable::at(std::size_t i, std::size_t j) const {
    for (std::size_t e = 0; e < entries.size(); ++e) {
        if (entries[e].column == i && entries[e].row == j) {
            return controls[e];
        }
    }
    throw std::out_of_range("control_count_table: (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") is not scheduled");
}

GateCountProfile ControlCountTable::distribution() const {
    GateCountProfile profile(n);
    for (int k : controls) {
        ++profile.counts[static_cast<std::size_t>(k)];
    }
    return profile;
}

ControlCountTable control_count_table(int n) {
    ControlCountTable table;
    table.n = n;
    table.entries = schedule(n);
    table.controls.reserve(table.entries.size());
    for (const auto &e : table.entries) {
        table.controls.push_back(static_cast<int>(minimal_controls(n, e.column, e.row).controls.size()));
    }
    return table;
}

}  // namespace qgd
