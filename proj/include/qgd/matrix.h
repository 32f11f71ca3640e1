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

#ifndef QGD_MATRIX_H
#define QGD_MATRIX_H

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace qgd {

using Complex = std::complex<double>;
/// Dense complex matrix. Row-major because every gate application mixes whole rows.
using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Mat2 = Eigen::Matrix2cd;

/// Absolute magnitude below which a matrix element counts as already zero.
constexpr double kZeroThreshold = 1e-12;
/// Allowed ||U^dagger U - I||_F for anything accepted as a unitary.
constexpr double kUnitarityTolerance = 1e-8;
/// Largest register handled by the dense representation (2^12 x 2^12 complex doubles = 256 MiB).
constexpr int kMaxQubits = 12;

/// ||M^dagger M - I||_F.
double unitarity_deviation(const Matrix &m);

/// A 2^n x 2^n matrix known to be unitary within kUnitarityTolerance.
///
/// Qubit q (1-based) is bit q-1 of the 0-based row index, so qubit 1 is the least significant bit and
/// the 1-based binary-code-basis row of a bit pattern x is 1 + x.
class UnitaryMatrix {
   public:
    /// Throws NotUnitaryError if the check fails, std::invalid_argument for a non-square or
    /// non-power-of-two shape.
    explicit UnitaryMatrix(Matrix m, double tolerance = kUnitarityTolerance);

    static UnitaryMatrix identity(int num_qubits);

    int num_qubits() const {
        return num_qubits_;
    }
    std::size_t dim() const {
        return static_cast<std::size_t>(m_.rows());
    }
    const Matrix &matrix() const {
        return m_;
    }
    /// 1-based element access matching the BCB numbering.
    Complex at(std::size_t row, std::size_t col) const {
        return m_(row - 1, col - 1);
    }

    bool operator==(const UnitaryMatrix &other) const {
        return m_ == other.m_;
    }

   private:
    int num_qubits_;
    Matrix m_;
};

/// Scalar phase e^{i angle} carried alongside a circuit. angle is kept in (-pi, pi].
struct GlobalPhase {
    double angle = 0.0;
};

/// Wraps an angle into (-pi, pi].
double wrap_angle(double angle);

/// One control condition: qubit (1-based) must hold value (0 or 1).
struct Control {
    int qubit;
    int value;
    bool operator==(const Control &) const = default;
};

/// Target qubit plus a polarized control set.
struct ControlSpec {
    int target = 1;
    std::vector<Control> controls;

    /// Throws InvalidGateError if any index is outside 1..num_qubits, the target is controlled,
    /// a qubit repeats, or a control value is not 0/1.
    void validate(int num_qubits) const;

    /// Whether the 0-based basis index satisfies every control condition.
    bool matches(std::uint64_t basis_index) const;

    bool operator==(const ControlSpec &) const = default;
};

/// Two-level rotation that nullifies element (row_j, column) against (row_k, column).
///
/// gamma is laid out in (k, j) order: [[g_kk, g_kj], [g_jk, g_jj]]. All indices are 1-based.
struct GivensRotation {
    std::size_t column = 1;
    std::size_t row_j = 2;
    std::size_t row_k = 1;
    Mat2 gamma = Mat2::Identity();
    bool identity = true;
};

/// Builds the rotation nullifying a(j, i) with the help of a(k, i).
///
/// When a(j, i) is already below kZeroThreshold the rotation is the identity (flag set), except when
/// a(k, i) is nonzero and not real positive: then the diagonal phase fix diag(conj(a_k), a_k)/|a_k| is
/// returned so the pivot still ends up real positive.
GivensRotation givens_of(const Matrix &a, std::size_t i, std::size_t j, std::size_t k);

/// Applies a two-level rotation to rows (row_k, row_j) of a.
void apply_givens(Matrix &a, const GivensRotation &rotation);

/// Re-expresses gamma in the (|0>, |1>) basis of the target qubit. row_k is the 1-based BCB row playing
/// the role of k; its target bit decides whether the layout needs swapping.
Mat2 gamma_in_target_basis(const Mat2 &gamma, std::size_t row_k, int target);

/// Mixes every row pair (r, r with target bit set) that satisfies the controls:
///   row0' = p00 row0 + p01 row1,  row1' = p10 row0 + p11 row1.
/// In matrix terms this left-multiplies a by the gate's full 2^n x 2^n operator.
void apply_controlled_in_place(Matrix &a, const ControlSpec &spec, const Mat2 &payload);

/// Pure version of apply_controlled_in_place. Validates the spec first.
Matrix apply_controlled_rotation(Matrix a, const ControlSpec &spec, const Mat2 &payload);

/// Returns (e^{-i arg(det U)/N} U, arg(det U)/N).
std::pair<UnitaryMatrix, GlobalPhase> phase_normalize(const UnitaryMatrix &u);

/// min over phi of ||A - e^{i phi} B||_F. Throws std::invalid_argument on a shape mismatch.
double distance_up_to_phase(const Matrix &a, const Matrix &b);
double distance_up_to_phase(const UnitaryMatrix &a, const UnitaryMatrix &b);

/// Haar-distributed unitary, deterministic in (num_qubits, seed).
///
/// Entries of a complex Gaussian matrix are drawn in row-major order, real part then imaginary part,
/// from a Box-Muller transform over std::mt19937_64(seed); the matrix is QR-factorized and Q's columns
/// are rephased so R has a positive real diagonal.
UnitaryMatrix haar_random_unitary(int num_qubits, std::uint64_t seed);

/// Whether m is unitary with determinant 1, both within tol.
bool is_special_unitary(const Mat2 &m, double tol = 1e-10);

}  // namespace qgd

#endif
