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

#include "qgd/matrix.h"

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "qgd/errors.h"

namespace qgd {

namespace {

int qubits_for_dim(Eigen::Index dim) {
    if (dim < 2 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("matrix dimension " + std::to_string(dim) + " is not a power of two >= 2");
    }
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) {
        ++n;
    }
    return n;
}

// Box-Muller over a 53-bit uniform stream. Kept local so fixtures do not depend on the standard
// library's normal_distribution, whose algorithm is implementation-defined.
class GaussianStream {
   public:
    explicit GaussianStream(std::uint64_t seed) : rng_(seed) {
    }

    double next() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 1.0 - uniform();  // (0, 1]
        double u2 = uniform();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

   private:
    double uniform() {
        return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    }

    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace

double unitarity_deviation(const Matrix &m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("matrix is not square");
    }
    Matrix gram = m.adjoint() * m;
    gram -= Matrix::Identity(m.rows(), m.cols());
    return gram.norm();
}

UnitaryMatrix::UnitaryMatrix(Matrix m, double tolerance) : num_qubits_(0), m_(std::move(m)) {
    if (m_.rows() != m_.cols()) {
        throw std::invalid_argument(
            "matrix is not square (" + std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()) + ")");
    }
    num_qubits_ = qubits_for_dim(m_.rows());
    if (num_qubits_ > kMaxQubits) {
        throw CapacityError("matrix of " + std::to_string(num_qubits_) + " qubits exceeds the dense limit");
    }
    double deviation = unitarity_deviation(m_);
    if (!(deviation <= tolerance)) {
        throw NotUnitaryError("matrix is not unitary: ||U^dagger U - I||_F = " + std::to_string(deviation), deviation);
    }
}

UnitaryMatrix UnitaryMatrix::identity(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw CapacityError("qubit count " + std::to_string(num_qubits) + " outside 1.." + std::to_string(kMaxQubits));
    }
    Eigen::Index dim = Eigen::Index{1} << num_qubits;
    return UnitaryMatrix(Matrix::Identity(dim, dim));
}

double wrap_angle(double angle) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double wrapped = std::remainder(angle, two_pi);  // [-pi, pi]
    if (wrapped <= -std::numbers::pi) {
        wrapped += two_pi;
    }
    return wrapped;
}

void ControlSpec::validate(int num_qubits) const {
    if (target < 1 || target > num_qubits) {
        throw InvalidGateError("target qubit " + std::to_string(target) + " outside 1.." + std::to_string(num_qubits));
    }
    std::set<int> seen{target};
    for (const auto &c : controls) {
        if (c.qubit < 1 || c.qubit > num_qubits) {
            throw InvalidGateError(
                "control qubit " + std::to_string(c.qubit) + " outside 1.." + std::to_string(num_qubits));
        }
        if (c.value != 0 && c.value != 1) {
            throw InvalidGateError("control value must be 0 or 1, got " + std::to_string(c.value));
        }
        if (!seen.insert(c.qubit).second) {
            throw InvalidGateError(
                c.qubit == target ? "target qubit " + std::to_string(target) + " is also a control"
                                  : "control qubit " + std::to_string(c.qubit) + " repeated");
        }
    }
}

bool ControlSpec::matches(std::uint64_t basis_index) const {
    for (const auto &c : controls) {
        if (((basis_index >> (c.qubit - 1)) & 1) != static_cast<std::uint64_t>(c.value)) {
            return false;
        }
    }
    return true;
}

GivensRotation givens_of(const Matrix &a, std::size_t i, std::size_t j, std::size_t k) {
    auto dim = static_cast<std::size_t>(a.rows());
    if (i < 1 || j < 1 || k < 1 || i > static_cast<std::size_t>(a.cols()) || j > dim || k > dim || j == k) {
        throw std::out_of_range("givens_of: bad indices");
    }
    GivensRotation rotation;
    rotation.column = i;
    rotation.row_j = j;
    rotation.row_k = k;

    Complex aj = a(j - 1, i - 1);
    Complex ak = a(k - 1, i - 1);
    if (std::abs(aj) <= kZeroThreshold) {
        double mk = std::abs(ak);
        if (mk <= kZeroThreshold || (std::abs(ak.imag()) <= kZeroThreshold && ak.real() > 0)) {
            rotation.gamma = Mat2::Identity();
            rotation.identity = true;
            return rotation;
        }
        aj = 0.0;
    }
    double norm = std::sqrt(std::norm(aj) + std::norm(ak));
    rotation.gamma << std::conj(ak) / norm, std::conj(aj) / norm, -aj / norm, ak / norm;
    rotation.identity = false;
    return rotation;
}

void apply_givens(Matrix &a, const GivensRotation &rotation) {
    if (rotation.identity) {
        return;
    }
    auto rk = static_cast<Eigen::Index>(rotation.row_k - 1);
    auto rj = static_cast<Eigen::Index>(rotation.row_j - 1);
    const Mat2 &g = rotation.gamma;
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
        Complex xk = a(rk, c);
        Complex xj = a(rj, c);
        a(rk, c) = g(0, 0) * xk + g(0, 1) * xj;
        a(rj, c) = g(1, 0) * xk + g(1, 1) * xj;
    }
}

Mat2 gamma_in_target_basis(const Mat2 &gamma, std::size_t row_k, int target) {
    if ((((row_k - 1) >> (target - 1)) & 1) == 0) {
        return gamma;
    }
    Mat2 swapped;
    swapped << gamma(1, 1), gamma(1, 0), gamma(0, 1), gamma(0, 0);
    return swapped;
}

void apply_controlled_in_place(Matrix &a, const ControlSpec &spec, const Mat2 &payload) {
    const std::uint64_t bit = std::uint64_t{1} << (spec.target - 1);
    const auto dim = static_cast<std::uint64_t>(a.rows());
    const Complex p00 = payload(0, 0), p01 = payload(0, 1), p10 = payload(1, 0), p11 = payload(1, 1);
    for (std::uint64_t r0 = 0; r0 < dim; ++r0) {
        if ((r0 & bit) != 0 || !spec.matches(r0)) {
            continue;
        }
        auto i0 = static_cast<Eigen::Index>(r0);
        auto i1 = static_cast<Eigen::Index>(r0 | bit);
        Complex *row0 = a.row(i0).data();
        Complex *row1 = a.row(i1).data();
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            Complex x0 = row0[c];
            Complex x1 = row1[c];
            row0[c] = p00 * x0 + p01 * x1;
            row1[c] = p10 * x0 + p11 * x1;
        }
    }
}

Matrix apply_controlled_rotation(Matrix a, const ControlSpec &spec, const Mat2 &payload) {
    int n = qubits_for_dim(a.rows());
    spec.validate(n);
    apply_controlled_in_place(a, spec, payload);
    return a;
}

std::pair<UnitaryMatrix, GlobalPhase> phase_normalize(const UnitaryMatrix &u) {
    Complex det = u.matrix().determinant();
    double angle = std::arg(det) / static_cast<double>(u.dim());
    Matrix normalized = u.matrix() * std::polar(1.0, -angle);
    return {UnitaryMatrix(std::move(normalized)), GlobalPhase{wrap_angle(angle)}};
}

double distance_up_to_phase(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("distance_up_to_phase: dimension mismatch");
    }
    // The closed form sqrt(2N - 2|tr(A^dagger B)|) cancels catastrophically near zero distance, so the
    // optimal phase is applied and the Frobenius norm taken directly.
    Complex overlap = (a.adjoint() * b).trace();
    Complex phase = std::abs(overlap) > 0 ? std::conj(overlap) / std::abs(overlap) : Complex{1.0};
    return (a - phase * b).norm();
}

double distance_up_to_phase(const UnitaryMatrix &a, const UnitaryMatrix &b) {
    return distance_up_to_phase(a.matrix(), b.matrix());
}

UnitaryMatrix haar_random_unitary(int num_qubits, std::uint64_t seed) {
    if (num_qubits < 1) {
        throw std::invalid_argument("haar_random_unitary: need at least one qubit");
    }
    if (num_qubits > kMaxQubits) {
        throw CapacityError(
            "haar_random_unitary: " + std::to_string(num_qubits) + " qubits exceeds the dense limit of " +
            std::to_string(kMaxQubits));
    }
    Eigen::Index dim = Eigen::Index{1} << num_qubits;
    GaussianStream gauss(seed);
    Eigen::MatrixXcd z(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            double re = gauss.next();
            double im = gauss.next();
            z(r, c) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    const auto &r = qr.matrixQR();
    for (Eigen::Index c = 0; c < dim; ++c) {
        Complex d = r(c, c);
        double mag = std::abs(d);
        if (mag > 0) {
            q.col(c) *= d / mag;
        }
    }
    return UnitaryMatrix(Matrix(q));
}

bool is_special_unitary(const Mat2 &m, double tol) {
    double deviation = (m.adjoint() * m - Mat2::Identity()).norm();
    return deviation <= tol && std::abs(m.determinant() - 1.0) <= tol;
}

}  // namespace qgd
