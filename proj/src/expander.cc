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

#include "qgd/expander.h"

#include <array>
#include <charconv>
#include <cmath>
#include <span>
#include <stdexcept>

#include "qgd/errors.h"

namespace qgd {

namespace {

constexpr double kSpecialTolerance = 1e-10;

Mat2 pauli_x() {
    Mat2 x;
    x << 0, 1, 1, 0;
    return x;
}

void require_special(const Mat2 &v, const char *who) {
    if (!is_special_unitary(v, kSpecialTolerance)) {
        throw InvalidGateError(std::string(who) + ": payload is not special unitary");
    }
}

void expand_mcx(std::span<const int> controls, int target, std::vector<Gate> &out);

// Positive controls only; u may be any unitary.
void expand_positive(std::span<const int> controls, int target, const Mat2 &u, std::vector<Gate> &out) {
    if (controls.empty()) {
        out.push_back(SingleQubitGate{target, u});
        return;
    }
    if (controls.size() == 1) {
        int control = controls[0];
        Mat2 w = u;
        double delta = 0.0;
        bool special = is_special_unitary(u, kSpecialTolerance);
        if (!special) {
            delta = std::arg(u.determinant()) / 2.0;
            w = u * std::polar(1.0, -delta);
        }
        AbcFactors f = abc_decompose(w);
        out.push_back(SingleQubitGate{target, f.c});
        out.push_back(CnotGate{control, target});
        out.push_back(SingleQubitGate{target, f.b});
        out.push_back(CnotGate{control, target});
        out.push_back(SingleQubitGate{target, f.a});
        if (!special) {
            Mat2 phase = Mat2::Identity();
            phase(1, 1) = std::polar(1.0, delta);
            out.push_back(SingleQubitGate{control, phase});
        }
        return;
    }
    Mat2 s = sqrt_u2(u);
    int last = controls.back();
    auto rest = controls.first(controls.size() - 1);
    std::array<int, 1> last_only{last};
    expand_positive(last_only, target, s, out);
    expand_mcx(rest, last, out);
    expand_positive(last_only, target, s.adjoint(), out);
    expand_mcx(rest, last, out);
    expand_positive(rest, target, s, out);
}

void expand_mcx(std::span<const int> controls, int target, std::vector<Gate> &out) {
    if (controls.size() == 1) {
        out.push_back(CnotGate{controls[0], target});
        return;
    }
    expand_positive(controls, target, pauli_x(), out);
}

// (cnot, single) counts of the expansion, mirroring expand_positive / expand_mcx.
struct Cost {
    std::uint64_t cnot = 0;
    std::uint64_t single = 0;
};

Cost positive_cost(int k, bool special);

Cost mcx_cost(int k) {
    if (k == 0) {
        return {0, 1};
    }
    if (k == 1) {
        return {1, 0};
    }
    return positive_cost(k, false);
}

Cost positive_cost(int k, bool special) {
    if (k == 0) {
        return {0, 1};
    }
    if (k == 1) {
        return {2, special ? 3u : 4u};
    }
    // The square root of a special payload is special; the square root of X is not.
    Cost c1 = positive_cost(1, special);
    Cost x = mcx_cost(k - 1);
    Cost tail = positive_cost(k - 1, special);
    return {2 * c1.cnot + 2 * x.cnot + tail.cnot, 2 * c1.single + 2 * x.single + tail.single};
}

}  // namespace

Mat2 rz(double angle) {
    Mat2 m = Mat2::Zero();
    m(0, 0) = std::polar(1.0, -angle / 2);
    m(1, 1) = std::polar(1.0, angle / 2);
    return m;
}

Mat2 ry(double angle) {
    double c = std::cos(angle / 2);
    double s = std::sin(angle / 2);
    Mat2 m;
    m << c, -s, s, c;
    return m;
}

EulerAngles euler_zyz(const Mat2 &v) {
    EulerAngles e;
    double c = std::abs(v(0, 0));
    double s = std::abs(v(1, 0));
    e.theta = 2.0 * std::atan2(s, c);
    if (s <= kZeroThreshold) {
        e.beta = 0.0;
        e.alpha = -2.0 * std::arg(v(0, 0));
    } else if (c <= kZeroThreshold) {
        e.beta = 0.0;
        e.alpha = 2.0 * std::arg(v(1, 0));
    } else {
        double sum = -2.0 * std::arg(v(0, 0));
        double diff = 2.0 * std::arg(v(1, 0));
        e.alpha = (sum + diff) / 2.0;
        e.beta = (sum - diff) / 2.0;
    }
    return e;
}

Mat2 euler_matrix(const EulerAngles &angles) {
    return rz(angles.alpha) * ry(angles.theta) * rz(angles.beta);
}

AbcFactors abc_decompose(const Mat2 &v) {
    require_special(v, "abc_decompose");
    EulerAngles e = euler_zyz(v);
    return {
        rz(e.alpha) * ry(e.theta / 2),
        ry(-e.theta / 2) * rz(-(e.alpha + e.beta) / 2),
        rz((e.beta - e.alpha) / 2),
    };
}

Mat2 sqrt_su2(const Mat2 &v) {
    Complex a = v(0, 0);
    Complex b = v(1, 0);
    double wx = -b.imag();
    double wy = b.real();
    double wz = -a.imag();
    double sin_phi = std::sqrt(wx * wx + wy * wy + wz * wz);
    double phi = std::atan2(sin_phi, a.real());
    double nx = 0, ny = 0, nz = 1;
    if (sin_phi > 1e-15) {
        nx = wx / sin_phi;
        ny = wy / sin_phi;
        nz = wz / sin_phi;
    } else if (a.real() > 0) {
        return Mat2::Identity();
    }
    const Complex i{0.0, 1.0};
    double ch = std::cos(phi / 2);
    double sh = std::sin(phi / 2);
    Mat2 s;
    s << ch - i * sh * nz, -i * sh * Complex(nx, -ny), -i * sh * Complex(nx, ny), ch + i * sh * nz;
    return s;
}

Mat2 sqrt_u2(const Mat2 &u) {
    double delta = std::arg(u.determinant()) / 2.0;
    return sqrt_su2(u * std::polar(1.0, -delta)) * std::polar(1.0, delta / 2.0);
}

std::vector<Gate> expand_gate(const ControlledU2Gate &gate) {
    require_special(gate.matrix, "expand_gate");
    std::vector<Gate> out;
    std::vector<int> controls;
    std::vector<int> negated;
    for (const auto &c : gate.spec.controls) {
        controls.push_back(c.qubit);
        if (c.value == 0) {
            negated.push_back(c.qubit);
        }
    }
    for (int q : negated) {
        out.push_back(SingleQubitGate{q, pauli_x()});
    }
    expand_positive(controls, gate.spec.target, gate.matrix, out);
    for (int q : negated) {
        out.push_back(SingleQubitGate{q, pauli_x()});
    }
    return out;
}

Circuit expand_circuit(const Circuit &circuit) {
    Circuit out;
    out.num_qubits = circuit.num_qubits;
    out.global_phase = circuit.global_phase;
    for (const auto &gate : circuit.gates) {
        if (const auto *g = std::get_if<ControlledU2Gate>(&gate)) {
            g->spec.validate(circuit.num_qubits);
            auto expanded = expand_gate(*g);
            out.gates.insert(out.gates.end(), expanded.begin(), expanded.end());
        } else {
            out.gates.push_back(gate);
        }
    }
    return out;
}

CostModel CostModel::parse(std::string_view text) {
    if (text == "emitted") {
        return emitted();
    }
    constexpr std::string_view prefix = "linear:";
    if (text.starts_with(prefix)) {
        auto rest = text.substr(prefix.size());
        auto comma = rest.find(',');
        if (comma != std::string_view::npos) {
            std::int64_t a = 0, b = 0;
            auto sa = rest.substr(0, comma);
            auto sb = rest.substr(comma + 1);
            auto ra = std::from_chars(sa.data(), sa.data() + sa.size(), a);
            auto rb = std::from_chars(sb.data(), sb.data() + sb.size(), b);
            if (ra.ec == std::errc{} && ra.ptr == sa.data() + sa.size() && rb.ec == std::errc{} &&
                rb.ptr == sb.data() + sb.size() && a >= 0 && b >= 0) {
                return linear(a, b);
            }
        }
    }
    throw std::invalid_argument("cost model must be 'emitted' or 'linear:a,b' with nonnegative integers, got '" +
                                std::string(text) + "'");
}

std::string CostModel::name() const {
    if (kind == Kind::Emitted) {
        return "emitted";
    }
    return "linear:" + std::to_string(a) + "," + std::to_string(b);
}

std::uint64_t cnot_cost(int k, const CostModel &model) {
    if (k < 0) {
        throw std::out_of_range("cnot_cost: negative control count");
    }
    if (model.kind == CostModel::Kind::Emitted) {
        return positive_cost(k, true).cnot;
    }
    if (k == 0) {
        return 0;
    }
    if (k == 1) {
        return 2;
    }
    return static_cast<std::uint64_t>(model.a * k + model.b);
}

std::uint64_t single_qubit_cost(int k, const CostModel &model) {
    if (k < 0) {
        throw std::out_of_range("single_qubit_cost: negative control count");
    }
    if (model.kind == CostModel::Kind::Emitted) {
        return positive_cost(k, true).single;
    }
    return k == 0 ? 1 : cnot_cost(k, model) + 1;
}

}  // namespace qgd
