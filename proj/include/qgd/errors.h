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

#ifndef QGD_ERRORS_H
#define QGD_ERRORS_H

#include <stdexcept>
#include <string>

namespace qgd {

/// Input matrix violates the unitarity invariant.
struct NotUnitaryError : std::invalid_argument {
    double deviation;
    NotUnitaryError(const std::string &msg, double deviation) : std::invalid_argument(msg), deviation(deviation) {
    }
};

/// Qubit indices out of range, target among controls, repeated qubits, or a bad payload.
struct InvalidGateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Requested problem does not fit the dense-matrix memory budget.
struct CapacityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A gate kind the requested output format cannot express (e.g. a multi-controlled gate in QASM).
struct UnsupportedGateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed matrix or circuit document. The message carries line/field context.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A decomposition finished but the diagonalized matrix is not the identity within tolerance.
struct ResidualError : std::runtime_error {
    double residual;
    ResidualError(const std::string &msg, double residual) : std::runtime_error(msg), residual(residual) {
    }
};

}  // namespace qgd

#endif
