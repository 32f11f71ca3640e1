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

#ifndef QGD_MATRIX_IO_H
#define QGD_MATRIX_IO_H

#include <string>
#include <string_view>

#include "qgd/matrix.h"

namespace qgd {

// Text format:
//   n <qubits>
//   2^n lines of 2^n whitespace-separated entries "<re>,<im>"
// Lines starting with '#' and blank lines are ignored. Numbers are written with 17 significant digits.

/// Throws ParseError (with line numbers) on malformed text, NotUnitaryError if the matrix fails the
/// unitarity check.
UnitaryMatrix parse_matrix_text(std::string_view text);
std::string format_matrix_text(const UnitaryMatrix &u);

UnitaryMatrix read_matrix_file(const std::string &path);
void write_matrix_file(const std::string &path, const UnitaryMatrix &u);

}  // namespace qgd

#endif
