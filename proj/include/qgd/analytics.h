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

#ifndef QGD_ANALYTICS_H
#define QGD_ANALYTICS_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgd/expander.h"

namespace qgd {

/// Number of gates with k controls, for k = 0 .. n-1.
struct GateCountProfile {
    int num_qubits = 1;
    std::vector<std::uint64_t> counts;

    explicit GateCountProfile(int n = 1) : num_qubits(n), counts(static_cast<std::size_t>(n), 0) {
    }
    std::uint64_t total() const;
    std::uint64_t at(int k) const {
        return k >= 0 && k < static_cast<int>(counts.size()) ? counts[static_cast<std::size_t>(k)] : 0;
    }
    bool operator==(const GateCountProfile &) const = default;
    /// "{0:8, 1:50, 2:40, 3:22}"
    std::string str() const;
};

/// Gates with k controls used while nullifying the bottom-left quarter of an n-qubit matrix:
///   max(2^{n-2}, 2^k) + [k >= 1] (2^{2n-k-2} - 2^{n-2}).
/// Requires n >= 2 and 0 <= k <= n-1 (std::out_of_range otherwise).
std::uint64_t g0(int n, int k);

/// Gates with k controls for a whole n-qubit decomposition:
///   g(m, 0) = 2^{m-1}, g(m, m) = 0, g(n, k) = g0(n, k) + g(n-1, k) + g(n-1, k-1).
/// Zero for k outside 0..n-1. Memoized behind a mutex; safe to call concurrently.
std::uint64_t g(int n, int k);

/// g(n, .) as a profile.
GateCountProfile recursion_profile(int n);

/// Rotations in a full decomposition: 2^{n-1} (2^n - 1).
std::uint64_t rotation_count(int n);

struct BoundRow {
    int i = 0;
    std::uint64_t value = 0;  // g(n, n-i)
    std::uint64_t bound = 0;  // 2^{n+i}
    bool pass = false;
};

struct BoundReport {
    int n = 0;
    std::uint64_t top = 0;          // g(n, n-1)
    std::uint64_t closed_form = 0;  // 3 * 2^{n-1} - 2
    bool closed_form_holds = false;
    std::vector<BoundRow> rows;  // i = 1 .. n-1

    bool all_pass() const;
};

/// Checks g(n, n-1) = 3 * 2^{n-1} - 2 and g(n, n-i) <= 2^{n+i}. Requires n >= 2.
BoundReport bound_check(int n);

/// Published reference counts (CNOT gates and total single-qubit + CNOT gates) for n = 1..9.
struct ReferenceRow {
    int n;
    std::uint64_t cnot;
    std::uint64_t total;
};
const std::array<ReferenceRow, 9> &reference_counts();

struct CnotReport {
    int n = 1;
    CostModel model;
    GateCountProfile profile;
    std::uint64_t cnot = 0;
    std::uint64_t single_qubit = 0;
    std::uint64_t total = 0;
    /// cnot / 4^n.
    double cnot_ratio = 0;
    std::optional<ReferenceRow> reference;
    bool cnot_matches_reference = false;
    bool total_matches_reference = false;
};

/// Sum over k of g(n, k) times the model's per-gate costs, next to the reference row when one exists.
CnotReport cnot_report(int n, const CostModel &model);

/// Leading CNOT coefficient quoted for large n in the reference accounting.
constexpr double kReferenceAsymptoticCoefficient = 8.7;

/// Plain-text report for one n.
std::string render_cnot_report(const CnotReport &report);
/// Machine-readable (JSON) report for one n.
std::string cnot_report_json(const CnotReport &report);

/// Side-by-side table of all nine reference rows and the model's counts. Rows that differ are marked
/// "DIFFERS"; the ratio column tracks cnot / 4^n against the asymptotic coefficient.
std::string render_reference_comparison(const CostModel &model);

}  // namespace qgd

#endif
