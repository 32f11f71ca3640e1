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

#include "qgd/analytics.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qgd {

namespace {

constexpr int kMaxAnalyticQubits = 30;

std::uint64_t pow2(int e) {
    return std::uint64_t{1} << e;
}

void check_n(int n, int lo) {
    if (n < lo || n > kMaxAnalyticQubits) {
        throw std::out_of_range("qubit count " + std::to_string(n) + " outside " + std::to_string(lo) + ".." +
                                std::to_string(kMaxAnalyticQubits));
    }
}

// Reference values as printed in the published table (n = 1..9).
constexpr std::array<ReferenceRow, 9> kReference{{
    {1, 0, 1},
    {2, 4, 14},
    {3, 64, 136},
    {4, 536, 980},
    {5, 4156, 7384},
    {6, 22618, 42390},
    {7, 108760, 208820},
    {8, 486052, 944280},
    {9, 2078668, 4062520},
}};

std::mutex g_cache_mutex;
std::map<std::pair<int, int>, std::uint64_t> g_cache;

std::uint64_t g_uncached(int n, int k);

std::uint64_t g_locked(int n, int k) {
    if (k < 0 || k >= n) {
        return 0;
    }
    auto key = std::make_pair(n, k);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) {
        return it->second;
    }
    std::uint64_t value = g_uncached(n, k);
    g_cache.emplace(key, value);
    return value;
}

std::uint64_t g_uncached(int n, int k) {
    if (k == 0) {
        return pow2(n - 1);
    }
    return g0(n, k) + g_locked(n - 1, k) + g_locked(n - 1, k - 1);
}

}  // namespace

std::uint64_t GateCountProfile::total() const {
    std::uint64_t sum = 0;
    for (auto c : counts) {
        sum += c;
    }
    return sum;
}

std::string GateCountProfile::str() const {
    std::string out = "{";
    for (std::size_t k = 0; k < counts.size(); ++k) {
        if (k > 0) {
            out += ", ";
        }
        out += std::to_string(k) + ":" + std::to_string(counts[k]);
    }
    return out + "}";
}

std::uint64_t g0(int n, int k) {
    check_n(n, 2);
    if (k < 0 || k > n - 1) {
        throw std::out_of_range("g0: k = " + std::to_string(k) + " outside 0.." + std::to_string(n - 1));
    }
    std::uint64_t value = std::max(pow2(n - 2), pow2(k));
    if (k >= 1) {
        value += pow2(2 * n - k - 2) - pow2(n - 2);
    }
    return value;
}

std::uint64_t g(int n, int k) {
    check_n(n, 1);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_locked(n, k);
}

GateCountProfile recursion_profile(int n) {
    GateCountProfile profile(n);
    for (int k = 0; k < n; ++k) {
        profile.counts[static_cast<std::size_t>(k)] = g(n, k);
    }
    return profile;
}

std::uint64_t rotation_count(int n) {
    check_n(n, 1);
    return pow2(n - 1) * (pow2(n) - 1);
}

bool BoundReport::all_pass() const {
    if (!closed_form_holds) {
        return false;
    }
    for (const auto &row : rows) {
        if (!row.pass) {
            return false;
        }
    }
    return true;
}

BoundReport bound_check(int n) {
    check_n(n, 2);
    BoundReport report;
    report.n = n;
    report.top = g(n, n - 1);
    report.closed_form = 3 * pow2(n - 1) - 2;
    report.closed_form_holds = report.top == report.closed_form;
    for (int i = 1; i <= n - 1; ++i) {
        BoundRow row;
        row.i = i;
        row.value = g(n, n - i);
        row.bound = pow2(n + i);
        row.pass = row.value <= row.bound;
        report.rows.push_back(row);
    }
    return report;
}

const std::array<ReferenceRow, 9> &reference_counts() {
    return kReference;
}

CnotReport cnot_report(int n, const CostModel &model) {
    check_n(n, 1);
    CnotReport report;
    report.n = n;
    report.model = model;
    report.profile = recursion_profile(n);
    for (int k = 0; k < n; ++k) {
        std::uint64_t gates = report.profile.at(k);
        report.cnot += gates * cnot_cost(k, model);
        report.single_qubit += gates * single_qubit_cost(k, model);
    }
    report.total = report.cnot + report.single_qubit;
    report.cnot_ratio = static_cast<double>(report.cnot) / static_cast<double>(pow2(2 * n));
    if (n <= static_cast<int>(kReference.size())) {
        report.reference = kReference[static_cast<std::size_t>(n - 1)];
        report.cnot_matches_reference = report.reference->cnot == report.cnot;
        report.total_matches_reference = report.reference->total == report.total;
    }
    return report;
}

std::string render_cnot_report(const CnotReport &r) {
    std::ostringstream out;
    char buf[128];
    out << "n = " << r.n << ", cost model " << r.model.name() << "\n";
    out << "profile (controls:gates) " << r.profile.str() << ", rotations " << r.profile.total() << "\n";
    std::snprintf(buf, sizeof(buf), "%.4f", r.cnot_ratio);
    out << "model: cnot " << r.cnot << ", single-qubit " << r.single_qubit << ", total " << r.total
        << ", cnot/4^n " << buf << "\n";
    if (r.reference) {
        std::snprintf(buf, sizeof(buf), "%.4f", static_cast<double>(r.reference->cnot) / static_cast<double>(pow2(2 * r.n)));
        out << "reference: cnot " << r.reference->cnot << ", total " << r.reference->total << ", cnot/4^n " << buf
            << "\n";
        out << "cnot " << (r.cnot_matches_reference ? "matches" : "DIFFERS from") << " reference, total "
            << (r.total_matches_reference ? "matches" : "DIFFERS from") << " reference\n";
    } else {
        out << "reference: none for n = " << r.n << "\n";
    }
    return out.str();
}

std::string cnot_report_json(const CnotReport &r) {
    nlohmann::json doc;
    doc["n"] = r.n;
    doc["model"] = r.model.name();
    doc["profile"] = r.profile.counts;
    doc["rotations"] = r.profile.total();
    doc["cnot"] = r.cnot;
    doc["single_qubit"] = r.single_qubit;
    doc["total"] = r.total;
    doc["cnot_ratio"] = r.cnot_ratio;
    if (r.reference) {
        doc["reference"] = {{"cnot", r.reference->cnot}, {"total", r.reference->total}};
        doc["cnot_matches_reference"] = r.cnot_matches_reference;
        doc["total_matches_reference"] = r.total_matches_reference;
    } else {
        doc["reference"] = nullptr;
    }
    return doc.dump() + "\n";
}

std::string render_reference_comparison(const CostModel &model) {
    std::ostringstream out;
    char buf[256];
    out << "Reference counts vs cost model " << model.name() << "\n";
    std::snprintf(buf, sizeof(buf), "%3s %12s %12s %10s %14s %14s %10s  %s\n", "n", "ref_cnot", "ref_total",
                  "ref/4^n", "model_cnot", "model_total", "model/4^n", "status");
    out << buf;
    bool any_diff = false;
    for (const auto &ref : kReference) {
        CnotReport r = cnot_report(ref.n, model);
        double ref_ratio = static_cast<double>(ref.cnot) / static_cast<double>(pow2(2 * ref.n));
        bool same = r.cnot_matches_reference && r.total_matches_reference;
        any_diff |= !same;
        std::snprintf(buf, sizeof(buf), "%3d %12llu %12llu %10.4f %14llu %14llu %10.4f  %s\n", ref.n,
                      static_cast<unsigned long long>(ref.cnot), static_cast<unsigned long long>(ref.total), ref_ratio,
                      static_cast<unsigned long long>(r.cnot), static_cast<unsigned long long>(r.total), r.cnot_ratio,
                      same ? "match" : "DIFFERS");
        out << buf;
    }
    std::snprintf(buf, sizeof(buf), "%.1f", kReferenceAsymptoticCoefficient);
    out << "reference large-n CNOT coefficient: ~" << buf << " * 4^n (ratio column shows the trend up to n = 9)\n";
    if (any_diff) {
        out << "note: the model does not reproduce the reference accounting; differing rows are marked DIFFERS\n";
    }
    return out.str();
}

}  // namespace qgd
