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

#include <cmath>
#include <stdexcept>
#include <thread>

#include "gtest/gtest.h"
#include "json.hpp"
#include "test_util.h"

using namespace qgd;

TEST(g0, small_values) {
    EXPECT_EQ(g0(2, 0), 1u);
    EXPECT_EQ(g0(2, 1), 3u);
    EXPECT_EQ(g0(3, 1), 8u);
    EXPECT_EQ(g0(4, 0), 4u);
    EXPECT_EQ(g0(4, 3), 12u);
    EXPECT_THROW(g0(1, 0), std::out_of_range);
    EXPECT_THROW(g0(4, 4), std::out_of_range);
    EXPECT_THROW(g0(4, -1), std::out_of_range);
}

TEST(g0, matches_enumeration) {
    for (int n = 2; n <= 8; ++n) {
        auto by_pairs = test_support::enumerate_quarter(n);
        auto by_bits = test_support::enumerate_quarter_by_bits(n);
        std::uint64_t quarter = 0;
        for (int k = 0; k < n; ++k) {
            EXPECT_EQ(g0(n, k), by_pairs[k]) << "n = " << n << ", k = " << k;
            EXPECT_EQ(g0(n, k), by_bits[k]) << "n = " << n << ", k = " << k;
            quarter += g0(n, k);
        }
        std::uint64_t half = std::uint64_t{1} << (n - 1);
        EXPECT_EQ(quarter, half * half);
    }
}

TEST(g, small_profiles) {
    EXPECT_EQ(g(1, 0), 1u);
    EXPECT_EQ(g(2, 0), 2u);
    EXPECT_EQ(g(2, 1), 4u);
    EXPECT_EQ(g(3, 1), 14u);
    EXPECT_EQ(g(3, 2), 10u);
    EXPECT_EQ(g(5, 4), 46u);
    EXPECT_EQ(recursion_profile(4).counts, (std::vector<std::uint64_t>{8, 50, 40, 22}));
    EXPECT_EQ(recursion_profile(4).str(), "{0:8, 1:50, 2:40, 3:22}");
    EXPECT_EQ(g(4, 4), 0u);
    EXPECT_EQ(g(4, -1), 0u);
}

TEST(g, profile_sums_to_rotation_count) {
    for (int n = 1; n <= 12; ++n) {
        GateCountProfile p = recursion_profile(n);
        EXPECT_EQ(p.total(), rotation_count(n));
        EXPECT_EQ(rotation_count(n), (std::uint64_t{1} << (n - 1)) * ((std::uint64_t{1} << n) - 1));
        EXPECT_EQ(p.at(0), std::uint64_t{1} << (n - 1));
    }
}

TEST(bound_check, closed_form_and_bound) {
    for (int n = 2; n <= 12; ++n) {
        BoundReport r = bound_check(n);
        EXPECT_TRUE(r.closed_form_holds) << n;
        EXPECT_EQ(r.top, 3 * (std::uint64_t{1} << (n - 1)) - 2);
        EXPECT_EQ(r.rows.size(), static_cast<std::size_t>(n - 1));
        EXPECT_TRUE(r.all_pass()) << n;
    }
    BoundReport r3 = bound_check(3);
    EXPECT_EQ(r3.rows[0].value, 10u);
    EXPECT_EQ(r3.rows[0].bound, 16u);
    EXPECT_THROW(bound_check(1), std::out_of_range);
}

TEST(cnot_report, reference_rows) {
    CnotReport r = cnot_report(3, CostModel::emitted());
    ASSERT_TRUE(r.reference.has_value());
    EXPECT_EQ(r.reference->cnot, 64u);
    EXPECT_EQ(r.reference->total, 136u);
    EXPECT_FALSE(cnot_report(10, CostModel::emitted()).reference.has_value());
}

TEST(cnot_report, emitted_model_differs_at_two_qubits) {
    CnotReport r = cnot_report(2, CostModel::emitted());
    EXPECT_EQ(r.cnot, 8u);
    EXPECT_FALSE(r.cnot_matches_reference);
    std::string text = render_reference_comparison(CostModel::emitted());
    EXPECT_NE(text.find("DIFFERS"), std::string::npos);
}

TEST(cnot_report, single_qubit_has_no_cnots) {
    CnotReport r = cnot_report(1, CostModel::emitted());
    EXPECT_EQ(r.cnot, 0u);
    EXPECT_EQ(r.total, 1u);
    EXPECT_TRUE(r.cnot_matches_reference);
    EXPECT_TRUE(r.total_matches_reference);
}

TEST(cnot_report, ratio_trend) {
    const auto &rows = reference_counts();
    double ratio9 = static_cast<double>(rows[8].cnot) / std::pow(4.0, 9);
    EXPECT_NEAR(ratio9, 7.93, 0.005);
    EXPECT_LT(ratio9, kReferenceAsymptoticCoefficient);
    CnotReport r = cnot_report(4, CostModel::emitted());
    EXPECT_DOUBLE_EQ(r.cnot_ratio, static_cast<double>(r.cnot) / 256.0);
}

TEST(cnot_report, linear_model_sums) {
    CostModel m = CostModel::linear(10, 0);
    CnotReport r = cnot_report(4, m);
    GateCountProfile p = recursion_profile(4);
    std::uint64_t expected = 0;
    for (int k = 0; k < 4; ++k) {
        expected += p.at(k) * cnot_cost(k, m);
    }
    EXPECT_EQ(r.cnot, expected);
    EXPECT_EQ(r.total, r.cnot + r.single_qubit);
}

TEST(cnot_report, json) {
    auto j = nlohmann::json::parse(cnot_report_json(cnot_report(3, CostModel::emitted())));
    EXPECT_EQ(j["n"], 3);
    EXPECT_EQ(j["reference"]["cnot"], 64);
}

TEST(render_reference_comparison, lists_every_reference_row) {
    std::string text = render_reference_comparison(CostModel::emitted());
    for (const auto &row : reference_counts()) {
        std::string line_start = (row.n < 10 ? "  " : " ") + std::to_string(row.n) + " ";
        auto pos = text.find("\n" + line_start);
        ASSERT_NE(pos, std::string::npos) << row.n;
        auto end = text.find('\n', pos + 1);
        std::string line = text.substr(pos + 1, end - pos - 1);
        EXPECT_NE(line.find(" " + std::to_string(row.cnot) + " "), std::string::npos) << line;
        EXPECT_NE(line.find(" " + std::to_string(row.total) + " "), std::string::npos) << line;
    }
    EXPECT_NE(text.find("8.7"), std::string::npos);
}

TEST(g, concurrent_calls_agree) {
    std::vector<std::thread> threads;
    std::vector<std::uint64_t> results(8);
    for (std::size_t t = 0; t < results.size(); ++t) {
        threads.emplace_back([&results, t] { results[t] = g(20 + static_cast<int>(t % 4), 7); });
    }
    for (auto &th : threads) {
        th.join();
    }
    for (std::size_t t = 0; t < results.size(); ++t) {
        EXPECT_EQ(results[t], g(20 + static_cast<int>(t % 4), 7));
    }
}
