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

#include "qgd/gray_code.h"

#include <bit>
#include <set>

#include "gtest/gtest.h"

using namespace qgd;

TEST(gray_code, small_tables) {
    EXPECT_EQ(gray_code(1).codes(), (std::vector<std::uint64_t>{0, 1}));
    EXPECT_EQ(gray_code(2).codes(), (std::vector<std::uint64_t>{0, 1, 3, 2}));
}

TEST(gray_code, four_bit_table) {
    // Column pattern of the four-bit illustration, positions 1..16.
    std::vector<std::uint64_t> expected{0, 1, 3, 2, 6, 7, 5, 4, 12, 13, 15, 14, 10, 11, 9, 8};
    GrayCodeTable t = gray_code(4);
    EXPECT_EQ(t.codes(), expected);
    EXPECT_EQ(t.code(16), 8u);
    EXPECT_EQ(t.bit(16, 4), 1);
    EXPECT_EQ(t.bit(16, 1), 0);
    EXPECT_THROW(t.code(0), std::out_of_range);
    EXPECT_THROW(t.code(17), std::out_of_range);
}

TEST(gray_code, gamma) {
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(gamma_of(1, n), 1u);
    }
    EXPECT_EQ(gamma_of(3, 2), 4u);
    EXPECT_EQ(gamma_of(16, 4), 9u);
    EXPECT_THROW(gamma_of(0, 2), std::out_of_range);
    EXPECT_THROW(gamma_of(5, 2), std::out_of_range);

    BasisMap map(gray_code(4));
    for (std::size_t p = 1; p <= 16; ++p) {
        EXPECT_EQ(map.gamma(p), gamma_of(p, 4));
        EXPECT_EQ(map.position_of(map.gamma(p)), p);
    }
}

TEST(gray_code, changed_bit) {
    EXPECT_EQ(changed_bit(2, 3), 1);
    EXPECT_EQ(changed_bit(3, 3), 2);
    EXPECT_EQ(changed_bit(15, 4), 2);  // codes 11 -> 9
    EXPECT_EQ(changed_bit(16, 4), 1);
    EXPECT_EQ(changed_bit(9, 4), 4);
    EXPECT_THROW(changed_bit(1, 4), std::out_of_range);
    EXPECT_THROW(changed_bit(17, 4), std::out_of_range);
}

TEST(gray_code, structural_invariants_up_to_twelve_bits) {
    for (int n = 1; n <= 12; ++n) {
        GrayCodeTable t = gray_code(n);
        const std::size_t size = t.size();
        ASSERT_EQ(size, std::size_t{1} << n);
        EXPECT_EQ(t.code(1), 0u);
        std::set<std::uint64_t> seen(t.codes().begin(), t.codes().end());
        EXPECT_EQ(seen.size(), size);
        EXPECT_EQ(*seen.rbegin(), size - 1);
        for (std::size_t p = 1; p <= size; ++p) {
            EXPECT_EQ(t.bit(p, n), p > size / 2 ? 1 : 0);
        }
        for (std::size_t p = 2; p <= size; ++p) {
            std::uint64_t diff = t.code(p) ^ t.code(p - 1);
            ASSERT_EQ(std::popcount(diff), 1);
            int b = changed_bit(p, n);
            ASSERT_EQ(diff, std::uint64_t{1} << (b - 1));
            if (b >= 2) {
                std::uint64_t low_mask = (std::uint64_t{1} << (b - 1)) - 1;
                std::uint64_t expected_low = std::uint64_t{1} << (b - 2);
                EXPECT_EQ(t.code(p) & low_mask, expected_low);
                EXPECT_EQ(t.code(p - 1) & low_mask, expected_low);
            }
        }
    }
}

TEST(gray_code, changed_bit_depends_only_on_lowest_set_bit) {
    for (std::size_t j = 2; j <= 256; ++j) {
        for (std::size_t k = 2; k <= 256; ++k) {
            if (std::countr_zero(j - 1) == std::countr_zero(k - 1)) {
                EXPECT_EQ(changed_bit(j, 8), changed_bit(k, 8));
            }
        }
    }
}

TEST(gray_code, formatted_table) {
    std::string text = format_gray_table(gray_code(2));
    EXPECT_NE(text.find("b2"), std::string::npos);
    EXPECT_NE(text.find("gam"), std::string::npos);
    // gamma for n = 2 is 1 2 4 3
    EXPECT_NE(text.find(" 1 2 4 3"), std::string::npos) << text;
}
