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

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace qgd {

namespace {

void check_bits(int num_bits) {
    if (num_bits < 1 || num_bits > kMaxGrayBits) {
        throw std::out_of_range("gray code bit count " + std::to_string(num_bits) + " outside 1.." +
                                std::to_string(kMaxGrayBits));
    }
}

std::uint64_t reflected(std::uint64_t x) {
    return x ^ (x >> 1);
}

}  // namespace

GrayCodeTable::GrayCodeTable(int num_bits) : num_bits_(num_bits) {
    check_bits(num_bits);
    std::uint64_t count = std::uint64_t{1} << num_bits;
    codes_.resize(count);
    for (std::uint64_t p = 0; p < count; ++p) {
        codes_[p] = reflected(p);
    }
}

std::uint64_t GrayCodeTable::code(std::size_t position) const {
    if (position < 1 || position > codes_.size()) {
        throw std::out_of_range("gray position " + std::to_string(position) + " outside 1.." +
                                std::to_string(codes_.size()));
    }
    return codes_[position - 1];
}

GrayCodeTable gray_code(int num_bits) {
    return GrayCodeTable(num_bits);
}

BasisMap::BasisMap(const GrayCodeTable &table) : num_bits_(table.num_bits()) {
    forward_.resize(table.size());
    inverse_.resize(table.size());
    for (std::size_t p = 0; p < table.size(); ++p) {
        auto bcb = static_cast<std::size_t>(table.codes()[p]);
        forward_[p] = bcb + 1;
        inverse_[bcb] = p + 1;
    }
}

std::size_t BasisMap::gamma(std::size_t position) const {
    if (position < 1 || position > forward_.size()) {
        throw std::out_of_range("gamma: position " + std::to_string(position) + " out of range");
    }
    return forward_[position - 1];
}

std::size_t BasisMap::position_of(std::size_t bcb_index) const {
    if (bcb_index < 1 || bcb_index > inverse_.size()) {
        throw std::out_of_range("position_of: index " + std::to_string(bcb_index) + " out of range");
    }
    return inverse_[bcb_index - 1];
}

std::size_t gamma_of(std::size_t position, int num_bits) {
    check_bits(num_bits);
    if (position < 1 || position > (std::size_t{1} << num_bits)) {
        throw std::out_of_range("gamma_of: position " + std::to_string(position) + " out of range");
    }
    return static_cast<std::size_t>(reflected(position - 1)) + 1;
}

int changed_bit(std::size_t position, int num_bits) {
    check_bits(num_bits);
    if (position < 2 || position > (std::size_t{1} << num_bits)) {
        throw std::out_of_range("changed_bit: position " + std::to_string(position) + " out of range");
    }
    return 1 + std::countr_zero(static_cast<std::uint64_t>(position - 1));
}

std::string format_gray_table(const GrayCodeTable &table) {
    std::ostringstream out;
    const std::size_t count = table.size();
    const int width = static_cast<int>(std::to_string(count).size()) + 1;
    auto pad = [&](const std::string &s) {
        out << std::string(static_cast<std::size_t>(width) - std::min(s.size(), std::size_t(width)), ' ') << s;
    };
    out << "pos  ";
    for (std::size_t p = 1; p <= count; ++p) {
        pad(std::to_string(p));
    }
    out << '\n';
    for (int b = table.num_bits(); b >= 1; --b) {
        std::string label = "b" + std::to_string(b);
        out << label << std::string(5 - std::min<std::size_t>(label.size(), 4), ' ');
        for (std::size_t p = 1; p <= count; ++p) {
            pad(table.bit(p, b) ? "#" : ".");
        }
        out << '\n';
    }
    out << "gam  ";
    for (std::size_t p = 1; p <= count; ++p) {
        pad(std::to_string(table.code(p) + 1));
    }
    out << '\n';
    return out.str();
}

}  // namespace qgd
