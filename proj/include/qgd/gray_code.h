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

#ifndef QGD_GRAY_CODE_H
#define QGD_GRAY_CODE_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qgd {

/// Largest bit count for which a full table is materialized.
constexpr int kMaxGrayBits = 30;

/// Reflected binary Gray code c_1 .. c_{2^n}, with c_p = (p-1) XOR ((p-1) >> 1).
///
/// Positions are 1-based. Bit b (1-based) of a code is the value of qubit b.
class GrayCodeTable {
   public:
    explicit GrayCodeTable(int num_bits);

    int num_bits() const {
        return num_bits_;
    }
    std::size_t size() const {
        return codes_.size();
    }
    /// Code at 1-based position p.
    std::uint64_t code(std::size_t position) const;
    /// Bit b (1-based) of the code at position p.
    int bit(std::size_t position, int b) const {
        return static_cast<int>((code(position) >> (b - 1)) & 1);
    }
    const std::vector<std::uint64_t> &codes() const {
        return codes_;
    }

   private:
    int num_bits_;
    std::vector<std::uint64_t> codes_;
};

GrayCodeTable gray_code(int num_bits);

/// gamma(i) = c_i + 1: the BCB index of the basis vector at Gray position i, plus its inverse.
class BasisMap {
   public:
    explicit BasisMap(const GrayCodeTable &table);

    int num_bits() const {
        return num_bits_;
    }
    /// 1-based position -> 1-based BCB index.
    std::size_t gamma(std::size_t position) const;
    /// 1-based BCB index -> 1-based position.
    std::size_t position_of(std::size_t bcb_index) const;

   private:
    int num_bits_;
    std::vector<std::size_t> forward_;
    std::vector<std::size_t> inverse_;
};

/// gamma(i) without building a table. Throws std::out_of_range unless 1 <= i <= 2^n.
std::size_t gamma_of(std::size_t position, int num_bits);

/// The single bit (1-based) in which c_j and c_{j-1} differ: 1 + index of the lowest set bit of j-1.
/// Throws std::out_of_range unless 2 <= j <= 2^n.
int changed_bit(std::size_t position, int num_bits);

/// Rows = bits n..1 (top to bottom), columns = positions; '#' marks a 1 and '.' a 0. A final row lists
/// gamma for each position.
std::string format_gray_table(const GrayCodeTable &table);

}  // namespace qgd

#endif
