// Copyright 2026 The hyperent Authors
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

#include "hyperent/boolfn.h"

#include <array>
#include <bit>
#include <string>

#include "hyperent/error.h"

namespace hyperent {

namespace {

// Word masks selecting entries whose variable k (k < 6) is zero.
constexpr std::array<std::uint64_t, 6> kLowHalf = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

void check_table_size(int n) {
    if (n < 0 || n > kMaxVertices) {
        throw Error(
            ErrorCode::TooManyVertices,
            std::to_string(n) + " variables exceeds the limit of " + std::to_string(kMaxVertices));
    }
}

}  // namespace

TruthTable::TruthTable(int num_vars) : n_(num_vars) {
    check_table_size(num_vars);
    words_.assign(num_vars <= 6 ? 1 : (std::size_t{1} << (num_vars - 6)), 0);
}

std::uint64_t TruthTable::popcount() const noexcept {
    std::uint64_t total = 0;
    for (std::uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

TruthTable &TruthTable::operator^=(const TruthTable &other) {
    if (other.n_ != n_) {
        throw Error(ErrorCode::VertexCountMismatch, "truth tables over different variable counts");
    }
    for (std::size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

void TruthTable::mobius_transform() noexcept {
    const int in_word = n_ < 6 ? n_ : 6;
    for (int k = 0; k < in_word; k++) {
        const int shift = 1 << k;
        for (std::uint64_t &w : words_) {
            w ^= (w & kLowHalf[k]) << shift;
        }
    }
    for (int k = 6; k < n_; k++) {
        const std::size_t stride = std::size_t{1} << (k - 6);
        for (std::size_t base = 0; base < words_.size(); base += 2 * stride) {
            for (std::size_t off = 0; off < stride; off++) {
                words_[base + stride + off] ^= words_[base + off];
            }
        }
    }
}

bool evaluate(const Hypergraph &g, Assignment a) {
    bool value = false;
    for (EdgeMask e : g.edges()) {
        if ((e & a) == e) {
            value = !value;
        }
    }
    return value;
}

TruthTable truth_table(const Hypergraph &g) {
    TruthTable table(g.num_vertices());
    for (EdgeMask e : g.edges()) {
        table.flip(e);
    }
    table.mobius_transform();
    return table;
}

std::uint64_t hamming_weight(const Hypergraph &g) {
    return truth_table(g).popcount();
}

}  // namespace hyperent
