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

#ifndef HYPERENT_BOOLFN_H
#define HYPERENT_BOOLFN_H

#include <cstdint>
#include <span>
#include <vector>

#include "hyperent/hypergraph.h"

namespace hyperent {

/// Variable assignment: bit k-1 holds the value of x_k.
using Assignment = std::uint32_t;

/// Packed table of a Boolean function on n variables, 64 entries per word.
/// Entry `a` lives at bit (a % 64) of word (a / 64). Bits past 2^n in the last
/// word are always zero.
class TruthTable {
   public:
    explicit TruthTable(int num_vars);

    int num_vars() const noexcept {
        return n_;
    }
    std::uint64_t size() const noexcept {
        return std::uint64_t{1} << n_;
    }

    bool operator[](std::uint64_t a) const noexcept {
        return (words_[a >> 6] >> (a & 63)) & 1;
    }
    void flip(std::uint64_t a) noexcept {
        words_[a >> 6] ^= std::uint64_t{1} << (a & 63);
    }

    std::span<const std::uint64_t> words() const noexcept {
        return words_;
    }

    /// Number of ones.
    std::uint64_t popcount() const noexcept;

    /// Entrywise XOR. Both tables must have the same variable count.
    TruthTable &operator^=(const TruthTable &other);

    /// In-place subset-sum (zeta) transform over GF(2):
    /// t[x] <- XOR of t[s] over all s subset of x. Turns algebraic normal form
    /// coefficients into function values and back, in n * 2^n / 64 word steps.
    void mobius_transform() noexcept;

    bool operator==(const TruthTable &) const = default;

   private:
    int n_;
    std::vector<std::uint64_t> words_;
};

inline TruthTable operator^(TruthTable a, const TruthTable &b) {
    a ^= b;
    return a;
}

/// u(g)(a): parity over the hyperedges contained in the support of `a`. The
/// empty hyperedge contributes the constant 1.
bool evaluate(const Hypergraph &g, Assignment a);

/// Table of u(g) over all 2^n assignments, via the Möbius transform of the
/// ANF coefficient vector. Throws TooManyVertices above kMaxVertices.
TruthTable truth_table(const Hypergraph &g);

/// |u(g)^{-1}(1)|. Throws TooManyVertices above kMaxVertices.
std::uint64_t hamming_weight(const Hypergraph &g);

}  // namespace hyperent

#endif
