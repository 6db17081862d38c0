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

#ifndef HYPERENT_PAIRDENSITY_H
#define HYPERENT_PAIRDENSITY_H

#include <array>
#include <cstdint>

#include "hyperent/hypergraph.h"
#include "hyperent/statesim.h"

namespace hyperent {

/// Off-diagonal slots of a symmetric 4x4 matrix, upper triangle row by row.
inline constexpr std::array<std::array<int, 2>, 6> kOffDiagonal = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Pair density of a hypergraph state in exact form. Every off-diagonal entry
/// is 1/4 - w / 2^(n-1) for an integer Hamming weight w over n-2 variables;
/// the diagonal is 1/4.
struct DyadicPairDensity {
    int n = 2;
    /// Weights in kOffDiagonal order.
    std::array<std::uint64_t, 6> weights{};

    /// Entry (r, s) scaled by 2^(n+1), which is always an integer.
    std::int64_t numerator(int r, int s) const;
    int denominator_log2() const {
        return n + 1;
    }
    PairDensity to_density() const;

    bool operator==(const DyadicPairDensity &) const = default;
};

/// Hamming weights of the six subhypergraph combinations that determine
/// rho_ij:
///   a01 <- g_(j,i)               a02 <- g_(i,j)
///   a03 <- g_{i,j} ^ g_(i,j) ^ g_(j,i)
///   a12 <- g_(i,j) ^ g_(j,i)     a13 <- g_{i,j} ^ g_(i,j)
///   a23 <- g_{i,j} ^ g_(j,i)
/// where ^ is the edge-set symmetric difference.
DyadicPairDensity pair_density_exact(const Hypergraph &g, Vertex i, Vertex j);

PairDensity pair_density_comb(const Hypergraph &g, Vertex i, Vertex j);

/// (eps(g_{i,j}), eps(g_(i,j)), eps(g_(j,i)), eps(g_(i,j) ^ g_(j,i))).
struct EpsilonKey {
    int pair = 1;
    int forward = 1;
    int backward = 1;
    int cross = 1;

    bool operator==(const EpsilonKey &) const = default;
};

EpsilonKey epsilon_key(const Hypergraph &g, Vertex i, Vertex j);

/// Closed-form rho_ij for rank(g) <= 2, built from Pauli tensor templates:
///   eps(g_{i,j}) =  1:  (1/4)[II + a XI + b IX + c XX]
///   eps(g_{i,j}) = -1:  (1/4)[II + a XZ + b ZX + c YY]
/// with (a, b, c) the last three entries of the epsilon key.
/// Throws RankTooHigh.
PairDensity rank2_density(const Hypergraph &g, Vertex i, Vertex j);

/// Closed-form rho_ij of |g*_n> for any pair: every off-diagonal entry is 1/4
/// except a03, a13, a23 (and their transposes) which are 1/4 - 1/2^(n-1).
PairDensity gstar_density(int n);

}  // namespace hyperent

#endif
