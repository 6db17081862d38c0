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

#ifndef HYPERENT_CONCURRENCE_H
#define HYPERENT_CONCURRENCE_H

#include <array>
#include <complex>

#include "hyperent/hypergraph.h"
#include "hyperent/statesim.h"

namespace hyperent {

/// Pairs with concurrence above this are reported as entangled.
inline constexpr double kEntanglementThreshold = 1e-9;

/// M = rho * (sigma_y (x) sigma_y). For real rho the spin-flipped product
/// rho * rho~ equals M^2, so the square roots of its eigenvalues are the
/// magnitudes of M's eigenvalues.
struct SpinFlipProduct {
    Matrix4 matrix = Matrix4::Zero();
};

/// sigma_y (x) sigma_y as a real signed permutation.
Matrix4 spin_flip_operator();

SpinFlipProduct spin_flip_product(const PairDensity &rho);

/// Coefficients {c1, c2, c3, c4} of det(lambda I - M) =
/// lambda^4 + c1 lambda^3 + c2 lambda^2 + c3 lambda + c4, by the
/// Faddeev-LeVerrier trace recursion. Matrices whose entries share a
/// power-of-two denominator with small numerators are handled in exact
/// integer arithmetic.
std::array<double, 4> characteristic_polynomial(const Matrix4 &m);

/// Roots of the monic quartic with the given lower coefficients, by
/// Durand-Kerner simultaneous iteration (tolerance 1e-13, at most 200
/// sweeps). Exactly-zero trailing coefficients are split off as exact zero
/// roots first. Throws NoConvergence.
std::array<std::complex<double>, 4> quartic_roots(const std::array<double, 4> &coefficients);

/// Eigenvalue magnitudes of M in decreasing order.
std::array<double, 4> eigenvalues_4(const Matrix4 &m);

struct ConcurrenceResult {
    double value = 0;
    /// sqrt(lambda_k) of rho * rho~, decreasing.
    std::array<double, 4> sqrt_eigs{};

    bool entangled() const noexcept {
        return value > kEntanglementThreshold;
    }
};

/// Wootters concurrence max(0, s1 - s2 - s3 - s4) of a real two-qubit density
/// matrix. Throws InvalidArgument when rho is not symmetric with unit trace.
ConcurrenceResult concurrence_of(const PairDensity &rho);

enum class Method {
    Combinatorial,  ///< Hamming weights of derived subhypergraphs.
    Oracle,         ///< Statevector and partial trace.
    ClosedForm,     ///< Rank-2 tables or the g* formula.
};

ConcurrenceResult concurrence_pair(const Hypergraph &g, Vertex i, Vertex j, Method method);

/// Pair concurrence shared by every pair of |g*_n>. The spin-flip product has
/// eigenvalue magnitudes a + b, |a - b|, 0, 0 with a = 2^(1-n), b = 2^(-n/2),
/// so C = 2 min(a, b) = 2^(2-n) for n >= 2.
double gstar_concurrence(int n);

/// One row of the rank-2 classification tables.
struct Rank2Row {
    int table;    ///< 1 when eps(g_{i,j}) = 1, 2 when it is -1.
    int number;   ///< row number within the table, 1..11
    int forward;  ///< eps(g_(i,j))
    int backward; ///< eps(g_(j,i))
    int cross;    ///< eps(g_(i,j) ^ g_(j,i))
    int concurrence;
};

/// All 22 rows, table 1 first.
const std::array<Rank2Row, 22> &rank2_table();

/// Row matching the epsilon key of (g, i, j). Throws RankTooHigh or TableMiss.
const Rank2Row &rank2_row(const Hypergraph &g, Vertex i, Vertex j);

/// Concurrence (0 or 1) by table lookup. Throws RankTooHigh or TableMiss.
int rank2_concurrence(const Hypergraph &g, Vertex i, Vertex j);

}  // namespace hyperent

#endif
