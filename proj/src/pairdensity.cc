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

#include "hyperent/pairdensity.h"

#include <cmath>
#include <string>

#include "hyperent/boolfn.h"
#include "hyperent/error.h"

namespace hyperent {

namespace {

using Matrix2 = Eigen::Matrix2d;

Matrix4 kron(const Matrix2 &a, const Matrix2 &b) {
    Matrix4 out;
    for (int r = 0; r < 2; r++) {
        for (int c = 0; c < 2; c++) {
            out.block<2, 2>(2 * r, 2 * c) = a(r, c) * b;
        }
    }
    return out;
}

void require_pair_qubits(const Hypergraph &g) {
    if (g.num_vertices() < 2) {
        throw Error(ErrorCode::TooFewQubits, "a qubit pair needs n >= 2");
    }
    if (g.num_vertices() > kMaxVertices) {
        throw Error(ErrorCode::TooManyVertices, std::to_string(g.num_vertices()) + " vertices exceeds the limit");
    }
}

}  // namespace

std::int64_t DyadicPairDensity::numerator(int r, int s) const {
    const std::int64_t quarter = std::int64_t{1} << (n - 1);
    if (r == s) {
        return quarter;
    }
    if (r > s) {
        std::swap(r, s);
    }
    for (std::size_t k = 0; k < kOffDiagonal.size(); k++) {
        if (kOffDiagonal[k][0] == r && kOffDiagonal[k][1] == s) {
            return quarter - 4 * static_cast<std::int64_t>(weights[k]);
        }
    }
    throw Error(ErrorCode::InvalidArgument, "matrix index out of range");
}

PairDensity DyadicPairDensity::to_density() const {
    PairDensity rho;
    for (int r = 0; r < 4; r++) {
        for (int s = 0; s < 4; s++) {
            rho.matrix(r, s) = std::ldexp(static_cast<double>(numerator(r, s)), -denominator_log2());
        }
    }
    return rho;
}

DyadicPairDensity pair_density_exact(const Hypergraph &g, Vertex i, Vertex j) {
    require_pair_qubits(g);
    const Hypergraph both = pair_adjacent(g, i, j);
    const Hypergraph only_i = ordered_adjacent(g, i, j);
    const Hypergraph only_j = ordered_adjacent(g, j, i);

    // hw of a symmetric difference is the popcount of the XOR of tables, so
    // three tables cover all six weights.
    const TruthTable t_both = truth_table(both);
    const TruthTable t_i = truth_table(only_i);
    const TruthTable t_j = truth_table(only_j);

    DyadicPairDensity out;
    out.n = g.num_vertices();
    out.weights[0] = t_j.popcount();
    out.weights[1] = t_i.popcount();
    out.weights[2] = (t_both ^ t_i ^ t_j).popcount();
    out.weights[3] = (t_i ^ t_j).popcount();
    out.weights[4] = (t_both ^ t_i).popcount();
    out.weights[5] = (t_both ^ t_j).popcount();
    return out;
}

PairDensity pair_density_comb(const Hypergraph &g, Vertex i, Vertex j) {
    return pair_density_exact(g, i, j).to_density();
}

EpsilonKey epsilon_key(const Hypergraph &g, Vertex i, Vertex j) {
    const Hypergraph forward = ordered_adjacent(g, i, j);
    const Hypergraph backward = ordered_adjacent(g, j, i);
    return EpsilonKey{
        .pair = epsilon(pair_adjacent(g, i, j)),
        .forward = epsilon(forward),
        .backward = epsilon(backward),
        .cross = epsilon(sym_diff(forward, backward)),
    };
}

PairDensity rank2_density(const Hypergraph &g, Vertex i, Vertex j) {
    if (rank(g) > 2) {
        throw Error(ErrorCode::RankTooHigh, "closed form needs rank <= 2, got " + std::to_string(rank(g)));
    }
    const EpsilonKey key = epsilon_key(g, i, j);

    const Matrix2 id = Matrix2::Identity();
    Matrix2 x;
    x << 0, 1, 1, 0;
    Matrix2 z;
    z << 1, 0, 0, -1;
    // sigma_z appears exactly when g_{i,j} = {{}} (key.pair == -1). For rank <= 2
    // g_{i,j} is either {} or {{}}.
    const Matrix2 twist = key.pair == -1 ? z : id;

    const Matrix4 a = kron(x, twist);
    const Matrix4 b = kron(twist, x);
    PairDensity rho;
    rho.matrix = 0.25 * (Matrix4::Identity() + key.forward * a + key.backward * b + key.cross * (a * b));
    return rho;
}

PairDensity gstar_density(int n) {
    if (n < 2 || n > kMaxVertices) {
        throw Error(ErrorCode::InvalidArgument, "g* density needs 2 <= n <= " + std::to_string(kMaxVertices));
    }
    PairDensity rho;
    rho.matrix.setConstant(0.25);
    const double low = 0.25 - std::ldexp(1.0, 1 - n);
    for (int r = 0; r < 3; r++) {
        rho.matrix(r, 3) = low;
        rho.matrix(3, r) = low;
    }
    return rho;
}

}  // namespace hyperent
