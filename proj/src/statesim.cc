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

#include "hyperent/statesim.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "hyperent/boolfn.h"
#include "hyperent/error.h"

namespace hyperent {

namespace {

std::uint64_t insert_zero_bit(std::uint64_t y, int pos) {
    const std::uint64_t low = (std::uint64_t{1} << pos) - 1;
    return ((y & ~low) << 1) | (y & low);
}

}  // namespace

StateVector::StateVector(int num_qubits, Eigen::VectorXd components, double weight)
    : n_(num_qubits), components_(std::move(components)), weight_(weight) {
    if (num_qubits < 1 || num_qubits > kMaxVertices) {
        throw Error(ErrorCode::TooManyVertices, "qubit count " + std::to_string(num_qubits) + " unsupported");
    }
    if (static_cast<std::uint64_t>(components_.size()) != (std::uint64_t{1} << num_qubits)) {
        throw Error(ErrorCode::InvalidArgument, "amplitude vector length is not 2^n");
    }
    if (!(weight_ > 0) || std::abs(weight_ * components_.squaredNorm() - 1.0) > 1e-12) {
        throw Error(ErrorCode::InvalidArgument, "state is not normalized");
    }
}

void check_pair_density(const PairDensity &rho) {
    const Matrix4 &m = rho.matrix;
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        throw Error(ErrorCode::InvalidArgument, "pair density is not symmetric");
    }
    if (std::abs(m.trace() - 1.0) > 1e-12) {
        throw Error(ErrorCode::InvalidArgument, "pair density trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix4> solver(m, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -1e-10) {
        throw Error(ErrorCode::InvalidArgument, "pair density is not positive semidefinite");
    }
}

StateVector hypergraph_state(const Hypergraph &g) {
    const int n = g.num_vertices();
    if (n > kMaxVertices) {
        throw Error(ErrorCode::TooManyVertices, "state on " + std::to_string(n) + " qubits is too large");
    }
    // Truth-table index has x_1 in the lowest bit while the basis index has it
    // in the highest; mirroring the vertex labels lines the two up.
    std::vector<Vertex> mirror(n);
    for (int v = 1; v <= n; v++) {
        mirror[v - 1] = n + 1 - v;
    }
    const TruthTable signs = truth_table(permute(g, mirror));
    Eigen::VectorXd amps(static_cast<Eigen::Index>(signs.size()));
    for (std::uint64_t x = 0; x < signs.size(); x++) {
        amps[static_cast<Eigen::Index>(x)] = signs[x] ? -1.0 : 1.0;
    }
    return StateVector(n, std::move(amps), std::ldexp(1.0, -n));
}

PairDensity reduce_pair(const StateVector &psi, Vertex i, Vertex j) {
    const int n = psi.num_qubits();
    if (i < 1 || i > n || j < 1 || j > n) {
        throw Error(ErrorCode::VertexOutOfRange, "qubit label outside [1, " + std::to_string(n) + "]");
    }
    if (i == j) {
        throw Error(ErrorCode::SameVertex, "pair needs two distinct qubits");
    }
    const int pos_i = n - i;
    const int pos_j = n - j;
    const std::uint64_t bit_i = std::uint64_t{1} << pos_i;
    const std::uint64_t bit_j = std::uint64_t{1} << pos_j;
    const int lo = std::min(pos_i, pos_j);
    const int hi = std::max(pos_i, pos_j);
    const std::array<std::uint64_t, 4> offset = {0, bit_j, bit_i, bit_i | bit_j};

    const Eigen::VectorXd &amps = psi.components();
    std::array<double, 16> acc{};
    const std::uint64_t rest = std::uint64_t{1} << (n - 2);
    for (std::uint64_t y = 0; y < rest; y++) {
        const std::uint64_t base = insert_zero_bit(insert_zero_bit(y, lo), hi);
        std::array<double, 4> v;
        for (int z = 0; z < 4; z++) {
            v[z] = amps[static_cast<Eigen::Index>(base | offset[z])];
        }
        for (int r = 0; r < 4; r++) {
            for (int s = r; s < 4; s++) {
                acc[4 * r + s] += v[r] * v[s];
            }
        }
    }
    PairDensity rho;
    for (int r = 0; r < 4; r++) {
        for (int s = r; s < 4; s++) {
            rho.matrix(r, s) = psi.weight() * acc[4 * r + s];
            rho.matrix(s, r) = psi.weight() * acc[4 * r + s];
        }
    }
    return rho;
}

StateVector w_state(int n) {
    if (n < 2 || n > kMaxVertices) {
        throw Error(ErrorCode::InvalidArgument, "W state needs 2 <= n <= " + std::to_string(kMaxVertices));
    }
    Eigen::VectorXd amps = Eigen::VectorXd::Zero(Eigen::Index{1} << n);
    for (int k = 0; k < n; k++) {
        amps[Eigen::Index{1} << k] = 1.0;
    }
    return StateVector(n, std::move(amps), 1.0 / n);
}

}  // namespace hyperent
