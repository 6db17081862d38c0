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

#include <cmath>
#include <gtest/gtest.h>
#include <random>

#include "hyperent/error.h"
#include "test_support.h"

namespace hyperent {
namespace {

constexpr double kTol = 1e-12;

TEST(StateSim, HypergraphState) {
    const StateVector psi = hypergraph_state(make_hypergraph(2, {{1, 2}}));
    ASSERT_EQ(psi.components().size(), 4);
    EXPECT_NEAR(psi.amplitude(0), 0.5, kTol);
    EXPECT_NEAR(psi.amplitude(1), 0.5, kTol);
    EXPECT_NEAR(psi.amplitude(2), 0.5, kTol);
    EXPECT_NEAR(psi.amplitude(3), -0.5, kTol);

    // A loop on qubit 1 flips the sign of every basis state with x1 = 1,
    // which is the upper half when x1 is the leading bit.
    const StateVector loop = hypergraph_state(make_hypergraph(2, {{1}}));
    EXPECT_GT(loop.amplitude(1), 0);
    EXPECT_LT(loop.amplitude(2), 0);
    EXPECT_LT(loop.amplitude(3), 0);

    EXPECT_THROW(hypergraph_state(Hypergraph::from_masks(25, {})), Error);
}

TEST(StateSim, BitOrder) {
    // |x1 x2 x3> = |100>.
    Eigen::VectorXd amps = Eigen::VectorXd::Zero(8);
    amps(0b100) = 1;
    const StateVector psi(3, amps);
    EXPECT_NEAR(reduce_pair(psi, 1, 2).matrix(2, 2), 1, kTol);
    EXPECT_NEAR(reduce_pair(psi, 1, 3).matrix(2, 2), 1, kTol);
    EXPECT_NEAR(reduce_pair(psi, 2, 1).matrix(1, 1), 1, kTol);
    EXPECT_NEAR(reduce_pair(psi, 2, 3).matrix(0, 0), 1, kTol);
}

TEST(StateSim, SingleEdgeProjector) {
    const PairDensity rho = reduce_pair(hypergraph_state(make_hypergraph(2, {{1, 2}})), 1, 2);
    Eigen::Vector4d v(0.5, 0.5, 0.5, -0.5);
    EXPECT_LT((rho.matrix - v * v.transpose()).cwiseAbs().maxCoeff(), kTol);
}

TEST(StateSim, GStarReduction) {
    for (int n = 3; n <= 8; n++) {
        const PairDensity rho = reduce_pair(hypergraph_state(gstar(n)), 1, 2);
        const double b = 0.25 - std::ldexp(1.0, 1 - n);
        for (int r = 0; r < 4; r++) {
            for (int s = 0; s < 4; s++) {
                const bool corner = (r == 3) != (s == 3);
                EXPECT_NEAR(rho.matrix(r, s), corner ? b : 0.25, kTol) << n << " " << r << s;
            }
        }
    }
}

TEST(StateSim, OddQubitReductionIsDyadic) {
    // Sums of +-1 scaled by 2^-n: every entry is a multiple of 2^-n.
    const Hypergraph g = make_hypergraph(5, {{1, 2, 3}, {3, 4, 5}});
    const PairDensity rho = reduce_pair(hypergraph_state(g), 1, 3);
    for (int r = 0; r < 4; r++) {
        for (int s = 0; s < 4; s++) {
            const double scaled = rho.matrix(r, s) * 32;
            EXPECT_EQ(scaled, std::round(scaled));
        }
    }
}

TEST(StateSim, ProductState) {
    const PairDensity rho = reduce_pair(hypergraph_state(make_hypergraph(3, {})), 1, 3);
    EXPECT_LT((rho.matrix - Matrix4::Constant(0.25)).cwiseAbs().maxCoeff(), kTol);
}

TEST(StateSim, WState) {
    const StateVector w = w_state(3);
    EXPECT_NEAR(w.weight() * w.components().squaredNorm(), 1, kTol);
    EXPECT_NEAR(w.amplitude(0b001), 1 / std::sqrt(3.0), kTol);
    EXPECT_NEAR(w.amplitude(0b010), 1 / std::sqrt(3.0), kTol);
    EXPECT_NEAR(w.amplitude(0b100), 1 / std::sqrt(3.0), kTol);
    EXPECT_NEAR(w.amplitude(0b011), 0, kTol);
    const PairDensity rho = reduce_pair(w, 1, 2);
    EXPECT_NEAR(rho.matrix(0, 0), 1.0 / 3, kTol);
    EXPECT_NEAR(rho.matrix(1, 2), 1.0 / 3, kTol);
    EXPECT_NEAR(rho.matrix(3, 3), 0, kTol);
    EXPECT_THROW(w_state(1), Error);
}

TEST(StateSim, Errors) {
    const StateVector psi = hypergraph_state(make_hypergraph(3, {}));
    auto code = [&](Vertex i, Vertex j) {
        try {
            reduce_pair(psi, i, j);
        } catch (const Error &e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    EXPECT_EQ(code(2, 2), ErrorCode::SameVertex);
    EXPECT_EQ(code(1, 4), ErrorCode::VertexOutOfRange);
    EXPECT_THROW(StateVector(2, Eigen::VectorXd::Ones(4)), Error);
    EXPECT_NO_THROW(StateVector(2, Eigen::VectorXd::Ones(4), 0.25));
    EXPECT_THROW(StateVector(2, Eigen::VectorXd::Ones(4), -0.25), Error);
    EXPECT_THROW(StateVector(2, Eigen::VectorXd::Zero(3)), Error);
}

TEST(StateSim, CheckPairDensity) {
    PairDensity bad;
    bad.matrix.setZero();
    bad.matrix(0, 0) = 1.5;
    bad.matrix(1, 1) = -0.5;
    EXPECT_THROW(check_pair_density(bad), Error);
    PairDensity asym;
    asym.matrix = Matrix4::Identity() * 0.25;
    asym.matrix(0, 1) = 0.1;
    EXPECT_THROW(check_pair_density(asym), Error);
    EXPECT_NO_THROW(check_pair_density(reduce_pair(hypergraph_state(gstar(5)), 2, 4)));
}

TEST(StateSimProperty, MatchesDefinition) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; trial++) {
        const int n = 2 + trial % 7;
        const Hypergraph g = testing::random_hypergraph(rng, n);
        const StateVector psi = hypergraph_state(g);
        std::uniform_int_distribution<Vertex> pick(1, n);
        Vertex i = pick(rng), j = pick(rng);
        if (i == j) {
            j = i % n + 1;
        }
        const PairDensity rho = reduce_pair(psi, i, j);
        EXPECT_LT((rho.matrix - testing::density_by_definition(g, i, j)).cwiseAbs().maxCoeff(), kTol);
        EXPECT_NO_THROW(check_pair_density(rho));
    }
}

TEST(StateSimProperty, DiagonalAndSwap) {
    std::mt19937_64 rng(32);
    // Basis swap |z1 z2> -> |z2 z1>.
    Eigen::Matrix4d swap = Eigen::Matrix4d::Zero();
    swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1;
    for (int trial = 0; trial < 60; trial++) {
        const int n = 2 + trial % 9;
        const StateVector psi = hypergraph_state(testing::random_hypergraph(rng, n, 0.3));
        for (Vertex i = 1; i <= n; i++) {
            for (Vertex j = i + 1; j <= n; j++) {
                const PairDensity rho = reduce_pair(psi, i, j);
                for (int r = 0; r < 4; r++) {
                    EXPECT_NEAR(rho.matrix(r, r), 0.25, kTol);
                }
                const PairDensity back = reduce_pair(psi, j, i);
                EXPECT_LT((back.matrix - swap * rho.matrix * swap).cwiseAbs().maxCoeff(), kTol);
            }
        }
    }
}

}  // namespace
}  // namespace hyperent
