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
#include <gtest/gtest.h>
#include <random>

#include "hyperent/error.h"
#include "hyperent/statesim.h"
#include "test_support.h"

namespace hyperent {
namespace {

constexpr double kTol = 1e-12;

double max_diff(const Matrix4 &a, const Matrix4 &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

Matrix4 real_part(const Eigen::Matrix4cd &m) {
    EXPECT_LT(m.imag().cwiseAbs().maxCoeff(), 1e-15);
    return m.real();
}

TEST(PairDensity, GStarExact) {
    for (int n = 2; n <= 12; n++) {
        const DyadicPairDensity exact = pair_density_exact(gstar(n), 1, 2);
        const std::int64_t quarter = std::int64_t{1} << (n - 1);
        for (int r = 0; r < 4; r++) {
            for (int s = 0; s < 4; s++) {
                const bool corner = (r == 3) != (s == 3);
                // 1/4 - 1/2^(n-1) over the 2^(n+1) denominator is quarter - 4.
                EXPECT_EQ(exact.numerator(r, s), corner ? quarter - 4 : quarter);
            }
        }
        EXPECT_EQ(exact.denominator_log2(), n + 1);
        EXPECT_LT(max_diff(exact.to_density().matrix, gstar_density(n).matrix), 1e-15);
    }
}

TEST(PairDensity, TwoEdgeExample) {
    testing::Paulis p;
    const Matrix4 expected = real_part(0.25 * (testing::kron(p.i, p.i) + testing::kron(p.z, p.x)));
    const Hypergraph g = make_hypergraph(3, {{1, 2}, {1, 3}});
    EXPECT_LT(max_diff(pair_density_comb(g, 1, 2).matrix, expected), kTol);
    EXPECT_LT(max_diff(rank2_density(g, 1, 2).matrix, expected), kTol);
    EXPECT_EQ(epsilon_key(g, 1, 2), (EpsilonKey{-1, 0, 1, 0}));
}

TEST(PairDensity, EmptyHypergraph) {
    for (int n = 2; n <= 6; n++) {
        const PairDensity rho = pair_density_comb(make_hypergraph(n, {}), 1, n);
        EXPECT_LT(max_diff(rho.matrix, Matrix4::Constant(0.25)), kTol);
    }
}

TEST(PairDensity, Rank2Rows) {
    testing::Paulis p;
    const auto ii = testing::kron(p.i, p.i);
    const Matrix4 row8 = real_part(0.25 * testing::kron(p.i + p.x, p.i + p.x));
    EXPECT_LT(max_diff(rank2_density(make_hypergraph(2, {}), 1, 2).matrix, row8), kTol);
    const Matrix4 row4 = real_part(0.25 * (ii + testing::kron(p.z, p.x)));
    EXPECT_LT(max_diff(rank2_density(make_hypergraph(4, {{1, 2}, {1, 3}, {3, 4}}), 1, 2).matrix, row4), kTol);
}

TEST(PairDensity, Errors) {
    auto code = [](auto &&fn) {
        try {
            fn();
        } catch (const Error &e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    EXPECT_EQ(code([] { pair_density_comb(make_hypergraph(1, {{1}}), 1, 2); }), ErrorCode::TooFewQubits);
    EXPECT_EQ(code([] { pair_density_comb(make_hypergraph(3, {}), 2, 2); }), ErrorCode::SameVertex);
    EXPECT_EQ(code([] { pair_density_comb(make_hypergraph(3, {}), 1, 4); }), ErrorCode::VertexOutOfRange);
    EXPECT_EQ(code([] { pair_density_comb(Hypergraph::from_masks(25, {}), 1, 2); }), ErrorCode::TooManyVertices);
    EXPECT_EQ(code([] { rank2_density(gstar(3), 1, 2); }), ErrorCode::RankTooHigh);
}

TEST(PairDensityProperty, MatchesDefinitionAndOracle) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; trial++) {
        const int n = 2 + trial % 8;
        const Hypergraph g = testing::random_hypergraph(rng, n);
        const StateVector psi = hypergraph_state(g);
        for (Vertex i = 1; i <= n; i++) {
            for (Vertex j = 1; j <= n; j++) {
                if (i == j) {
                    continue;
                }
                const Matrix4 comb = pair_density_comb(g, i, j).matrix;
                ASSERT_LT(max_diff(comb, reduce_pair(psi, i, j).matrix), kTol);
                if (n <= 7) {
                    ASSERT_LT(max_diff(comb, testing::density_by_definition(g, i, j)), kTol);
                }
            }
        }
    }
}

TEST(PairDensityProperty, DiagonalAndSymmetryExact) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; trial++) {
        const int n = 2 + trial % 11;
        const Hypergraph g = testing::random_hypergraph(rng, n, 0.2);
        const DyadicPairDensity exact = pair_density_exact(g, 1, n);
        const PairDensity rho = exact.to_density();
        for (int r = 0; r < 4; r++) {
            EXPECT_EQ(rho.matrix(r, r), 0.25);
            for (int s = 0; s < 4; s++) {
                EXPECT_EQ(rho.matrix(r, s), rho.matrix(s, r));
                EXPECT_EQ(rho.matrix(r, s), std::ldexp(static_cast<double>(exact.numerator(r, s)), -(n + 1)));
            }
        }
    }
}

TEST(PairDensityProperty, Rank2MatchesGeneral) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 200; trial++) {
        const int n = 2 + trial % 6;
        const Hypergraph g = testing::random_bounded_rank(rng, n, 2);
        for (Vertex i = 1; i <= n; i++) {
            for (Vertex j = 1; j <= n; j++) {
                if (i == j) {
                    continue;
                }
                ASSERT_LT(max_diff(rank2_density(g, i, j).matrix, pair_density_comb(g, i, j).matrix), kTol)
                    << format_hypergraph(g) << i << " " << j;
            }
        }
    }
}

TEST(PairDensityProperty, PairEpsilonOneGivesQuarterEntries) {
    std::mt19937_64 rng(44);
    int seen = 0;
    for (int trial = 0; trial < 200; trial++) {
        const int n = 2 + trial % 5;
        const Hypergraph g = testing::random_bounded_rank(rng, n, 2);
        if (epsilon(pair_adjacent(g, 1, 2)) != 1) {
            continue;
        }
        seen++;
        const Matrix4 rho = rank2_density(g, 1, 2).matrix;
        for (int r = 0; r < 4; r++) {
            for (int s = 0; s < 4; s++) {
                const double a = std::abs(rho(r, s));
                EXPECT_TRUE(a == 0 || a == 0.25) << rho(r, s);
            }
        }
    }
    EXPECT_GT(seen, 20);
}

TEST(PairDensityProperty, EmptyEdgeNeutral) {
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 100; trial++) {
        const int n = 2 + trial % 9;
        const Hypergraph g = testing::random_hypergraph(rng, n);
        const Hypergraph toggled = sym_diff(g, Hypergraph::from_masks(n, {0}));
        EXPECT_EQ(pair_density_exact(g, 1, 2), pair_density_exact(toggled, 1, 2));
    }
}

}  // namespace
}  // namespace hyperent
