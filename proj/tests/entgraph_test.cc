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

#include "hyperent/entgraph.h"

#include <algorithm>
#include <cstdlib>
#include <gtest/gtest.h>
#include <numeric>
#include <random>
#include <set>

#include "hyperent/error.h"
#include "test_support.h"

namespace hyperent {
namespace {

using Pairs = std::vector<VertexPair>;

TEST(EntGraph, Examples) {
    for (int n = 2; n <= 6; n++) {
        const EntangledGraph k = entangled_graph(gstar(n), Method::Combinatorial);
        EXPECT_EQ(k.num_edges(), static_cast<std::size_t>(n * (n - 1) / 2));
    }
    EXPECT_EQ(entangled_graph(make_hypergraph(3, {{1, 2}, {2, 3}}), Method::Combinatorial).num_edges(), 0u);
    const EntangledGraph two = entangled_graph(make_hypergraph(4, {{1, 2}, {3, 4}}), Method::Oracle);
    EXPECT_EQ(two.edges(), (Pairs{{1, 2}, {3, 4}}));
    EXPECT_TRUE(two.has_edge(2, 1));
    EXPECT_FALSE(two.has_edge(1, 3));
    for (const auto &[pair, w] : two.weights) {
        EXPECT_NEAR(w, 1, 1e-9);
    }
}

TEST(EntGraph, IsMatching) {
    EntangledGraph g;
    g.n = 4;
    EXPECT_TRUE(is_matching(g));
    g.weights[{1, 2}] = 1;
    g.weights[{3, 4}] = 1;
    EXPECT_TRUE(is_matching(g));
    g.weights.erase({3, 4});
    g.weights[{2, 3}] = 1;
    EXPECT_FALSE(is_matching(g));
}

TEST(EntGraph, PairComponentCheck) {
    for (std::uint64_t idx = 0; idx < 64; idx++) {
        EXPECT_TRUE(corollary3_check(graph_from_index(4, idx)));
    }
    const Hypergraph single = make_hypergraph(3, {{1, 2}});
    EXPECT_TRUE(corollary3_check(single));
    EXPECT_EQ(entangled_graph(single, Method::Combinatorial).edges(), (Pairs{{1, 2}}));
    const Hypergraph k3 = make_hypergraph(3, {{1, 2}, {1, 3}, {2, 3}});
    EXPECT_TRUE(corollary3_check(k3));
    EXPECT_EQ(entangled_graph(k3, Method::Combinatorial).num_edges(), 0u);

    auto code = [](const Hypergraph &g) {
        try {
            corollary3_check(g);
        } catch (const Error &e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    EXPECT_EQ(code(make_hypergraph(3, {{1, 2, 3}})), ErrorCode::NotAGraph);
    EXPECT_EQ(code(make_hypergraph(3, {{1}})), ErrorCode::NotAGraph);
    EXPECT_EQ(code(make_hypergraph(3, {{}})), ErrorCode::NotAGraph);
}

TEST(EntGraph, GraphFromIndex) {
    EXPECT_EQ(graph_from_index(3, 0b001), make_hypergraph(3, {{1, 2}}));
    EXPECT_EQ(graph_from_index(3, 0b100), make_hypergraph(3, {{2, 3}}));
    EXPECT_EQ(graph_from_index(4, 0b111111).num_edges(), 6u);
}

TEST(EntGraph, Enumerate) {
    EXPECT_EQ(enumerate_graph_state_entgraphs(2).size(), 2u);

    const auto three = enumerate_graph_state_entgraphs(3);
    ASSERT_EQ(three.size(), 4u);
    EXPECT_EQ(three[0].edges(), Pairs{});
    EXPECT_EQ(three[1].edges(), (Pairs{{1, 2}}));
    EXPECT_EQ(three[2].edges(), (Pairs{{1, 3}}));
    EXPECT_EQ(three[3].edges(), (Pairs{{2, 3}}));

    const auto four = enumerate_graph_state_entgraphs(4);
    EXPECT_EQ(four.size(), 10u);
    EXPECT_EQ(isomorphism_class_count(four), 3u);
    for (const auto &g : four) {
        EXPECT_TRUE(is_matching(g));
    }
    EXPECT_THROW(enumerate_graph_state_entgraphs(1), Error);
    EXPECT_THROW(enumerate_graph_state_entgraphs(7), Error);
}

TEST(EntGraph, EnumerationIndependentOfThreads) {
    const char *saved = std::getenv("HYPERENT_THREADS");
    const std::string restore = saved ? saved : "";
    setenv("HYPERENT_THREADS", "1", 1);
    const auto serial = enumerate_graph_state_entgraphs(5);
    setenv("HYPERENT_THREADS", "3", 1);
    const auto threaded = enumerate_graph_state_entgraphs(5);
    if (saved) {
        setenv("HYPERENT_THREADS", restore.c_str(), 1);
    } else {
        unsetenv("HYPERENT_THREADS");
    }
    ASSERT_EQ(serial.size(), threaded.size());
    for (std::size_t k = 0; k < serial.size(); k++) {
        EXPECT_EQ(serial[k].weights, threaded[k].weights);
    }
}

TEST(EntGraph, WState) {
    const EntangledGraph w2 = w_state_entgraph(2);
    EXPECT_EQ(w2.edges(), (Pairs{{1, 2}}));
    EXPECT_NEAR(w2.weights.begin()->second, 1, 1e-9);
    for (int n = 3; n <= 8; n++) {
        const EntangledGraph w = w_state_entgraph(n);
        EXPECT_EQ(w.num_edges(), static_cast<std::size_t>(n * (n - 1) / 2));
        const double first = w.weights.begin()->second;
        for (const auto &[pair, c] : w.weights) {
            EXPECT_NEAR(c, first, 1e-12);
        }
    }
}

TEST(EntGraph, Dot) {
    const EntangledGraph g = entangled_graph(make_hypergraph(3, {{1, 2}}), Method::Combinatorial);
    EXPECT_EQ(to_dot(g),
              "graph entangled {\n"
              "  1;\n"
              "  2;\n"
              "  3;\n"
              "  1 -- 2 [label=\"1.000000\"];\n"
              "}\n");
}

TEST(EntGraphProperty, GraphsGiveMatchings) {
    for (int n = 2; n <= 5; n++) {
        for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << (n * (n - 1) / 2)); idx += 1 + (n == 5) * 6) {
            EXPECT_TRUE(is_matching(entangled_graph(graph_from_index(n, idx), Method::Combinatorial)));
        }
    }
}

TEST(EntGraphProperty, GStarComplete) {
    for (int n = 2; n <= 12; n++) {
        const EntangledGraph g = entangled_graph(gstar(n), Method::Combinatorial);
        ASSERT_EQ(g.num_edges(), static_cast<std::size_t>(n * (n - 1) / 2));
        for (const auto &[pair, c] : g.weights) {
            EXPECT_NEAR(c, gstar_concurrence(n), 1e-10);
        }
    }
}

TEST(EntGraphProperty, RelabelingInvariance) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 30; trial++) {
        const int n = 2 + trial % 7;
        const Hypergraph g = testing::random_hypergraph(rng, n, 0.3);
        std::vector<Vertex> image(n);
        std::iota(image.begin(), image.end(), 1);
        std::shuffle(image.begin(), image.end(), rng);
        const EntangledGraph before = entangled_graph(g, Method::Combinatorial);
        const EntangledGraph after = entangled_graph(permute(g, image), Method::Combinatorial);
        std::set<VertexPair> mapped;
        for (const auto &[a, b] : before.edges()) {
            mapped.insert(std::minmax(image[a - 1], image[b - 1]));
        }
        const auto edges = after.edges();
        EXPECT_EQ(mapped, std::set<VertexPair>(edges.begin(), edges.end()));
    }
}

TEST(EntGraphProperty, PairComponentImpliesEdge) {
    std::mt19937_64 rng(62);
    int hits = 0;
    for (int trial = 0; trial < 200; trial++) {
        const int n = 2 + trial % 7;
        const Hypergraph g = testing::random_bounded_rank(rng, n, 2, 0.25);
        const EntangledGraph eg = entangled_graph(g, Method::Combinatorial);
        for (Vertex i = 1; i <= n; i++) {
            for (Vertex j = i + 1; j <= n; j++) {
                if (has_pair_component(g, i, j)) {
                    hits++;
                    EXPECT_TRUE(eg.has_edge(i, j));
                }
            }
        }
    }
    EXPECT_GT(hits, 10);
}

TEST(EntGraphProperty, OracleAgrees) {
    std::mt19937_64 rng(63);
    for (int trial = 0; trial < 20; trial++) {
        const Hypergraph g = testing::random_hypergraph(rng, 2 + trial % 7);
        const EntangledGraph a = entangled_graph(g, Method::Combinatorial);
        const EntangledGraph b = entangled_graph(g, Method::Oracle);
        ASSERT_EQ(a.edges(), b.edges());
        for (const auto &[pair, c] : a.weights) {
            EXPECT_NEAR(c, b.weights.at(pair), 1e-9);
        }
        EXPECT_EQ(b.weights.size(), entangled_graph_of_state(hypergraph_state(g)).weights.size());
    }
}

}  // namespace
}  // namespace hyperent
