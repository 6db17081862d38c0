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

#ifndef HYPERENT_ENTGRAPH_H
#define HYPERENT_ENTGRAPH_H

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hyperent/concurrence.h"
#include "hyperent/hypergraph.h"
#include "hyperent/statesim.h"

namespace hyperent {

/// Unordered vertex pair stored with first < second.
using VertexPair = std::pair<Vertex, Vertex>;

/// Graph on [n] with an edge for every qubit pair whose concurrence exceeds
/// kEntanglementThreshold. Edges are the keys of `weights`.
struct EntangledGraph {
    int n = 0;
    std::map<VertexPair, double> weights;

    std::vector<VertexPair> edges() const;
    std::size_t num_edges() const {
        return weights.size();
    }
    bool has_edge(Vertex i, Vertex j) const;
};

EntangledGraph entangled_graph(const Hypergraph &g, Method method);

/// Entangled graph of an arbitrary real pure state, by partial traces.
EntangledGraph entangled_graph_of_state(const StateVector &psi);

/// Every vertex has degree at most one.
bool is_matching(const EntangledGraph &graph);

/// For a graph (every edge of size exactly 2), checks that each pair is
/// entangled exactly when it forms a component on its own. Throws NotAGraph.
bool corollary3_check(const Hypergraph &g);

/// The graph on [n] whose edges are the pairs selected by the bits of
/// `index` (bit k <-> k-th pair in lexicographic order).
Hypergraph graph_from_index(int n, std::uint64_t index);

/// Distinct labeled entangled graphs over all 2^(n(n-1)/2) graph states on n
/// vertices, ordered by edge list. 2 <= n <= 6.
std::vector<EntangledGraph> enumerate_graph_state_entgraphs(int n);

/// Number of isomorphism classes among the given graphs (brute force over
/// vertex permutations; n <= 8).
std::size_t isomorphism_class_count(const std::vector<EntangledGraph> &graphs);

/// Entangled graph of |W_n>, 2 <= n <= 12.
EntangledGraph w_state_entgraph(int n);

/// Graphviz text: one `graph` block, vertices 1..n, an edge per entangled
/// pair labeled with its concurrence to six decimals.
std::string to_dot(const EntangledGraph &graph);

}  // namespace hyperent

#endif
