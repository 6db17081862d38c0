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
#include <bit>
#include <cstdio>
#include <numeric>
#include <set>

#include "hyperent/error.h"
#include "hyperent/pairdensity.h"
#include "hyperent/parallel.h"

namespace hyperent {

namespace {

std::vector<VertexPair> all_pairs(int n) {
    std::vector<VertexPair> pairs;
    for (Vertex i = 1; i <= n; i++) {
        for (Vertex j = i + 1; j <= n; j++) {
            pairs.emplace_back(i, j);
        }
    }
    return pairs;
}

EntangledGraph collect(int n, const std::vector<VertexPair> &pairs, const std::vector<double> &values) {
    EntangledGraph out;
    out.n = n;
    for (std::size_t k = 0; k < pairs.size(); k++) {
        if (values[k] > kEntanglementThreshold) {
            out.weights.emplace(pairs[k], values[k]);
        }
    }
    return out;
}

}  // namespace

std::vector<VertexPair> EntangledGraph::edges() const {
    std::vector<VertexPair> out;
    out.reserve(weights.size());
    for (const auto &[pair, w] : weights) {
        out.push_back(pair);
    }
    return out;
}

bool EntangledGraph::has_edge(Vertex i, Vertex j) const {
    return weights.count({std::min(i, j), std::max(i, j)}) > 0;
}

EntangledGraph entangled_graph(const Hypergraph &g, Method method) {
    const int n = g.num_vertices();
    if (n < 2) {
        throw Error(ErrorCode::TooFewQubits, "an entangled graph needs n >= 2");
    }
    if (method == Method::Oracle) {
        return entangled_graph_of_state(hypergraph_state(g));
    }
    const auto pairs = all_pairs(n);
    std::vector<double> values(pairs.size());
    parallel_chunks(pairs.size(), [&](std::size_t begin, std::size_t end, std::size_t) {
        for (std::size_t k = begin; k < end; k++) {
            values[k] = concurrence_pair(g, pairs[k].first, pairs[k].second, method).value;
        }
    });
    return collect(n, pairs, values);
}

EntangledGraph entangled_graph_of_state(const StateVector &psi) {
    const int n = psi.num_qubits();
    if (n < 2) {
        throw Error(ErrorCode::TooFewQubits, "an entangled graph needs n >= 2");
    }
    const auto pairs = all_pairs(n);
    std::vector<double> values(pairs.size());
    parallel_chunks(pairs.size(), [&](std::size_t begin, std::size_t end, std::size_t) {
        for (std::size_t k = begin; k < end; k++) {
            values[k] = concurrence_of(reduce_pair(psi, pairs[k].first, pairs[k].second)).value;
        }
    });
    return collect(n, pairs, values);
}

bool is_matching(const EntangledGraph &graph) {
    std::vector<int> degree(graph.n + 1, 0);
    for (const auto &[pair, w] : graph.weights) {
        if (++degree[pair.first] > 1 || ++degree[pair.second] > 1) {
            return false;
        }
    }
    return true;
}

bool corollary3_check(const Hypergraph &g) {
    for (EdgeMask e : g.edges()) {
        if (std::popcount(e) != 2) {
            throw Error(ErrorCode::NotAGraph, "hyperedge of size " + std::to_string(std::popcount(e)));
        }
    }
    const EntangledGraph graph = entangled_graph(g, Method::Combinatorial);
    for (const auto &[i, j] : all_pairs(g.num_vertices())) {
        if (graph.has_edge(i, j) != has_pair_component(g, i, j)) {
            return false;
        }
    }
    return true;
}

Hypergraph graph_from_index(int n, std::uint64_t index) {
    const auto pairs = all_pairs(n);
    std::vector<EdgeMask> masks;
    for (std::size_t k = 0; k < pairs.size(); k++) {
        if ((index >> k) & 1) {
            masks.push_back(vertex_bit(pairs[k].first) | vertex_bit(pairs[k].second));
        }
    }
    return Hypergraph::from_masks(n, std::move(masks));
}

std::vector<EntangledGraph> enumerate_graph_state_entgraphs(int n) {
    if (n < 2 || n > 6) {
        throw Error(ErrorCode::InvalidArgument, "graph enumeration supports 2 <= n <= 6");
    }
    const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
    // Per-worker maps keyed by edge list; the entry from the smallest graph
    // index wins so the result does not depend on the worker split.
    using Found = std::map<std::vector<VertexPair>, std::pair<std::uint64_t, EntangledGraph>>;
    const int workers = std::max(1, worker_count());
    std::vector<Found> found(static_cast<std::size_t>(workers));
    parallel_chunks(count, [&](std::size_t begin, std::size_t end, std::size_t worker) {
        Found &local = found[worker];
        for (std::uint64_t index = begin; index < end; index++) {
            EntangledGraph graph;
            graph.n = n;
            const Hypergraph g = graph_from_index(n, index);
            for (Vertex i = 1; i <= n; i++) {
                for (Vertex j = i + 1; j <= n; j++) {
                    const double c = concurrence_of(pair_density_comb(g, i, j)).value;
                    if (c > kEntanglementThreshold) {
                        graph.weights.emplace(VertexPair{i, j}, c);
                    }
                }
            }
            auto key = graph.edges();
            auto it = local.find(key);
            if (it == local.end()) {
                local.emplace(std::move(key), std::make_pair(index, std::move(graph)));
            }
        }
    });
    Found merged;
    for (Found &local : found) {
        for (auto &[key, entry] : local) {
            auto it = merged.find(key);
            if (it == merged.end() || entry.first < it->second.first) {
                merged[key] = std::move(entry);
            }
        }
    }
    std::vector<EntangledGraph> out;
    out.reserve(merged.size());
    for (auto &[key, entry] : merged) {
        out.push_back(std::move(entry.second));
    }
    return out;
}

std::size_t isomorphism_class_count(const std::vector<EntangledGraph> &graphs) {
    std::set<std::pair<int, std::vector<VertexPair>>> canonical;
    for (const EntangledGraph &graph : graphs) {
        if (graph.n > 8) {
            throw Error(ErrorCode::InvalidArgument, "isomorphism classes supported up to n = 8");
        }
        std::vector<Vertex> perm(graph.n);
        std::iota(perm.begin(), perm.end(), 1);
        std::vector<VertexPair> best;
        bool first = true;
        do {
            std::vector<VertexPair> mapped;
            for (const auto &[i, j] : graph.edges()) {
                const Vertex a = perm[i - 1];
                const Vertex b = perm[j - 1];
                mapped.emplace_back(std::min(a, b), std::max(a, b));
            }
            std::sort(mapped.begin(), mapped.end());
            if (first || mapped < best) {
                best = std::move(mapped);
                first = false;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        canonical.emplace(graph.n, std::move(best));
    }
    return canonical.size();
}

EntangledGraph w_state_entgraph(int n) {
    if (n < 2 || n > 12) {
        throw Error(ErrorCode::InvalidArgument, "W-state entangled graph supports 2 <= n <= 12");
    }
    return entangled_graph_of_state(w_state(n));
}

std::string to_dot(const EntangledGraph &graph) {
    std::string out = "graph entangled {\n";
    for (Vertex v = 1; v <= graph.n; v++) {
        out += "  " + std::to_string(v) + ";\n";
    }
    for (const auto &[pair, w] : graph.weights) {
        char label[32];
        std::snprintf(label, sizeof(label), "%.6f", w);
        out += "  " + std::to_string(pair.first) + " -- " + std::to_string(pair.second) + " [label=\"" + label +
               "\"];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace hyperent
