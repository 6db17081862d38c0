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

#include "hyperent/hypergraph.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <istream>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "hyperent/error.h"

namespace hyperent {

namespace {

void check_vertex_count(int n) {
    if (n < 0 || n > kMaxStructuralVertices) {
        throw Error(ErrorCode::TooManyVertices, "vertex count " + std::to_string(n) + " unsupported");
    }
}

void check_vertex(const Hypergraph &g, Vertex v) {
    if (v < 1 || v > g.num_vertices()) {
        throw Error(
            ErrorCode::VertexOutOfRange,
            "vertex " + std::to_string(v) + " not in [1, " + std::to_string(g.num_vertices()) + "]");
    }
}

void check_pair(const Hypergraph &g, Vertex i, Vertex j) {
    check_vertex(g, i);
    check_vertex(g, j);
    if (i == j) {
        throw Error(ErrorCode::SameVertex, "pair needs two distinct vertices, got " + std::to_string(i) + " twice");
    }
}

// Removes bit positions a and b (a != b) from the mask.
EdgeMask compact_out_two(EdgeMask m, int a, int b) {
    const int hi = std::max(a, b);
    const int lo = std::min(a, b);
    return compact_out(compact_out(m, hi), lo);
}

}  // namespace

Hypergraph Hypergraph::from_masks(int n, std::vector<EdgeMask> masks) {
    check_vertex_count(n);
    const EdgeMask allowed = full_mask(n);
    for (EdgeMask m : masks) {
        if (m & ~allowed) {
            throw Error(ErrorCode::VertexOutOfRange, "hyperedge mentions a vertex above " + std::to_string(n));
        }
    }
    std::sort(masks.begin(), masks.end());
    if (std::adjacent_find(masks.begin(), masks.end()) != masks.end()) {
        throw Error(ErrorCode::DuplicateEdge, "hyperedge listed twice");
    }
    Hypergraph g;
    g.n_ = n;
    g.edges_ = std::move(masks);
    return g;
}

Hypergraph Hypergraph::from_parity(int n, std::vector<EdgeMask> images) {
    std::sort(images.begin(), images.end());
    std::vector<EdgeMask> kept;
    kept.reserve(images.size());
    for (std::size_t k = 0; k < images.size();) {
        std::size_t run = k;
        while (run < images.size() && images[run] == images[k]) {
            run++;
        }
        if ((run - k) % 2 == 1) {
            kept.push_back(images[k]);
        }
        k = run;
    }
    return from_masks(n, std::move(kept));
}

bool Hypergraph::contains(EdgeMask e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

Hypergraph make_hypergraph(int n, const std::vector<std::vector<Vertex>> &edges) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "a hypergraph needs at least one vertex");
    }
    check_vertex_count(n);
    std::vector<EdgeMask> masks;
    masks.reserve(edges.size());
    for (const auto &edge : edges) {
        EdgeMask m = 0;
        for (Vertex v : edge) {
            if (v < 1 || v > n) {
                throw Error(
                    ErrorCode::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " not in [1, " + std::to_string(n) + "]");
            }
            m |= vertex_bit(v);
        }
        masks.push_back(m);
    }
    return Hypergraph::from_masks(n, std::move(masks));
}

Hypergraph gstar(int n) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "g* needs at least one vertex");
    }
    return Hypergraph::from_masks(n, {full_mask(n)});
}

std::vector<Vertex> members(EdgeMask e) {
    std::vector<Vertex> out;
    while (e) {
        out.push_back(std::countr_zero(e) + 1);
        e &= e - 1;
    }
    return out;
}

int rank(const Hypergraph &g) {
    int r = 0;
    for (EdgeMask e : g.edges()) {
        r = std::max(r, std::popcount(e));
    }
    return r;
}

bool is_trivial(const Hypergraph &g) {
    return rank(g) <= 1;
}

Hypergraph t_adjacent(const Hypergraph &g, Vertex t) {
    check_vertex(g, t);
    const int bit = t - 1;
    const EdgeMask tb = vertex_bit(t);
    std::vector<EdgeMask> images;
    for (EdgeMask e : g.edges()) {
        if (e & tb) {
            images.push_back(compact_out(e & ~tb, bit));
        }
    }
    return Hypergraph::from_parity(g.num_vertices() - 1, std::move(images));
}

Hypergraph pair_adjacent(const Hypergraph &g, Vertex i, Vertex j) {
    check_pair(g, i, j);
    const EdgeMask both = vertex_bit(i) | vertex_bit(j);
    std::vector<EdgeMask> images;
    for (EdgeMask e : g.edges()) {
        if ((e & both) == both) {
            images.push_back(compact_out_two(e & ~both, i - 1, j - 1));
        }
    }
    return Hypergraph::from_parity(g.num_vertices() - 2, std::move(images));
}

Hypergraph ordered_adjacent(const Hypergraph &g, Vertex i, Vertex j) {
    check_pair(g, i, j);
    const EdgeMask ib = vertex_bit(i);
    const EdgeMask jb = vertex_bit(j);
    std::vector<EdgeMask> images;
    for (EdgeMask e : g.edges()) {
        if ((e & ib) && !(e & jb)) {
            images.push_back(compact_out_two(e & ~ib, i - 1, j - 1));
        }
    }
    return Hypergraph::from_parity(g.num_vertices() - 2, std::move(images));
}

Hypergraph sym_diff(const Hypergraph &g, const Hypergraph &h) {
    if (g.num_vertices() != h.num_vertices()) {
        throw Error(
            ErrorCode::VertexCountMismatch,
            std::to_string(g.num_vertices()) + " vs " + std::to_string(h.num_vertices()) + " vertices");
    }
    std::vector<EdgeMask> out;
    std::set_symmetric_difference(
        g.edges().begin(), g.edges().end(), h.edges().begin(), h.edges().end(), std::back_inserter(out));
    return Hypergraph::from_masks(g.num_vertices(), std::move(out));
}

Hypergraph permute(const Hypergraph &g, std::span<const Vertex> image) {
    const int n = g.num_vertices();
    if (static_cast<int>(image.size()) != n) {
        throw Error(ErrorCode::VertexCountMismatch, "permutation size differs from vertex count");
    }
    EdgeMask seen = 0;
    for (Vertex v : image) {
        if (v < 1 || v > n || (seen & vertex_bit(v))) {
            throw Error(ErrorCode::InvalidArgument, "not a permutation of [n]");
        }
        seen |= vertex_bit(v);
    }
    std::vector<EdgeMask> out;
    out.reserve(g.num_edges());
    for (EdgeMask e : g.edges()) {
        EdgeMask m = 0;
        for (Vertex v : members(e)) {
            m |= vertex_bit(image[v - 1]);
        }
        out.push_back(m);
    }
    return Hypergraph::from_masks(n, std::move(out));
}

ComponentPartition components(const Hypergraph &g) {
    const int n = g.num_vertices();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (EdgeMask e : g.edges()) {
        if (std::popcount(e) < 2) {
            continue;
        }
        const int root = find(std::countr_zero(e));
        for (EdgeMask rest = e & (e - 1); rest; rest &= rest - 1) {
            const int r = find(std::countr_zero(rest));
            if (r != root) {
                parent[r] = find(root);
            }
        }
    }
    // Blocks come out ordered by smallest member because vertices are visited
    // in increasing order.
    ComponentPartition out;
    std::vector<int> block_of(n, -1);
    for (int v = 0; v < n; v++) {
        const int r = find(v);
        if (block_of[r] < 0) {
            block_of[r] = static_cast<int>(out.blocks.size());
            out.blocks.emplace_back();
        }
        out.blocks[block_of[r]].push_back(v + 1);
    }
    return out;
}

bool has_pair_component(const Hypergraph &g, Vertex i, Vertex j) {
    check_pair(g, i, j);
    const std::vector<Vertex> want = {std::min(i, j), std::max(i, j)};
    for (const auto &block : components(g).blocks) {
        if (block == want) {
            return true;
        }
    }
    return false;
}

int epsilon(const Hypergraph &g) {
    if (g.num_edges() == 0) {
        return 1;
    }
    if (g.num_edges() == 1 && g.edges()[0] == 0) {
        return -1;
    }
    return 0;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t k = 0;
    while (k < s.size()) {
        while (k < s.size() && (s[k] == ' ' || s[k] == '\t' || s[k] == '\r')) {
            k++;
        }
        std::size_t start = k;
        while (k < s.size() && s[k] != ' ' && s[k] != '\t' && s[k] != '\r') {
            k++;
        }
        if (k > start) {
            out.push_back(s.substr(start, k - start));
        }
    }
    return out;
}

bool parse_int(std::string_view tok, long long &out) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && ptr == tok.data() + tok.size();
}

}  // namespace

Hypergraph parse_hypergraph(std::istream &in) {
    std::string line;
    std::size_t line_no = 0;
    int n = -1;
    std::vector<EdgeMask> masks;
    std::unordered_map<EdgeMask, std::size_t> first_line;
    while (std::getline(in, line)) {
        line_no++;
        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0].front() == '#') {
            continue;
        }
        if (n < 0) {
            long long value = 0;
            if (tokens.size() != 2 || tokens[0] != "v" || !parse_int(tokens[1], value)) {
                throw ParseFailure(ErrorCode::ParseError, line_no, "expected header `v <n>`");
            }
            if (value < 1 || value > kMaxStructuralVertices) {
                throw ParseFailure(ErrorCode::TooManyVertices, line_no, "vertex count out of range");
            }
            n = static_cast<int>(value);
            continue;
        }
        if (tokens[0] != "e") {
            throw ParseFailure(ErrorCode::ParseError, line_no, "expected `e` line");
        }
        EdgeMask m = 0;
        for (std::size_t k = 1; k < tokens.size(); k++) {
            long long v = 0;
            if (!parse_int(tokens[k], v)) {
                throw ParseFailure(ErrorCode::ParseError, line_no, "bad vertex label `" + std::string(tokens[k]) + "`");
            }
            if (v < 1 || v > n) {
                throw ParseFailure(
                    ErrorCode::VertexOutOfRange, line_no, "vertex " + std::to_string(v) + " not in [1, " +
                                                              std::to_string(n) + "]");
            }
            const EdgeMask b = vertex_bit(static_cast<Vertex>(v));
            if (m & b) {
                throw ParseFailure(ErrorCode::ParseError, line_no, "vertex repeated within a hyperedge");
            }
            m |= b;
        }
        auto [it, inserted] = first_line.emplace(m, line_no);
        if (!inserted) {
            throw ParseFailure(
                ErrorCode::DuplicateEdge, line_no, "hyperedge already given on line " + std::to_string(it->second));
        }
        masks.push_back(m);
    }
    if (n < 0) {
        throw ParseFailure(ErrorCode::ParseError, line_no, "missing `v <n>` header");
    }
    return Hypergraph::from_masks(n, std::move(masks));
}

Hypergraph parse_hypergraph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_hypergraph(in);
}

std::string format_hypergraph(const Hypergraph &g) {
    std::string out = "v " + std::to_string(g.num_vertices()) + "\n";
    for (EdgeMask e : g.edges()) {
        out += "e";
        for (Vertex v : members(e)) {
            out += " " + std::to_string(v);
        }
        out += "\n";
    }
    return out;
}

}  // namespace hyperent
