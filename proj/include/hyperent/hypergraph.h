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

#ifndef HYPERENT_HYPERGRAPH_H
#define HYPERENT_HYPERGRAPH_H

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hyperent {

/// Vertex labels are 1-based: a hypergraph on n vertices uses {1, ..., n}.
using Vertex = int;

/// A hyperedge as a bit set: bit k-1 is set iff vertex k belongs to the edge.
/// Zero is the empty hyperedge.
using EdgeMask = std::uint32_t;

/// Width of EdgeMask; the structural operations work up to this many vertices.
inline constexpr int kMaxStructuralVertices = 32;

/// Largest vertex count for anything that materializes 2^n values
/// (truth tables, statevectors).
inline constexpr int kMaxVertices = 24;

/// Mask with the low n bits set.
constexpr EdgeMask full_mask(int n) {
    return n >= 32 ? ~EdgeMask{0} : static_cast<EdgeMask>((std::uint64_t{1} << n) - 1);
}

constexpr EdgeMask vertex_bit(Vertex v) {
    return EdgeMask{1} << (v - 1);
}

/// Removes bit position `bit` from the mask and shifts every higher bit down
/// by one, so the remaining vertices keep their relative order.
constexpr EdgeMask compact_out(EdgeMask m, int bit) {
    const EdgeMask low = (EdgeMask{1} << bit) - 1;
    return (m & low) | ((m >> 1) & ~low);
}

/// A hypergraph ([n], E) with set semantics on E. Edges are stored sorted so
/// equality and hashing are canonical.
class Hypergraph {
   public:
    Hypergraph() = default;

    /// Builds from edge masks. Rejects duplicates and members outside [n].
    /// n = 0 is allowed here because pair derivations of 2-vertex
    /// hypergraphs live on zero vertices.
    static Hypergraph from_masks(int n, std::vector<EdgeMask> masks);

    /// Builds from a multiset of edge masks under parity: a mask present an
    /// even number of times is absent from the result, odd means present.
    static Hypergraph from_parity(int n, std::vector<EdgeMask> images);

    int num_vertices() const noexcept {
        return n_;
    }
    std::size_t num_edges() const noexcept {
        return edges_.size();
    }
    std::span<const EdgeMask> edges() const noexcept {
        return edges_;
    }
    bool contains(EdgeMask e) const;

    bool operator==(const Hypergraph &) const = default;

   private:
    int n_ = 0;
    std::vector<EdgeMask> edges_;
};

/// Builds a hypergraph from 1-based vertex lists. Requires n >= 1.
/// Throws DuplicateEdge or VertexOutOfRange.
Hypergraph make_hypergraph(int n, const std::vector<std::vector<Vertex>> &edges);

/// The hypergraph ([n], {[n]}) with a single full hyperedge.
Hypergraph gstar(int n);

/// Sorted 1-based members of an edge.
std::vector<Vertex> members(EdgeMask e);

int rank(const Hypergraph &g);

/// True iff every hyperedge has at most one vertex (empty edge and loops only).
bool is_trivial(const Hypergraph &g);

/// g_t: edges containing t with t removed, on the n-1 remaining vertices
/// (relabeled in order).
Hypergraph t_adjacent(const Hypergraph &g, Vertex t);

/// g_{i,j}: edges containing both i and j with both removed, on n-2 vertices.
Hypergraph pair_adjacent(const Hypergraph &g, Vertex i, Vertex j);

/// g_(i,j): edges containing i but not j with i removed, on n-2 vertices.
Hypergraph ordered_adjacent(const Hypergraph &g, Vertex i, Vertex j);

/// Edge-set symmetric difference. Throws VertexCountMismatch.
Hypergraph sym_diff(const Hypergraph &g, const Hypergraph &h);

/// Applies a vertex relabeling: vertex v becomes image[v-1]. `image` must be a
/// permutation of [n].
Hypergraph permute(const Hypergraph &g, std::span<const Vertex> image);

struct ComponentPartition {
    /// Blocks with sorted members, ordered by their smallest vertex.
    std::vector<std::vector<Vertex>> blocks;

    bool operator==(const ComponentPartition &) const = default;
};

ComponentPartition components(const Hypergraph &g);

bool has_pair_component(const Hypergraph &g, Vertex i, Vertex j);

/// 1 for E = {}, -1 for E = {{}}, 0 otherwise.
int epsilon(const Hypergraph &g);

/// Reads the text format:
///
///     v <n>
///     e <v1> <v2> ...
///
/// one `e` line per hyperedge (a bare `e` is the empty hyperedge), `#` lines
/// are comments. Throws ParseFailure with the line number.
Hypergraph parse_hypergraph(std::istream &in);
Hypergraph parse_hypergraph(std::string_view text);

/// Writes the canonical text form; parse_hypergraph(format_hypergraph(g)) == g.
std::string format_hypergraph(const Hypergraph &g);

}  // namespace hyperent

#endif
