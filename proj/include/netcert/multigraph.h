// Copyright 2026 The netcert Authors
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

#ifndef NETCERT_MULTIGRAPH_H
#define NETCERT_MULTIGRAPH_H

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <set>
#include <string>
#include <vector>

namespace netcert {

using Vertex = int;

/// Undirected multigraph with edge multiplicities in Z_d.
///
/// A multiplicity of 0 is the same as no edge. The matrix is kept symmetric with a
/// zero diagonal.
class Multigraph {
   public:
    Multigraph(int d, int n);

    int dimension() const {
        return d_;
    }
    int size() const {
        return n_;
    }
    int multiplicity(Vertex i, Vertex j) const {
        return mult_[static_cast<size_t>(i) * n_ + j];
    }
    /// Sets m_ij = m_ji = m. Requires i != j and 0 <= m < d.
    void set_multiplicity(Vertex i, Vertex j, int m);
    bool adjacent(Vertex i, Vertex j) const {
        return multiplicity(i, j) != 0;
    }

    /// Sorted neighbor list of i.
    std::vector<Vertex> neighbors(Vertex i) const;
    size_t edge_count() const;
    /// True when every nonzero multiplicity has the same value.
    bool has_constant_multiplicity() const;

    /// Upper-triangle multiplicities in column order (0,1),(0,2),(1,2),(0,3),...
    std::vector<uint8_t> column_key() const;

    bool operator==(const Multigraph &other) const = default;
    std::strong_ordering operator<=>(const Multigraph &other) const;

    std::string str() const;

   private:
    int d_;
    int n_;
    std::vector<uint8_t> mult_;
};

bool is_connected(const Multigraph &g);

enum class TripleKind { angle, triangle };

const char *kind_name(TripleKind kind);

/// Vertices A, B, C with m_AB != 0 and m_CA != 0; a triangle when m_BC != 0.
struct Triple {
    Vertex a = 0;
    Vertex b = 0;
    Vertex c = 0;
    TripleKind kind = TripleKind::angle;

    bool operator==(const Triple &) const = default;
};

/// All ordered triples (A, B, C) with B != C adjacent to A, in lexicographic order.
/// Throws StructureError unless the graph is connected with at least 3 vertices.
std::vector<Triple> find_angle_or_triangle(const Multigraph &g);

/// How the neighborhoods of a triple split the rest of the vertex set.
struct NeighborhoodPartition {
    Triple triple;
    std::set<Vertex> e_a, e_b, e_c;     ///< neighbors of exactly one of A, B, C
    std::set<Vertex> j_ab, j_bc, j_ca;  ///< common neighbors of exactly two
    std::set<Vertex> t_abc;             ///< common neighbors of all three
    std::set<Vertex> rest;              ///< vertices adjacent to none of A, B, C
};

NeighborhoodPartition partition_neighborhoods(const Multigraph &g, Vertex a, Vertex b, Vertex c);

/// m_ij -> m_ij + m_ai m_aj (mod d) for every pair i != j in N_a.
Multigraph local_complement(const Multigraph &g, Vertex a);

/// The graph with vertex perm[k] renamed to k.
Multigraph permute(const Multigraph &g, const std::vector<Vertex> &perm);

/// Representative with the lexicographically least column_key over all relabelings.
Multigraph canonical_form(const Multigraph &g);
bool is_canonical(const Multigraph &g);

struct LcOrbit {
    std::vector<Multigraph> members;  ///< canonical forms, sorted
    bool truncated = false;
};

/// Closure of g under local complementation at every vertex, up to relabeling.
LcOrbit lc_orbit(const Multigraph &g, size_t cap = 1000000);

/// Streams one canonical representative per isomorphism class of connected
/// multigraphs on n vertices over Z_d, in increasing column_key order. The visitor
/// returns false to stop early. Throws EnumerationOverflow once more than
/// `max_graphs` classes would be emitted.
void enumerate_connected_multigraphs(
    int n,
    int d,
    const std::function<bool(const Multigraph &)> &visit,
    size_t max_graphs = std::numeric_limits<size_t>::max());

std::vector<Multigraph> connected_multigraph_classes(
    int n, int d, size_t max_graphs = std::numeric_limits<size_t>::max());

}  // namespace netcert

#endif
