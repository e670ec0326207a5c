#pragma once

#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "pw/graph.hpp"
#include "pw/walk.hpp"

namespace pw {

/// A face traced from the rotation system: its boundary in dart order.
struct Face {
    std::vector<Dart> boundary;
    int size() const { return static_cast<int>(boundary.size()); }
    std::vector<Vertex> boundary_vertices() const {
        std::vector<Vertex> vs;
        for (const Dart& d : boundary) vs.push_back(d.tail);
        return vs;
    }
    ClosedWalk boundary_walk() const {
        std::vector<Vertex> vs = boundary_vertices();
        if (vs.empty()) return ClosedWalk::trivial();
        vs.push_back(vs[0]);
        return ClosedWalk::from_closed_sequence(vs);
    }
};

/// Evidence of non-planarity: the edges of a Kuratowski subdivision.
struct NonPlanarWitness {
    std::vector<std::pair<Vertex, Vertex>> edges;
};

/// A graph with a combinatorial embedding. `spin[v]` lists the neighbors of
/// v in clockwise order; faces are traced once at construction and the
/// Euler check #V - #E + #F == 1 + #components is enforced.
class PlanarMap {
public:
    PlanarMap(Graph g, std::vector<std::vector<Vertex>> spin,
              std::optional<int> outer_face = std::nullopt);

    const Graph& graph() const { return g_; }
    const std::vector<std::vector<Vertex>>& spin() const { return spin_; }
    const std::vector<Face>& faces() const { return faces_; }
    int outer_face() const { return outer_face_; }

    int num_faces() const { return static_cast<int>(faces_.size()); }

    /// Face id containing the given dart.
    int face_of(const Dart& d) const;

    /// Successor of neighbor w in the clockwise order at v.
    Vertex spin_next(Vertex v, Vertex w) const;

    /// True iff edges {v,a}, {v,b}, {v,c} occur in this clockwise cyclic
    /// order at v. The three edges must be distinct and incident to v.
    bool spin_contains(Vertex v, Vertex a, Vertex b, Vertex c) const;

    /// The mirror map (all spins reversed).
    PlanarMap reflected() const;

    /// Same map with a different outer face.
    PlanarMap with_outer_face(int face) const;

private:
    int spin_index(Vertex v, Vertex w) const;
    void trace_all_faces();
    int default_outer_face() const;

    Graph g_;
    std::vector<std::vector<Vertex>> spin_;
    std::vector<Face> faces_;
    std::vector<std::vector<int>> dart_face_;  // [v][spin index of head] -> face id
    int outer_face_ = -1;
};

/// Result of embedding: a map or a Kuratowski-style witness.
using EmbedResult = std::variant<PlanarMap, NonPlanarWitness>;

/// Compute a combinatorial embedding of g (deterministic for a fixed vertex
/// ordering), or a witness of non-planarity. The outer face is the traced
/// face of maximum boundary length, ties broken by the lexicographically
/// smallest canonical boundary vertex sequence.
EmbedResult embed(const Graph& g);

/// Convenience: embed or throw.
PlanarMap embed_or_throw(const Graph& g);

/// Classification of vertices/edges/faces relative to a cycle.
struct RegionPartition {
    ClosedWalk cycle;
    std::set<Vertex> side_vertices[2];
    std::set<std::pair<Vertex, Vertex>> side_edges[2];
    std::set<int> side_faces[2];
    std::set<Vertex> on_cycle_vertices;
    std::set<std::pair<Vertex, Vertex>> on_cycle_edges;
};

/// Two-sided region partition induced by a cycle: side 1 is the side of the
/// outer face, side 0 the bounded side.
RegionPartition cycle_regions(const PlanarMap& m, const ClosedWalk& c);

}  // namespace pw
