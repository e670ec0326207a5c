#pragma once

#include <vector>

#include "pw/coset_enum.hpp"
#include "pw/graph.hpp"
#include "pw/walk.hpp"

namespace pw {

/// Encoder between walks and words over the chord alphabet of a fixed
/// breadth-first spanning tree. Tree darts are silent; each non-tree edge
/// (chord) gets a generator numbered from 1 in lexicographic edge order.
class ChordCoder {
public:
    ChordCoder(const Graph& g, Vertex base);

    Vertex base() const { return base_; }
    int num_chords() const { return static_cast<int>(chords_.size()); }
    const std::vector<std::pair<Vertex, Vertex>>& chords() const { return chords_; }

    bool is_tree_edge(Vertex u, Vertex v) const;

    /// Tree path between two vertices (inclusive endpoints).
    std::vector<Vertex> tree_path(Vertex a, Vertex b) const;

    /// Freely reduced chord word of a walk (closed or not, traversed in
    /// order; only chord darts contribute letters).
    GroupWord word_of(const ClosedWalk& w) const;

    /// The based closed walk realized by a chord word: each letter expands
    /// to tree-path / chord dart / tree-path through the base vertex.
    ClosedWalk walk_of(const GroupWord& w) const;

private:
    const Graph* g_;
    Vertex base_;
    std::vector<Vertex> parent_;
    std::vector<int> depth_;
    std::vector<std::pair<Vertex, Vertex>> chords_;  // normalized pairs
    std::vector<std::vector<int>> chord_id_;         // dense lookup, -1 if tree edge
};

}  // namespace pw
