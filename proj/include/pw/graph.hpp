#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pw {

/// Error thrown on invalid inputs or malformed structures.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Vertex = int;

/// An oriented edge.
struct Dart {
    Vertex tail = -1;
    Vertex head = -1;

    Dart() = default;
    Dart(Vertex t, Vertex h) : tail(t), head(h) {}

    Dart reversed() const { return {head, tail}; }

    friend bool operator==(const Dart&, const Dart&) = default;
    friend auto operator<=>(const Dart&, const Dart&) = default;
};

/// Finite simple graph. Vertices are 0..n-1; an optional label table maps
/// them back to the names used in input files. Edges carry stable ids in
/// lexicographic order of their normalized (min,max) endpoint pair.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const {
        build_index();
        return static_cast<int>(edges_.size());
    }

    int add_vertex() {
        adj_.emplace_back();
        return num_vertices() - 1;
    }

    void add_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw Error("loops are not allowed");
        if (has_edge(u, v)) throw Error("parallel edges are not allowed");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        edge_ids_.clear();  // ids are rebuilt lazily
        edges_.clear();
    }

    bool has_edge(Vertex u, Vertex v) const {
        if (u < 0 || u >= num_vertices()) return false;
        for (Vertex w : adj_[u])
            if (w == v) return true;
        return false;
    }

    const std::vector<Vertex>& neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    /// Edges as normalized pairs in lexicographic order.
    const std::vector<std::pair<Vertex, Vertex>>& edges() const {
        build_index();
        return edges_;
    }

    /// Stable id of the edge {u,v}.
    int edge_id(Vertex u, Vertex v) const {
        build_index();
        auto it = edge_ids_.find(normalize(u, v));
        if (it == edge_ids_.end()) throw Error("no such edge");
        return it->second;
    }

    bool connected() const;

    /// BFS distances from `source`; unreachable vertices get -1.
    std::vector<int> distances_from(Vertex source) const;

    /// A shortest path from `a` to `b` (inclusive), ties broken by smaller
    /// predecessor vertex. Empty if unreachable; {a} if a==b.
    std::vector<Vertex> shortest_path(Vertex a, Vertex b) const;

    /// Shortest path from `a` to `b` that avoids using edge {x,y} directly.
    std::vector<Vertex> shortest_path_avoiding_edge(Vertex a, Vertex b, Vertex x, Vertex y) const;

    int diameter() const;

    /// Subgraph induced on `verts`; returns the graph and the old-id list
    /// (new id i corresponds to old id map[i]).
    std::pair<Graph, std::vector<Vertex>> induced(const std::vector<Vertex>& verts) const;

    std::vector<std::string> labels;  // optional, for io

    std::string label_of(Vertex v) const {
        if (v >= 0 && v < static_cast<int>(labels.size()) && !labels[v].empty()) return labels[v];
        return std::to_string(v);
    }

private:
    static std::pair<Vertex, Vertex> normalize(Vertex u, Vertex v) {
        return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
    }

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= num_vertices()) throw Error("vertex out of range");
    }

    void build_index() const;

    std::vector<std::vector<Vertex>> adj_;
    mutable std::vector<std::pair<Vertex, Vertex>> edges_;
    mutable std::map<std::pair<Vertex, Vertex>, int> edge_ids_;
};

/// All-pairs BFS distance table.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

}  // namespace pw
