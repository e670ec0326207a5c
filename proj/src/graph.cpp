#include "pw/graph.hpp"

#include <algorithm>
#include <queue>

namespace pw {

void Graph::build_index() const {
    if (!edge_ids_.empty() || num_vertices() == 0) return;
    if (!edges_.empty()) return;
    for (Vertex u = 0; u < num_vertices(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) edges_.emplace_back(u, v);
    std::sort(edges_.begin(), edges_.end());
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) edge_ids_[edges_[i]] = i;
}

bool Graph::connected() const {
    if (num_vertices() == 0) return true;
    auto d = distances_from(0);
    return std::find(d.begin(), d.end(), -1) == d.end();
}

std::vector<int> Graph::distances_from(Vertex source) const {
    check_vertex(source);
    std::vector<int> dist(num_vertices(), -1);
    std::queue<Vertex> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : adj_[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

std::vector<Vertex> Graph::shortest_path(Vertex a, Vertex b) const {
    return shortest_path_avoiding_edge(a, b, -1, -1);
}

std::vector<Vertex> Graph::shortest_path_avoiding_edge(Vertex a, Vertex b, Vertex x, Vertex y) const {
    check_vertex(a);
    check_vertex(b);
    std::vector<int> dist(num_vertices(), -1);
    std::vector<Vertex> pred(num_vertices(), -1);
    std::queue<Vertex> q;
    dist[a] = 0;
    q.push(a);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        // sorted neighbor scan keeps predecessors deterministic
        std::vector<Vertex> nb = adj_[v];
        std::sort(nb.begin(), nb.end());
        for (Vertex w : nb) {
            if ((v == x && w == y) || (v == y && w == x)) continue;
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                pred[w] = v;
                q.push(w);
            }
        }
    }
    if (dist[b] < 0) return {};
    std::vector<Vertex> path;
    for (Vertex v = b; v != -1; v = pred[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

int Graph::diameter() const {
    int d = 0;
    for (Vertex v = 0; v < num_vertices(); ++v)
        for (int x : distances_from(v)) d = std::max(d, x);
    return d;
}

std::pair<Graph, std::vector<Vertex>> Graph::induced(const std::vector<Vertex>& verts) const {
    std::vector<Vertex> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> newid(num_vertices(), -1);
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i) newid[sorted[i]] = i;
    Graph h(static_cast<int>(sorted.size()));
    for (auto [u, v] : edges())
        if (newid[u] >= 0 && newid[v] >= 0) h.add_edge(newid[u], newid[v]);
    h.labels.resize(sorted.size());
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i) h.labels[i] = label_of(sorted[i]);
    return {h, sorted};
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
    std::vector<std::vector<int>> d;
    d.reserve(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) d.push_back(g.distances_from(v));
    return d;
}

}  // namespace pw
