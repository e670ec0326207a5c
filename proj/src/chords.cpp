#include "pw/chords.hpp"

#include <algorithm>
#include <queue>

namespace pw {

ChordCoder::ChordCoder(const Graph& g, Vertex base) : g_(&g), base_(base) {
    int n = g.num_vertices();
    parent_.assign(n, -1);
    depth_.assign(n, -1);
    std::queue<Vertex> q;
    depth_[base] = 0;
    q.push(base);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        std::vector<Vertex> nb = g.neighbors(v);
        std::sort(nb.begin(), nb.end());
        for (Vertex w : nb)
            if (depth_[w] < 0) {
                depth_[w] = depth_[v] + 1;
                parent_[w] = v;
                q.push(w);
            }
    }
    chord_id_.assign(n, std::vector<int>(n, -1));
    for (auto [u, v] : g.edges()) {
        if (parent_[u] == v || parent_[v] == u) continue;
        if (depth_[u] < 0 || depth_[v] < 0) continue;  // other component
        int id = static_cast<int>(chords_.size());
        chords_.emplace_back(u, v);
        chord_id_[u][v] = chord_id_[v][u] = id;
    }
}

bool ChordCoder::is_tree_edge(Vertex u, Vertex v) const {
    return parent_[u] == v || parent_[v] == u;
}

std::vector<Vertex> ChordCoder::tree_path(Vertex a, Vertex b) const {
    std::vector<Vertex> up_a, up_b;
    Vertex x = a, y = b;
    while (depth_[x] > depth_[y]) {
        up_a.push_back(x);
        x = parent_[x];
    }
    while (depth_[y] > depth_[x]) {
        up_b.push_back(y);
        y = parent_[y];
    }
    while (x != y) {
        up_a.push_back(x);
        up_b.push_back(y);
        x = parent_[x];
        y = parent_[y];
    }
    up_a.push_back(x);
    up_a.insert(up_a.end(), up_b.rbegin(), up_b.rend());
    return up_a;
}

GroupWord ChordCoder::word_of(const ClosedWalk& w) const {
    GroupWord word;
    for (int i = 0; i < w.length(); ++i) {
        Dart d = w.dart(i);
        int id = chord_id_[d.tail][d.head];
        if (id < 0) continue;
        // positive direction: smaller endpoint -> larger endpoint
        word.push_back(d.tail < d.head ? id + 1 : -(id + 1));
    }
    return free_reduce(word);
}

ClosedWalk ChordCoder::walk_of(const GroupWord& w) const {
    std::vector<Vertex> seq{base_};
    for (int letter : w) {
        auto [u, v] = chords_[std::abs(letter) - 1];
        Vertex from = letter > 0 ? u : v;
        Vertex to = letter > 0 ? v : u;
        std::vector<Vertex> p = tree_path(seq.back(), from);
        seq.insert(seq.end(), p.begin() + 1, p.end());
        seq.push_back(to);
    }
    std::vector<Vertex> back = tree_path(seq.back(), base_);
    seq.insert(seq.end(), back.begin() + 1, back.end());
    if (seq.size() == 1) return ClosedWalk::trivial();
    return ClosedWalk::from_closed_sequence(seq);
}

}  // namespace pw
