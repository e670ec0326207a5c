#include "pw/walk.hpp"

#include <algorithm>

namespace pw {

ClosedWalk ClosedWalk::from_closed_sequence(const std::vector<Vertex>& seq) {
    ClosedWalk w;
    if (seq.empty()) return w;
    if (seq.front() != seq.back()) throw Error("closed walk must end at its starting vertex");
    w.vs_.assign(seq.begin(), seq.end() - 1);
    return w;
}

std::vector<Vertex> ClosedWalk::closed_sequence() const {
    if (is_trivial()) return {};
    std::vector<Vertex> out = vs_;
    out.push_back(vs_[0]);
    return out;
}

ClosedWalk ClosedWalk::rotated(int k) const {
    if (is_trivial()) return *this;
    ClosedWalk w;
    int l = length();
    w.vs_.reserve(l);
    for (int i = 0; i < l; ++i) w.vs_.push_back(vs_[((i + k) % l + l) % l]);
    return w;
}

ClosedWalk ClosedWalk::inverse() const {
    if (is_trivial()) return *this;
    ClosedWalk w;
    w.vs_.push_back(vs_[0]);
    for (int i = length() - 1; i >= 1; --i) w.vs_.push_back(vs_[i]);
    return w;
}

bool ClosedWalk::is_cycle() const {
    if (length() < 3) return false;
    std::set<Vertex> seen(vs_.begin(), vs_.end());
    return static_cast<int>(seen.size()) == length();
}

bool ClosedWalk::valid_in(const Graph& g) const {
    for (int i = 0; i < length(); ++i) {
        Dart d = dart(i);
        if (!g.has_edge(d.tail, d.head)) return false;
    }
    return true;
}

std::set<std::pair<Vertex, Vertex>> ClosedWalk::edge_set() const {
    std::set<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < length(); ++i) {
        Dart d = dart(i);
        es.insert({std::min(d.tail, d.head), std::max(d.tail, d.head)});
    }
    return es;
}

std::vector<Vertex> ClosedWalk::canonical_key() const {
    if (is_trivial()) return {};
    std::vector<Vertex> best = vs_;
    for (int k = 1; k < length(); ++k) {
        std::vector<Vertex> cand = rotated(k).vs_;
        if (cand < best) best = cand;
    }
    return best;
}

ClosedWalk sum(const ClosedWalk& w1, const ClosedWalk& w2) {
    if (w1.is_trivial()) return w2;
    if (w2.is_trivial()) return w1;
    if (w1.basepoint() != w2.basepoint())
        throw Error("sum requires matching basepoints");
    std::vector<Vertex> seq = w1.vertices();
    const auto& v2 = w2.vertices();
    seq.insert(seq.end(), v2.begin(), v2.end());
    seq.push_back(w1.basepoint());
    return ClosedWalk::from_closed_sequence(seq);
}

ClosedWalk reduce(const ClosedWalk& w) {
    if (w.is_trivial()) return w;
    // Stack-based free reduction of the linear sequence v0..v_{L-1} v0.
    std::vector<Vertex> open = w.closed_sequence();
    std::vector<Vertex> st;
    for (Vertex v : open) {
        if (st.size() >= 2 && st[st.size() - 2] == v)
            st.pop_back();
        else
            st.push_back(v);
    }
    if (st.size() <= 1) return ClosedWalk::trivial();
    return ClosedWalk::from_closed_sequence(st);
}

ClosedWalk cyclic_reduce(const ClosedWalk& w) {
    ClosedWalk r = reduce(w);
    while (r.length() >= 2 && r.vertex(1) == r.vertex(-1)) {
        std::vector<Vertex> vs = r.vertices();
        std::vector<Vertex> trimmed(vs.begin() + 1, vs.end() - 1);
        trimmed.push_back(vs[1]);
        r = reduce(ClosedWalk::from_closed_sequence(trimmed));
    }
    return r;
}

ClosedWalk WalkClass::representative() const {
    if (key_.empty()) return ClosedWalk::trivial();
    std::vector<Vertex> seq = key_;
    seq.push_back(key_[0]);
    return ClosedWalk::from_closed_sequence(seq);
}

}  // namespace pw
