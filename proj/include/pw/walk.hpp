#pragma once

#include <optional>
#include <set>
#include <vector>

#include "pw/graph.hpp"

namespace pw {

/// An oriented closed edge sequence. Stored as the vertex sequence
/// v0 v1 ... v_{L-1} with the closing dart v_{L-1} -> v0 implicit; the
/// basepoint is v0. The trivial (empty) walk has length 0 and acts as the
/// identity of the walk calculus.
class ClosedWalk {
public:
    ClosedWalk() = default;

    /// From an explicitly closed vertex list (last element equal to the
    /// first). A single-element list denotes the trivial walk at that vertex.
    static ClosedWalk from_closed_sequence(const std::vector<Vertex>& seq);

    static ClosedWalk trivial() { return ClosedWalk(); }

    bool is_trivial() const { return vs_.empty(); }
    int length() const { return static_cast<int>(vs_.size()); }

    Vertex vertex(int i) const { return vs_[mod(i)]; }
    Dart dart(int i) const { return {vs_[mod(i)], vs_[mod(i + 1)]}; }
    Vertex basepoint() const {
        if (is_trivial()) throw Error("trivial walk has no basepoint");
        return vs_[0];
    }

    const std::vector<Vertex>& vertices() const { return vs_; }

    /// The explicitly closed form v0 ... v_{L-1} v0 (or empty).
    std::vector<Vertex> closed_sequence() const;

    ClosedWalk rotated(int k) const;
    ClosedWalk inverse() const;

    /// True iff the walk visits no vertex twice and has length >= 3.
    bool is_cycle() const;

    /// Every consecutive pair (and the closing pair) is an edge of g.
    bool valid_in(const Graph& g) const;

    std::set<Vertex> vertex_set() const { return {vs_.begin(), vs_.end()}; }
    std::set<std::pair<Vertex, Vertex>> edge_set() const;

    /// Lexicographically least rotation; the class representative under
    /// rotation. Trivial walks all share the empty key.
    std::vector<Vertex> canonical_key() const;

    friend bool operator==(const ClosedWalk&, const ClosedWalk&) = default;
    friend auto operator<=>(const ClosedWalk&, const ClosedWalk&) = default;

private:
    int mod(int i) const {
        int l = length();
        return ((i % l) + l) % l;
    }
    std::vector<Vertex> vs_;
};

/// Sum (concatenation) of two closed walks with equal basepoints.
ClosedWalk sum(const ClosedWalk& w1, const ClosedWalk& w2);

/// Remove spikes x_{i-1} x_i x_{i+1} with x_{i-1} == x_{i+1}, keeping the
/// basepoint fixed, until none remain in the linear sequence.
ClosedWalk reduce(const ClosedWalk& w);

/// Reduce across the rotation point as well: the result is spike-free as a
/// cyclic sequence (unique up to rotation).
ClosedWalk cyclic_reduce(const ClosedWalk& w);

/// A rotation-class of closed walks.
class WalkClass {
public:
    WalkClass() = default;
    explicit WalkClass(const ClosedWalk& w) : key_(w.canonical_key()) {}

    const std::vector<Vertex>& key() const { return key_; }
    ClosedWalk representative() const;
    int length() const { return static_cast<int>(key_.size()); }
    WalkClass inverse() const { return WalkClass(representative().inverse()); }

    friend bool operator==(const WalkClass&, const WalkClass&) = default;
    friend auto operator<=>(const WalkClass&, const WalkClass&) = default;

private:
    std::vector<Vertex> key_;
};

}  // namespace pw
