#pragma once

// Shared test graphs and random corpus generators.

#include <random>
#include <vector>

#include "pw/planar_map.hpp"

namespace corpus {

inline pw::Graph k4() {
    pw::Graph g(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) g.add_edge(i, j);
    return g;
}

inline pw::Graph cube() {
    pw::Graph g(8);
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            int x = i ^ j;
            if ((x & (x - 1)) == 0) g.add_edge(i, j);
        }
    return g;
}

inline pw::Graph octahedron() {
    pw::Graph g(6);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (!(i / 2 == j / 2)) g.add_edge(i, j);  // antipodal pairs (0,1),(2,3),(4,5)
    return g;
}

inline pw::Graph dodecahedron() {
    // LCF notation [10,7,4,-4,-7,10,-4,7,-7,4]^2 on a 20-cycle
    static const int code[10] = {10, 7, 4, -4, -7, 10, -4, 7, -7, 4};
    pw::Graph g(20);
    for (int i = 0; i < 20; ++i) g.add_edge(i, (i + 1) % 20);
    for (int i = 0; i < 20; ++i) {
        int j = ((i + code[i % 10]) % 20 + 20) % 20;
        if (!g.has_edge(i, j)) g.add_edge(i, j);
    }
    return g;
}

// Two vertices 0 (=u) and 1 (=w) joined by four internally disjoint length-2
// paths through 2,3,4,5 (=a,b,c,d); spin at u is (a,b,c,d).
inline pw::PlanarMap theta4() {
    pw::Graph g(6);
    for (int x = 2; x <= 5; ++x) {
        g.add_edge(0, x);
        g.add_edge(1, x);
    }
    std::vector<std::vector<pw::Vertex>> spin = {
        {2, 3, 4, 5}, {5, 4, 3, 2}, {0, 1}, {0, 1}, {0, 1}, {0, 1}};
    return pw::PlanarMap(std::move(g), std::move(spin));
}

inline pw::ClosedWalk walk(std::vector<pw::Vertex> vs) {
    vs.push_back(vs[0]);
    return pw::ClosedWalk::from_closed_sequence(vs);
}

// u-x-w-y-u through two of the middle vertices
inline pw::ClosedWalk theta4_cycle(pw::Vertex x, pw::Vertex y) { return walk({0, x, 1, y}); }

// Generalized theta map: hubs 0 and 1 joined by k length-2 paths through
// 2..k+1, in a seed-shuffled spin order. Every cycle has length 4 and is
// indecomposable (there are no shorter nontrivial closed walks).
inline pw::PlanarMap theta_map(int k, unsigned seed) {
    pw::Graph g(k + 2);
    for (int x = 2; x < k + 2; ++x) {
        g.add_edge(0, x);
        g.add_edge(1, x);
    }
    std::vector<pw::Vertex> order;
    for (int x = 2; x < k + 2; ++x) order.push_back(x);
    std::mt19937 rng(seed);
    for (size_t i = order.size() - 1; i > 0; --i) std::swap(order[i], order[rng() % (i + 1)]);
    std::vector<std::vector<pw::Vertex>> spin(k + 2, std::vector<pw::Vertex>{0, 1});
    spin[0] = order;
    spin[1] = std::vector<pw::Vertex>(order.rbegin(), order.rend());
    return pw::PlanarMap(std::move(g), std::move(spin));
}

// Random planar triangulation: octahedron plus `extra` stacked vertices.
inline pw::PlanarMap random_triangulation(int extra, unsigned seed) {
    pw::PlanarMap m = pw::embed_or_throw(octahedron());
    pw::Graph g = m.graph();
    std::vector<std::vector<pw::Vertex>> spin = m.spin();
    std::mt19937 rng(seed);

    auto insert_after = [](std::vector<pw::Vertex>& ring, pw::Vertex after, pw::Vertex nv) {
        for (size_t i = 0; i < ring.size(); ++i)
            if (ring[i] == after) {
                ring.insert(ring.begin() + i + 1, nv);
                return;
            }
        throw pw::Error("corpus: spin insertion anchor missing");
    };

    for (int s = 0; s < extra; ++s) {
        pw::PlanarMap cur(g, spin);
        int f = static_cast<int>(rng() % cur.num_faces());
        std::vector<pw::Vertex> tri = cur.faces()[f].boundary_vertices();
        pw::Vertex a = tri[0], b = tri[1], c = tri[2];
        pw::Vertex z = g.add_vertex();
        g.add_edge(z, a);
        g.add_edge(z, b);
        g.add_edge(z, c);
        insert_after(spin[a], c, z);
        insert_after(spin[b], a, z);
        insert_after(spin[c], b, z);
        spin.push_back({a, c, b});
    }
    return pw::PlanarMap(std::move(g), std::move(spin));
}

// Random 2-connected planar map: a cycle plus random ears added inside faces.
inline pw::PlanarMap random_two_connected(int target_vertices, unsigned seed) {
    std::mt19937 rng(seed);
    int k = 3 + static_cast<int>(rng() % 3);
    if (k > target_vertices) k = target_vertices;
    pw::Graph g(k);
    std::vector<std::vector<pw::Vertex>> spin(k);
    for (int i = 0; i < k; ++i) {
        g.add_edge(i, (i + 1) % k);
        spin[i] = {(i + k - 1) % k, (i + 1) % k};
    }

    auto insert_after = [](std::vector<pw::Vertex>& ring, pw::Vertex after, pw::Vertex nv) {
        for (size_t i = 0; i < ring.size(); ++i)
            if (ring[i] == after) {
                ring.insert(ring.begin() + i + 1, nv);
                return;
            }
        throw pw::Error("corpus: spin insertion anchor missing");
    };

    int ears = 0;
    while (g.num_vertices() < target_vertices || ears < 2) {
        pw::PlanarMap cur(g, spin);
        int f = static_cast<int>(rng() % cur.num_faces());
        const std::vector<pw::Dart>& bd = cur.faces()[f].boundary;
        int n = static_cast<int>(bd.size());
        if (n < 3) continue;
        int i = static_cast<int>(rng() % n);
        int j = static_cast<int>(rng() % n);
        if (i == j) continue;
        pw::Vertex u = bd[i].head, v = bd[j].head;
        if (u == v) continue;
        int len = 1 + static_cast<int>(rng() % 3);
        if (g.num_vertices() + len - 1 > target_vertices + 2) len = 1;
        if (len == 1 && g.has_edge(u, v)) continue;
        // predecessors of u and v along the face trace
        pw::Vertex xu = bd[i].tail, xv = bd[j].tail;
        std::vector<pw::Vertex> path = {u};
        for (int t = 1; t < len; ++t) {
            pw::Vertex nv = g.add_vertex();
            spin.emplace_back();
            path.push_back(nv);
        }
        path.push_back(v);
        for (size_t t = 0; t + 1 < path.size(); ++t) g.add_edge(path[t], path[t + 1]);
        insert_after(spin[u], xu, path[1]);
        insert_after(spin[v], xv, path[path.size() - 2]);
        for (size_t t = 1; t + 1 < path.size(); ++t)
            spin[path[t]] = {path[t - 1], path[t + 1]};
        ++ears;
    }
    return pw::PlanarMap(std::move(g), std::move(spin));
}

}  // namespace corpus
