#include <algorithm>
#include <variant>

#include "doctest.h"

#include "corpus.hpp"
#include "pw/planar_map.hpp"

using namespace pw;

namespace {

std::vector<int> face_sizes(const PlanarMap& m) {
    std::vector<int> s;
    for (const Face& f : m.faces()) s.push_back(f.size());
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

TEST_CASE("platonic embeddings have the right face vectors") {
    PlanarMap k4 = embed_or_throw(corpus::k4());
    CHECK(face_sizes(k4) == std::vector<int>{3, 3, 3, 3});

    PlanarMap q3 = embed_or_throw(corpus::cube());
    CHECK(face_sizes(q3) == std::vector<int>{4, 4, 4, 4, 4, 4});

    PlanarMap oct = embed_or_throw(corpus::octahedron());
    CHECK(face_sizes(oct) == std::vector<int>(8, 3));

    PlanarMap dod = embed_or_throw(corpus::dodecahedron());
    CHECK(face_sizes(dod) == std::vector<int>(12, 5));
}

TEST_CASE("non-planar graphs give a witness") {
    Graph k5(5);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) k5.add_edge(i, j);
    EmbedResult r = embed(k5);
    REQUIRE(std::holds_alternative<NonPlanarWitness>(r));
    const auto& w = std::get<NonPlanarWitness>(r);
    CHECK(w.edges.size() >= 9);  // K5 subdivision needs at least 9 edges here
    for (auto [u, v] : w.edges) CHECK(k5.has_edge(u, v));
}

TEST_CASE("theta4 map") {
    PlanarMap m = corpus::theta4();
    CHECK(m.num_faces() == 4);
    CHECK(face_sizes(m) == std::vector<int>{4, 4, 4, 4});

    // spin at u is (a,b,c,d) = (2,3,4,5)
    CHECK(m.spin_contains(0, 2, 3, 4));
    CHECK_FALSE(m.spin_contains(0, 2, 4, 3));
    CHECK(m.spin_contains(0, 4, 5, 2));  // cyclic
    CHECK(m.reflected().spin_contains(0, 2, 4, 3));
}

TEST_CASE("face tracing is an involution-free dart partition") {
    PlanarMap m = embed_or_throw(corpus::cube());
    int total = 0;
    for (const Face& f : m.faces()) total += f.size();
    CHECK(total == 2 * m.graph().num_edges());
    for (const Face& f : m.faces())
        for (const Dart& d : f.boundary) CHECK(m.face_of(d) == m.face_of(f.boundary[0]));
}

TEST_CASE("cycle regions on theta4") {
    PlanarMap m = corpus::theta4();
    RegionPartition rp = cycle_regions(m, corpus::theta4_cycle(2, 4));  // u-a-w-c-u
    CHECK(rp.on_cycle_vertices == std::set<Vertex>{0, 1, 2, 4});
    std::set<Vertex> s0 = rp.side_vertices[0], s1 = rp.side_vertices[1];
    bool split_bd = (s0 == std::set<Vertex>{3} && s1 == std::set<Vertex>{5}) ||
                    (s0 == std::set<Vertex>{5} && s1 == std::set<Vertex>{3});
    CHECK(split_bd);
    CHECK(rp.side_edges[0].size() == 2);
    CHECK(rp.side_edges[1].size() == 2);
    CHECK(rp.side_faces[0].size() == 2);
    CHECK(rp.side_faces[1].size() == 2);
}

TEST_CASE("cycle regions on the cube put the outer face on side 1") {
    PlanarMap m = embed_or_throw(corpus::cube());
    ClosedWalk c = m.faces()[m.outer_face()].boundary_walk();
    RegionPartition rp = cycle_regions(m, c);
    CHECK(rp.side_faces[1].count(m.outer_face()) == 1);
    CHECK(rp.side_faces[0].size() + rp.side_faces[1].size() + 0 == 6);
    CHECK(rp.side_vertices[0].size() + rp.side_vertices[1].size() == 4);
}

TEST_CASE("random corpus maps satisfy Euler") {
    for (unsigned seed : {1u, 2u, 3u}) {
        PlanarMap t = corpus::random_triangulation(5, seed);
        CHECK(t.graph().num_vertices() - t.graph().num_edges() + t.num_faces() == 2);
        for (const Face& f : t.faces()) CHECK(f.size() == 3);

        PlanarMap m = corpus::random_two_connected(9, seed);
        CHECK(m.graph().num_vertices() - m.graph().num_edges() + m.num_faces() == 2);
        CHECK(m.graph().connected());
    }
}
