#include "doctest.h"

#include "corpus.hpp"
#include "pw/graph.hpp"

using namespace pw;

TEST_CASE("basic graph invariants") {
    Graph g = corpus::cube();
    CHECK(g.num_vertices() == 8);
    CHECK(g.num_edges() == 12);
    CHECK(g.connected());
    CHECK(g.diameter() == 3);
    for (int v = 0; v < 8; ++v) CHECK(g.degree(v) == 3);
    CHECK_THROWS_AS(g.add_edge(0, 0), Error);
    CHECK_THROWS_AS(g.add_edge(0, 1), Error);
}

TEST_CASE("edge ids are lexicographic and stable") {
    Graph g(3);
    g.add_edge(2, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 0);
    auto es = g.edges();
    REQUIRE(es.size() == 3);
    CHECK(es[0] == std::make_pair(0, 1));
    CHECK(es[1] == std::make_pair(0, 2));
    CHECK(es[2] == std::make_pair(1, 2));
    CHECK(g.edge_id(2, 1) == 2);
}

TEST_CASE("shortest path determinism") {
    Graph g = corpus::cube();
    // two geodesics 0->3; the tie-break picks the smaller predecessor chain
    auto p = g.shortest_path(0, 3);
    REQUIRE(p.size() == 3);
    CHECK(p == std::vector<Vertex>{0, 1, 3});
    // 0 and 1 have no common neighbor in the cube, so the detour has length 3
    auto q = g.shortest_path_avoiding_edge(0, 1, 0, 1);
    REQUIRE(q.size() == 4);
    CHECK(q.front() == 0);
    CHECK(q.back() == 1);
    CHECK(q[1] != 1);
    CHECK(q[2] != 1);
}

TEST_CASE("distances and induced subgraph") {
    Graph g = corpus::octahedron();
    auto d = g.distances_from(0);
    CHECK(d[1] == 2);  // the antipode
    for (int v = 2; v < 6; ++v) CHECK(d[v] == 1);
    auto [h, back] = g.induced({0, 2, 4});
    CHECK(h.num_vertices() == 3);
    CHECK(h.num_edges() == 3);  // a triangle
    CHECK(back == std::vector<Vertex>{0, 2, 4});
}
