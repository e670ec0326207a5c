#include <algorithm>

#include "doctest.h"

#include "corpus.hpp"
#include "pw/decomposition.hpp"
#include "pw/homology.hpp"

using namespace pw;

namespace {

Graph two_triangles_shared_vertex() {
    Graph g(5);  // triangles 0-1-2 and 2-3-4
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(2, 4);
    return g;
}

Graph k4_minus_edge() {
    Graph g(4);  // triangles 0-1-2 and 0-1-3 sharing the edge 0-1
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    return g;
}

Graph cycle_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

int lifted_rank(const Graph& g, const std::vector<ClosedWalk>& walks) {
    std::vector<ChainVector> chains;
    for (const ClosedWalk& w : walks) chains.push_back(walk_to_chain(g, w));
    return lattice_rank(chains);
}

}  // namespace

TEST_CASE("block decomposition") {
    BlockTree bt = blocks(two_triangles_shared_vertex());
    REQUIRE(bt.blocks.size() == 2);
    CHECK(bt.cutvertices == std::vector<Vertex>{2});
    CHECK(bt.blocks[0] == std::vector<Vertex>{0, 1, 2});
    CHECK(bt.blocks[1] == std::vector<Vertex>{2, 3, 4});
    CHECK(bt.incidence.size() == 2);

    BlockTree k4 = blocks(corpus::k4());
    CHECK(k4.blocks.size() == 1);
    CHECK(k4.cutvertices.empty());

    Graph p4(4);
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    BlockTree bp = blocks(p4);
    CHECK(bp.blocks.size() == 3);
    CHECK(bp.cutvertices == std::vector<Vertex>{1, 2});
    for (const auto& b : bp.blocks) CHECK(b.size() == 2);
}

TEST_CASE("two-connectivity predicate") {
    CHECK(is_two_connected(corpus::k4()));
    CHECK(is_two_connected(cycle_graph(6)));
    CHECK_FALSE(is_two_connected(two_triangles_shared_vertex()));
    Graph k2(2);
    k2.add_edge(0, 1);
    CHECK_FALSE(is_two_connected(k2));
}

TEST_CASE("tutte decomposition of theta4: hub plus four cycle torsos") {
    TutteTree tt = tutte_decompose(corpus::theta4().graph());
    REQUIRE(tt.parts.size() == 5);
    int hubs = 0, cycles = 0;
    int hub = -1;
    for (int t = 0; t < 5; ++t) {
        if (tt.parts[t].kind == TorsoKind::K2) {
            ++hubs;
            hub = t;
            CHECK(tt.parts[t].vertices == std::vector<Vertex>{0, 1});
            CHECK(tt.parts[t].virtual_edges.size() == 1);
        }
        if (tt.parts[t].kind == TorsoKind::Cycle) {
            ++cycles;
            CHECK(tt.parts[t].vertices.size() == 3);
        }
    }
    CHECK(hubs == 1);
    CHECK(cycles == 4);
    CHECK(tt.links.size() == 4);
    for (const TutteLink& l : tt.links) {
        CHECK((l.a == hub || l.b == hub));
        CHECK(l.adhesion == std::make_pair(0, 1));
    }
    CHECK(check_tutte(corpus::theta4().graph(), tt).ok());

    auto [torso_hub, map] = torso(corpus::theta4().graph(), tt, hub);
    CHECK(torso_hub.num_vertices() == 2);
    CHECK(torso_hub.num_edges() == 1);
}

TEST_CASE("tutte decomposition leaves 3-connected graphs and cycles whole") {
    TutteTree k4 = tutte_decompose(corpus::k4());
    REQUIRE(k4.parts.size() == 1);
    CHECK(k4.parts[0].kind == TorsoKind::ThreeConnected);
    CHECK(k4.links.empty());
    CHECK(check_tutte(corpus::k4(), k4).ok());

    TutteTree c6 = tutte_decompose(cycle_graph(6));
    REQUIRE(c6.parts.size() == 1);
    CHECK(c6.parts[0].kind == TorsoKind::Cycle);
    CHECK(check_tutte(cycle_graph(6), c6).ok());

    CHECK_THROWS_AS(tutte_decompose(two_triangles_shared_vertex()), Error);
}

TEST_CASE("normalization splices hubs and merges cycle chains") {
    // two triangles on a shared real edge: two cycle torsos, no hub left
    Graph g = k4_minus_edge();
    TutteTree tt = tutte_decompose(g);
    REQUIRE(tt.parts.size() == 2);
    CHECK(tt.parts[0].kind == TorsoKind::Cycle);
    CHECK(tt.parts[1].kind == TorsoKind::Cycle);
    REQUIRE(tt.links.size() == 1);
    CHECK(tt.links[0].adhesion == std::make_pair(0, 1));
    CHECK(check_tutte(g, tt).ok());

    // C6 plus one chord: two quadrilateral torsos glued on the chord
    Graph h = cycle_graph(6);
    h.add_edge(0, 3);
    TutteTree th = tutte_decompose(h);
    REQUIRE(th.parts.size() == 2);
    for (const TuttePart& p : th.parts) {
        CHECK(p.kind == TorsoKind::Cycle);
        CHECK(p.vertices.size() == 4);
    }
    REQUIRE(th.links.size() == 1);
    CHECK(th.links[0].adhesion == std::make_pair(0, 3));
    CHECK(check_tutte(h, th).ok());
}

TEST_CASE("tutte invariants and determinism on the random corpus") {
    for (unsigned seed : {1u, 2u, 7u, 11u}) {
        PlanarMap m = corpus::random_two_connected(9, seed);
        const Graph& g = m.graph();
        TutteTree tt = tutte_decompose(g);
        TutteCheck c = check_tutte(g, tt);
        INFO(c.detail);
        CHECK(c.ok());
        CHECK(c.max_adhesions_per_vertex <= g.num_vertices());
        CHECK(serialize_tutte(g, tt) == serialize_tutte(g, tutte_decompose(g)));
    }
}

TEST_CASE("lifting theta4 torso cycles gives a rank-3 set") {
    const Graph g = corpus::theta4().graph();
    TutteTree tt = tutte_decompose(g);
    std::vector<std::vector<ClosedWalk>> per_part(tt.parts.size());
    for (size_t t = 0; t < tt.parts.size(); ++t) {
        if (tt.parts[t].kind != TorsoKind::Cycle) continue;
        std::vector<Vertex> vs = tt.parts[t].vertices;  // {0, 1, x}
        per_part[t].push_back(corpus::walk({0, vs[2], 1}));
    }
    std::vector<ClosedWalk> lifted = lift_generators(g, tt, per_part);
    CHECK(lifted.size() == 4);
    for (const ClosedWalk& w : lifted) CHECK(w.valid_in(g));
    CHECK(lifted_rank(g, lifted) == 3);
    CHECK(h1_rank(g) == 3);

    // a path must be on file for every virtual edge
    CHECK_THROWS_AS(lift_generators(g, tt, per_part, PathChoice{}), Error);
}

TEST_CASE("projection restricts global generators to the torsos") {
    const Graph g = corpus::theta4().graph();
    TutteTree tt = tutte_decompose(g);
    std::vector<ClosedWalk> global = {corpus::theta4_cycle(2, 3), corpus::theta4_cycle(3, 4),
                                      corpus::theta4_cycle(4, 5)};
    std::vector<std::vector<ClosedWalk>> per_part = project_generators(g, tt, global);
    for (size_t t = 0; t < tt.parts.size(); ++t) {
        if (tt.parts[t].kind != TorsoKind::Cycle) continue;
        Vertex x = tt.parts[t].vertices[2];
        bool found = false;
        for (const ClosedWalk& w : per_part[t])
            if (WalkClass(w) == WalkClass(corpus::walk({0, x, 1})) ||
                WalkClass(w) == WalkClass(corpus::walk({0, x, 1})).inverse())
                found = true;
        CHECK(found);
    }
    // round trip: lifting the projection recovers full homology rank
    std::vector<ClosedWalk> lifted = lift_generators(g, tt, per_part);
    CHECK(lifted_rank(g, lifted) == h1_rank(g));
}

TEST_CASE("lift and project preserve homology rank on the corpus") {
    for (unsigned seed : {1u, 2u, 7u, 11u, 13u}) {
        PlanarMap m = corpus::random_two_connected(9, seed);
        const Graph& g = m.graph();
        TutteTree tt = tutte_decompose(g);
        std::vector<ClosedWalk> global = fundamental_cycles(g);
        CHECK(lifted_rank(g, global) == h1_rank(g));
        std::vector<std::vector<ClosedWalk>> per_part = project_generators(g, tt, global);
        // each torso's module is generated by the projections
        for (size_t t = 0; t < tt.parts.size(); ++t) {
            auto [tg, map] = torso(g, tt, t);
            std::map<Vertex, int> inv;
            for (int i = 0; i < static_cast<int>(map.size()); ++i) inv[map[i]] = i;
            std::vector<ChainVector> chains;
            for (const ClosedWalk& w : per_part[t]) {
                std::vector<Vertex> seq;
                for (Vertex v : w.closed_sequence()) seq.push_back(inv.at(v));
                chains.push_back(walk_to_chain(tg, ClosedWalk::from_closed_sequence(seq)));
            }
            CHECK(lattice_rank(chains) == h1_rank(tg));
        }
        std::vector<ClosedWalk> lifted = lift_generators(g, tt, per_part);
        CHECK(lifted_rank(g, lifted) == h1_rank(g));
    }
}

TEST_CASE("degree sequences of orbit representatives") {
    // theta4 under vertex-transitive-on-hubs generators: orbits {u,w}, {a,b,c,d}
    std::vector<std::vector<Vertex>> gens = {{1, 0, 2, 3, 4, 5}, {0, 1, 3, 4, 5, 2}};
    CHECK(degree_sequence(corpus::theta4().graph(), gens) == DegreeSequence{4, 2});

    std::vector<std::vector<Vertex>> k4gens = {{1, 2, 3, 0}, {1, 0, 2, 3}};
    CHECK(degree_sequence(corpus::k4(), k4gens) == DegreeSequence{3});

    // trivial group: one entry per vertex
    CHECK(degree_sequence(corpus::k4(), {}) == DegreeSequence{3, 3, 3, 3});

    CHECK_THROWS_AS(degree_sequence(corpus::k4(), {{0, 1, 2}}), Error);
    CHECK_THROWS_AS(degree_sequence(corpus::theta4().graph(), {{2, 3, 0, 1, 4, 5}}), Error);
}

TEST_CASE("degree sequence order: prefix or first difference") {
    CHECK(compare({3}, {4, 2}) == Ordering::Less);
    CHECK(compare({4, 2}, {3}) == Ordering::Greater);
    CHECK(compare({4, 2}, {4, 2}) == Ordering::Equal);
    CHECK(compare({3}, {3, 1}) == Ordering::Less);  // proper prefix is smaller
    CHECK(compare({3, 1}, {3}) == Ordering::Greater);
    CHECK(compare({2, 2}, {3, 2}) == Ordering::Less);
    CHECK(compare({}, {1}) == Ordering::Less);
}

TEST_CASE("split_along validates its conditions") {
    // theta4 minus one middle vertex stays connected: condition (i)
    CHECK_THROWS_WITH_AS(static_cast<void>(split_along(corpus::theta4().graph(), {}, {2})),
                         doctest::Contains("condition (i)"), Error);
    // C6 under rotation: the image {1,4} of {0,3} meets both components
    std::vector<Vertex> rot = {1, 2, 3, 4, 5, 0};
    CHECK_THROWS_WITH_AS(static_cast<void>(split_along(cycle_graph(6), {rot}, {0, 3})),
                         doctest::Contains("condition (ii)"), Error);
    // middle vertex of a path with both neighbours in S
    Graph p5(5);
    for (int i = 0; i < 4; ++i) p5.add_edge(i, i + 1);
    CHECK_THROWS_WITH_AS(static_cast<void>(split_along(p5, {}, {1, 2, 3})),
                         doctest::Contains("condition (iii)"), Error);
}

TEST_CASE("split_along yields strictly smaller pieces") {
    // two triangles sharing the edge 0-1, S = {0,1}
    Graph g = k4_minus_edge();
    std::vector<std::vector<Vertex>> gens = {{1, 0, 2, 3}, {0, 1, 3, 2}};
    std::vector<SplitPiece> ps = split_along(g, gens, {0, 1});
    REQUIRE(ps.size() == 2);
    for (const SplitPiece& p : ps) {
        CHECK(p.vertices.size() == 3);
        CHECK(p.graph.num_edges() == 3);
        CHECK(p.sequence == DegreeSequence{2, 2});
        CHECK(compare(p.sequence, degree_sequence(g, gens)) == Ordering::Less);
        CHECK_FALSE(p.stabilizer.empty());  // the hub swap survives
    }

    // blocks via a cutvertex orbit: two triangles sharing vertex 2
    Graph h = two_triangles_shared_vertex();
    std::vector<SplitPiece> qs = split_along(h, {}, {2});
    REQUIRE(qs.size() == 2);
    for (const SplitPiece& q : qs) {
        CHECK(q.vertices.size() == 3);
        CHECK(compare(q.sequence, degree_sequence(h, {})) == Ordering::Less);
    }
}

TEST_CASE("tutte serialization is a nested listing") {
    const Graph g = corpus::theta4().graph();
    std::string s = serialize_tutte(g, tutte_decompose(g));
    CHECK(s.rfind("pw-tutte v1\n", 0) == 0);
    CHECK(s.find("[K2]") != std::string::npos);
    CHECK(s.find("[cycle]") != std::string::npos);
    CHECK(s.find("adhesion {0 1}") != std::string::npos);
}
