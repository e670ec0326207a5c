#include <algorithm>
#include <set>

#include "doctest.h"

#include "corpus.hpp"
#include "pw/canonical.hpp"
#include "pw/group_actions.hpp"
#include "pw/homology.hpp"
#include "pw/walk_algebra.hpp"

using namespace pw;

namespace {

const char* GRID = "gens: a b\nrels: abAB\n";
const char* C5 = "gens: a\nrels: aaaaa\n";

// based closed walk: tree path to v, the unit square a,b,a^-1,b^-1 at v, back
ClosedWalk square_at(const CayleyBall& ball, const ChordCoder& coder, Vertex v) {
    std::vector<Vertex> sq = {v};
    for (int letter : {1, 2, -1, -2}) {
        Vertex next = ball.step(sq.back(), letter);
        if (next < 0) throw Error("square leaves the ball");
        sq.push_back(next);
    }
    std::vector<Vertex> tree = coder.tree_path(ball.base, v);
    std::vector<Vertex> seq(tree.begin(), tree.end() - 1);
    seq.insert(seq.end(), sq.begin(), sq.end() - 1);
    for (auto it = tree.rbegin(); it != tree.rend(); ++it) seq.push_back(*it);
    return ClosedWalk::from_closed_sequence(seq);
}

}  // namespace

TEST_CASE("automorphism group orders") {
    CHECK(automorphisms(corpus::k4()).order == 24);
    CHECK(automorphisms(corpus::theta4().graph()).order == 48);
    Graph c6(6);
    for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
    CHECK(automorphisms(c6).order == 12);
    CHECK(automorphisms(corpus::cube()).order == 48);
    CHECK(automorphisms(corpus::octahedron()).order == 48);
    CHECK(automorphisms(corpus::dodecahedron()).order == 120);
}

TEST_CASE("automorphism generators preserve adjacency and span the orbits") {
    const Graph g = corpus::theta4().graph();
    AutomorphismGroup ag = automorphisms(g);
    for (const auto& p : ag.generators)
        for (auto [u, v] : g.edges()) CHECK(g.has_edge(p[u], p[v]));
    REQUIRE(ag.orbits.size() == 2);
    CHECK(ag.orbits[0] == std::vector<Vertex>{0, 1});
    CHECK(ag.orbits[1] == std::vector<Vertex>{2, 3, 4, 5});
}

TEST_CASE("presentation parsing") {
    Presentation p = parse_presentation(GRID);
    CHECK(p.gens == std::vector<char>{'a', 'b'});
    REQUIRE(p.relators.size() == 1);
    CHECK(p.relators[0] == GroupWord{1, 2, -1, -2});

    CHECK_THROWS_AS(parse_presentation("gens: a\nrels: ax\n"), Error);
    CHECK_THROWS_AS(parse_presentation("rels: aa\n"), Error);
    CHECK_THROWS_AS(parse_presentation("gens: a\nrels: aA\n"), Error);
}

TEST_CASE("cayley balls of the grid and the 5-cycle") {
    Presentation p = parse_presentation(GRID);
    CayleyBall b1 = cayley_ball(p, 1);
    CHECK(b1.graph.num_vertices() == 5);
    CHECK(b1.graph.num_edges() == 4);
    CHECK(b1.distance[b1.base] == 0);

    CayleyBall b2 = cayley_ball(p, 2);
    CHECK(b2.graph.num_vertices() == 13);
    CHECK(b2.graph.num_edges() == 16);
    int interior = 0;
    for (char i : b2.interior) interior += i;
    CHECK(interior == 5);  // exactly the radius-1 ball has all neighbors

    CayleyBall c = cayley_ball(parse_presentation(C5), 3);
    CHECK(c.graph.num_vertices() == 5);
    CHECK(c.graph.num_edges() == 5);
    for (char i : c.interior) CHECK(i == 1);

    CHECK_THROWS_AS(cayley_ball(p, 4, 50), Error);
}

TEST_CASE("free-group action on based walks") {
    CayleyBall ball = cayley_ball(parse_presentation(GRID), 3);
    ChordCoder coder(ball.graph, ball.base);
    ClosedWalk sq = square_at(ball, coder, ball.base);

    CHECK(fs_act(ball, {}, sq) == sq);

    ClosedWalk moved = fs_act(ball, {1}, sq);
    CHECK(moved.basepoint() == ball.base);
    CHECK(moved.valid_in(ball.graph));
    // the image is the square at the a-neighbor, conjugated by the a-edge
    CHECK(moved.vertex(1) == ball.step(ball.base, 1));

    // action law up to free reduction of the chord words
    GroupWord w12 = {1, -2};
    ClosedWalk lhs = fs_act(ball, w12, sq);
    ClosedWalk rhs = fs_act(ball, {1}, fs_act(ball, {-2}, sq));
    CHECK(coder.word_of(lhs) == coder.word_of(rhs));

    // conjugating into the basepoint does not change the free homotopy
    // class: the cyclic reduction is exactly the translated square
    Vertex va = ball.step(ball.base, 1);
    std::vector<Vertex> tsq = {va};
    for (int letter : {1, 2, -1, -2}) tsq.push_back(ball.step(tsq.back(), letter));
    CHECK(WalkClass(cyclic_reduce(moved)) == WalkClass(ClosedWalk::from_closed_sequence(tsq)));

    // pushing the square off the edge of the ball fails loudly
    GroupWord far = {1, 1, 1, 1, 1, 1, 1};
    CHECK_THROWS_AS(fs_act(ball, far, sq), Error);
}

TEST_CASE("pi1 generators of K4 from the triangle set") {
    Graph g = corpus::k4();
    std::vector<ClosedWalk> tris;
    for (const WalkClass& c : candidate_indecomposables(g, 3)) tris.push_back(c.representative());
    CHECK(tris.size() == 8);
    Pi1Set ps = genpi(g, tris, 1);
    ChordCoder coder(g, 1);
    CHECK(coder.num_chords() == 3);  // spanning star at 1
    for (const Pi1Element& e : ps.elements) CHECK(free_reduce(e) == e);
    CHECK(abelianization_rank(ps.elements, coder.num_chords()) == 3);
    CHECK(h1_rank(g) == 3);

    // dropping an orientation breaks inversion closure
    std::vector<ClosedWalk> oneway = {tris[0]};
    CHECK_THROWS_AS(genpi(g, oneway, 1), Error);
}

TEST_CASE("pi1 of a single cycle is generated by the one chord") {
    Graph c6(6);
    for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
    std::vector<Vertex> seq = {0, 1, 2, 3, 4, 5, 0};
    ClosedWalk w = ClosedWalk::from_closed_sequence(seq);
    Pi1Set ps = genpi(c6, {w, w.inverse()}, 0);
    REQUIRE_FALSE(ps.elements.empty());
    for (const Pi1Element& e : ps.elements) {
        CHECK(e.size() == 1);
        CHECK(std::abs(e[0]) == 1);
    }
}

TEST_CASE("genpi round trip through cyclic reduction") {
    PlanarMap m = pw::embed_or_throw(corpus::k4());
    GeneratingSet gs = build_canonical(m, Mode::HomologyZ);
    std::vector<ClosedWalk> walks = gs.walks();
    Pi1Set ps = genpi(m.graph(), walks, 0);
    std::set<WalkClass> in, back;
    for (const ClosedWalk& w : walks) in.insert(WalkClass(w));
    for (const Pi1Element& e : ps.elements) back.insert(cyclic_reduce_pi(m.graph(), 0, e));
    CHECK(in == back);
}

TEST_CASE("orbit partition under the free-group action") {
    CayleyBall c5 = cayley_ball(parse_presentation(C5), 3);
    ChordCoder ccoder(c5.graph, c5.base);
    // the 5-cycle through the whole ball, one orientation
    std::vector<Vertex> cyc = {c5.base};
    for (int i = 0; i < 5; ++i) cyc.push_back(c5.step(cyc.back(), 1));
    ClosedWalk w5 = ClosedWalk::from_closed_sequence(cyc);
    GroupWord e5 = ccoder.word_of(w5);
    PiOrbits po = orbit_partition_pi(c5, {e5});
    CHECK(po.orbit_count == 1);
    // the two orientations are never merged by conjugation
    PiOrbits po2 = orbit_partition_pi(c5, {e5, invert_word(e5)});
    CHECK(po2.orbit_count == 2);

    CHECK(orbit_partition_pi(c5, {}).orbit_count == 0);

    CayleyBall grid = cayley_ball(parse_presentation(GRID), 3);
    ChordCoder gcoder(grid.graph, grid.base);
    std::vector<Pi1Element> squares, interior_squares;
    for (Vertex v = 0; v < grid.graph.num_vertices(); ++v) {
        try {
            ClosedWalk sq = square_at(grid, gcoder, v);
            squares.push_back(gcoder.word_of(sq));
            bool inner = true;
            for (Vertex x : sq.vertex_set()) inner = inner && grid.interior[x];
            if (inner) interior_squares.push_back(squares.back());
        } catch (const Error&) {
            continue;  // square not contained in the ball
        }
    }
    REQUIRE(interior_squares.size() >= 4);
    CHECK(orbit_partition_pi(grid, interior_squares).orbit_count == 1);

    // the orbit count never grows with the radius
    CayleyBall grid2 = cayley_ball(parse_presentation(GRID), 2);
    ChordCoder g2coder(grid2.graph, grid2.base);
    std::vector<Pi1Element> sq2;
    for (Vertex v = 0; v < grid2.graph.num_vertices(); ++v) {
        try {
            sq2.push_back(g2coder.word_of(square_at(grid2, g2coder, v)));
        } catch (const Error&) {
            continue;
        }
    }
    REQUIRE_FALSE(sq2.empty());
    CHECK(orbit_partition_pi(grid2, sq2).orbit_count >=
          orbit_partition_pi(grid, squares).orbit_count);
}
