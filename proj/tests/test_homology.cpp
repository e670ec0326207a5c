#include "doctest.h"

#include "corpus.hpp"
#include "pw/homology.hpp"
#include "pw/planar_map.hpp"

using namespace pw;

TEST_CASE("walk chains follow the lexicographic edge orientation") {
    PlanarMap m = corpus::theta4();
    const Graph& g = m.graph();
    ClosedWalk w = corpus::theta4_cycle(2, 3);  // u-a-w-b-u
    ChainVector c = walk_to_chain(g, w);
    CHECK(c[g.edge_id(0, 2)] == 1);
    CHECK(c[g.edge_id(1, 2)] == -1);  // traversed a->w, orientation is 1->2
    CHECK(c[g.edge_id(1, 3)] == 1);
    CHECK(c[g.edge_id(0, 3)] == -1);
    CHECK(c[g.edge_id(0, 4)] == 0);
    CHECK(is_zero(walk_to_chain(g, ClosedWalk::trivial())));

    ChainVector doubled = walk_to_chain(g, sum(w, w));
    CHECK(doubled[g.edge_id(0, 2)] == 2);
    CHECK(chain_mod2(doubled) == std::vector<unsigned char>(g.num_edges(), 0));
}

TEST_CASE("smith normal form") {
    Mat a = {{2, 4}, {6, 8}};
    SnfResult r = snf(a);
    CHECK(r.rank == 2);
    CHECK(r.d[0][0] == 2);
    CHECK(r.d[1][1] == 4);
    CHECK(r.d[0][1] == 0);
    CHECK(r.d[1][0] == 0);
    Mat uav = mat_mul(mat_mul(r.u, a), r.v);
    CHECK(uav == r.d);
    CHECK((mat_det(r.u) == 1 || mat_det(r.u) == -1));
    CHECK((mat_det(r.v) == 1 || mat_det(r.v) == -1));
}

TEST_CASE("integer membership certificates") {
    // lattice spanned by (2,0) and (0,3)
    std::vector<ChainVector> basis = {{2, 0}, {0, 3}};
    ZMembership in = is_generated_Z({4, -3}, basis);
    CHECK(in.generated);
    REQUIRE(in.coefficients.size() == 2);
    CHECK(in.coefficients[0] == 2);
    CHECK(in.coefficients[1] == -1);

    ZMembership out = is_generated_Z({1, 0}, basis);
    CHECK_FALSE(out.generated);
    // the obstruction functional must kill the basis but not the target mod d
    mpz_class d = out.obstruction_modulus;
    auto dot = [&](const ChainVector& v) {
        mpz_class s = 0;
        for (size_t i = 0; i < v.size(); ++i) s += out.obstruction[i] * mpz_class(static_cast<long>(v[i]));
        return s;
    };
    for (const auto& b : basis) CHECK((d == 0 ? dot(b) == 0 : dot(b) % d == 0));
    CHECK((d == 0 ? dot({1, 0}) != 0 : dot({1, 0}) % d != 0));
}

TEST_CASE("f2 membership certificates") {
    std::vector<ChainVector> basis = {{1, 1, 0}, {0, 1, 1}};
    F2Membership in = is_generated_F2({1, 0, 1}, basis);
    CHECK(in.generated);
    F2Membership out = is_generated_F2({1, 0, 0}, basis);
    CHECK_FALSE(out.generated);
    int dot_b0 = 0, dot_t = 0;
    for (int i = 0; i < 3; ++i) {
        dot_b0 ^= out.obstruction[i] & 1 & (int)basis[0][i];
        dot_t ^= out.obstruction[i] & (i == 0 ? 1 : 0);
    }
    CHECK(dot_b0 == 0);
    CHECK(dot_t == 1);
}

TEST_CASE("face boundaries span the cycle lattice of 2-connected maps") {
    for (const Graph& g : {corpus::k4(), corpus::cube(), corpus::octahedron()}) {
        PlanarMap m = embed_or_throw(g);
        std::vector<ChainVector> chains;
        for (int f = 0; f < m.num_faces(); ++f)
            if (f != m.outer_face()) chains.push_back(walk_to_chain(g, m.faces()[f].boundary_walk()));
        CHECK(static_cast<int>(chains.size()) == h1_rank(g));
        CHECK(lattice_rank(chains) == h1_rank(g));
        CHECK(spans_cycle_lattice(g, chains));
        chains.pop_back();
        CHECK_FALSE(spans_cycle_lattice(g, chains));
    }
}

TEST_CASE("doubling a generator breaks Z-spanning but not rank") {
    Graph g = corpus::k4();
    PlanarMap m = embed_or_throw(g);
    std::vector<ChainVector> chains;
    for (int f = 0; f < m.num_faces(); ++f)
        if (f != m.outer_face()) chains.push_back(walk_to_chain(g, m.faces()[f].boundary_walk()));
    for (auto& x : chains.back()) x *= 2;
    CHECK(lattice_rank(chains) == h1_rank(g));
    CHECK_FALSE(spans_cycle_lattice(g, chains));
    CHECK(rank_F2(chains) < cycle_space_rank_F2(g));
}

TEST_CASE("h1 ranks of the corpus") {
    CHECK(h1_rank(corpus::k4()) == 3);
    CHECK(h1_rank(corpus::cube()) == 5);
    CHECK(h1_rank(corpus::octahedron()) == 7);
    CHECK(h1_rank(corpus::dodecahedron()) == 11);
    CHECK(cycle_space_rank_F2(corpus::theta4().graph()) == 3);
}
