#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "pw/graph.hpp"
#include "pw/walk.hpp"

namespace pw {

/// Integer edge-coefficient vector under the fixed lexicographic edge
/// orientation (smaller endpoint -> larger endpoint counts +1).
using ChainVector = std::vector<long long>;

ChainVector walk_to_chain(const Graph& g, const ClosedWalk& w);

bool is_zero(const ChainVector& c);

/// Chain over F2 (parity of the integer chain).
std::vector<unsigned char> chain_mod2(const ChainVector& c);

using Mat = std::vector<std::vector<mpz_class>>;

/// Smith normal form: returns (D, U, V) with U*A*V == D, D diagonal with a
/// divisibility chain, U and V unimodular.
struct SnfResult {
    Mat d, u, v;
    int rank = 0;  // number of nonzero diagonal entries
};

SnfResult snf(const Mat& a);

Mat mat_mul(const Mat& a, const Mat& b);
mpz_class mat_det(Mat a);  // by fraction-free elimination; square only

/// Certificate for integral lattice membership.
struct ZMembership {
    bool generated = false;
    std::vector<mpz_class> coefficients;  // if generated: target == sum coeff_i * basis_i
    // if not: a functional row u and modulus d (d == 0 means "must vanish
    // exactly") with u*basis_i == 0 (mod d) for all i but u*target != 0 (mod d)
    std::vector<mpz_class> obstruction;
    mpz_class obstruction_modulus = 0;
};

/// Does target lie in the integer lattice spanned by basis vectors?
ZMembership is_generated_Z(const ChainVector& target, const std::vector<ChainVector>& basis);

/// Certificate for F2 span membership.
struct F2Membership {
    bool generated = false;
    std::vector<unsigned char> coefficients;
    std::vector<unsigned char> obstruction;  // functional with u.b_i = 0, u.t = 1
};

F2Membership is_generated_F2(const ChainVector& target, const std::vector<ChainVector>& basis);

/// Rank of the lattice spanned by the chains (== F2 rank check separate).
int lattice_rank(const std::vector<ChainVector>& chains);
int rank_F2(const std::vector<ChainVector>& chains);

/// True iff the lattice spanned by `chains` equals the full cycle lattice of
/// g (rank #E - #V + #components and all invariant factors are units).
bool spans_cycle_lattice(const Graph& g, const std::vector<ChainVector>& chains);

int h1_rank(const Graph& g);
int cycle_space_rank_F2(const Graph& g);

/// One fundamental cycle per chord of a breadth-first spanning forest;
/// together they span the cycle lattice.
std::vector<ClosedWalk> fundamental_cycles(const Graph& g);

}  // namespace pw
