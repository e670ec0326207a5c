#pragma once

#include <string>
#include <vector>

#include "pw/chords.hpp"
#include "pw/coset_enum.hpp"
#include "pw/graph.hpp"
#include "pw/walk.hpp"

namespace pw {

struct AutomorphismGroup {
    std::vector<std::vector<Vertex>> generators;  // greedily reduced
    std::vector<std::vector<Vertex>> orbits;      // sorted vertex lists
    unsigned long long order = 1;
};

/// Full automorphism group by color-refinement-guided backtracking; the
/// order comes from exhaustive enumeration.
AutomorphismGroup automorphisms(const Graph& g);

/// <gens | relators>, parsed from "gens: a b" / "rels: abAB ..." lines
/// (uppercase letter = inverse). Relators are freely reduced and nonempty.
struct Presentation {
    std::vector<char> gens;
    std::vector<GroupWord> relators;
};

Presentation parse_presentation(const std::string& text);

/// Ball of the Cayley graph: vertices are group elements of length <= radius,
/// edges labeled by generators. Built by free exploration to radius + margin
/// followed by relator-trace folding; exact for the presentations exercised
/// here, guarded by frozen counts in the tests.
struct CayleyBall {
    Graph graph;
    Vertex base = 0;
    int radius = 0;
    int ngens = 0;
    std::vector<char> gen_names;
    // per vertex: 2*ngens entries, letter +g at 2(g-1), -g at 2(g-1)+1;
    // -1 where the neighbor lies outside the ball
    std::vector<std::vector<Vertex>> slots;
    std::vector<int> distance;
    std::vector<char> interior;  // every Cayley neighbor present in the ball

    Vertex step(Vertex v, int letter) const;  // -1 when absent
    /// Endpoint of the word traced from `from`; throws at the boundary.
    Vertex trace_word(Vertex from, const GroupWord& w) const;
    /// Smallest letter carrying a to b; throws if none does.
    int dart_letter(Vertex a, Vertex b) const;
};

CayleyBall cayley_ball(const Presentation& p, int radius, int vertex_cap = 200000);

/// Image of the based closed walk under the free-group element w: the
/// conjugate P_w W_w P_w^-1, where P_w traces w from the base and W_w is
/// the left translate. Throws loudly when anything leaves the ball.
ClosedWalk fs_act(const CayleyBall& ball, const GroupWord& w, const ClosedWalk& walk);

/// Reduced word over the chord alphabet of the breadth-first spanning tree
/// at the base vertex.
using Pi1Element = GroupWord;

struct Pi1Set {
    Vertex base = 0;
    std::vector<Pi1Element> elements;  // freely reduced, deduplicated
};

/// One element [P_W W P_W^-1] per (walk, attachment vertex), with P_W the
/// tree path; V must be closed under inverses. all_attachments = false keeps
/// only the attachment at the smallest vertex of each walk.
Pi1Set genpi(const Graph& g, const std::vector<ClosedWalk>& V, Vertex base,
             bool all_attachments = true);

/// Cyclically reduced closed walk of the element's realization.
WalkClass cyclic_reduce_pi(const Graph& g, Vertex base, const Pi1Element& e);

/// Rank of the exponent-sum lattice of the words.
int abelianization_rank(const std::vector<Pi1Element>& elements, int num_chords);

struct PiOrbits {
    int orbit_count = 0;
    std::vector<int> labels;  // per input element
    bool budget_hit = false;
};

/// Partition of the elements under fs_act by single generators, restricted
/// to moves that stay inside the ball. Boundary effects can split orbits
/// but never merge distinct ones.
PiOrbits orbit_partition_pi(const CayleyBall& ball, const std::vector<Pi1Element>& elements,
                            long budget = 100000);

}  // namespace pw
