#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pw/graph.hpp"
#include "pw/walk.hpp"

namespace pw {

/// Maximal 2-connected subgraphs with cutvertices; bridges give K2 blocks.
struct BlockTree {
    std::vector<std::vector<Vertex>> blocks;  // sorted vertex sets
    std::vector<Vertex> cutvertices;          // sorted
    // (block index, cutvertex index) pairs: the bipartite incidence tree
    std::vector<std::pair<int, int>> incidence;

    bool is_cutvertex(Vertex v) const;
};

BlockTree blocks(const Graph& g);

bool is_two_connected(const Graph& g);

enum class TorsoKind { ThreeConnected, Cycle, K2 };

std::string to_string(TorsoKind k);

struct TuttePart {
    std::vector<Vertex> vertices;  // sorted, ids of the host graph
    // adhesion pairs of this part that are not edges of the host graph
    std::vector<std::pair<Vertex, Vertex>> virtual_edges;
    TorsoKind kind = TorsoKind::K2;
};

struct TutteLink {
    int a = -1, b = -1;                    // part indices
    std::pair<Vertex, Vertex> adhesion{};  // = V_a intersect V_b
};

/// Tree-decomposition of adhesion <= 2 whose torsos are 3-connected graphs,
/// cycles, or K2 hubs, normalized so that no degree-2 tree vertex carries a
/// K2 torso and no two adjacent cycle torsos share a non-edge adhesion pair.
struct TutteTree {
    std::vector<TuttePart> parts;
    std::vector<TutteLink> links;

    std::vector<int> links_at(int t) const;
    std::vector<std::pair<Vertex, Vertex>> adhesion_pairs(int t) const;
};

/// Deterministic for a fixed vertex ordering: always splits along the
/// lexicographically smallest separation pair. Throws unless g is
/// 2-connected with at least 3 vertices.
TutteTree tutte_decompose(const Graph& g);

/// Torso of part t (induced edges plus adhesion pairs), relabeled; the
/// second component maps new ids back to g (new id i <-> map[i]).
std::pair<Graph, std::vector<Vertex>> torso(const Graph& g, const TutteTree& tt, int t);

struct TutteCheck {
    bool cover_ok = false;      // (T1) parts cover V
    bool edges_ok = false;      // (T2) both ends of each edge in some part
    bool tree_ok = false;       // links form a tree
    bool coherence_ok = false;  // (T3) parts containing a vertex form a subtree
    bool adhesion_ok = false;   // adhesion = intersection, size <= 2
    bool torso_ok = false;      // recomputed torso kinds match the trichotomy
    bool normalized = false;
    int max_adhesions_per_vertex = 0;  // finite-sharing assertion
    std::string detail;
    bool ok() const {
        return cover_ok && edges_ok && tree_ok && coherence_ok && adhesion_ok && torso_ok &&
               normalized;
    }
};

TutteCheck check_tutte(const Graph& g, const TutteTree& tt);

/// Chosen x-y path per ordered adhesion pair, endpoints inclusive.
using PathChoice = std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>>;

/// The edge itself for real adhesion pairs, otherwise the shortest x-y path
/// in g (ties by smallest predecessor), used in both orientations.
PathChoice default_adhesion_paths(const Graph& g, const TutteTree& tt);

/// Substitute every virtual dart of every per-torso walk by its chosen path.
/// Walks use host-graph vertex ids; per_part is indexed like tt.parts.
std::vector<ClosedWalk> lift_generators(const Graph& g, const TutteTree& tt,
                                        const std::vector<std::vector<ClosedWalk>>& per_part,
                                        const PathChoice& paths);
std::vector<ClosedWalk> lift_generators(const Graph& g, const TutteTree& tt,
                                        const std::vector<std::vector<ClosedWalk>>& per_part);

/// Restrict each walk to every part, collapsing excursions into other
/// branches through their adhesion pairs; trivial restrictions are dropped.
std::vector<std::vector<ClosedWalk>> project_generators(const Graph& g, const TutteTree& tt,
                                                        const std::vector<ClosedWalk>& global_set);

/// Nonincreasing degrees of orbit representatives under the given vertex
/// permutations (the trivial group for an empty list).
using DegreeSequence = std::vector<int>;

DegreeSequence degree_sequence(const Graph& g, const std::vector<std::vector<Vertex>>& group);

enum class Ordering { Less, Equal, Greater };

/// (d_1..d_m) < (c_1..c_n) iff m <= n and d_i = c_i for all i <= m, or
/// d_i < c_i at the smallest differing index. A proper prefix is smaller.
Ordering compare(const DegreeSequence& a, const DegreeSequence& b);

struct SplitPiece {
    std::vector<Vertex> vertices;  // ids of the host graph, sorted
    Graph graph;                   // induced subgraph, relabeled along `vertices`
    // setwise stabilizer of the piece, restricted and relabeled
    std::vector<std::vector<Vertex>> stabilizer;
    DegreeSequence sequence;
};

/// Maximal connected induced subgraphs that no image of S under the group
/// disconnects. Validates the split conditions: (i) G - S disconnected,
/// (ii) every image of S meets at most one component of G - S, (iii) no
/// vertex of S has all its neighbours in S; asserts every piece has a
/// strictly smaller degree sequence.
std::vector<SplitPiece> split_along(const Graph& g, const std::vector<std::vector<Vertex>>& group,
                                    const std::vector<Vertex>& s);

std::string serialize_tutte(const Graph& g, const TutteTree& tt);

}  // namespace pw
