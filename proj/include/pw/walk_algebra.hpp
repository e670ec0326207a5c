#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "pw/derivation.hpp"
#include "pw/graph.hpp"
#include "pw/homology.hpp"
#include "pw/planar_map.hpp"
#include "pw/walk.hpp"

namespace pw {

/// A path strictly shorter than every subwalk of every rotation of the walk
/// between its endpoints. Trivial shortcuts (repeated vertex, empty path)
/// witness that the walk is not a cycle.
struct Shortcut {
    std::vector<Vertex> path;  // inclusive endpoints; single element = trivial
    int walk_pos_a = 0;        // positions on the walk realizing the endpoints
    int walk_pos_b = 0;
    int path_length() const { return static_cast<int>(path.size()) - 1; }
};

/// Shortest shortcut of a spike-free closed walk, or nullopt if none exists
/// (ties broken by walk positions, then by the lexicographic path).
std::optional<Shortcut> find_shortcut(const Graph& g, const ClosedWalk& w);

/// All shortcut-free (isometric) cycles of length `len`, both orientations,
/// as rotation classes.
std::vector<WalkClass> candidate_indecomposables(const Graph& g, int len);

/// Unoriented variant: one representative per {C, C^-1} pair.
std::vector<WalkClass> candidate_indecomposables_unoriented(const Graph& g, int len);

enum class Mode { HomologyZ, CycleSpaceF2, Walk };

std::string to_string(Mode m);
Mode mode_from_string(const std::string& s);

struct Budgets {
    long node_budget = 1'000'000;  // walk-mode search states
    int coset_cap = 100'000;       // coset enumeration rows
    int connector_cap = 2;         // max connector path length in sum moves
    int length_cap_factor = 3;     // search walks up to factor * max(|w|, |V|)
};

struct MembershipVerdict {
    enum class Answer { Yes, No, Unknown };
    Answer answer = Answer::Unknown;
    Mode mode = Mode::HomologyZ;

    // yes certificates
    std::vector<mpz_class> coefficients;          // homology-Z combination
    std::vector<unsigned char> coefficients_f2;   // F2 combination
    std::optional<Derivation> derivation;         // walk mode

    // no certificates
    std::vector<mpz_class> obstruction;           // functional on chains
    mpz_class obstruction_modulus{0};
    std::vector<unsigned char> obstruction_f2;
    // walk mode may also refute through a finite quotient
    bool quotient_refutation = false;
    int quotient_order = 0;
    int quotient_image = 0;  // nonzero coset index of the traced word

    std::string budget_report;  // unknown

    bool yes() const { return answer == Answer::Yes; }
    bool no() const { return answer == Answer::No; }
};

/// Membership oracle "is w generated by V" in the chosen mode. homology-Z
/// and cyclespace-F2 are exact; walk mode is three-valued with replayable
/// certificates.
MembershipVerdict generated_by(const Graph& g, const ClosedWalk& w,
                               const std::vector<ClosedWalk>& V, Mode mode,
                               const Budgets& budgets = {});

/// Check a no-certificate independently of the oracle.
bool validate_obstruction(const Graph& g, const ClosedWalk& w,
                          const std::vector<ClosedWalk>& V, const MembershipVerdict& verdict);

}  // namespace pw
