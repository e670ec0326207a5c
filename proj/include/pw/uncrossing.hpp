#pragma once

#include <vector>

#include "pw/derivation.hpp"
#include "pw/nesting.hpp"
#include "pw/planar_map.hpp"

namespace pw {

/// Bridge trichotomy for two shortcut-free cycles: P1 is the shortest
/// nontrivial subwalk of W1 meeting W2 exactly in its end vertices, P2 the
/// shorter W2-arc between the same end vertices.
struct BridgeAnalysis {
    std::vector<Vertex> p1;
    std::vector<Vertex> p2;
    int outcome = 0;  // 1: |P1|=|P2| and P2 meets W1 only in its ends
                      // 2: P1 P2^-1 is a rotation of W1
                      // 3: (W1 - P1) P2 is a rotation of W2 or W2^-1
};

BridgeAnalysis bridge_analysis(const PlanarMap& m, const ClosedWalk& w1, const ClosedWalk& w2);

/// Result of uncrossing two non-nested shortcut-free cycles: the two
/// region-intersection boundaries with the matched segment pairs.
struct UncrossResult {
    ClosedWalk c_tilde;
    ClosedWalk d_tilde;
    int face_choice = 0;  // 0: sides (0,0)/(1,1); 1: sides (0,1)/(1,0)
    // segment-replacement pairs: first = a D-path of C, second = the C-path
    // of D with the same end vertices that stands in for it on a tilde
    // boundary; distinct pairs only (both tildes may witness the same swap)
    std::vector<std::pair<DPath, DPath>> pairing;
};

/// Boundaries are cycles of the input lengths and nested. They are
/// shortcut-free whenever the inputs are indecomposable; for merely
/// shortcut-free inputs every region pairing can be chorded, and the
/// shortcut-free pairing is then preferred but not required.
UncrossResult uncross(const PlanarMap& m, const ClosedWalk& c, const ClosedWalk& d);

/// Boundary closed walks of the union of the given faces (one walk per
/// boundary component), traced with the region on the face side.
std::vector<ClosedWalk> region_boundaries(const PlanarMap& m, const std::set<int>& faces);

/// Derivation of C (want_c) or D from {C~ or D~} together with the pairing
/// walks P_i Q_i^-1: the generation-transfer certificate of the uncrossing.
Derivation transfer_derivation(const PlanarMap& m, const UncrossResult& r, const ClosedWalk& c,
                               const ClosedWalk& d, bool want_c);

struct MuReport {
    long mu_c = 0, mu_d = 0, mu_c_tilde = 0, mu_d_tilde = 0;
    bool strict_required = false;
    bool holds = false;
    bool strict = false;
};

/// Check mu_E(C)+mu_E(D) >= mu_E(C~)+mu_E(D~), strict when D is in E.
MuReport check_mu_decrease(const PlanarMap& m, const std::vector<WalkClass>& e,
                           const ClosedWalk& c, const ClosedWalk& d, const UncrossResult& r);

}  // namespace pw
