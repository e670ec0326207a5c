#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pw/derivation.hpp"
#include "pw/nesting.hpp"
#include "pw/planar_map.hpp"
#include "pw/walk_algebra.hpp"

namespace pw {

struct GenElement {
    WalkClass walk;
    int stage = 0;              // length at insertion
    int kappa = 0;              // global insertion-step counter
    long mu_at_insertion = 0;   // mu within the candidate pool at insertion
};

/// Staged nested generating set of the closed-walk module.
struct GeneratingSet {
    Mode mode = Mode::HomologyZ;
    std::vector<GenElement> elements;

    std::map<int, std::vector<WalkClass>> stages() const;
    std::vector<WalkClass> classes() const;
    std::vector<ClosedWalk> walks() const;
    bool contains(const WalkClass& c) const;
};

/// The staged fixpoint construction: for each length i, repeatedly insert
/// the batch of optimally nested ungenerated candidates until none remain.
GeneratingSet build_canonical(const PlanarMap& m, Mode mode,
                              std::optional<int> i_max = std::nullopt,
                              const Budgets& budgets = {});

struct CanonicalReport {
    bool stages_ok = false;      // stage lengths and shortcut-freeness
    bool nested_ok = false;      // pairwise nested
    bool invariant_ok = false;   // setwise invariant under every generator
    bool generates_ok = false;   // mode-generation of the full module
    std::string detail;
    bool ok() const { return stages_ok && nested_ok && invariant_ok && generates_ok; }
};

CanonicalReport verify_canonical(const PlanarMap& m, const GeneratingSet& gs,
                                 const std::vector<std::vector<Vertex>>& aut_generators);

/// Derivation of the cycle w from face boundaries by inward peeling. Uses
/// bounded faces when w is oriented with the bounded region matching the
/// face tracing; otherwise peels the complementary side (which includes the
/// outer face boundary as a source).
Derivation face_boundary_reduction(const PlanarMap& m, const ClosedWalk& w);

std::string graph_hash(const Graph& g);

std::string serialize_genset(const GeneratingSet& gs, const Graph& g);
GeneratingSet parse_genset(const std::string& text, const Graph& g);

}  // namespace pw
