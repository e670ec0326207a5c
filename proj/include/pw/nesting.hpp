#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pw/planar_map.hpp"
#include "pw/walk.hpp"

namespace pw {

/// Witness that some concatenation power of R contains a crossing of a
/// subwalk of a power of W: the shared subwalk x1..x_{l-1} and the four
/// attachment darts, with the spin case that fired.
struct CrossingWitness {
    std::vector<Vertex> shared;  // x1 ... x_{l-1} (single vertex allowed)
    bool case_i = true;          // true: case (i); false: case (ii)
    Dart r_in, r_out;            // x0->x1 and x_{l-1}->x_l on R
    Dart w_in, w_out;            // y0->x1 and x_{l-1}->y_l on W
    bool w_reversed = false;     // witness found against W^-1
};

/// Spin-based crossing predicate. Searches shared subwalks of both
/// orientations of W against R with cyclic wrap (covering concatenation
/// powers <= 2, which suffice for cycles).
std::optional<CrossingWitness> crossing(const PlanarMap& m, const ClosedWalk& r,
                                        const ClosedWalk& w);

/// A maximal nontrivial subwalk of C meeting D exactly in its end vertices.
struct DPath {
    std::vector<Vertex> path;  // inclusive endpoints
    int start_pos = 0;         // positions along C; end_pos wraps past |C|
    int end_pos = 0;
    int length() const { return static_cast<int>(path.size()) - 1; }
};

/// All D-paths of C in cyclic order along C. Disjoint walks give the empty
/// list; single shared edges of C and D are not D-paths.
std::vector<DPath> d_paths(const ClosedWalk& c, const ClosedWalk& d);

/// n(C,D): the number of D-paths in C.
int n_paths(const ClosedWalk& c, const ClosedWalk& d);

/// Region-based nestedness for cycles: true iff neither cycle has vertices
/// or edges in both sides of the other's region partition.
bool nested_cycles(const PlanarMap& m, const ClosedWalk& c, const ClosedWalk& d);

/// mu_E(C): the number of elements of E not nested with C (region-based).
long mu(const PlanarMap& m, const std::vector<WalkClass>& e, const ClosedWalk& c);
long mu_serial(const PlanarMap& m, const std::vector<WalkClass>& e, const ClosedWalk& c);

/// min over C in F of mu_E(C).
long mu_set(const PlanarMap& m, const std::vector<WalkClass>& e,
            const std::vector<WalkClass>& f);

/// Nestedness oracle with a region-partition cache keyed by rotation class.
class NestedOracle {
public:
    explicit NestedOracle(const PlanarMap& m) : m_(&m) {}

    const RegionPartition& regions(const WalkClass& c);
    bool nested(const WalkClass& c, const WalkClass& d);
    long mu(const std::vector<WalkClass>& e, const WalkClass& c);

private:
    const PlanarMap* m_;
    std::map<std::vector<Vertex>, RegionPartition> cache_;
};

}  // namespace pw
