#pragma once

#include <string>
#include <vector>

#include "pw/walk.hpp"

namespace pw {

/// One rewrite step of a derivation. Steps act on a running state walk.
struct DerivationStep {
    enum class Kind { Rotate, SumWith, AddSpike, RemoveSpike };
    Kind kind = Kind::Rotate;

    int amount = 0;     // Rotate: rotation offset
    int source = -1;    // SumWith: index into sources
    int rotation = 0;   // SumWith: rotation applied to the source first
    bool prepend = false;  // SumWith: state := source + state
    int position = 0;   // AddSpike / RemoveSpike: index into the closed sequence
    std::vector<Vertex> path;  // AddSpike: spike path (out-and-back)

    static DerivationStep rotate(int k);
    static DerivationStep sum_with(int source, int rotation, bool prepend = false);
    static DerivationStep add_spike(int position, std::vector<Vertex> path);
    static DerivationStep remove_spike(int position);
};

/// A replayable certificate: starting from the trivial walk, the steps build
/// the target exactly, using only rotations, spike edits, and sums with the
/// listed source walks.
struct Derivation {
    std::vector<ClosedWalk> sources;
    ClosedWalk target;
    std::vector<DerivationStep> steps;
};

struct ReplayResult {
    bool ok = false;
    int failed_step = -1;  // -1: structural failure or final mismatch
    std::string reason;
    ClosedWalk final_state;
};

/// Apply one step to a state walk; throws Error on a malformed step.
ClosedWalk apply_step(const ClosedWalk& state, const DerivationStep& step,
                      const std::vector<ClosedWalk>& sources);

/// Replay all steps from the trivial walk and compare with the target.
ReplayResult replay(const Derivation& d);

/// Reduction recorder: appends Rotate/RemoveSpike steps that transform w
/// into the returned walk (spike-free linearly).
ClosedWalk reduce_recording(const ClosedWalk& w, std::vector<DerivationStep>& steps);

/// Same, reducing across the rotation point too (cyclically spike-free).
ClosedWalk cyclic_reduce_recording(const ClosedWalk& w, std::vector<DerivationStep>& steps);

/// Steps that rebuild `w` from the walk produced by cyclic_reduce_recording:
/// the inverse recording (AddSpike / Rotate).
std::vector<DerivationStep> unreduce_steps(const ClosedWalk& w);

/// Line-oriented replay format.
std::string serialize(const Derivation& d);
Derivation parse_derivation(const std::string& text);

}  // namespace pw
