#pragma once

#include <optional>
#include <vector>

namespace pw {

/// A word over generators 1..ngens: letter +g means generator g, -g its
/// inverse.
using GroupWord = std::vector<int>;

GroupWord free_reduce(const GroupWord& w);
GroupWord invert_word(const GroupWord& w);

/// A closed coset table for <gens | relators> over the trivial subgroup:
/// row c, column 2*(g-1) holds c.g, column 2*(g-1)+1 holds c.g^-1.
struct CosetTable {
    int ngens = 0;
    std::vector<std::vector<int>> table;
    int size() const { return static_cast<int>(table.size()); }
    int act(int coset, int letter) const;
    int trace(const GroupWord& w, int from = 0) const;
};

/// HLT-style coset enumeration with coincidence handling. Returns the closed
/// table (the finite quotient's regular representation) or nullopt if the
/// coset cap was exceeded.
std::optional<CosetTable> todd_coxeter(int ngens, const std::vector<GroupWord>& relators,
                                       int max_cosets);

}  // namespace pw
