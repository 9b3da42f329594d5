#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "artal/torsion.hpp"

namespace artal {

/// Values of the four subarrangement invariants on a 3-subarrangement
/// (cubic + three inflectional tangents).  All four reduce to the
/// collinearity of the three tangency points: (1, 1, 3, 1) when collinear
/// and (0, 0, 1, 3) otherwise.
struct TripleInvariantValues {
    int d6 = 0;     // dihedral-cover existence indicator
    int alex = 0;   // nontrivial-Alexander-polynomial indicator
    int split = 1;  // splitting number of the cubic in the triple cyclic cover
    int lks = 3;    // size of the linking set of the cubic

    friend auto operator<=>(const TripleInvariantValues&, const TripleInvariantValues&) = default;
};

/// Throws std::invalid_argument unless |triple| = 3.
TripleInvariantValues triple_invariants(PointSubset triple);

/// Fiber sizes of the four maps over their distinguishing values; all equal
/// the collinear-triple count n.
struct FiberCounts {
    int d6_one = 0;
    int alex_one = 0;
    int split_three = 0;
    int lks_one = 0;
};

/// Invariant values over every 3-subset of a k-subset.
struct InvariantProfile {
    int k = 0;
    std::vector<std::pair<PointSubset, TripleInvariantValues>> triple_values;  // sorted
    int n_collinear = 0;

    FiberCounts fiber_counts() const;
};

/// Throws std::invalid_argument unless |s| >= 3.
InvariantProfile profile(PointSubset s);

}  // namespace artal
