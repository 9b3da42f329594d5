#pragma once

#include <array>
#include <vector>

#include "artal/torsion.hpp"

namespace artal {

/// An invertible affine map p -> linear*p + translation over the field with
/// three elements.  These are exactly the bijections of the nine labels that
/// map collinear triples to collinear triples.
struct AffineSymmetry {
    std::array<std::array<int, 2>, 2> linear{{{1, 0}, {0, 1}}};  // entries mod 3
    TorsionPoint translation{0, 0};

    int det_mod3() const;
    bool is_identity() const;

    TorsionPoint apply(TorsionPoint p) const;
    PointSubset apply(PointSubset s) const;

    /// Image of each label index under the map.
    std::array<int, 9> point_permutation() const;

    /// Composition (*this) after g: p -> (*this)(g(p)).
    AffineSymmetry after(const AffineSymmetry& g) const;

    friend bool operator==(const AffineSymmetry&, const AffineSymmetry&) = default;
};

/// All 432 affine symmetries, in a fixed deterministic order.
const std::vector<AffineSymmetry>& symmetry_group();

/// Lexicographically minimal image of S over the full symmetry group.
PointSubset canonical_form(PointSubset s);

/// Distinct images of S, sorted.
std::vector<PointSubset> orbit_of(PointSubset s);
long orbit_size(PointSubset s);

/// One canonical representative per orbit of k-subsets, sorted.
/// Throws std::out_of_range unless 0 <= k <= 9.
std::vector<PointSubset> orbit_representatives(int k);

}  // namespace artal
