#include "artal/invariants.hpp"

#include <stdexcept>

namespace artal {

TripleInvariantValues triple_invariants(PointSubset triple) {
    if (triple.size() != 3)
        throw std::invalid_argument("triple_invariants: subset must have exactly 3 points");
    auto pts = triple.points();
    if (is_collinear_triple(pts[0], pts[1], pts[2])) return {1, 1, 3, 1};
    return {0, 0, 1, 3};
}

FiberCounts InvariantProfile::fiber_counts() const {
    FiberCounts counts;
    for (const auto& [triple, values] : triple_values) {
        if (values.d6 == 1) ++counts.d6_one;
        if (values.alex == 1) ++counts.alex_one;
        if (values.split == 3) ++counts.split_three;
        if (values.lks == 1) ++counts.lks_one;
    }
    return counts;
}

InvariantProfile profile(PointSubset s) {
    if (s.size() < 3) throw std::invalid_argument("profile: subset must have at least 3 points");
    InvariantProfile out;
    out.k = s.size();
    auto pts = s.points();
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            for (size_t l = j + 1; l < pts.size(); ++l) {
                PointSubset triple = PointSubset{}.with(pts[i]).with(pts[j]).with(pts[l]);
                TripleInvariantValues values = triple_invariants(triple);
                if (values.d6 == 1) ++out.n_collinear;
                out.triple_values.emplace_back(triple, values);
            }
    return out;
}

}  // namespace artal
