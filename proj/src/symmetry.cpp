#include "artal/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace artal {

int AffineSymmetry::det_mod3() const {
    int d = linear[0][0] * linear[1][1] - linear[0][1] * linear[1][0];
    return ((d % 3) + 3) % 3;
}

bool AffineSymmetry::is_identity() const {
    return linear[0][0] == 1 && linear[0][1] == 0 && linear[1][0] == 0 && linear[1][1] == 1 &&
           translation == TorsionPoint::origin();
}

TorsionPoint AffineSymmetry::apply(TorsionPoint p) const {
    int a = (linear[0][0] * p.a + linear[0][1] * p.b + translation.a) % 3;
    int b = (linear[1][0] * p.a + linear[1][1] * p.b + translation.b) % 3;
    return {a, b};
}

PointSubset AffineSymmetry::apply(PointSubset s) const {
    std::uint16_t out = 0;
    for (int i = 0; i < 9; ++i)
        if ((s.mask() >> i) & 1u)
            out |= static_cast<std::uint16_t>(1u << apply(TorsionPoint::from_index(i)).index());
    return PointSubset{out};
}

std::array<int, 9> AffineSymmetry::point_permutation() const {
    std::array<int, 9> perm{};
    for (int i = 0; i < 9; ++i) perm[i] = apply(TorsionPoint::from_index(i)).index();
    return perm;
}

AffineSymmetry AffineSymmetry::after(const AffineSymmetry& g) const {
    // (A,t) after (B,u): p -> A(Bp + u) + t = (AB)p + (Au + t)
    AffineSymmetry out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.linear[i][j] =
                (linear[i][0] * g.linear[0][j] + linear[i][1] * g.linear[1][j]) % 3;
    out.translation = apply(g.translation);
    return out;
}

const std::vector<AffineSymmetry>& symmetry_group() {
    static const std::vector<AffineSymmetry> group = [] {
        std::vector<AffineSymmetry> out;
        out.reserve(432);
        for (int m00 = 0; m00 < 3; ++m00)
            for (int m01 = 0; m01 < 3; ++m01)
                for (int m10 = 0; m10 < 3; ++m10)
                    for (int m11 = 0; m11 < 3; ++m11) {
                        AffineSymmetry g;
                        g.linear = {{{m00, m01}, {m10, m11}}};
                        if (g.det_mod3() == 0) continue;
                        for (int t = 0; t < 9; ++t) {
                            g.translation = TorsionPoint::from_index(t);
                            out.push_back(g);
                        }
                    }
        return out;
    }();
    return group;
}

namespace {

const std::vector<std::array<int, 9>>& group_permutations() {
    static const std::vector<std::array<int, 9>> perms = [] {
        std::vector<std::array<int, 9>> out;
        out.reserve(symmetry_group().size());
        for (const auto& g : symmetry_group()) out.push_back(g.point_permutation());
        return out;
    }();
    return perms;
}

std::uint16_t permute_mask(const std::array<int, 9>& perm, std::uint16_t mask) {
    std::uint16_t out = 0;
    for (int i = 0; i < 9; ++i)
        if ((mask >> i) & 1u) out |= static_cast<std::uint16_t>(1u << perm[i]);
    return out;
}

// For equal-size subsets, lexicographic order on the sorted member sequences
// is decided by the lowest index where membership differs.
bool mask_lex_less_same_size(std::uint16_t a, std::uint16_t b) {
    std::uint16_t d = a ^ b;
    if (d == 0) return false;
    std::uint16_t low = d & static_cast<std::uint16_t>(-d);
    return (a & low) != 0;
}

}  // namespace

PointSubset canonical_form(PointSubset s) {
    std::uint16_t best = s.mask();
    for (const auto& perm : group_permutations()) {
        std::uint16_t image = permute_mask(perm, s.mask());
        if (mask_lex_less_same_size(image, best)) best = image;
    }
    return PointSubset{best};
}

std::vector<PointSubset> orbit_of(PointSubset s) {
    std::set<std::uint16_t> seen;
    for (const auto& perm : group_permutations()) seen.insert(permute_mask(perm, s.mask()));
    std::vector<PointSubset> out;
    out.reserve(seen.size());
    for (auto m : seen) out.push_back(PointSubset{m});
    std::sort(out.begin(), out.end(), subset_lex_less);
    return out;
}

long orbit_size(PointSubset s) {
    std::set<std::uint16_t> seen;
    for (const auto& perm : group_permutations()) seen.insert(permute_mask(perm, s.mask()));
    return static_cast<long>(seen.size());
}

std::vector<PointSubset> orbit_representatives(int k) {
    if (k < 0 || k > 9) throw std::out_of_range("subset size must be in 0..9");
    std::set<std::uint16_t> reps;
    for (std::uint16_t m = 0; m < (1u << 9); ++m) {
        if (std::popcount(m) != k) continue;
        reps.insert(canonical_form(PointSubset{m}).mask());
    }
    std::vector<PointSubset> out;
    out.reserve(reps.size());
    for (auto m : reps) out.push_back(PointSubset{m});
    std::sort(out.begin(), out.end(), subset_lex_less);
    return out;
}

}  // namespace artal
