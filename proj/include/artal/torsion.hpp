#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace artal {

/// A 3-torsion label: an element of (Z/3Z)^2.  The nine labels index the
/// inflection points of a smooth cubic; (0,0) is the group origin O.
struct TorsionPoint {
    int a = 0;  // residue mod 3
    int b = 0;  // residue mod 3

    static constexpr TorsionPoint origin() { return {0, 0}; }

    /// Inverse of index(): 0..8 in lexicographic (a, b) order.
    static TorsionPoint from_index(int i);
    int index() const { return 3 * a + b; }

    friend auto operator<=>(const TorsionPoint&, const TorsionPoint&) = default;
};

TorsionPoint add(TorsionPoint p, TorsionPoint q);
TorsionPoint negate(TorsionPoint p);

/// True iff p, q, r are pairwise distinct and p + q + r = O.
bool is_collinear_triple(TorsionPoint p, TorsionPoint q, TorsionPoint r);

/// A line of the Hesse configuration: three distinct labels summing to O.
struct TorsionLine {
    std::array<TorsionPoint, 3> points;  // sorted ascending

    std::uint16_t mask() const;
    bool contains(TorsionPoint p) const;
};

/// The 12 collinear triples, ordered by their sorted index triples.
const std::vector<TorsionLine>& all_lines();

/// A set of torsion labels, stored as a 9-bit mask (bit i = from_index(i)).
class PointSubset {
public:
    PointSubset() = default;
    explicit PointSubset(std::uint16_t mask);

    static PointSubset full();

    std::uint16_t mask() const { return mask_; }
    int size() const;
    bool empty() const { return mask_ == 0; }
    bool contains(TorsionPoint p) const;
    PointSubset with(TorsionPoint p) const;
    PointSubset without(TorsionPoint p) const;

    /// Members in ascending label order.
    std::vector<TorsionPoint> points() const;

    /// Serialized as "[a,b a,b ...]" with members sorted, e.g. "[0,0 1,0 2,0]".
    std::string to_string() const;
    static PointSubset parse(std::string_view text);  // throws std::invalid_argument

    friend bool operator==(PointSubset, PointSubset) = default;

private:
    std::uint16_t mask_ = 0;
};

/// Lexicographic order on the sorted member sequences; total and deterministic.
bool subset_lex_less(PointSubset x, PointSubset y);

/// Number of collinear 3-element subsets of S.
int collinear_triple_count(PointSubset s);

std::string to_string(TorsionPoint p);                 // "a,b"
TorsionPoint parse_torsion_point(std::string_view s);  // throws std::invalid_argument

}  // namespace artal
