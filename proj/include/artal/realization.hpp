#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artal/projective.hpp"
#include "artal/torsion.hpp"

namespace artal {

/// The Hesse-pencil member x^3 + y^3 + z^3 - 3*mu*x*y*z with rational mu.
/// Construction enforces smoothness (mu^3 != 1), so every instance is a
/// smooth cubic; an exact gradient check guards the parameter criterion.
class CubicCurve {
public:
    explicit CubicCurve(Rational mu);  // throws std::domain_error when singular

    static bool is_smooth_parameter(const Rational& mu);

    /// Projective zeros of the gradient system, nonempty exactly for the
    /// singular members.  Exposed so the smoothness criterion is checkable
    /// independently of the mu^3 != 1 shortcut.
    static std::vector<ProjectivePoint> gradient_singularities(const Rational& mu);

    const Rational& mu() const { return mu_; }

    Cyclotomic evaluate(const ProjectivePoint& p) const;
    Triple gradient(const ProjectivePoint& p) const;

    /// Determinant of the matrix of second partials, evaluated exactly.
    Cyclotomic hessian_det(const ProjectivePoint& p) const;

private:
    Rational mu_;
};

/// The nine common zeros of the cubic and its Hessian determinant,
/// deduplicated up to scale and sorted deterministically.
std::vector<ProjectivePoint> inflection_points(const CubicCurve& cubic);

/// Bijection from torsion labels to realized inflection points.
struct Labeling {
    std::array<ProjectivePoint, 9> points;  // indexed by TorsionPoint::index()

    const ProjectivePoint& at(TorsionPoint p) const { return points[p.index()]; }
};

/// Chooses a base point for O and a non-collinear frame, extends through the
/// line structure (the third point on the line through u and v is labeled
/// -u-v), and validates all 84 triples.  Deterministic; backtracks over frame
/// choices, and throws std::logic_error if no consistent labeling exists.
Labeling assign_labels(const CubicCurve& cubic);

/// Line with coefficients grad F at p.  Throws std::invalid_argument when p
/// is not on the cubic.
ProjectiveLine tangent_line(const CubicCurve& cubic, const ProjectivePoint& p);

/// Coefficients (c3, c2, c1, c0) of F(s*a + t*b) as a binary cubic in (s, t).
std::array<Cyclotomic, 4> restrict_to_line(const CubicCurve& cubic, const ProjectivePoint& a,
                                           const ProjectivePoint& b);

/// True iff the restriction of the cubic to l is a nonzero scalar times the
/// cube of the linear form vanishing at p, i.e. l meets the cubic only at p
/// and with multiplicity three.  Requires p incident to l.
bool restriction_is_cube_at(const CubicCurve& cubic, const ProjectivePoint& p,
                            const ProjectiveLine& l);

/// A cubic with its labeled inflection points; reusable across subsets.
struct CurveRealization {
    CubicCurve cubic;
    std::vector<ProjectivePoint> inflections;  // sorted as returned by inflection_points
    Labeling labeling;
};

CurveRealization realize_curve(const CubicCurve& cubic);

/// A k-Artal arrangement realized exactly: the cubic plus the inflectional
/// tangents at the labeled points of `subset`.  Line i is tangent at
/// members[i]; members are sorted.
struct RealizedArrangement {
    CubicCurve cubic;
    Labeling labeling;
    PointSubset subset;
    std::vector<TorsionPoint> members;
    std::vector<ProjectivePoint> tangency_points;
    std::vector<ProjectiveLine> tangents;
};

RealizedArrangement realize_arrangement(const CurveRealization& curve, PointSubset subset);

enum class SingularKind { Tangency, Node, Concurrency };

const char* to_string(SingularKind kind);

/// One singular point of the arrangement: its kind and the (sorted) positions
/// of the arrangement lines through it.
struct SingularRecord {
    SingularKind kind = SingularKind::Tangency;
    std::vector<int> lines;
    ProjectivePoint location;
};

/// Canonical incidence encoding: (kind code, line set) pairs, sorted.
using CanonicalEncoding = std::vector<std::pair<int, std::vector<int>>>;

std::string canonical_encoding_string(const CanonicalEncoding& enc);

struct CombinatorialType {
    int k = 0;
    std::vector<SingularRecord> records;    // with the input line labeling
    CanonicalEncoding canonical;            // minimal encoding over all relabelings
    std::vector<int> canonical_relabeling;  // input line position -> canonical position

    std::string canonical_string() const { return canonical_encoding_string(canonical); }
};

/// Computes all pairwise line intersections exactly, merges coincident
/// points, records tangencies, and canonicalizes over line relabelings.
CombinatorialType combinatorial_type(const RealizedArrangement& arr);

bool types_equal(const CombinatorialType& t1, const CombinatorialType& t2);

/// A permutation rho of line positions with rho(records of t1) = records of
/// t2, when the types are equal; nullopt otherwise.
std::optional<std::vector<int>> matching_relabeling(const CombinatorialType& t1,
                                                    const CombinatorialType& t2);

/// Concurrency behavior of the full set of nine inflectional tangents.
struct ConcurrencySummary {
    int concurrency_points = 0;            // intersection points on 3+ tangents
    int concurrent_collinear_triples = 0;  // of the 12 collinear label-triples
};

ConcurrencySummary tangent_concurrency_summary(const CurveRealization& curve);

}  // namespace artal
