#include "artal/realization.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace artal {

CubicCurve::CubicCurve(Rational mu) : mu_(std::move(mu)) {
    if (!is_smooth_parameter(mu_))
        throw std::domain_error("singular pencil member: mu^3 = 1 (mu = " + format_rational(mu_) +
                                ")");
    if (!gradient_singularities(mu_).empty())
        throw std::logic_error("smoothness criteria disagree for mu = " + format_rational(mu_));
}

bool CubicCurve::is_smooth_parameter(const Rational& mu) {
    return mu * mu * mu != 1;
}

std::vector<ProjectivePoint> CubicCurve::gradient_singularities(const Rational& mu) {
    // grad F = 0 reads x^2 = mu*y*z, y^2 = mu*x*z, z^2 = mu*x*y.  A zero
    // coordinate forces the others to vanish (y^2 and z^2 reduce to 0), so any
    // projective solution has xyz != 0; normalizing z = 1 gives y = zeta*x,
    // x = mu*zeta with zeta^3 = 1.  Each closed-form candidate is then checked
    // against the gradient exactly.
    const Cyclotomic w = Cyclotomic::omega();
    const Cyclotomic zetas[3] = {Cyclotomic(1), w, w * w};
    const Cyclotomic m{mu};

    std::vector<ProjectivePoint> out;
    for (const auto& zeta : zetas) {
        ProjectivePoint p{{m * zeta, m * zeta * zeta, Cyclotomic(1)}};
        Cyclotomic gx = 3 * p.coords[0] * p.coords[0] - 3 * m * p.coords[1] * p.coords[2];
        Cyclotomic gy = 3 * p.coords[1] * p.coords[1] - 3 * m * p.coords[0] * p.coords[2];
        Cyclotomic gz = 3 * p.coords[2] * p.coords[2] - 3 * m * p.coords[0] * p.coords[1];
        if (gx.is_zero() && gy.is_zero() && gz.is_zero()) out.push_back(normalized(p));
    }
    return out;
}

Cyclotomic CubicCurve::evaluate(const ProjectivePoint& p) const {
    const Cyclotomic &x = p.coords[0], &y = p.coords[1], &z = p.coords[2];
    return x * x * x + y * y * y + z * z * z - 3 * Cyclotomic(mu_) * x * y * z;
}

Triple CubicCurve::gradient(const ProjectivePoint& p) const {
    const Cyclotomic &x = p.coords[0], &y = p.coords[1], &z = p.coords[2];
    const Cyclotomic m{mu_};
    return {3 * x * x - 3 * m * y * z,
            3 * y * y - 3 * m * x * z,
            3 * z * z - 3 * m * x * y};
}

Cyclotomic CubicCurve::hessian_det(const ProjectivePoint& p) const {
    const Cyclotomic &x = p.coords[0], &y = p.coords[1], &z = p.coords[2];
    const Cyclotomic m{mu_};
    const Cyclotomic h[3][3] = {
        {6 * x, -3 * m * z, -3 * m * y},
        {-3 * m * z, 6 * y, -3 * m * x},
        {-3 * m * y, -3 * m * x, 6 * z},
    };
    return h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) -
           h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
           h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
}

std::vector<ProjectivePoint> inflection_points(const CubicCurve& cubic) {
    // Both F and its Hessian determinant are pencil combinations of
    // S = x^3+y^3+z^3 and T = xyz; for smooth members the combination matrix
    // is invertible, so the common zeros are exactly the base locus S = T = 0.
    // T = 0 puts a coordinate at zero, and the remaining x^3 + y^3 factors as
    // (x + y)(x + w*y)(x + w^2*y) over Q(omega).
    const Rational& mu = cubic.mu();
    Rational transfer_det = 216 * (1 - mu * mu * mu);
    if (transfer_det == 0) throw std::domain_error("non-smooth cubic has no base-locus reduction");

    const Cyclotomic w = Cyclotomic::omega();
    const Cyclotomic roots[3] = {Cyclotomic(-1), -w, -(w * w)};

    std::vector<ProjectivePoint> pts;
    pts.reserve(9);
    for (const auto& r : roots) {
        pts.push_back(normalized(ProjectivePoint{{Cyclotomic(1), r, Cyclotomic(0)}}));  // z = 0
        pts.push_back(normalized(ProjectivePoint{{Cyclotomic(0), Cyclotomic(1), r}}));  // x = 0
        pts.push_back(normalized(ProjectivePoint{{Cyclotomic(1), Cyclotomic(0), r}}));  // y = 0
    }

    for (const auto& p : pts) {
        if (!cubic.evaluate(p).is_zero() || !cubic.hessian_det(p).is_zero())
            throw std::logic_error("inflection candidate fails the exact defining equations");
    }
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (same_point(pts[i], pts[j])) throw std::logic_error("duplicate inflection point");

    std::sort(pts.begin(), pts.end(), point_repr_less);
    return pts;
}

namespace {

/// third[i][j] = index of the unique third inflection point on the projective
/// line through inflections i and j.
std::array<std::array<int, 9>, 9> third_point_table(const std::vector<ProjectivePoint>& pts) {
    std::array<std::array<int, 9>, 9> third{};
    for (auto& row : third) row.fill(-1);
    for (int i = 0; i < 9; ++i) {
        for (int j = i + 1; j < 9; ++j) {
            int found = -1;
            for (int k = 0; k < 9; ++k) {
                if (k == i || k == j) continue;
                if (!collinear(pts[i], pts[j], pts[k])) continue;
                if (found != -1)
                    throw std::logic_error("more than three inflections on a line");
                found = k;
            }
            if (found == -1)
                throw std::logic_error("inflection line with no third inflection point");
            third[i][j] = third[j][i] = found;
        }
    }
    return third;
}

bool extend_labeling(const std::array<std::array<int, 9>, 9>& third, std::array<int, 9>& geo) {
    // Propagate the forced assignments: the line through the images of labels
    // u and v carries the image of -u-v.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0; u < 9; ++u) {
            if (geo[u] == -1) continue;
            for (int v = u + 1; v < 9; ++v) {
                if (geo[v] == -1 || geo[u] == geo[v]) continue;
                TorsionPoint wlab =
                    negate(add(TorsionPoint::from_index(u), TorsionPoint::from_index(v)));
                int expected = third[geo[u]][geo[v]];
                int& slot = geo[wlab.index()];
                if (slot == -1) {
                    slot = expected;
                    changed = true;
                } else if (slot != expected) {
                    return false;
                }
            }
        }
    }
    for (int u = 0; u < 9; ++u)
        if (geo[u] == -1) return false;
    std::array<bool, 9> used{};
    for (int u = 0; u < 9; ++u) {
        if (used[geo[u]]) return false;
        used[geo[u]] = true;
    }
    return true;
}

bool labeling_valid(const std::vector<ProjectivePoint>& pts, const std::array<int, 9>& geo) {
    for (int u = 0; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v)
            for (int t = v + 1; t < 9; ++t) {
                bool torsion = is_collinear_triple(TorsionPoint::from_index(u),
                                                   TorsionPoint::from_index(v),
                                                   TorsionPoint::from_index(t));
                bool geometric = collinear(pts[geo[u]], pts[geo[v]], pts[geo[t]]);
                if (torsion != geometric) return false;
            }
    return true;
}

}  // namespace

Labeling assign_labels(const CubicCurve& cubic) {
    const std::vector<ProjectivePoint> pts = inflection_points(cubic);
    const auto third = third_point_table(pts);

    const int origin = TorsionPoint{0, 0}.index();
    const int e1 = TorsionPoint{1, 0}.index();
    const int e2 = TorsionPoint{0, 1}.index();

    for (int o = 0; o < 9; ++o) {
        for (int p = 0; p < 9; ++p) {
            if (p == o) continue;
            for (int q = 0; q < 9; ++q) {
                if (q == o || q == p || q == third[o][p]) continue;
                std::array<int, 9> geo;
                geo.fill(-1);
                geo[origin] = o;
                geo[e1] = p;
                geo[e2] = q;
                if (!extend_labeling(third, geo)) continue;
                if (!labeling_valid(pts, geo)) continue;
                Labeling out;
                for (int u = 0; u < 9; ++u) out.points[u] = pts[geo[u]];
                return out;
            }
        }
    }
    throw std::logic_error("no consistent labeling of the inflection points exists");
}

ProjectiveLine tangent_line(const CubicCurve& cubic, const ProjectivePoint& p) {
    if (!cubic.evaluate(p).is_zero())
        throw std::invalid_argument("tangent_line: point is not on the cubic");
    Triple grad = cubic.gradient(p);
    if (grad[0].is_zero() && grad[1].is_zero() && grad[2].is_zero())
        throw std::logic_error("vanishing gradient on a smooth cubic");
    return {grad};
}

std::array<Cyclotomic, 4> restrict_to_line(const CubicCurve& cubic, const ProjectivePoint& a,
                                           const ProjectivePoint& b) {
    // F(s*a + t*b) = F(a) s^3 + (grad F(a).b) s^2 t + (grad F(b).a) s t^2 + F(b) t^3
    return {cubic.evaluate(a), dot(cubic.gradient(a), b.coords), dot(cubic.gradient(b), a.coords),
            cubic.evaluate(b)};
}

namespace {

ProjectivePoint second_point_on(const ProjectiveLine& l, const ProjectivePoint& avoid) {
    const Triple& c = l.coeffs;
    const Triple candidates[3] = {
        {-c[1], c[0], Cyclotomic(0)},
        {-c[2], Cyclotomic(0), c[0]},
        {Cyclotomic(0), -c[2], c[1]},
    };
    for (const auto& t : candidates) {
        if (t[0].is_zero() && t[1].is_zero() && t[2].is_zero()) continue;
        ProjectivePoint p{t};
        if (!same_point(p, avoid)) return p;
    }
    throw std::logic_error("no second point on a projective line");
}

}  // namespace

bool restriction_is_cube_at(const CubicCurve& cubic, const ProjectivePoint& p,
                            const ProjectiveLine& l) {
    if (!incident(p, l)) throw std::invalid_argument("restriction_is_cube_at: point not on line");
    ProjectivePoint b = second_point_on(l, p);
    auto c = restrict_to_line(cubic, p, b);
    // A triple zero at p (parameter t = 0 side) with the line not contained in
    // the cubic: all coefficients except the t^3 one vanish.
    return c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && !c[3].is_zero();
}

CurveRealization realize_curve(const CubicCurve& cubic) {
    return {cubic, inflection_points(cubic), assign_labels(cubic)};
}

RealizedArrangement realize_arrangement(const CurveRealization& curve, PointSubset subset) {
    RealizedArrangement arr{curve.cubic, curve.labeling, subset, subset.points(), {}, {}};
    arr.tangency_points.reserve(arr.members.size());
    arr.tangents.reserve(arr.members.size());
    for (auto t : arr.members) {
        const ProjectivePoint& p = curve.labeling.at(t);
        ProjectiveLine l = tangent_line(curve.cubic, p);
        if (!restriction_is_cube_at(curve.cubic, p, l))
            throw std::logic_error("tangent at a labeled inflection is not inflectional");
        arr.tangency_points.push_back(p);
        arr.tangents.push_back(l);
    }
    for (size_t i = 0; i < arr.tangents.size(); ++i)
        for (size_t j = i + 1; j < arr.tangents.size(); ++j)
            if (same_line(arr.tangents[i], arr.tangents[j]))
                throw std::logic_error("coincident tangent lines in an arrangement");
    return arr;
}

const char* to_string(SingularKind kind) {
    switch (kind) {
        case SingularKind::Tangency: return "tangency";
        case SingularKind::Node: return "node";
        case SingularKind::Concurrency: return "concurrency";
    }
    return "unknown";
}

std::string canonical_encoding_string(const CanonicalEncoding& enc) {
    std::string out;
    for (const auto& [kind, lines] : enc) {
        if (!out.empty()) out += ';';
        out += "TNC"[kind];
        out += '(';
        for (size_t i = 0; i < lines.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(lines[i]);
        }
        out += ')';
    }
    return out;
}

namespace {

int kind_code(SingularKind kind) {
    switch (kind) {
        case SingularKind::Tangency: return 0;
        case SingularKind::Node: return 1;
        case SingularKind::Concurrency: return 2;
    }
    return -1;
}

CanonicalEncoding encode_records(const std::vector<SingularRecord>& records,
                                 const std::vector<int>& perm) {
    CanonicalEncoding enc;
    enc.reserve(records.size());
    for (const auto& rec : records) {
        std::vector<int> lines;
        lines.reserve(rec.lines.size());
        for (int l : rec.lines) lines.push_back(perm[l]);
        std::sort(lines.begin(), lines.end());
        enc.emplace_back(kind_code(rec.kind), std::move(lines));
    }
    std::sort(enc.begin(), enc.end());
    return enc;
}

}  // namespace

CombinatorialType combinatorial_type(const RealizedArrangement& arr) {
    const int k = static_cast<int>(arr.tangents.size());
    CombinatorialType type;
    type.k = k;

    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j)
            if (j != i && incident(arr.tangency_points[i], arr.tangents[j]))
                throw std::logic_error("tangency point lies on another arrangement line");
        type.records.push_back({SingularKind::Tangency, {i}, arr.tangency_points[i]});
    }

    // Merge coincident line-line intersections into multi-points.
    std::vector<std::pair<ProjectivePoint, std::vector<int>>> groups;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            ProjectivePoint x = normalized(meet(arr.tangents[i], arr.tangents[j]));
            auto it = std::find_if(groups.begin(), groups.end(),
                                   [&](const auto& g) { return same_point(g.first, x); });
            if (it == groups.end()) {
                groups.push_back({x, {i, j}});
            } else {
                for (int l : {i, j})
                    if (std::find(it->second.begin(), it->second.end(), l) == it->second.end())
                        it->second.push_back(l);
            }
        }
    }
    for (auto& [where, lines] : groups) {
        if (arr.cubic.evaluate(where).is_zero())
            throw std::logic_error("line-line intersection lies on the cubic");
        std::sort(lines.begin(), lines.end());
        SingularKind kind = lines.size() == 2 ? SingularKind::Node : SingularKind::Concurrency;
        type.records.push_back({kind, lines, where});
    }

    std::sort(type.records.begin(), type.records.end(), [](const auto& a, const auto& b) {
        if (a.kind != b.kind) return kind_code(a.kind) < kind_code(b.kind);
        return a.lines < b.lines;
    });

    // Canonicalize over relabelings of the k lines.  Tangency records are
    // singletons {0},...,{k-1} after sorting for every relabeling, so only
    // the intersection records drive the minimum; when every intersection is
    // a plain node even those are relabeling-invariant.
    std::vector<int> identity(k);
    std::iota(identity.begin(), identity.end(), 0);
    bool has_concurrency = std::any_of(type.records.begin(), type.records.end(), [](const auto& r) {
        return r.kind == SingularKind::Concurrency;
    });
    if (!has_concurrency) {
        type.canonical = encode_records(type.records, identity);
        type.canonical_relabeling = identity;
        return type;
    }

    std::vector<SingularRecord> intersections;
    for (const auto& rec : type.records)
        if (rec.kind != SingularKind::Tangency) intersections.push_back(rec);

    std::vector<int> perm = identity;
    CanonicalEncoding best = encode_records(intersections, perm);
    type.canonical_relabeling = perm;
    while (std::next_permutation(perm.begin(), perm.end())) {
        CanonicalEncoding enc = encode_records(intersections, perm);
        if (enc < best) {
            best = std::move(enc);
            type.canonical_relabeling = perm;
        }
    }
    type.canonical = encode_records(type.records, type.canonical_relabeling);
    return type;
}

bool types_equal(const CombinatorialType& t1, const CombinatorialType& t2) {
    return t1.canonical == t2.canonical;
}

std::optional<std::vector<int>> matching_relabeling(const CombinatorialType& t1,
                                                    const CombinatorialType& t2) {
    if (!types_equal(t1, t2)) return std::nullopt;
    const int k = t1.k;
    std::vector<int> inverse2(k);
    for (int i = 0; i < k; ++i) inverse2[t2.canonical_relabeling[i]] = i;
    std::vector<int> rho(k);
    for (int i = 0; i < k; ++i) rho[i] = inverse2[t1.canonical_relabeling[i]];

    std::vector<int> identity(k);
    std::iota(identity.begin(), identity.end(), 0);
    if (encode_records(t1.records, rho) != encode_records(t2.records, identity))
        throw std::logic_error("canonical relabelings fail to compose into a witness");
    return rho;
}

ConcurrencySummary tangent_concurrency_summary(const CurveRealization& curve) {
    std::array<ProjectiveLine, 9> tangents;
    for (int i = 0; i < 9; ++i)
        tangents[i] = tangent_line(curve.cubic, curve.labeling.at(TorsionPoint::from_index(i)));

    ConcurrencySummary summary;

    std::vector<std::pair<ProjectivePoint, std::vector<int>>> groups;
    for (int i = 0; i < 9; ++i) {
        for (int j = i + 1; j < 9; ++j) {
            ProjectivePoint x = normalized(meet(tangents[i], tangents[j]));
            auto it = std::find_if(groups.begin(), groups.end(),
                                   [&](const auto& g) { return same_point(g.first, x); });
            if (it == groups.end()) {
                groups.push_back({x, {i, j}});
            } else {
                for (int l : {i, j})
                    if (std::find(it->second.begin(), it->second.end(), l) == it->second.end())
                        it->second.push_back(l);
            }
        }
    }
    for (const auto& [where, lines] : groups)
        if (lines.size() >= 3) ++summary.concurrency_points;

    for (const auto& line : all_lines()) {
        const ProjectiveLine& a = tangents[line.points[0].index()];
        const ProjectiveLine& b = tangents[line.points[1].index()];
        const ProjectiveLine& c = tangents[line.points[2].index()];
        if (incident(meet(a, b), c)) ++summary.concurrent_collinear_triples;
    }
    return summary;
}

}  // namespace artal
