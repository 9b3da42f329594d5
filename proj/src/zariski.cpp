#include "artal/zariski.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "artal/symmetry.hpp"

namespace artal {

const char* to_string(TypeTag tag) {
    switch (tag) {
        case TypeTag::TypeI: return "TypeI";
        case TypeTag::TypeII: return "TypeII";
        case TypeTag::Other: return "Other";
    }
    return "unknown";
}

TypeTag type_tag_from_string(const std::string& s) {
    if (s == "TypeI") return TypeTag::TypeI;
    if (s == "TypeII") return TypeTag::TypeII;
    if (s == "Other") return TypeTag::Other;
    throw std::invalid_argument("bad type tag \"" + s + "\"");
}

ArrangementType classify(PointSubset s) {
    const int k = s.size();
    if (k < 3 || k > 9) throw std::invalid_argument("classify: subset size must be in 3..9");
    const int n = collinear_triple_count(s);
    TypeTag tag = TypeTag::Other;
    if (n == k - 3)
        tag = TypeTag::TypeI;
    else if (n == k - 4)
        tag = TypeTag::TypeII;
    return {k, n, tag};
}

std::vector<ZariskiCertificate> find_zariski_pairs(const Rational& mu, int k,
                                                   PairSearchMode mode) {
    if (k < 3 || k > 9) throw std::invalid_argument("find_zariski_pairs: k must be in 3..9");
    CubicCurve cubic{mu};  // throws std::domain_error when mu^3 = 1
    CurveRealization curve = realize_curve(cubic);

    std::vector<PointSubset> candidates;
    if (mode == PairSearchMode::OrbitRepresentatives) {
        candidates = orbit_representatives(k);
    } else {
        for (std::uint16_t m = 0; m < (1u << 9); ++m) {
            PointSubset s{m};
            if (s.size() == k) candidates.push_back(s);
        }
        std::sort(candidates.begin(), candidates.end(), subset_lex_less);
    }

    struct Realized {
        PointSubset subset;
        ArrangementType type;
        CombinatorialType combinatorics;
    };
    std::map<int, std::vector<Realized>> by_n;
    for (PointSubset s : candidates) {
        ArrangementType type = classify(s);
        CombinatorialType combo = combinatorial_type(realize_arrangement(curve, s));
        by_n[type.n].push_back({s, type, std::move(combo)});
    }

    // Pair subsets across distinct collinear-triple counts, larger count
    // first, and keep those whose realized types coincide.
    std::vector<ZariskiCertificate> out;
    for (auto hi = by_n.rbegin(); hi != by_n.rend(); ++hi) {
        for (auto lo = std::next(hi); lo != by_n.rend(); ++lo) {
            for (const Realized& first : hi->second) {
                for (const Realized& second : lo->second) {
                    auto witness = matching_relabeling(first.combinatorics, second.combinatorics);
                    if (!witness) continue;
                    ZariskiCertificate cert;
                    cert.mu = mu;
                    cert.k = k;
                    cert.subsets = {first.subset, second.subset};
                    cert.types = {first.type, second.type};
                    cert.canonical = first.combinatorics.canonical;
                    cert.records = {first.combinatorics.records, second.combinatorics.records};
                    cert.relabeling = *witness;
                    cert.n1 = first.type.n;
                    cert.n2 = second.type.n;
                    VerificationResult check = verify_certificate(cert);
                    if (!check.ok)
                        throw std::logic_error("emitted certificate fails verification: " +
                                               check.reason);
                    out.push_back(std::move(cert));
                }
            }
        }
    }
    return out;
}

namespace {

bool is_permutation(const std::vector<int>& perm, int k) {
    if (static_cast<int>(perm.size()) != k) return false;
    std::vector<bool> seen(k, false);
    for (int v : perm) {
        if (v < 0 || v >= k || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

/// Multiset of (kind, line set) under a relabeling of line positions.
std::vector<std::pair<int, std::vector<int>>> mapped_incidences(
    const std::vector<SingularRecord>& records, const std::vector<int>& perm) {
    std::vector<std::pair<int, std::vector<int>>> out;
    out.reserve(records.size());
    for (const auto& rec : records) {
        std::vector<int> lines;
        lines.reserve(rec.lines.size());
        for (int l : rec.lines) lines.push_back(perm[l]);
        std::sort(lines.begin(), lines.end());
        int code = rec.kind == SingularKind::Tangency ? 0
                   : rec.kind == SingularKind::Node   ? 1
                                                      : 2;
        out.emplace_back(code, std::move(lines));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

VerificationResult verify_certificate(const ZariskiCertificate& cert) {
    if (cert.k < 3 || cert.k > 9) return {false, "k-out-of-range"};
    if (cert.subsets[0].size() != cert.k || cert.subsets[1].size() != cert.k)
        return {false, "subset-size-mismatch"};
    if (cert.subsets[0] == cert.subsets[1]) return {false, "identical-subsets"};

    if (!CubicCurve::is_smooth_parameter(cert.mu)) return {false, "non-smooth-mu"};
    CubicCurve cubic{cert.mu};

    // Degree condition: the fixed component is the cubic, the moving
    // components are lines, so every combinatorial automorphism fixes the
    // cubic and the counting criterion applies.
    constexpr int fixed_component_degree = 3;
    constexpr int line_degree = 1;
    if (fixed_component_degree == line_degree) return {false, "degree-condition"};

    std::array<ArrangementType, 2> types;
    std::array<CombinatorialType, 2> combos;
    CurveRealization curve = realize_curve(cubic);
    for (int i = 0; i < 2; ++i) {
        types[i] = classify(cert.subsets[i]);
        combos[i] = combinatorial_type(realize_arrangement(curve, cert.subsets[i]));
        if (!(types[i] == cert.types[i])) return {false, "type-mismatch"};
    }

    if (cert.n1 != types[0].n || cert.n2 != types[1].n) return {false, "counts-mismatch"};
    if (cert.n1 == cert.n2) return {false, "counts-equal"};

    // The four invariant fiber counts over a k-Artal arrangement all equal
    // the collinear-triple count.
    for (int i = 0; i < 2; ++i) {
        FiberCounts counts = profile(cert.subsets[i]).fiber_counts();
        const int n = types[i].n;
        if (counts.d6_one != n || counts.alex_one != n || counts.split_three != n ||
            counts.lks_one != n)
            return {false, "invariant-count-mismatch"};
    }

    if (!types_equal(combos[0], combos[1])) return {false, "combinatorics-mismatch"};
    if (combos[0].canonical != cert.canonical) return {false, "canonical-mismatch"};

    if (!is_permutation(cert.relabeling, cert.k)) return {false, "relabeling-not-a-permutation"};
    std::vector<int> identity(cert.k);
    for (int i = 0; i < cert.k; ++i) identity[i] = i;
    if (mapped_incidences(combos[0].records, cert.relabeling) !=
        mapped_incidences(combos[1].records, identity))
        return {false, "relabeling-invalid"};

    return {true, ""};
}

}  // namespace artal
