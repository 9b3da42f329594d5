#pragma once

#include <array>
#include <string>
#include <vector>

#include "artal/invariants.hpp"
#include "artal/realization.hpp"

namespace artal {

enum class TypeTag { TypeI, TypeII, Other };

const char* to_string(TypeTag tag);
TypeTag type_tag_from_string(const std::string& s);  // throws std::invalid_argument

/// Classification by the collinear-triple count: Type I when n = k-3,
/// Type II when n = k-4, Other otherwise.
struct ArrangementType {
    int k = 0;
    int n = 0;
    TypeTag tag = TypeTag::Other;

    friend bool operator==(const ArrangementType&, const ArrangementType&) = default;
};

/// Throws std::invalid_argument unless 3 <= |s| <= 9.
ArrangementType classify(PointSubset s);

/// A checkable witness that two k-Artal arrangements on the same cubic have
/// equal combinatorics but different collinear-triple counts; the hypotheses
/// of the subarrangement counting criterion.
struct ZariskiCertificate {
    Rational mu;
    int k = 0;
    std::array<PointSubset, 2> subsets;
    std::array<ArrangementType, 2> types;
    CanonicalEncoding canonical;                         // shared combinatorial type
    std::array<std::vector<SingularRecord>, 2> records;  // evidence, per arrangement
    std::vector<int> relabeling;  // line position in subset 1 -> position in subset 2
    int n1 = 0;
    int n2 = 0;
};

enum class PairSearchMode { OrbitRepresentatives, AllPairs };

/// All certificate pairs on the cubic with parameter mu: subsets with
/// distinct collinear-triple counts whose realized combinatorial types are
/// equal.  For k in {4,5,6} these are exactly the Type I / Type II pairs.
/// Throws std::domain_error for non-smooth mu and std::invalid_argument
/// unless 3 <= k <= 9.  Every certificate returned verifies.
std::vector<ZariskiCertificate> find_zariski_pairs(
    const Rational& mu, int k, PairSearchMode mode = PairSearchMode::OrbitRepresentatives);

struct VerificationResult {
    bool ok = false;
    std::string reason;  // empty on success, a short failure code otherwise
};

/// Re-realizes both arrangements from scratch and re-checks every certificate
/// claim: subset sizes, type classification, combinatorial-type equality, the
/// explicit relabeling, the four invariant fiber counts, the count
/// inequality, and the degree condition.
VerificationResult verify_certificate(const ZariskiCertificate& cert);

}  // namespace artal
