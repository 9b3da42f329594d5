#include <doctest.h>

#include "artal/json_io.hpp"
#include "artal/zariski.hpp"
#include "oracles.hpp"

using namespace artal;

TEST_SUITE("zariski") {

TEST_CASE("classification by n against k") {
    CHECK(classify(PointSubset::parse("[0,0 0,1 0,2 1,0 1,1]")).tag == TypeTag::TypeI);   // k=5,n=2
    CHECK(classify(PointSubset::parse("[0,0 0,1 0,2 1,0 1,1 1,2]")).n == 2);              // k=6
    CHECK(classify(PointSubset::parse("[0,0 0,1 0,2 1,0 1,1 1,2]")).tag == TypeTag::TypeII);
    CHECK(classify(PointSubset::full()).tag == TypeTag::Other);  // k=9, n=12
    CHECK(classify(PointSubset::full()).n == 12);
    CHECK_THROWS_AS(classify(PointSubset::parse("[0,0 1,1]")), std::invalid_argument);
    CHECK_THROWS_AS(classify(PointSubset{}), std::invalid_argument);
}

TEST_CASE("k in 4..6: every subset is Type I or Type II") {
    for (std::uint16_t m = 0; m < 512; ++m) {
        PointSubset s{m};
        if (s.size() < 4 || s.size() > 6) continue;
        CHECK(classify(s).tag != TypeTag::Other);
    }
}

TEST_CASE("k = 3: collinear triples are Other (n = 1), generic are Type I (n = 0)") {
    for (std::uint16_t m = 0; m < 512; ++m) {
        PointSubset s{m};
        if (s.size() != 3) continue;
        ArrangementType t = classify(s);
        if (t.n == 1)
            CHECK(t.tag == TypeTag::Other);
        else
            CHECK(t.tag == TypeTag::TypeI);
    }
}

TEST_CASE("generic member yields certificates for k = 3..6") {
    for (int k = 3; k <= 6; ++k) {
        auto certs = find_zariski_pairs(Rational(2), k);
        REQUIRE(certs.size() >= 1);
        for (const auto& cert : certs) {
            CHECK(cert.k == k);
            CHECK(cert.n1 != cert.n2);
            CHECK(cert.n1 == collinear_triple_count(cert.subsets[0]));
            CHECK(cert.n2 == collinear_triple_count(cert.subsets[1]));
            VerificationResult check = verify_certificate(cert);
            CHECK(check.ok);
            CHECK(check.reason.empty());
        }
    }
    // For k in {4,5,6} the pair is Type I vs Type II by construction.
    for (int k = 4; k <= 6; ++k) {
        auto certs = find_zariski_pairs(Rational(2), k);
        for (const auto& cert : certs) {
            CHECK(cert.types[0].tag == TypeTag::TypeI);
            CHECK(cert.types[1].tag == TypeTag::TypeII);
            CHECK(cert.n1 == k - 3);
            CHECK(cert.n2 == k - 4);
        }
    }
}

TEST_CASE("k = 7, 8, 9 scans are empty: n is constant") {
    for (int k = 7; k <= 9; ++k) {
        CHECK(find_zariski_pairs(Rational(2), k).empty());
        CHECK(find_zariski_pairs(Rational(0), k).empty());
    }
}

TEST_CASE("the Fermat member yields no certificates at all") {
    // Tangents at collinear triples concur on mu = 0, so Type I and Type II
    // combinatorics differ for every k.
    for (int k = 3; k <= 6; ++k) CHECK(find_zariski_pairs(Rational(0), k).empty());
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(find_zariski_pairs(Rational(2), 2), std::invalid_argument);
    CHECK_THROWS_AS(find_zariski_pairs(Rational(2), 10), std::invalid_argument);
    CHECK_THROWS_AS(find_zariski_pairs(Rational(1), 4), std::domain_error);  // singular
}

TEST_CASE("all-pairs mode finds at least the representative pairs") {
    auto reps = find_zariski_pairs(Rational(2), 4, PairSearchMode::OrbitRepresentatives);
    auto all = find_zariski_pairs(Rational(2), 4, PairSearchMode::AllPairs);
    CHECK(all.size() >= reps.size());
    // 72 Type I subsets x 54 Type II subsets on a fully generic member.
    CHECK(all.size() == 72u * 54u);
}

TEST_CASE("verification rejects tampered certificates") {
    auto certs = find_zariski_pairs(Rational(2), 4);
    REQUIRE(!certs.empty());
    ZariskiCertificate good = certs.front();

    SUBCASE("swapped subsets still verify") {
        ZariskiCertificate swapped = good;
        std::swap(swapped.subsets[0], swapped.subsets[1]);
        std::swap(swapped.types[0], swapped.types[1]);
        std::swap(swapped.records[0], swapped.records[1]);
        std::swap(swapped.n1, swapped.n2);
        // Invert the relabeling witness.
        std::vector<int> inverse(swapped.relabeling.size());
        for (size_t i = 0; i < swapped.relabeling.size(); ++i)
            inverse[good.relabeling[i]] = static_cast<int>(i);
        swapped.relabeling = inverse;
        CHECK(verify_certificate(swapped).ok);
    }

    SUBCASE("subset of different size fails") {
        ZariskiCertificate bad = good;
        bad.subsets[1] = PointSubset::parse("[0,0 0,1 0,2 1,0 1,1]");
        VerificationResult r = verify_certificate(bad);
        CHECK_FALSE(r.ok);
        CHECK(r.reason == "subset-size-mismatch");
    }

    SUBCASE("equal counts fail") {
        ZariskiCertificate bad = good;
        bad.subsets[1] = bad.subsets[0];
        bad.n2 = bad.n1;
        bad.types[1] = bad.types[0];
        VerificationResult r = verify_certificate(bad);
        CHECK_FALSE(r.ok);
        CHECK(r.reason == "identical-subsets");
    }

    SUBCASE("wrong stored counts fail") {
        ZariskiCertificate bad = good;
        bad.n1 = bad.n2;
        VerificationResult r = verify_certificate(bad);
        CHECK_FALSE(r.ok);
        CHECK(r.reason == "counts-mismatch");
    }

    SUBCASE("singular mu fails") {
        ZariskiCertificate bad = good;
        bad.mu = Rational(1);
        VerificationResult r = verify_certificate(bad);
        CHECK_FALSE(r.ok);
        CHECK(r.reason == "non-smooth-mu");
    }

    SUBCASE("broken relabeling fails") {
        ZariskiCertificate bad = good;
        bad.relabeling = {0, 0, 1, 2};
        VerificationResult r = verify_certificate(bad);
        CHECK_FALSE(r.ok);
        CHECK(r.reason == "relabeling-not-a-permutation");
    }

    SUBCASE("wrong type tag fails") {
        ZariskiCertificate bad = good;
        bad.types[0].tag = TypeTag::Other;
        VerificationResult r = verify_certificate(bad);
        CHECK_FALSE(r.ok);
        CHECK(r.reason == "type-mismatch");
    }
}

TEST_CASE("certificate JSON round-trip preserves verification") {
    for (int k : {3, 4, 5, 6}) {
        auto certs = find_zariski_pairs(Rational(2), k);
        REQUIRE(!certs.empty());
        for (const auto& cert : certs) {
            Json j = to_json(cert);
            std::string text = j.dump(2);
            ZariskiCertificate parsed = certificate_from_json(nlohmann::json::parse(text));
            CHECK(verify_certificate(parsed).ok);
            CHECK(to_json(parsed).dump(2) == text);  // byte-identical reserialization
        }
    }
}

TEST_CASE("malformed certificate JSON throws") {
    auto cert = find_zariski_pairs(Rational(2), 3).front();
    Json j = to_json(cert);
    Json missing = j;
    missing.erase("relabeling");
    CHECK_THROWS_AS(certificate_from_json(missing), std::invalid_argument);

    Json bad_subset = j;
    bad_subset["subsets"][0] = "not a subset";
    CHECK_THROWS_AS(certificate_from_json(bad_subset), std::invalid_argument);

    Json bad_mu = j;
    bad_mu["mu"] = "1/0";
    CHECK_THROWS_AS(certificate_from_json(bad_mu), std::invalid_argument);
}

}  // TEST_SUITE
