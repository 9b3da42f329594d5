#include <doctest.h>

#include <map>

#include "artal/census.hpp"
#include "artal/symmetry.hpp"
#include "oracles.hpp"

using namespace artal;

TEST_SUITE("census") {

TEST_CASE("distributions frozen for every k") {
    // Expected counts derived by brute force over the line structure:
    // n = 1 at k = 3 counts the 12 lines; n = 1 at k = 4 counts line plus
    // external point choices (12 * 6 = 72); k >= 5 follows by the
    // complementation identities checked below.
    const std::map<int, std::map<int, long>> expected = {
        {0, {{0, 1}}},
        {1, {{0, 9}}},
        {2, {{0, 36}}},
        {3, {{0, 72}, {1, 12}}},
        {4, {{0, 54}, {1, 72}}},
        {5, {{1, 72}, {2, 54}}},
        {6, {{2, 72}, {3, 12}}},
        {7, {{5, 36}}},
        {8, {{8, 9}}},
        {9, {{12, 1}}},
    };
    for (const auto& [k, dist] : expected) {
        CensusRow row = census(k);
        CHECK(row.k == k);
        CHECK(row.distribution == dist);
    }
    CHECK_THROWS_AS(census(10), std::out_of_range);
    CHECK_THROWS_AS(census(-1), std::out_of_range);
}

TEST_CASE("counts sum to C(9,k) and entries are nonnegative") {
    for (int k = 0; k <= 9; ++k) {
        CensusRow row = census(k);
        std::uint64_t total = 0;
        for (const auto& [n, count] : row.distribution) {
            CHECK(count > 0);  // zero-count keys are not materialized
            CHECK(n >= 0);
            total += static_cast<std::uint64_t>(count);
        }
        CHECK(total == oracle::binom(9, k));
    }
}

TEST_CASE("possible_n equals the nonzero keys") {
    for (int k = 0; k <= 9; ++k) {
        CensusRow row = census(k);
        std::vector<int> keys;
        for (const auto& [n, count] : row.distribution)
            if (count > 0) keys.push_back(n);
        CHECK(row.possible_n == keys);
    }
}

TEST_CASE("proposition table attained values") {
    auto rows = proposition_table();
    REQUIRE(rows.size() == 7);
    const std::vector<std::vector<int>> expected = {
        {0, 1}, {0, 1}, {1, 2}, {2, 3}, {5}, {8}, {12},
    };
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].k == static_cast<int>(i) + 3);
        CHECK(rows[i].possible_n == expected[i]);
    }
}

TEST_CASE("k = 4 block: 72 line extensions, 54 generic") {
    CensusRow row = census(4);
    // 12 lines x 6 external points, independently of the subset scan.
    long line_extensions = static_cast<long>(oracle::line_masks().size()) * (9 - 3);
    CHECK(line_extensions == 72);
    CHECK(row.distribution.at(1) == line_extensions);
    CHECK(row.distribution.at(0) == static_cast<long>(oracle::binom(9, 4)) - line_extensions);
}

TEST_CASE("direct scan agrees with the orbit-weighted computation") {
    for (int k = 0; k <= 9; ++k) {
        std::map<int, long> via_orbits;
        for (const auto& rep : orbit_representatives(k))
            via_orbits[collinear_triple_count(rep)] += orbit_size(rep);
        CHECK(census(k).distribution == via_orbits);
    }
}

}  // TEST_SUITE
