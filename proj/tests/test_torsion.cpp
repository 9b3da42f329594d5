#include <doctest.h>

#include <set>

#include "artal/torsion.hpp"
#include "oracles.hpp"

using namespace artal;

TEST_SUITE("torsion") {

TEST_CASE("group law examples") {
    CHECK(add({1, 2}, {2, 1}) == TorsionPoint{0, 0});
    CHECK(add({0, 0}, {1, 1}) == TorsionPoint{1, 1});
    CHECK(add({1, 0}, {1, 0}) == TorsionPoint{2, 0});
}

TEST_CASE("group axioms hold exhaustively") {
    for (int i = 0; i < 9; ++i) {
        auto p = TorsionPoint::from_index(i);
        CHECK(add(p, TorsionPoint::origin()) == p);
        CHECK(add(TorsionPoint::origin(), p) == p);
        CHECK(add(p, negate(p)) == TorsionPoint::origin());
        CHECK(add(add(p, p), p) == TorsionPoint::origin());  // 3p = O
        for (int j = 0; j < 9; ++j) {
            auto q = TorsionPoint::from_index(j);
            CHECK(add(p, q) == add(q, p));
            for (int k = 0; k < 9; ++k) {
                auto r = TorsionPoint::from_index(k);
                CHECK(add(add(p, q), r) == add(p, add(q, r)));
            }
        }
    }
}

TEST_CASE("index round-trip covers exactly nine points") {
    std::set<std::pair<int, int>> seen;
    for (int i = 0; i < 9; ++i) {
        auto p = TorsionPoint::from_index(i);
        CHECK(p.index() == i);
        seen.insert({p.a, p.b});
    }
    CHECK(seen.size() == 9);
    CHECK_THROWS_AS(TorsionPoint::from_index(9), std::out_of_range);
    CHECK_THROWS_AS(TorsionPoint::from_index(-1), std::out_of_range);
}

TEST_CASE("collinearity examples") {
    CHECK(is_collinear_triple({0, 0}, {1, 0}, {2, 0}));
    CHECK_FALSE(is_collinear_triple({0, 0}, {1, 0}, {1, 0}));  // not distinct
    CHECK_FALSE(is_collinear_triple({0, 0}, {1, 0}, {0, 1}));  // sum (1,1)
}

TEST_CASE("collinearity is symmetric in all six orderings") {
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            for (int k = 0; k < 9; ++k) {
                auto p = TorsionPoint::from_index(i);
                auto q = TorsionPoint::from_index(j);
                auto r = TorsionPoint::from_index(k);
                bool value = is_collinear_triple(p, q, r);
                CHECK(is_collinear_triple(p, r, q) == value);
                CHECK(is_collinear_triple(q, p, r) == value);
                CHECK(is_collinear_triple(q, r, p) == value);
                CHECK(is_collinear_triple(r, p, q) == value);
                CHECK(is_collinear_triple(r, q, p) == value);
            }
}

TEST_CASE("all_lines returns the Hesse configuration") {
    const auto& lines = all_lines();
    REQUIRE(lines.size() == 12);

    for (const auto& line : lines)
        CHECK(is_collinear_triple(line.points[0], line.points[1], line.points[2]));

    // (9_4, 12_3): every point on exactly 4 lines, 3 points per line,
    // and every pair of points on exactly one line.
    for (int i = 0; i < 9; ++i) {
        int through = 0;
        for (const auto& line : lines)
            if (line.contains(TorsionPoint::from_index(i))) ++through;
        CHECK(through == 4);
    }
    for (int i = 0; i < 9; ++i)
        for (int j = i + 1; j < 9; ++j) {
            int covering = 0;
            for (const auto& line : lines)
                if (line.contains(TorsionPoint::from_index(i)) &&
                    line.contains(TorsionPoint::from_index(j)))
                    ++covering;
            CHECK(covering == 1);
        }

    // Against the independent oracle enumeration.
    auto expected = oracle::line_masks();
    REQUIRE(expected.size() == 12);
    for (const auto& line : lines)
        CHECK(std::find(expected.begin(), expected.end(), line.mask()) != expected.end());
}

TEST_CASE("collinear_triple_count matches the line-filter oracle on all 512 subsets") {
    for (std::uint16_t m = 0; m < 512; ++m)
        CHECK(collinear_triple_count(PointSubset{m}) == oracle::triple_count(m));
}

TEST_CASE("collinear_triple_count examples") {
    CHECK(collinear_triple_count(PointSubset::full()) == 12);
    CHECK(collinear_triple_count(PointSubset{}.with({0, 0}).with({1, 0})) == 0);
    CHECK(collinear_triple_count(
              PointSubset{}.with({0, 0}).with({1, 0}).with({2, 0}).with({0, 1})) == 1);
}

TEST_CASE("subset serialization round-trips") {
    PointSubset s = PointSubset{}.with({0, 0}).with({1, 0}).with({2, 0});
    CHECK(s.to_string() == "[0,0 1,0 2,0]");
    CHECK(PointSubset::parse("[0,0 1,0 2,0]") == s);
    CHECK(PointSubset::parse("[]").empty());
    for (std::uint16_t m = 0; m < 512; ++m) {
        PointSubset subset{m};
        CHECK(PointSubset::parse(subset.to_string()) == subset);
    }
}

TEST_CASE("subset parse rejects malformed input") {
    CHECK_THROWS_AS(PointSubset::parse("0,0 1,0"), std::invalid_argument);    // no brackets
    CHECK_THROWS_AS(PointSubset::parse("[0,3]"), std::invalid_argument);      // digit range
    CHECK_THROWS_AS(PointSubset::parse("[0,0 0,0]"), std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(PointSubset::parse("[0-0]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_torsion_point("12"), std::invalid_argument);
}

TEST_CASE("subset_lex_less orders by sorted member sequences") {
    auto s = [](std::uint16_t m) { return PointSubset{m}; };
    CHECK(subset_lex_less(s(0b000000111), s(0b000001011)));  // {0,1,2} < {0,1,3}
    CHECK(subset_lex_less(s(0b110000001), s(0b000001110)));  // {0,7,8} < {1,2,3}
    CHECK_FALSE(subset_lex_less(s(0b000000111), s(0b000000111)));
    CHECK(subset_lex_less(s(0b000000001), s(0b000000011)));  // prefix first
}

}  // TEST_SUITE
