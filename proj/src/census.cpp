#include "artal/census.hpp"

#include <bit>
#include <stdexcept>

namespace artal {

CensusRow census(int k) {
    if (k < 0 || k > 9) throw std::out_of_range("subset size must be in 0..9");
    CensusRow row;
    row.k = k;
    for (std::uint16_t m = 0; m < (1u << 9); ++m) {
        if (std::popcount(m) != k) continue;
        ++row.distribution[collinear_triple_count(PointSubset{m})];
    }
    for (const auto& [n, count] : row.distribution)
        if (count > 0) row.possible_n.push_back(n);
    return row;
}

std::vector<CensusRow> proposition_table() {
    std::vector<CensusRow> rows;
    rows.reserve(7);
    for (int k = 3; k <= 9; ++k) rows.push_back(census(k));
    return rows;
}

}  // namespace artal
