#pragma once

#include <map>
#include <vector>

#include "artal/torsion.hpp"

namespace artal {

/// Exhaustive distribution of the collinear-triple count n over all k-subsets.
struct CensusRow {
    int k = 0;
    std::map<int, long> distribution;  // n -> number of k-subsets with that n
    std::vector<int> possible_n;       // sorted keys of distribution
};

/// Scans all C(9,k) subsets.  Throws std::out_of_range unless 0 <= k <= 9.
CensusRow census(int k);

/// Rows for k = 3..9.
std::vector<CensusRow> proposition_table();

}  // namespace artal
