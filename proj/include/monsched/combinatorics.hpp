#ifndef MONSCHED_COMBINATORICS_HPP
#define MONSCHED_COMBINATORICS_HPP

#include <cstdint>
#include <vector>

#include "monsched/schedule.hpp"

namespace monsched {

// C(n, r), saturating at UINT64_MAX.
std::uint64_t binomial(int n, int r);

// sigma-subsets of {0..k-1} are ranked in ascending mask order (colex):
// rank(m) = sum_i C(c_i, i + 1) over the set bits c_0 < c_1 < ...
std::uint64_t subset_rank(LabelMask mask);
LabelMask subset_unrank(std::uint64_t rank, int k, int sigma);

// Next mask with the same popcount (Gosper). Returns 0 past the last one.
LabelMask next_subset(LabelMask mask, int k);

// All sigma-subsets in rank order. Callers keep C(k, sigma) small.
std::vector<LabelMask> all_subsets(int k, int sigma);

}  // namespace monsched

#endif  // MONSCHED_COMBINATORICS_HPP
