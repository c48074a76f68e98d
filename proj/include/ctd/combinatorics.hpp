#pragma once

#include <cstdint>
#include <vector>

namespace ctd {

// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(int n, int k);

// The index-th k-subset of {0..n-1} in lexicographic order.
std::vector<int> unrank_combination(int n, int k, std::uint64_t index);

// Advances c to the next k-subset of {0..n-1} in lexicographic order.
// Returns false after the last one.
bool next_combination(std::vector<int> &c, int n);

} // namespace ctd
