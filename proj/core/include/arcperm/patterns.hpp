#pragma once

#include <vector>

#include "arcperm/permutation.hpp"

namespace arcperm {

/// True iff some subsequence of p is order-isomorphic to pattern.
/// Pruned backtracking; tuned for patterns of length <= 4.
bool contains_pattern(const Permutation& p, const Permutation& pattern);

bool avoids_all(const Permutation& p, const std::vector<Permutation>& patterns);

/// { p in S_n : p avoids every listed pattern }, lexicographically sorted.
std::vector<Permutation> avoidance_class(int n, const std::vector<Permutation>& patterns);

}  // namespace arcperm
