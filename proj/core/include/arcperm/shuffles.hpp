#pragma once

#include <vector>

#include "arcperm/permutation.hpp"

namespace arcperm {

/// All interleavings of 1..k and k+1..k+m, lexicographically sorted.
std::vector<Permutation> generate_shuffles(int k, int m);

/// Union over k of the shuffle families in S_n, deduplicated and sorted.
std::vector<Permutation> generate_shuffle_union(int n);

/// {321, 2143, 2413}.
const std::vector<Permutation>& shuffle_patterns();

/// The shuffle union equals the avoidance class of the three patterns.
bool shuffle_pattern_check(int n);

/// Products of transpositions over all standard partial fillings of the
/// k x m rectangle (rows labeled k..1 top to bottom, columns k+1..k+m)
/// reproduce exactly the shuffles of 1..k and k+1..k+m, independently of the
/// filling order.
bool rectangle_filling_check(int k, int m);

struct ShuffleOrderReport {
    int n = 0;
    bool maxima_ok = false;       // maximal elements are (k+1)...n 1...k
    bool intervals_ok = false;    // [e, pi_k] = Sh_{k,n-k}, size C(n,k)
    bool chain_counts_ok = false; // maximal chains in [e, pi_k] = f^(rectangle)
    bool pass() const { return maxima_ok && intervals_ok && chain_counts_ok; }
};

/// Weak-order checks on the induced subposet of the shuffle union.
ShuffleOrderReport shuffle_weak_order_check(int n);

}  // namespace arcperm
