#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace arcperm {

/// Set of descent positions of a degree-n permutation (or a size-n tableau).
/// Positions are 1-based and live in {1, ..., n-1}.
struct DescentSet {
    int n = 0;
    std::uint32_t mask = 0;  // bit i-1 set  <=>  position i is a descent

    bool contains(int i) const { return i >= 1 && i < n && (mask >> (i - 1) & 1u); }
    void insert(int i);
    int size() const;
    std::vector<int> positions() const;

    /// Comma-joined ascending positions, e.g. "1,3"; empty set gives "".
    std::string to_key() const;

    friend bool operator==(const DescentSet&, const DescentSet&) = default;
};

/// A permutation of {1..n} in one-line notation. Positions and values are
/// 1-based everywhere. Immutable after construction.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);
    static Permutation longest(int n);  // w0 = n ... 2 1
    static Permutation adjacent_transposition(int n, int i);  // sigma_i = (i, i+1)

    /// Accepts "2 4 1 3", "2,4,1,3", or the compact digit form "2413".
    static Permutation parse(const std::string& text);

    int degree() const { return static_cast<int>(vals_.size()); }
    int operator()(int i) const { return vals_[i - 1]; }
    const std::vector<int>& one_line() const { return vals_; }

    Permutation inverse() const;
    Permutation reversed() const;      // p(n) ... p(1)
    Permutation complemented() const;  // i -> n+1 - p(i)
    Permutation conjugate_by_longest() const;  // w0 * p * w0

    DescentSet descent_set() const;
    int inversions() const;
    int major_index() const;
    int length() const { return inversions(); }  // Coxeter length

    /// p * sigma_i: swaps the letters at positions i and i+1.
    Permutation apply_position_swap(int i) const;
    /// (a b) * p: swaps the positions of the values a and b.
    Permutation swap_values(int a, int b) const;

    /// Compact digit string for n <= 9, comma-separated otherwise.
    std::string to_wire() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.vals_ <=> b.vals_;
    }

private:
    std::vector<int> vals_;
};

/// (p o q)(i) = p(q(i)). Degrees must match.
Permutation compose(const Permutation& p, const Permutation& q);

/// gamma^k * p where gamma is the n-cycle (1,2,...,n): every value shifts by k mod n.
Permutation left_cycle_shift(const Permutation& p, int k);

/// All of S_n in lexicographic order. Intended for exhaustive checks at small n.
std::vector<Permutation> symmetric_group(int n);

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const;
};

}  // namespace arcperm
