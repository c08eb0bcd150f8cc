#pragma once

#include <string>
#include <vector>

#include "arcperm/bigint.hpp"
#include "arcperm/permutation.hpp"

namespace arcperm {

/// A finite poset given by labeled elements and an irredundant cover list.
struct FinitePoset {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> covers;  // (lower, upper)

    int size() const { return static_cast<int>(labels.size()); }
    int index_of(const std::string& label) const;  // -1 when absent

    std::vector<std::vector<int>> up_adjacency() const;
    std::vector<std::vector<int>> down_adjacency() const;

    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;

    /// Longest chain from a minimal element to each element.
    std::vector<int> ranks() const;

    /// leq[i] = set of j with i <= j, as row-major bit matrix.
    std::vector<std::vector<bool>> leq_matrix() const;
};

/// Right weak order: p <= t iff l(p) + l(p^-1 t) = l(t).
bool weak_leq(const Permutation& p, const Permutation& t);

/// Order test for unimodal permutations via shapes: both on the same side
/// (left-unimodal, or conjugates of left-unimodal) and shape containment.
/// Agrees with weak_leq on U_n x U_n.
bool shape_domination_leq(const Permutation& p, const Permutation& t);

enum class Ground { U, S };

/// Hasse diagram of the weak order restricted to the ground set: covers are
/// single right multiplications by an adjacent transposition raising the
/// length by one, with both endpoints in the ground set.
FinitePoset build_weak_hasse(int n, Ground ground);

struct LatticeReport {
    bool is_lattice = false;
    bool is_graded = false;
    bool is_modular = false;
    bool is_self_dual = false;
};

/// Requires a unique minimum and maximum. Meets/joins by search, modularity
/// via the rank identity, self-duality via backtracking over rank-reversing
/// candidate bijections.
LatticeReport check_lattice_properties(const FinitePoset& poset);

/// Number of saturated chains from lo to hi, by DP over the cover DAG.
BigInt count_maximal_chains(const FinitePoset& poset, int lo, int hi);

}  // namespace arcperm
