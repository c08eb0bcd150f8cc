#pragma once

#include <string>
#include <vector>

#include "arcperm/bigint.hpp"
#include "arcperm/permutation.hpp"

namespace arcperm {

/// A straight or shifted shape. Parts are weakly decreasing for straight
/// shapes and strictly decreasing for shifted ones; the flag is explicit and
/// never inferred from the parts.
struct Shape {
    std::vector<int> parts;
    bool shifted = false;

    int rows() const { return static_cast<int>(parts.size()); }
    int size() const;
    bool valid() const;

    /// Cellwise inclusion. Requires matching shifted flags.
    bool contained_in(const Shape& outer) const;

    friend bool operator==(const Shape&, const Shape&) = default;
    friend auto operator<=>(const Shape&, const Shape&) = default;
};

/// Shifted staircase (n-1, n-2, ..., 1).
Shape staircase_shape(int n);

/// A standard filling of a shape by 1..size: rows and columns strictly
/// increase; for shifted shapes row i is drawn indented i-1 cells, so the
/// cell below (r,j) is (r+1, j-1) in row-local coordinates.
struct StandardTableau {
    Shape shape;
    std::vector<std::vector<int>> rows;

    int size() const { return shape.size(); }
    bool valid() const;

    /// { i : i+1 lies in a strictly lower row than i }. This is the convention
    /// under which Des(Q) of the RSK recording tableau equals Des(p).
    DescentSet descent_set() const;

    /// Rows joined by '/', entries comma-separated: "1,2,5/3,4".
    std::string to_string() const;

    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
    friend auto operator<=>(const StandardTableau&, const StandardTableau&) = default;
};

/// Every standard filling of the shape, in a deterministic order.
std::vector<StandardTableau> generate_syt(const Shape& shape);

/// Hook-length product formula. Straight shapes only.
BigInt count_syt_hook_formula(const Shape& shape);

/// Number of standard fillings of the shifted staircase (n-1,...,1):
/// C(n,2)! * prod_{i=0}^{n-2} i!/(2i+1)!.
BigInt count_shifted_staircase(int n);

/// The shifted shape whose partial fillings of the staircase multiply out to
/// the given unimodal permutation. For p left-unimodal the shape is read off
/// directly; otherwise the shape of w0*p*w0 is used.
Shape shape_of_unimodal(const Permutation& p);

/// Inverse direction: the left-unimodal permutation read off the boundary
/// path of a shifted shape inside the staircase of degree n.
Permutation left_unimodal_from_shape(const Shape& shape, int n);

/// Product of the transpositions of a standard filling of a shifted shape
/// placed in the degree-n staircase (entry at row i, staircase column j
/// contributes the transposition (i,j); entries apply in increasing order).
Permutation replay_filling(const StandardTableau& t, int n);

/// All standard Young tableaux of shape (k,2,1^{n-k-2}) for 2 <= k <= n-2.
std::vector<StandardTableau> generate_T_n(int n);

/// All standard Young tableaux of hook shape (k,1^{n-k}) for 1 <= k <= n.
std::vector<StandardTableau> generate_Hook_n(int n);

}  // namespace arcperm
