#pragma once

#include <set>

#include "arcperm/permutation.hpp"
#include "arcperm/tableaux.hpp"

namespace arcperm {

/// Descent-preserving bijection from non-unimodal arc permutations to
/// standard Young tableaux of shape (k,2,1^{n-k-2}).
StandardTableau phi(const Permutation& p);
Permutation phi_inverse(const StandardTableau& t);

/// C(p) = { i in {3..n} : the cyclic predecessor of p(i-1) appears among the
/// first i-2 letters }.
std::set<int> c_set(const Permutation& p);

/// Second bijection to the same tableau family; shape(psi_shape_map(p)) equals
/// shape(phi(p)), and the entries weakly north and strictly east of the entry
/// 2 are exactly C(p). Does not preserve the descent set.
StandardTableau psi_shape_map(const Permutation& p);
Permutation psi_shape_inverse(const StandardTableau& t);

}  // namespace arcperm
