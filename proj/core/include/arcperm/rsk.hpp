#pragma once

#include <utility>

#include "arcperm/permutation.hpp"
#include "arcperm/tableaux.hpp"

namespace arcperm {

/// Row-insertion RSK. Returns (P, Q) of the same straight shape, with
/// Des(p) = Des(Q) and Des(p^-1) = Des(P).
std::pair<StandardTableau, StandardTableau> rsk(const Permutation& p);

}  // namespace arcperm
