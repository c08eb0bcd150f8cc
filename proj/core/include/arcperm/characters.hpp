#pragma once

#include <string>
#include <vector>

#include "arcperm/bigint.hpp"
#include "arcperm/permutation.hpp"
#include "arcperm/tableaux.hpp"

namespace arcperm {

/// Integer partition with weakly decreasing positive parts. The split into
/// parts greater than one (r of them) and trailing ones (s of them) and the
/// prefix-sum markers S(mu) drive all the formulas here.
struct Partition {
    std::vector<int> parts;

    int n() const;
    int count_big() const;   // r
    int count_ones() const;  // s
    bool valid() const;
    std::vector<int> prefix_sums() const;        // mu_(1), ..., mu_(t)
    std::vector<int> marker_positions() const;   // S(mu) as a sorted list
    std::string to_string() const;               // "(5,3,1,1)"

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// All partitions of n, in a deterministic order.
std::vector<Partition> partitions_of(int n);

/// Blockwise V-condition on inverse positions: within every mu-block of
/// values, the positions first strictly decrease and then strictly increase.
bool is_mu_left_unimodal(const Permutation& p, const Partition& mu);

/// p lies in L_mu^{-1}: every mu-block of p's letters is V-shaped.
bool in_l_mu_inverse(const Permutation& p, const Partition& mu);

/// Within every mu-block interior, the descents of the tableau form a prefix.
bool is_mu_unimodal_tableau(const StandardTableau& t, const Partition& mu);

/// |A_n intersect L_mu^{-1}| by the closed form
/// mu_1...mu_r 2^{r+s} (r + s/4 - sum 1/mu_i); exact rational arithmetic.
BigInt count_arc_mu(int n, const Partition& mu);

/// Brute-force signed sum over A_n intersect L_mu^{-1} of
/// (-1)^{|Des(p) \ S(mu)|}.
long long signed_sum_arc_mu(int n, const Partition& mu);

/// Closed form (1/4) s prod_j (1 + (-1)^{mu_j - 1}): zero when mu has an even
/// part, s 2^{r+s-2} when all parts are odd.
long long regev_character(int n, const Partition& mu);

/// Murnaghan-Nakayama border-strip recursion; the independent oracle.
long long mn_character(const Shape& lambda, const Partition& mu);

/// Signed sum over mu-unimodal standard tableaux of shape lambda; must agree
/// with mn_character.
long long irreducible_character(const Shape& lambda, const Partition& mu);

struct RegevRow {
    Partition mu;
    long long closed_form = 0;
    long long decomposition = 0;  // hooks twice (interior) plus (k,2,1^...) shapes, via MN
    long long signed_sum = 0;
    bool pass = false;
};

struct RegevReport {
    int n = 0;
    std::vector<RegevRow> rows;
    bool pass = false;
};

/// Three-route agreement for every mu: closed form, MN-evaluated
/// decomposition sum, and the brute-force signed sum.
RegevReport verify_regev(int n);

}  // namespace arcperm
