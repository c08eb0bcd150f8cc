#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "arcperm/permutation.hpp"
#include "arcperm/tableaux.hpp"

namespace arcperm {

/// Exact histogram of descent sets over a family: subset of {1..n-1}
/// (as a bitmask) -> count. All the generating functions of interest are
/// multilinear in x_1..x_{n-1}, so a subset-indexed table is a full
/// polynomial representation.
struct DescentDistribution {
    int n = 0;
    std::map<std::uint32_t, long long> table;

    long long total() const;
    long long at(std::uint32_t mask) const;

    friend bool operator==(const DescentDistribution&, const DescentDistribution&) = default;
};

/// Polynomial in q with the coefficient of q^d at index d.
struct UnivariatePolynomial {
    std::vector<long long> coeffs;

    void trim();
    long long at(int d) const;
    long long eval_at_one() const;

    friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;
};

DescentDistribution descent_distribution(int n, const std::vector<Permutation>& family);
DescentDistribution descent_distribution(int n, const std::vector<StandardTableau>& family);

/// Sum of x^{Des} over arc permutations, expanded from
/// prod(1+x_i) + sum_i prod_{j<i}(1+x_j) (x_i + x_{i+1}) prod_{j>i+1}(1+x_j).
DescentDistribution arc_descent_closed_form(int n);
/// 2 prod(1+x_i) - 1 - x_1...x_{n-1}, the unimodal distribution.
DescentDistribution unimodal_descent_closed_form(int n);
/// Arc form minus unimodal form.
DescentDistribution z_descent_closed_form(int n);
/// prod(1+x_i), the distribution over hook tableaux.
DescentDistribution hook_descent_closed_form(int n);

UnivariatePolynomial maj_polynomial(const std::vector<Permutation>& family);
/// (1+q)(1+q^2)...(1+q^{n-2}) [n]_q.
UnivariatePolynomial arc_maj_closed_form(int n);
/// Arc maj form - 2(1+q)...(1+q^{n-1}) + 1 + q^{C(n,2)}.
UnivariatePolynomial z_maj_closed_form(int n);

/// Substitute x_i -> q^i.
UnivariatePolynomial specialize_to_maj(const DescentDistribution& dist);

/// Checks the unimodal closed form against brute force over U_n.
bool unimodal_descent_identity(int n);

/// Descent sets are equidistributed on T_n tableaux and on Z_n.
bool tz_equidistribution(int n);

}  // namespace arcperm
