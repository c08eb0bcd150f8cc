#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arcperm/arc_families.hpp"
#include "arcperm/descent_stats.hpp"

using namespace arcperm;

TEST_CASE("histograms") {
    const DescentDistribution singleton = descent_distribution(4, {Permutation::identity(4)});
    CHECK(singleton.table == std::map<std::uint32_t, long long>{{0u, 1}});
    CHECK(descent_distribution(4, generate_family(4, Family::A)).total() == 16);

    const DescentDistribution z4 = descent_distribution(4, generate_family(4, Family::Z));
    // Des(3412) = {2}, Des(2143) = {1,3}
    CHECK(z4.table == std::map<std::uint32_t, long long>{{0b010u, 1}, {0b101u, 1}});
}

TEST_CASE("arc descent closed form") {
    for (int n = 2; n <= 7; ++n) {
        const DescentDistribution closed = arc_descent_closed_form(n);
        CHECK(closed.at(0) == 1);
        CHECK(closed == descent_distribution(n, generate_family(n, Family::A)));
    }
}

TEST_CASE("unimodal descent closed form") {
    const DescentDistribution u2 = unimodal_descent_closed_form(2);
    CHECK(u2.table == std::map<std::uint32_t, long long>{{0u, 1}, {1u, 1}});
    const DescentDistribution u4 = unimodal_descent_closed_form(4);
    CHECK(u4.total() == 14);
    CHECK(u4.at(0) == 1);
    CHECK(u4.at(0b111) == 1);
    for (int n = 2; n <= 7; ++n) CHECK(unimodal_descent_identity(n));
}

TEST_CASE("Z and hook closed forms") {
    for (int n = 2; n <= 7; ++n) {
        CHECK(z_descent_closed_form(n) ==
              descent_distribution(n, generate_family(n, Family::Z)));
        CHECK(hook_descent_closed_form(n) == descent_distribution(n, generate_Hook_n(n)));
    }
}

TEST_CASE("major-index polynomials") {
    const UnivariatePolynomial a3 = arc_maj_closed_form(3);
    CHECK(a3.coeffs == std::vector<long long>{1, 2, 2, 1});
    for (int n = 2; n <= 7; ++n) {
        const UnivariatePolynomial arc = arc_maj_closed_form(n);
        CHECK(arc == maj_polynomial(generate_family(n, Family::A)));
        CHECK(arc.eval_at_one() == static_cast<long long>(n) << (n - 2));
        CHECK(z_maj_closed_form(n) == maj_polynomial(generate_family(n, Family::Z)));
        CHECK(specialize_to_maj(arc_descent_closed_form(n)) == arc);
    }
}

TEST_CASE("equidistribution on T_n and Z_n") {
    for (int n = 4; n <= 7; ++n) CHECK(tz_equidistribution(n));
    const DescentDistribution t4 = descent_distribution(4, generate_T_n(4));
    CHECK(t4.table == std::map<std::uint32_t, long long>{{0b010u, 1}, {0b101u, 1}});
    CHECK(descent_distribution(5, generate_T_n(5)).total() == 10);
}
