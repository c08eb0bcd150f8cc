#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "arcperm/arc_families.hpp"
#include "arcperm/bijections.hpp"

using namespace arcperm;

TEST_CASE("phi on the worked examples") {
    const StandardTableau a = phi(Permutation::parse("8 9 10 7 11 1 2 6 5 3 4"));
    CHECK(a.rows == std::vector<std::vector<int>>{{1, 2, 3, 5, 8, 11}, {4, 7}, {6}, {9}, {10}});
    const StandardTableau b = phi(Permutation::parse("2 3 1 4 5 6 12 7 11 10 8 9"));
    CHECK(b.rows ==
          std::vector<std::vector<int>>{{1, 2, 4, 5, 6, 7, 9, 12}, {3, 8}, {10}, {11}});
    CHECK(phi_inverse(a) == Permutation::parse("8 9 10 7 11 1 2 6 5 3 4"));
    CHECK(phi_inverse(b) == Permutation::parse("2 3 1 4 5 6 12 7 11 10 8 9"));
}

TEST_CASE("the shape map on the worked examples") {
    const StandardTableau a = psi_shape_map(Permutation::parse("10 9 11 8 7 12 1 2 6 5 3 4"));
    CHECK(a.rows ==
          std::vector<std::vector<int>>{{1, 4, 7, 9, 12}, {2, 8}, {3}, {5}, {6}, {10}, {11}});
    const StandardTableau b = psi_shape_map(Permutation::parse("3 2 4 1 5 6 11 7 10 9 8"));
    CHECK(b.rows == std::vector<std::vector<int>>{{1, 2, 4, 6, 7, 9}, {3, 8}, {5}, {10}, {11}});
    CHECK(psi_shape_inverse(a) == Permutation::parse("10 9 11 8 7 12 1 2 6 5 3 4"));
    CHECK(psi_shape_inverse(b) == Permutation::parse("3 2 4 1 5 6 11 7 10 9 8"));
}

TEST_CASE("c_set") {
    // For the identity every letter's predecessor is already placed, so every
    // index from 3 on qualifies.
    CHECK(c_set(Permutation::identity(6)) == std::set<int>{3, 4, 5, 6});
    CHECK(c_set(Permutation::parse("10 9 11 8 7 12 1 2 6 5 3 4")) ==
          std::set<int>{4, 7, 8, 9, 12});
    for (const Permutation& p : generate_family(6, Family::A))
        CHECK(c_set(p).size() <= 4u);
}

TEST_CASE("phi is a descent-preserving bijection onto T_n") {
    for (int n = 4; n <= 7; ++n) {
        const auto zn = generate_family(n, Family::Z);
        std::set<StandardTableau> images;
        for (const Permutation& p : zn) {
            const StandardTableau t = phi(p);
            REQUIRE(t.valid());
            CHECK(t.descent_set() == p.descent_set());
            CHECK(phi_inverse(t) == p);
            images.insert(t);
        }
        const auto tn = generate_T_n(n);
        CHECK(std::vector<StandardTableau>(images.begin(), images.end()) == tn);
        for (const StandardTableau& t : tn) CHECK(phi(phi_inverse(t)) == t);
    }
}

TEST_CASE("the shape map shares phi's shape but not its descent sets") {
    bool descent_mismatch_somewhere = false;
    for (int n = 4; n <= 7; ++n) {
        for (const Permutation& p : generate_family(n, Family::Z)) {
            const StandardTableau t = psi_shape_map(p);
            REQUIRE(t.valid());
            CHECK(t.shape == phi(p).shape);
            CHECK(psi_shape_inverse(t) == p);
            if (!(t.descent_set() == p.descent_set())) descent_mismatch_somewhere = true;
        }
    }
    CHECK(descent_mismatch_somewhere);
}

TEST_CASE("the marked sets of the two constructions partition [n]") {
    // |I| + |S| = n, with I and S recomputed from their definitions.
    for (int n = 4; n <= 7; ++n) {
        for (const Permutation& p : generate_family(n, Family::Z)) {
            const Permutation inv = p.inverse();
            std::set<int> I, S{1};
            if (inv(1) > inv(n)) {
                const int j = inv(1);
                for (int i = 1; i <= n; ++i)
                    if (p(i) >= p(1)) I.insert(i);
                for (int i = j + 2; i <= n; ++i)
                    if (p(i - 1) < p(n)) I.insert(i);
                for (int i = 1; i <= n; ++i)
                    if (p(1) >= p(i) && p(i) > p(n)) S.insert(i + 1);
                // S is the complement of C(p)
                std::set<int> complement;
                for (int v = 1; v <= n; ++v)
                    if (!c_set(p).count(v)) complement.insert(v);
                CHECK(S == complement);
            } else {
                const int j = inv(n);
                for (int i = 1; i <= n; ++i)
                    if (p(i) <= p(1)) I.insert(i);
                for (int i = j + 2; i <= n; ++i)
                    if (p(i - 1) > p(n)) I.insert(i);
                for (int i = 1; i <= n; ++i)
                    if (p(1) <= p(i) && p(i) < p(n)) S.insert(i + 1);
                std::set<int> expected{1, 2};
                for (int v : c_set(p)) expected.insert(v);
                CHECK(S == expected);
            }
            CHECK(I.size() + S.size() == static_cast<std::size_t>(n));
        }
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(phi(Permutation::parse("1234")), std::invalid_argument);       // unimodal
    CHECK_THROWS_AS(phi(Permutation::parse("321")), std::invalid_argument);        // too small
    CHECK_THROWS_AS(psi_shape_map(Permutation::parse("2413")), std::invalid_argument);
    const StandardTableau wrong{Shape{{3, 1}, false}, {{1, 2, 4}, {3}}};
    CHECK_THROWS_AS(phi_inverse(wrong), std::invalid_argument);
}
