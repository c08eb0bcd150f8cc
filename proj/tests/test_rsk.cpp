#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "arcperm/arc_families.hpp"
#include "arcperm/rsk.hpp"

using namespace arcperm;

TEST_CASE("identity inserts into single rows") {
    const auto [P, Q] = rsk(Permutation::identity(5));
    CHECK(P.shape == Shape{{5}, false});
    CHECK(P == Q);
}

TEST_CASE("descent compatibility and common shape") {
    for (int n = 1; n <= 7; ++n) {
        for (const Permutation& p : symmetric_group(n)) {
            const auto [P, Q] = rsk(p);
            REQUIRE(P.valid());
            REQUIRE(Q.valid());
            CHECK(P.shape == Q.shape);
            CHECK(Q.descent_set() == p.descent_set());
            CHECK(P.descent_set() == p.inverse().descent_set());
        }
    }
}

TEST_CASE("left-unimodal permutations insert into hooks") {
    for (const Permutation& p : generate_family(6, Family::L)) {
        const auto [P, Q] = rsk(p);
        const int i = p.inverse().descent_set().size();
        // P is a hook with 1..i+1 down the first column.
        for (int r = 1; r < P.shape.rows(); ++r) CHECK(P.shape.parts[r] == 1);
        REQUIRE(P.shape.rows() == i + 1);
        for (int r = 0; r <= i; ++r) CHECK(P.rows[r][0] == r + 1);
    }
}

TEST_CASE("Knuth classes: L and U are closed, Z is not") {
    for (int n = 4; n <= 7; ++n) {
        std::map<std::string, std::vector<Permutation>> classes;
        for (const Permutation& p : symmetric_group(n))
            classes[rsk(p).first.to_string()].push_back(p);
        bool z_mixed_class_exists = false;
        for (const auto& [key, members] : classes) {
            int in_l = 0, in_u = 0, in_z = 0;
            for (const Permutation& p : members) {
                if (is_left_unimodal(p)) ++in_l;
                if (is_unimodal(p)) ++in_u;
                if (is_arc(p) && !is_unimodal(p)) ++in_z;
            }
            const int size = static_cast<int>(members.size());
            CHECK((in_l == 0 || in_l == size));
            CHECK((in_u == 0 || in_u == size));
            if (in_z > 0 && in_z < size) z_mixed_class_exists = true;
        }
        CHECK(z_mixed_class_exists);
    }
}
