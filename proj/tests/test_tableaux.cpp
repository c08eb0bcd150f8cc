#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "arcperm/arc_families.hpp"
#include "arcperm/tableaux.hpp"

using namespace arcperm;

namespace {

// All straight partitions of n, largest part first.
std::vector<std::vector<int>> partition_lists(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int rest, int cap) -> void {
        if (rest == 0) {
            out.push_back(current);
            return;
        }
        for (int next = std::min(rest, cap); next >= 1; --next) {
            current.push_back(next);
            self(self, rest - next, next);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

Shape t_shape(int n, int k) {
    Shape s{{k, 2}, false};
    for (int i = 0; i < n - k - 2; ++i) s.parts.push_back(1);
    return s;
}

}  // namespace

TEST_CASE("generate_syt counts") {
    CHECK(generate_syt(Shape{{2, 1}, false}).size() == 2);
    CHECK(generate_syt(Shape{{3, 2}, false}).size() == 5);
    CHECK(generate_syt(Shape{{3, 2}, true}).size() == 2);
    CHECK(generate_syt(Shape{{}, false}).size() == 1);  // the empty filling
    for (const StandardTableau& t : generate_syt(Shape{{3, 2}, true})) CHECK(t.valid());
}

TEST_CASE("hook-length formula matches enumeration") {
    CHECK(count_syt_hook_formula(Shape{{5}, false}) == 1);
    for (int n = 1; n <= 9; ++n)
        for (const auto& parts : partition_lists(n)) {
            const Shape s{parts, false};
            CHECK(count_syt_hook_formula(s) == BigInt(generate_syt(s).size()));
        }
    CHECK_THROWS_AS(count_syt_hook_formula(Shape{{3, 2}, true}), std::invalid_argument);
}

TEST_CASE("hook-plus-box counts") {
    // f^(k,2,1^(n-k-2)) = (k-1)(n-k-1)/(n-1) C(n,k), and they sum to |Z_n|.
    for (int n = 4; n <= 10; ++n) {
        BigInt total = 0;
        for (int k = 2; k <= n - 2; ++k) {
            const BigInt f = count_syt_hook_formula(t_shape(n, k));
            CHECK(f == exact_div(BigInt(k - 1) * (n - k - 1) * binomial(n, k), n - 1));
            total += f;
        }
        CHECK(total == pow2(n - 2) * (n - 4) + 2);
    }
    CHECK(count_syt_hook_formula(t_shape(5, 3)) == 5);
}

TEST_CASE("shifted staircase counts") {
    CHECK(count_shifted_staircase(3) == 1);
    CHECK(count_shifted_staircase(4) == 2);
    CHECK(count_shifted_staircase(5) == 12);
    CHECK(count_shifted_staircase(6) == 286);
    for (int n = 2; n <= 5; ++n)
        CHECK(count_shifted_staircase(n) == BigInt(generate_syt(staircase_shape(n)).size()));
}

TEST_CASE("tableau descent sets") {
    StandardTableau row{Shape{{5}, false}, {{1, 2, 3, 4, 5}}};
    CHECK(row.descent_set().positions().empty());
    StandardTableau column{Shape{{1, 1, 1, 1}, false}, {{1}, {2}, {3}, {4}}};
    CHECK(column.descent_set().positions() == std::vector<int>{1, 2, 3});
}

TEST_CASE("shape of a unimodal permutation") {
    CHECK(shape_of_unimodal(Permutation::parse("4356217")) == Shape{{5, 4, 1}, true});
    CHECK(shape_of_unimodal(Permutation::identity(5)) == Shape{{}, true});
    CHECK(shape_of_unimodal(Permutation::longest(5)) == staircase_shape(5));
    CHECK_THROWS_AS(shape_of_unimodal(Permutation::parse("2143")), std::invalid_argument);

    // Bijection between L_n and the shifted shapes inside the staircase.
    for (int n = 2; n <= 6; ++n) {
        std::set<std::vector<int>> images;
        for (const Permutation& p : generate_family(n, Family::L)) {
            const Shape s = shape_of_unimodal(p);
            CHECK(left_unimodal_from_shape(s, n) == p);
            images.insert(s.parts);
        }
        CHECK(images.size() == (1u << (n - 1)));
    }
    // Length = shape size on all of U_n.
    for (int n = 2; n <= 8; ++n)
        for (const Permutation& p : generate_family(n, Family::U))
            CHECK(p.length() == shape_of_unimodal(p).size());
}

TEST_CASE("replaying fillings of the staircase") {
    // The example filling of the degree-7 staircase multiplies out to 4356217.
    StandardTableau example{Shape{{5, 4, 1}, true},
                            {{1, 2, 3, 6, 8}, {4, 5, 9, 10}, {7}}};
    REQUIRE(example.valid());
    CHECK(replay_filling(example, 7) == Permutation::parse("4356217"));
    StandardTableau rowwise{Shape{{5, 4, 1}, true},
                            {{1, 2, 3, 4, 5}, {6, 7, 8, 9}, {10}}};
    CHECK(replay_filling(rowwise, 7) == Permutation::parse("4356217"));

    // Every linear extension of shape(p) replays to p.
    for (const Permutation& p : generate_family(6, Family::L)) {
        const Shape s = shape_of_unimodal(p);
        for (const StandardTableau& t : generate_syt(s)) CHECK(replay_filling(t, 6) == p);
    }
}

TEST_CASE("T_n and Hook_n") {
    CHECK(generate_T_n(4).size() == 2);
    CHECK(generate_T_n(5).size() == 10);
    CHECK(generate_T_n(3).empty());
    for (int n = 1; n <= 7; ++n) CHECK(generate_Hook_n(n).size() == (1u << (n - 1)));
    for (const StandardTableau& t : generate_T_n(6)) CHECK(t.valid());
}
