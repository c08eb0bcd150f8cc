#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "arcperm/arc_families.hpp"
#include "arcperm/patterns.hpp"

using namespace arcperm;

namespace {

// Definition-level oracles, independent of the incremental walks used by the
// library: a prefix set is an interval (cyclically: at most one gap).
bool prefix_interval_oracle(const Permutation& p, bool cyclic) {
    const int n = p.degree();
    for (int j = 1; j <= n; ++j) {
        std::vector<char> in(n + 1, 0);
        for (int i = 1; i <= j; ++i) in[p(i)] = 1;
        if (cyclic) {
            int gaps = 0;  // members whose cyclic successor is missing
            for (int v = 1; v <= n; ++v)
                if (in[v] && !in[v == n ? 1 : v + 1]) ++gaps;
            if (gaps > 1) return false;
        } else {
            int lo = n + 1, hi = 0;
            for (int v = 1; v <= n; ++v)
                if (in[v]) {
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
            if (hi - lo + 1 != j) return false;
        }
    }
    return true;
}

bool arc_oracle(const Permutation& p) { return prefix_interval_oracle(p, true); }
bool left_unimodal_oracle(const Permutation& p) { return prefix_interval_oracle(p, false); }

}  // namespace

TEST_CASE("recognition examples") {
    CHECK(is_left_unimodal(Permutation::parse("342561")));
    CHECK_FALSE(is_left_unimodal(Permutation::parse("3412")));
    CHECK(is_unimodal(Permutation::parse("165243")));
    CHECK(is_arc(Permutation::parse("12543")));
    CHECK_FALSE(is_arc(Permutation::parse("125436")));
}

TEST_CASE("recognition matches the definition-level oracle") {
    for (int n = 1; n <= 7; ++n) {
        for (const Permutation& p : symmetric_group(n)) {
            CHECK(is_arc(p) == arc_oracle(p));
            CHECK(is_left_unimodal(p) == left_unimodal_oracle(p));
            CHECK(is_unimodal(p) == (left_unimodal_oracle(p) || left_unimodal_oracle(p.reversed())));
        }
    }
}

TEST_CASE("family sizes") {
    CHECK(generate_family(1, Family::L).size() == 1);
    CHECK(generate_family(1, Family::Z).empty());
    for (int n = 2; n <= 9; ++n) {
        CHECK(generate_family(n, Family::L).size() == (1u << (n - 1)));
        CHECK(generate_family(n, Family::U).size() == (1u << n) - 2);
        CHECK(generate_family(n, Family::A).size() == std::size_t(n) << (n - 2));
        CHECK(generate_family(n, Family::Z).size() ==
              std::size_t(((n - 4) << (n - 2)) + 2));
    }
    CHECK(generate_family(4, Family::Z) ==
          std::vector<Permutation>{Permutation::parse("2143"), Permutation::parse("3412")});
    CHECK(generate_family(3, Family::Z).empty());
}

TEST_CASE("families nest and the generated sets match raw filtering") {
    for (int n = 2; n <= 8; ++n) {
        const auto L = generate_family(n, Family::L), U = generate_family(n, Family::U),
                   A = generate_family(n, Family::A), Z = generate_family(n, Family::Z);
        CHECK(std::includes(U.begin(), U.end(), L.begin(), L.end()));
        CHECK(std::includes(A.begin(), A.end(), U.begin(), U.end()));
        std::vector<Permutation> from_sn, z_diff;
        for (const Permutation& p : symmetric_group(n))
            if (arc_oracle(p)) from_sn.push_back(p);
        CHECK(from_sn == A);
        std::set_difference(A.begin(), A.end(), U.begin(), U.end(), std::back_inserter(z_diff));
        CHECK(z_diff == Z);
    }
}

TEST_CASE("the arc family is closed under left rotation") {
    for (int n = 2; n <= 7; ++n)
        for (const Permutation& p : generate_family(n, Family::A))
            for (int k = 1; k <= n; ++k) CHECK(is_arc(left_cycle_shift(p, k)));
}

TEST_CASE("pattern characterizations") {
    for (int n = 2; n <= 7; ++n) {
        CHECK(avoidance_class(n, arc_patterns()) == generate_family(n, Family::A));
        CHECK(avoidance_class(n, unimodal_patterns()) == generate_family(n, Family::U));
        CHECK(avoidance_class(n, left_unimodal_patterns()) == generate_family(n, Family::L));
    }
}

TEST_CASE("descent-set characterizations of the families") {
    // L: Des(p^-1) is a prefix {1..i}; U: a prefix or a suffix; A: two-case
    // form with the positions of 1 and n deciding the case.
    auto is_prefix = [](const std::vector<int>& d) {
        for (std::size_t i = 0; i < d.size(); ++i)
            if (d[i] != static_cast<int>(i) + 1) return false;
        return true;
    };
    for (int n = 2; n <= 8; ++n) {
        for (const Permutation& p : symmetric_group(n)) {
            const Permutation q = p.inverse();
            const auto d = q.descent_set().positions();
            const bool prefix = is_prefix(d);
            bool suffix = true;
            for (std::size_t i = 0; i < d.size(); ++i)
                if (d[i] != n - static_cast<int>(d.size()) + static_cast<int>(i)) suffix = false;
            CHECK(is_left_unimodal(p) == prefix);
            CHECK(is_unimodal(p) == (prefix || suffix));

            bool contiguous = d.empty() || d.back() - d.front() + 1 == static_cast<int>(d.size());
            bool prefix_and_suffix = false;  // {1..i} followed by {j+1..n-1}
            {
                std::size_t split = 0;
                while (split < d.size() && d[split] == static_cast<int>(split) + 1) ++split;
                bool tail = true;
                for (std::size_t i = split; i < d.size(); ++i)
                    if (d[i] != n - static_cast<int>(d.size()) + static_cast<int>(i)) tail = false;
                prefix_and_suffix = tail;
            }
            const bool case1 = prefix_and_suffix && q(1) < q(n);
            const bool case2 = contiguous && q(1) > q(n);
            CHECK(is_arc(p) == (case1 || case2));
        }
    }
}

TEST_CASE("psi encoding") {
    CHECK(psi_encode(Permutation::parse("4352176")).to_string() == "3,0,1,0,0,0");
    const PsiCode id_code = psi_encode(Permutation::identity(6));
    CHECK(id_code.psi0 == 0);
    CHECK(id_code.bits == std::vector<std::uint8_t>{1, 1, 1, 1});
    CHECK_THROWS_AS(psi_encode(Permutation::parse("3142")), std::invalid_argument);

    for (int n = 2; n <= 7; ++n) {
        std::set<std::string> codes;
        for (const Permutation& p : generate_family(n, Family::A)) {
            const PsiCode c = psi_encode(p);
            CHECK(c.valid());
            CHECK(psi_decode(c) == p);
            codes.insert(c.to_string());
        }
        // bijectivity onto the full box
        CHECK(codes.size() == std::size_t(n) << (n - 2));
    }
    CHECK(PsiCode::parse("3,0,1,0,0,0").to_string() == "3,0,1,0,0,0");
    CHECK_THROWS_AS(PsiCode::parse("7,0"), std::invalid_argument);  // psi0 out of range
}

TEST_CASE("nu encoding") {
    CHECK(nu_encode(Permutation::parse("342561")).to_string() == "ADAAD");
    CHECK(nu_encode(Permutation::parse("12543")).to_string() == "A[AD]D");
    CHECK(nu_encode(Permutation::parse("65781423")).to_string() == "DAA[DA]DA");
    CHECK_FALSE(nu_encode(Permutation::parse("342561")).underline.has_value());
    CHECK(nu_encode(Permutation::parse("12543")).underline == 2);
    CHECK_THROWS_AS(nu_encode(Permutation::parse("3142")), std::invalid_argument);

    for (int n = 2; n <= 7; ++n) {
        std::set<std::string> words;
        for (const Permutation& p : generate_family(n, Family::A)) {
            const DescentWord w = nu_encode(p);
            CHECK(w.valid());
            // letters record the descent set
            for (int i = 1; i < n; ++i)
                CHECK((w.letters[i - 1] == 'D') == p.descent_set().contains(i));
            CHECK(w.underline.has_value() == !is_left_unimodal(p));
            CHECK(nu_decode(w) == p);
            words.insert(w.to_string());
        }
        CHECK(words.size() == std::size_t(n) << (n - 2));
    }
    CHECK(DescentWord::parse("A[AD]D").to_string() == "A[AD]D");
    CHECK_THROWS_AS(DescentWord::parse("A[AA]D"), std::invalid_argument);
    CHECK_THROWS_AS(DescentWord::parse("AXD"), std::invalid_argument);
}

TEST_CASE("descent-set counts in A_n") {
    DescentSet b4{4, 0};
    b4.insert(2);
    CHECK(count_by_descent_set(4, b4) == 3);
    CHECK(count_by_descent_set(4, DescentSet{4, 0}) == 1);
    {
        std::vector<Permutation> found;
        for (const Permutation& p : generate_family(4, Family::A))
            if (p.descent_set() == b4) found.push_back(p);
        CHECK(found == std::vector<Permutation>{Permutation::parse("1423"),
                                                Permutation::parse("2314"),
                                                Permutation::parse("3412")});
    }
    for (int n = 2; n <= 8; ++n) {
        std::vector<long long> brute(1u << (n - 1), 0);
        for (const Permutation& p : generate_family(n, Family::A))
            ++brute[p.descent_set().mask];
        for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask)
            CHECK(count_by_descent_set(n, DescentSet{n, mask}) == brute[mask]);
    }
}
