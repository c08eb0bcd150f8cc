#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "arcperm/arc_graph.hpp"
#include "arcperm/tableaux.hpp"
#include "arcperm/weak_order.hpp"

using namespace arcperm;

TEST_CASE("graph construction") {
    const ArcGraph g4 = build_arc_graph(4);
    CHECK(g4.size() == 16);
    CHECK(g4.edges().size() == 20);
    const ArcGraph g2 = build_arc_graph(2);
    CHECK(g2.size() == 2);
    CHECK(g2.edges().size() == 1);
    CHECK_THROWS_AS(build_arc_graph(11), std::invalid_argument);

    // every vertex has an incident sigma_{n-1} edge
    for (int n = 3; n <= 6; ++n) {
        const ArcGraph g = build_arc_graph(n);
        for (int u = 0; u < g.size(); ++u) {
            bool found = false;
            for (auto [v, s] : g.adjacency[u])
                if (s == n - 1) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("distances and the diameter") {
    const ArcGraph g4 = build_arc_graph(4);
    CHECK(graph_distance(g4, g4.index_of(Permutation::identity(4)),
                         g4.index_of(Permutation::longest(4))) == 6);
    CHECK(graph_distance(g4, 3, 3) == 0);
    CHECK(diameter(build_arc_graph(5)) == 10);
    for (int n = 2; n <= 8; ++n) CHECK(diameter(build_arc_graph(n)) == n * (n - 1) / 2);
}

TEST_CASE("inversions change by one along every edge") {
    for (int n = 3; n <= 7; ++n) {
        const ArcGraph g = build_arc_graph(n);
        for (const auto& [u, v, s] : g.edges())
            CHECK(std::abs(g.vertices[u].inversions() - g.vertices[v].inversions()) == 1);
    }
}

TEST_CASE("left rotation is a graph automorphism") {
    for (int n = 3; n <= 7; ++n) {
        const ArcGraph g = build_arc_graph(n);
        std::set<std::pair<int, int>> edges;
        for (const auto& [u, v, s] : g.edges()) edges.insert({u, v});
        for (int k = 1; k <= n; ++k) {
            for (const auto& [u, v, s] : g.edges()) {
                const int iu = g.index_of(left_cycle_shift(g.vertices[u], k));
                const int iv = g.index_of(left_cycle_shift(g.vertices[v], k));
                REQUIRE(iu >= 0);
                REQUIRE(iv >= 0);
                CHECK(edges.count(std::minmax(iu, iv)));
            }
        }
    }
}

TEST_CASE("geodesics between the identity and the longest element") {
    for (int n = 3; n <= 7; ++n) {
        const ArcGraph g = build_arc_graph(n);
        const int e = g.index_of(Permutation::identity(n));
        const int w0 = g.index_of(Permutation::longest(n));
        std::vector<Permutation> hull;
        for (int w : geodesic_vertices(g, e, w0)) hull.push_back(g.vertices[w]);
        CHECK(hull == generate_family(n, Family::U));
        CHECK(geodesic_count(g, e, w0) == 2 * count_shifted_staircase(n));
    }
    const ArcGraph g4 = build_arc_graph(4);
    CHECK(geodesic_count(g4, g4.index_of(Permutation::identity(4)),
                         g4.index_of(Permutation::longest(4))) == 4);
}

TEST_CASE("dominance vectors") {
    const DominanceVector v{4, {3, 0, 0}};
    CHECK(v.rank() == 9);
    CHECK(dominance_distance(v, v) == 0);
    CHECK(psi_vector(Permutation::parse("4352176")).to_string() == "301000");

    const auto box = dominance_box(4);
    CHECK(box.size() == 16);
    for (const DominanceVector& a : box)
        for (const DominanceVector& b : box) {
            CHECK(dominance_distance(a, b) == dominance_distance(b, a));
            CHECK(dominance_distance(a, b) >= std::abs(a.rank() - b.rank()));
        }
    CHECK(dominance_distance_matches_bfs(4));
    CHECK(dominance_distance_matches_bfs(5));
}

TEST_CASE("the encoded graph is the dominance Hasse diagram plus wrap edges") {
    for (int n = 3; n <= 7; ++n) CHECK(check_iso_with_dominance(n));
}

TEST_CASE("affine generator action") {
    const Permutation p = Permutation::parse("12543");
    CHECK_THROWS_AS(rho_action(0, Permutation::parse("3142")), std::invalid_argument);
    CHECK_THROWS_AS(rho_action(7, p), std::invalid_argument);

    for (int n = 3; n <= 6; ++n) {
        for (const Permutation& q : generate_family(n, Family::A)) {
            // rho_{n-2} always moves: right multiplication by sigma_{n-1} stays inside
            CHECK(rho_action(n - 2, q) == q.apply_position_swap(n - 1));
            for (int i = 0; i <= n - 2; ++i) CHECK(rho_action(i, rho_action(i, q)) == q);
        }
    }

    // braid relations on all of A_6
    const int n = 6;
    for (const Permutation& q : generate_family(n, Family::A)) {
        for (int i = 1; i < n - 3; ++i) {
            Permutation r = q;
            for (int rep = 0; rep < 3; ++rep) r = rho_action(i + 1, rho_action(i, r));
            CHECK(r == q);
        }
        for (int i : {0, n - 3}) {
            Permutation r = q;
            for (int rep = 0; rep < 4; ++rep) r = rho_action(i + 1, rho_action(i, r));
            CHECK(r == q);
        }
    }
}

TEST_CASE("orbit structure") {
    for (int n = 3; n <= 6; ++n) CHECK(schreier_graph_check(n));
    const auto orbits4 = b_orbits(4);
    CHECK(orbits4.size() == 4);
    for (const auto& orbit : orbits4) CHECK(orbit.size() == 4);
    const auto orbits5 = b_orbits(5);
    CHECK(orbits5.size() == 5);
    for (const auto& orbit : orbits5) CHECK(orbit.size() == 8);
    for (int n = 3; n <= 6; ++n)
        for (const auto& orbit : b_orbits(n)) {
            const int first = orbit.front()(1);
            for (const Permutation& p : orbit) CHECK(p(1) == first);
        }

    // the full action is transitive: one orbit under all generators
    for (int n = 3; n <= 6; ++n) {
        const ArcGraph g = build_arc_graph(n);
        std::vector<char> seen(g.size(), 0);
        std::vector<int> stack{g.index_of(Permutation::identity(n))};
        seen[stack[0]] = 1;
        int reached = 0;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            ++reached;
            for (int i = 0; i <= n - 2; ++i) {
                const int y = g.index_of(rho_action(i, g.vertices[x]));
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        CHECK(reached == g.size());
    }
}
