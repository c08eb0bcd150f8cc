#pragma once

#include <string>
#include <vector>

#include "arcperm/arc_families.hpp"
#include "arcperm/bigint.hpp"
#include "arcperm/permutation.hpp"

namespace arcperm {

/// The subgraph of the right Cayley graph of S_n (adjacent transpositions)
/// induced by the arc permutations. Vertices are sorted lexicographically;
/// edges carry the generator index.
struct ArcGraph {
    int n = 0;
    std::vector<Permutation> vertices;
    std::vector<std::vector<std::pair<int, int>>> adjacency;  // (neighbor, sigma index)

    int size() const { return static_cast<int>(vertices.size()); }
    int index_of(const Permutation& p) const;

    /// Undirected edges (u < v) with generator labels, sorted.
    std::vector<std::tuple<int, int, int>> edges() const;
};

ArcGraph build_arc_graph(int n);  // 2 <= n <= 10

int graph_distance(const ArcGraph& g, int u, int v);
int diameter(const ArcGraph& g);

/// Vertices w with d(u,w) + d(w,v) = d(u,v), sorted.
std::vector<int> geodesic_vertices(const ArcGraph& g, int u, int v);
/// Number of shortest u-v paths, by DP over BFS layers.
BigInt geodesic_count(const ArcGraph& g, int u, int v);

/// Point of the box {0..n-1} x {0,1}^{n-2} carrying the dominance order.
struct DominanceVector {
    int n = 0;
    std::vector<int> entries;  // entries[0] in 0..n-1, the rest in {0,1}

    bool valid() const;
    long long rank() const;  // sum of all prefix sums
    std::vector<int> prefix_sums() const;
    std::string to_string() const;  // concatenated digits, e.g. "300"

    friend bool operator==(const DominanceVector&, const DominanceVector&) = default;
    friend auto operator<=>(const DominanceVector&, const DominanceVector&) = default;
};

DominanceVector psi_vector(const Permutation& p);

/// Prefix-sum absolute-difference distance; equals the Hasse-diagram BFS
/// distance of the dominance order on the box.
long long dominance_distance(const DominanceVector& a, const DominanceVector& b);

std::vector<DominanceVector> dominance_box(int n);
/// Hasse covers of the dominance order on the box (indices into the box list).
std::vector<std::pair<int, int>> dominance_hasse_covers(const std::vector<DominanceVector>& box);

/// The encoding maps the arc graph onto the dominance Hasse diagram plus
/// exactly 2^{n-3} wrap edges joining (0,0,rest) to (n-1,1,rest).
bool check_iso_with_dominance(int n);  // 3 <= n <= 8

/// Exhaustive check that dominance_distance equals BFS distance on the Hasse
/// diagram of the box, all pairs.
bool dominance_distance_matches_bfs(int n);

/// Generator of the affine action: p * sigma_{i+1} when that stays an arc
/// permutation, p otherwise. Index i ranges over 0..n-2.
Permutation rho_action(int i, const Permutation& p);

/// The orbit edges of the rho generators (loops removed) coincide with X_n.
bool schreier_graph_check(int n);

/// Orbits of the parabolic subgroup generated by rho_1..rho_{n-2}; these are
/// the fibers { p : p(1) = k }, each of size 2^{n-2}.
std::vector<std::vector<Permutation>> b_orbits(int n);

}  // namespace arcperm
