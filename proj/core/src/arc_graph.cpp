#include "arcperm/arc_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace arcperm {

int ArcGraph::index_of(const Permutation& p) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
    if (it == vertices.end() || !(*it == p)) return -1;
    return static_cast<int>(it - vertices.begin());
}

std::vector<std::tuple<int, int, int>> ArcGraph::edges() const {
    std::vector<std::tuple<int, int, int>> out;
    for (int u = 0; u < size(); ++u)
        for (auto [v, s] : adjacency[u])
            if (u < v) out.emplace_back(u, v, s);
    std::sort(out.begin(), out.end());
    return out;
}

ArcGraph build_arc_graph(int n) {
    if (n < 2 || n > 10) throw std::invalid_argument("build_arc_graph: need 2 <= n <= 10");
    ArcGraph g;
    g.n = n;
    g.vertices = generate_family(n, Family::A);
    g.adjacency.resize(g.vertices.size());
    for (int u = 0; u < g.size(); ++u) {
        for (int s = 1; s < n; ++s) {
            const int v = g.index_of(g.vertices[u].apply_position_swap(s));
            if (v >= 0) g.adjacency[u].emplace_back(v, s);
        }
    }
    return g;
}

namespace {

std::vector<int> bfs_distances(const ArcGraph& g, int src) {
    std::vector<int> dist(g.size(), -1);
    std::queue<int> queue;
    dist[src] = 0;
    queue.push(src);
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop();
        for (auto [y, s] : g.adjacency[x]) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push(y);
            }
        }
    }
    return dist;
}

}  // namespace

int graph_distance(const ArcGraph& g, int u, int v) {
    const auto dist = bfs_distances(g, u);
    if (dist[v] < 0) throw std::logic_error("graph_distance: disconnected");
    return dist[v];
}

int diameter(const ArcGraph& g) {
    int best = 0;
    for (int u = 0; u < g.size(); ++u) {
        const auto dist = bfs_distances(g, u);
        for (int d : dist) {
            if (d < 0) throw std::logic_error("diameter: disconnected");
            best = std::max(best, d);
        }
    }
    return best;
}

std::vector<int> geodesic_vertices(const ArcGraph& g, int u, int v) {
    const auto du = bfs_distances(g, u), dv = bfs_distances(g, v);
    std::vector<int> out;
    for (int w = 0; w < g.size(); ++w)
        if (du[w] >= 0 && dv[w] >= 0 && du[w] + dv[w] == du[v]) out.push_back(w);
    return out;
}

BigInt geodesic_count(const ArcGraph& g, int u, int v) {
    const auto du = bfs_distances(g, u);
    std::vector<int> order(g.size());
    for (int i = 0; i < g.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return du[a] < du[b]; });
    std::vector<BigInt> paths(g.size(), 0);
    paths[u] = 1;
    for (int x : order)
        for (auto [y, s] : g.adjacency[x])
            if (du[y] == du[x] + 1) paths[y] += paths[x];
    return paths[v];
}

bool DominanceVector::valid() const {
    if (n < 2 || static_cast<int>(entries.size()) != n - 1) return false;
    if (entries[0] < 0 || entries[0] >= n) return false;
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i] != 0 && entries[i] != 1) return false;
    return true;
}

long long DominanceVector::rank() const {
    long long r = 0, prefix = 0;
    for (int e : entries) {
        prefix += e;
        r += prefix;
    }
    return r;
}

std::vector<int> DominanceVector::prefix_sums() const {
    std::vector<int> out;
    int s = 0;
    for (int e : entries) out.push_back(s += e);
    return out;
}

std::string DominanceVector::to_string() const {
    std::string s;
    for (int e : entries) s += std::to_string(e);
    return s;
}

DominanceVector psi_vector(const Permutation& p) {
    const PsiCode c = psi_encode(p);
    DominanceVector v{c.n, {c.psi0}};
    for (std::uint8_t b : c.bits) v.entries.push_back(b);
    return v;
}

long long dominance_distance(const DominanceVector& a, const DominanceVector& b) {
    if (a.n != b.n) throw std::invalid_argument("dominance_distance: size mismatch");
    const auto pa = a.prefix_sums(), pb = b.prefix_sums();
    long long d = 0;
    for (std::size_t j = 0; j < pa.size(); ++j) d += std::abs(pa[j] - pb[j]);
    return d;
}

std::vector<DominanceVector> dominance_box(int n) {
    if (n < 2) throw std::invalid_argument("dominance_box: need n >= 2");
    std::vector<DominanceVector> box;
    for (int first = 0; first < n; ++first) {
        for (std::uint32_t mask = 0; mask < (1u << (n - 2)); ++mask) {
            DominanceVector v{n, {first}};
            for (int b = 0; b < n - 2; ++b) v.entries.push_back(mask >> b & 1u);
            box.push_back(std::move(v));
        }
    }
    std::sort(box.begin(), box.end());
    return box;
}

std::vector<std::pair<int, int>> dominance_hasse_covers(const std::vector<DominanceVector>& box) {
    std::vector<std::pair<int, int>> covers;
    auto dominated = [](const DominanceVector& a, const DominanceVector& b) {
        const auto pa = a.prefix_sums(), pb = b.prefix_sums();
        for (std::size_t j = 0; j < pa.size(); ++j)
            if (pa[j] > pb[j]) return false;
        return true;
    };
    for (int i = 0; i < static_cast<int>(box.size()); ++i)
        for (int j = 0; j < static_cast<int>(box.size()); ++j)
            if (box[j].rank() == box[i].rank() + 1 && dominated(box[i], box[j]))
                covers.emplace_back(i, j);
    std::sort(covers.begin(), covers.end());
    return covers;
}

bool check_iso_with_dominance(int n) {
    if (n < 3 || n > 8) throw std::invalid_argument("check_iso_with_dominance: need 3 <= n <= 8");
    const ArcGraph g = build_arc_graph(n);
    const auto box = dominance_box(n);
    std::map<std::vector<int>, int> box_index;
    for (int i = 0; i < static_cast<int>(box.size()); ++i) box_index[box[i].entries] = i;

    // psi must be a bijection onto the box.
    std::vector<int> vertex_to_box(g.size(), -1);
    std::vector<char> hit(box.size(), 0);
    for (int u = 0; u < g.size(); ++u) {
        const auto it = box_index.find(psi_vector(g.vertices[u]).entries);
        if (it == box_index.end() || hit[it->second]) return false;
        hit[it->second] = 1;
        vertex_to_box[u] = it->second;
    }

    // Every edge acts on the encoding in exactly one of three ways: it
    // switches two adjacent interior entries, flips the last entry, or
    // rewrites the first two entries with their sum fixed mod n.
    std::set<std::pair<int, int>> graph_edges;
    for (const auto& [u, v, s] : g.edges()) {
        const auto& a = box[vertex_to_box[u]].entries;
        const auto& b = box[vertex_to_box[v]].entries;
        int cases = 0;
        for (int i = 1; i + 1 < n - 1; ++i) {  // (i) swap entries i and i+1
            bool swap = a[i] == b[i + 1] && a[i + 1] == b[i] && a[i] != a[i + 1];
            for (int j = 0; swap && j < n - 1; ++j)
                if (j != i && j != i + 1 && a[j] != b[j]) swap = false;
            if (swap) ++cases;
        }
        {  // (ii) agree everywhere except the last entry
            bool tail = a[n - 2] != b[n - 2];
            for (int j = 0; tail && j < n - 2; ++j)
                if (a[j] != b[j]) tail = false;
            if (tail) ++cases;
        }
        {  // (iii) first two entries move with constant sum mod n
            bool head = (a[0] + a[1]) % n == (b[0] + b[1]) % n &&
                        (a[0] != b[0] || a[1] != b[1]);
            for (int j = 2; head && j < n - 1; ++j)
                if (a[j] != b[j]) head = false;
            if (head) ++cases;
        }
        if (cases != 1) return false;
        graph_edges.insert(std::minmax(vertex_to_box[u], vertex_to_box[v]));
    }

    std::set<std::pair<int, int>> model_edges;
    for (auto [i, j] : dominance_hasse_covers(box)) model_edges.insert(std::minmax(i, j));

    // Wrap edges: (0,0,rest) -- (n-1,1,rest).
    int wrap_count = 0;
    for (int i = 0; i < static_cast<int>(box.size()); ++i) {
        if (box[i].entries[0] != 0 || (n > 2 && box[i].entries[1] != 0)) continue;
        DominanceVector other = box[i];
        other.entries[0] = n - 1;
        other.entries[1] = 1;
        model_edges.insert(std::minmax(i, box_index.at(other.entries)));
        ++wrap_count;
    }
    if (wrap_count != (n >= 3 ? 1 << (n - 3) : 0)) return false;
    return graph_edges == model_edges;
}

bool dominance_distance_matches_bfs(int n) {
    const auto box = dominance_box(n);
    const int m = static_cast<int>(box.size());
    std::vector<std::vector<int>> adj(m);
    for (auto [i, j] : dominance_hasse_covers(box)) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    for (int src = 0; src < m; ++src) {
        std::vector<int> dist(m, -1);
        std::queue<int> queue;
        dist[src] = 0;
        queue.push(src);
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop();
            for (int y : adj[x])
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    queue.push(y);
                }
        }
        for (int v = 0; v < m; ++v)
            if (dist[v] != dominance_distance(box[src], box[v])) return false;
    }
    return true;
}

Permutation rho_action(int i, const Permutation& p) {
    const int n = p.degree();
    if (i < 0 || i > n - 2) throw std::invalid_argument("rho_action: index out of range");
    if (!is_arc(p)) throw std::invalid_argument("rho_action: not an arc permutation");
    Permutation moved = p.apply_position_swap(i + 1);
    return is_arc(moved) ? moved : p;
}

bool schreier_graph_check(int n) {
    const ArcGraph g = build_arc_graph(n);
    std::set<std::pair<int, int>> cayley, schreier;
    for (const auto& [u, v, s] : g.edges()) cayley.insert({u, v});
    for (int u = 0; u < g.size(); ++u) {
        for (int i = 0; i <= n - 2; ++i) {
            const Permutation moved = rho_action(i, g.vertices[u]);
            if (!(moved == g.vertices[u])) {
                const int v = g.index_of(moved);
                if (v < 0) return false;
                schreier.insert(std::minmax(u, v));
            }
        }
    }
    return cayley == schreier;
}

std::vector<std::vector<Permutation>> b_orbits(int n) {
    const ArcGraph g = build_arc_graph(n);
    std::vector<int> owner(g.size(), -1);
    std::vector<std::vector<Permutation>> orbits;
    for (int u = 0; u < g.size(); ++u) {
        if (owner[u] >= 0) continue;
        const int id = static_cast<int>(orbits.size());
        std::vector<int> stack{u};
        owner[u] = id;
        std::vector<Permutation> members;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            members.push_back(g.vertices[x]);
            for (int i = 1; i <= n - 2; ++i) {
                const int y = g.index_of(rho_action(i, g.vertices[x]));
                if (owner[y] < 0) {
                    owner[y] = id;
                    stack.push_back(y);
                }
            }
        }
        std::sort(members.begin(), members.end());
        orbits.push_back(std::move(members));
    }
    return orbits;
}

}  // namespace arcperm
