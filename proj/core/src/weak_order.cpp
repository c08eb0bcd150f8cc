#include "arcperm/weak_order.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "arcperm/arc_families.hpp"
#include "arcperm/tableaux.hpp"

namespace arcperm {

int FinitePoset::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels[i] == label) return i;
    return -1;
}

std::vector<std::vector<int>> FinitePoset::up_adjacency() const {
    std::vector<std::vector<int>> up(size());
    for (auto [lo, hi] : covers) up[lo].push_back(hi);
    return up;
}

std::vector<std::vector<int>> FinitePoset::down_adjacency() const {
    std::vector<std::vector<int>> down(size());
    for (auto [lo, hi] : covers) down[hi].push_back(lo);
    return down;
}

std::vector<int> FinitePoset::minimal_elements() const {
    std::vector<char> has_lower(size(), 0);
    for (auto [lo, hi] : covers) has_lower[hi] = 1;
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (!has_lower[i]) out.push_back(i);
    return out;
}

std::vector<int> FinitePoset::maximal_elements() const {
    std::vector<char> has_upper(size(), 0);
    for (auto [lo, hi] : covers) has_upper[lo] = 1;
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (!has_upper[i]) out.push_back(i);
    return out;
}

std::vector<int> FinitePoset::ranks() const {
    // Longest path from below, in topological order of the cover DAG.
    std::vector<int> indeg(size(), 0), rank(size(), 0);
    auto up = up_adjacency();
    for (auto [lo, hi] : covers) ++indeg[hi];
    std::vector<int> queue = minimal_elements();
    for (std::size_t q = 0; q < queue.size(); ++q) {
        const int x = queue[q];
        for (int y : up[x]) {
            rank[y] = std::max(rank[y], rank[x] + 1);
            if (--indeg[y] == 0) queue.push_back(y);
        }
    }
    if (static_cast<int>(queue.size()) != size())
        throw std::logic_error("FinitePoset::ranks: covers contain a cycle");
    return rank;
}

std::vector<std::vector<bool>> FinitePoset::leq_matrix() const {
    std::vector<std::vector<bool>> leq(size(), std::vector<bool>(size(), false));
    auto up = up_adjacency();
    for (int i = 0; i < size(); ++i) {
        std::vector<int> stack{i};
        leq[i][i] = true;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int y : up[x]) {
                if (!leq[i][y]) {
                    leq[i][y] = true;
                    stack.push_back(y);
                }
            }
        }
    }
    return leq;
}

bool weak_leq(const Permutation& p, const Permutation& t) {
    if (p.degree() != t.degree()) throw std::invalid_argument("weak_leq: degree mismatch");
    return p.length() + compose(p.inverse(), t).length() == t.length();
}

bool shape_domination_leq(const Permutation& p, const Permutation& t) {
    if (!is_unimodal(p) || !is_unimodal(t))
        throw std::invalid_argument("shape_domination_leq: unimodal input required");
    if (is_left_unimodal(p) && is_left_unimodal(t)) {
        if (shape_of_unimodal(p).contained_in(shape_of_unimodal(t))) return true;
    }
    const Permutation pc = p.conjugate_by_longest(), tc = t.conjugate_by_longest();
    if (is_left_unimodal(pc) && is_left_unimodal(tc)) {
        if (shape_of_unimodal(pc).contained_in(shape_of_unimodal(tc))) return true;
    }
    return false;
}

FinitePoset build_weak_hasse(int n, Ground ground) {
    if (ground == Ground::U && n > 9) throw std::invalid_argument("build_weak_hasse: U ground needs n <= 9");
    if (ground == Ground::S && n > 7) throw std::invalid_argument("build_weak_hasse: S ground needs n <= 7");
    std::vector<Permutation> elems =
        ground == Ground::U ? generate_family(n, Family::U) : symmetric_group(n);
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < static_cast<int>(elems.size()); ++i) index[elems[i].one_line()] = i;
    FinitePoset poset;
    for (const Permutation& p : elems) poset.labels.push_back(p.to_wire());
    for (int i = 0; i < static_cast<int>(elems.size()); ++i) {
        for (int s = 1; s < n; ++s) {
            if (elems[i](s) < elems[i](s + 1)) {  // right multiplication raises length
                auto it = index.find(elems[i].apply_position_swap(s).one_line());
                if (it != index.end()) poset.covers.emplace_back(i, it->second);
            }
        }
    }
    std::sort(poset.covers.begin(), poset.covers.end());
    return poset;
}

namespace {

// Unique minimal element of the given subset, or -1.
int unique_extremum(const std::vector<int>& candidates, const std::vector<std::vector<bool>>& leq,
                    bool want_min) {
    int best = -1;
    for (int x : candidates) {
        if (best == -1) {
            best = x;
            continue;
        }
        if (want_min ? leq[x][best] : leq[best][x]) best = x;
    }
    if (best == -1) return -1;
    for (int x : candidates)  // best must be comparable below/above all of them
        if (!(want_min ? leq[best][x] : leq[x][best])) return -1;
    return best;
}

bool self_dual_search(const FinitePoset& poset) {
    const int n = poset.size();
    const auto ranks = poset.ranks();
    const int top = *std::max_element(ranks.begin(), ranks.end());
    auto up = poset.up_adjacency(), down = poset.down_adjacency();

    std::vector<std::vector<int>> by_rank(top + 1);
    for (int i = 0; i < n; ++i) by_rank[ranks[i]].push_back(i);
    for (int r = 0; r <= top; ++r)
        if (by_rank[r].size() != by_rank[top - r].size()) return false;

    std::vector<std::vector<char>> cover(n, std::vector<char>(n, 0));
    for (auto [lo, hi] : poset.covers) cover[lo][hi] = 1;

    std::vector<int> order;  // by rank, so down-covers are assigned first
    for (int r = 0; r <= top; ++r)
        for (int x : by_rank[r]) order.push_back(x);

    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, std::size_t idx) -> bool {
        if (idx == order.size()) return true;
        const int x = order[idx];
        for (int y : by_rank[top - ranks[x]]) {
            if (used[y]) continue;
            if (up[x].size() != down[y].size() || down[x].size() != up[y].size()) continue;
            bool ok = true;
            for (int z : down[x]) {  // z covered by x  =>  f(x) covered by f(z)
                if (image[z] >= 0 && !cover[y][image[z]]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[x] = y;
            used[y] = 1;
            if (self(self, idx + 1)) return true;
            image[x] = -1;
            used[y] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace

LatticeReport check_lattice_properties(const FinitePoset& poset) {
    if (poset.minimal_elements().size() != 1 || poset.maximal_elements().size() != 1)
        throw std::invalid_argument("check_lattice_properties: unique min and max required");
    const int n = poset.size();
    const auto leq = poset.leq_matrix();
    const auto ranks = poset.ranks();

    LatticeReport report;
    report.is_graded = true;
    for (auto [lo, hi] : poset.covers)
        if (ranks[hi] != ranks[lo] + 1) report.is_graded = false;

    report.is_lattice = true;
    report.is_modular = report.is_graded;
    for (int a = 0; a < n && report.is_lattice; ++a) {
        for (int b = a + 1; b < n; ++b) {
            std::vector<int> uppers, lowers;
            for (int c = 0; c < n; ++c) {
                if (leq[a][c] && leq[b][c]) uppers.push_back(c);
                if (leq[c][a] && leq[c][b]) lowers.push_back(c);
            }
            const int join = unique_extremum(uppers, leq, true);
            const int meet = unique_extremum(lowers, leq, false);
            if (join < 0 || meet < 0) {
                report.is_lattice = false;
                report.is_modular = false;
                break;
            }
            if (report.is_modular && ranks[a] + ranks[b] != ranks[meet] + ranks[join])
                report.is_modular = false;
        }
    }
    report.is_self_dual = self_dual_search(poset);
    return report;
}

BigInt count_maximal_chains(const FinitePoset& poset, int lo, int hi) {
    const int n = poset.size();
    if (lo < 0 || hi < 0 || lo >= n || hi >= n)
        throw std::invalid_argument("count_maximal_chains: bad endpoints");
    auto up = poset.up_adjacency();
    // Down-set of hi, so the DP never leaves the interval.
    std::vector<char> below_hi(n, 0);
    {
        auto down = poset.down_adjacency();
        std::vector<int> stack{hi};
        below_hi[hi] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : down[x])
                if (!below_hi[y]) {
                    below_hi[y] = 1;
                    stack.push_back(y);
                }
        }
    }
    if (!below_hi[lo]) throw std::invalid_argument("count_maximal_chains: lo is not below hi");
    std::vector<BigInt> memo(n, -1);
    auto rec = [&](auto&& self, int x) -> const BigInt& {
        if (memo[x] >= 0) return memo[x];
        if (x == hi) return memo[x] = 1;
        BigInt total = 0;
        for (int y : up[x])
            if (below_hi[y]) total += self(self, y);
        return memo[x] = total;
    };
    return rec(rec, lo);
}

}  // namespace arcperm
