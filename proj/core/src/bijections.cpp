#include "arcperm/bijections.hpp"

#include <algorithm>
#include <stdexcept>

#include "arcperm/arc_families.hpp"

namespace arcperm {

namespace {

void require_z_member(const Permutation& p) {
    if (p.degree() < 4 || !is_arc(p) || is_unimodal(p))
        throw std::invalid_argument("expected a non-unimodal arc permutation of degree >= 4");
}

void require_t_member(const StandardTableau& t) {
    const int n = t.size();
    bool ok = t.valid() && n >= 4 && t.shape.rows() >= 2 && !t.shape.shifted &&
              t.shape.parts[0] >= 2 && t.shape.parts[1] == 2;
    for (int r = 2; ok && r < t.shape.rows(); ++r) ok = t.shape.parts[r] == 1;
    if (!ok) throw std::invalid_argument("expected a standard tableau of shape (k,2,1^(n-k-2))");
}

// Tableau of shape (k,2,1^(n-k-2)): the given set fills the first row, the
// corner entry sits at (2,2), and the remaining values run down the first
// column in increasing order. The cell (1,1) belongs to both lines.
StandardTableau assemble(int n, const std::set<int>& first_row, int corner) {
    std::vector<int> column;
    for (int v = 1; v <= n; ++v)
        if (v != corner && !first_row.count(v)) column.push_back(v);
    const int k = static_cast<int>(first_row.size());
    if (k < 2 || n - k - 2 < 0) throw std::invalid_argument("assemble: row set has invalid size");
    Shape shape{{k, 2}, false};
    for (int i = 0; i < n - k - 2; ++i) shape.parts.push_back(1);
    StandardTableau t{shape, {}};
    t.rows.emplace_back(first_row.begin(), first_row.end());
    t.rows.push_back({column[0], corner});
    for (std::size_t i = 1; i < column.size(); ++i) t.rows.push_back({column[i]});
    if (!t.valid()) throw std::invalid_argument("assemble: the data does not fill a standard tableau");
    return t;
}

std::set<int> first_column_set(const StandardTableau& t) {
    std::set<int> out{t.rows[0][0]};
    for (int r = 1; r < t.shape.rows(); ++r) out.insert(t.rows[r][0]);
    return out;
}

// Rebuild the permutation from its marked positions. Positions 2..j-1 grow
// the prefix interval from p(1) at the top or bottom end; position j takes 1
// or n; positions j+1..n-1 interleave the two leftover runs; the runs meet at
// position n. Phase-one positions are marked at i + phase1_offset, phase-two
// positions at p + 1. p(1) is forced by the phase-one mark counts.
Permutation rebuild(int n, int j, bool extreme_is_min, const std::set<int>& marks,
                    bool mark_means_down, int phase1_offset) {
    if (j < 2 || j > n - 1) throw std::invalid_argument("rebuild: corner position out of range");
    int marked1 = 0;
    for (int i = 2; i < j; ++i)
        if (marks.count(i + phase1_offset)) ++marked1;
    const int unmarked1 = (j - 2) - marked1;
    const int ups1 = mark_means_down ? unmarked1 : marked1;
    const int downs1 = mark_means_down ? marked1 : unmarked1;
    const int m = extreme_is_min ? n - ups1 : 1 + downs1;

    std::vector<int> vals(n, 0);
    vals[0] = m;
    int lo = m, hi = m;
    for (int i = 2; i < j; ++i) {
        const bool down = marks.count(i + phase1_offset) ? mark_means_down : !mark_means_down;
        vals[i - 1] = down ? --lo : ++hi;
    }
    vals[j - 1] = extreme_is_min ? 1 : n;

    int up_run = extreme_is_min ? 2 : hi + 1;
    int down_run = extreme_is_min ? lo - 1 : n - 1;
    for (int p = j + 1; p < n; ++p) {
        const bool down = marks.count(p + 1) ? mark_means_down : !mark_means_down;
        vals[p - 1] = down ? down_run-- : up_run++;
    }
    if (up_run != down_run) throw std::invalid_argument("rebuild: mark counts are inconsistent");
    vals[n - 1] = up_run;
    return Permutation(std::move(vals));
}

}  // namespace

StandardTableau phi(const Permutation& p) {
    require_z_member(p);
    const int n = p.degree();
    const Permutation inv = p.inverse();
    std::set<int> marked;
    if (inv(1) > inv(n)) {
        const int j = inv(1);
        for (int i = 1; i <= n; ++i)
            if (p(i) >= p(1)) marked.insert(i);
        for (int i = j + 2; i <= n; ++i)
            if (p(i - 1) < p(n)) marked.insert(i);
        return assemble(n, marked, j + 1);  // I fills the first row
    }
    const int j = inv(n);
    for (int i = 1; i <= n; ++i)
        if (p(i) <= p(1)) marked.insert(i);
    for (int i = j + 2; i <= n; ++i)
        if (p(i - 1) > p(n)) marked.insert(i);
    // I fills the first column; its complement goes into the first row.
    std::set<int> row{1};
    for (int v = 1; v <= n; ++v)
        if (v != j + 1 && !marked.count(v)) row.insert(v);
    return assemble(n, row, j + 1);
}

Permutation phi_inverse(const StandardTableau& t) {
    require_t_member(t);
    const int n = t.size();
    const int j = t.rows[1][1] - 1;
    const std::set<int> row(t.rows[0].begin(), t.rows[0].end());
    if (row.count(j)) {
        // j in the first row: case p^-1(1) < p^-1(n); I is the first column,
        // marking the weakly small prefix letters and the late descents.
        return rebuild(n, j, false, first_column_set(t), true, 0);
    }
    // Case p^-1(1) > p^-1(n): I is the first row, marking the letters weakly
    // above p(1) and the late ascents.
    return rebuild(n, j, true, row, false, 0);
}

std::set<int> c_set(const Permutation& p) {
    if (!is_arc(p)) throw std::invalid_argument("c_set: not an arc permutation");
    const int n = p.degree();
    std::set<int> C;
    std::vector<char> seen(n + 1, 0);
    for (int i = 3; i <= n; ++i) {
        seen[p(i - 2)] = 1;
        const int target = (p(i - 1) - 2 + n) % n + 1;  // cyclic predecessor of p(i-1)
        if (seen[target]) C.insert(i);
    }
    return C;
}

StandardTableau psi_shape_map(const Permutation& p) {
    require_z_member(p);
    const int n = p.degree();
    const Permutation inv = p.inverse();
    std::set<int> S{1};
    if (inv(1) > inv(n)) {
        const int j = inv(1);
        for (int i = 1; i <= n; ++i)
            if (p(1) >= p(i) && p(i) > p(n)) S.insert(i + 1);
        // S fills the first column.
        std::set<int> row{1};
        for (int v = 1; v <= n; ++v)
            if (v != j + 1 && !S.count(v)) row.insert(v);
        return assemble(n, row, j + 1);
    }
    const int j = inv(n);
    for (int i = 1; i <= n; ++i)
        if (p(1) <= p(i) && p(i) < p(n)) S.insert(i + 1);
    return assemble(n, S, j + 1);  // S fills the first row
}

Permutation psi_shape_inverse(const StandardTableau& t) {
    require_t_member(t);
    const int n = t.size();
    const int j = t.rows[1][1] - 1;
    if (t.rows[1][0] == 2) {
        // 2 at (2,1): case p^-1(1) > p^-1(n); S is the first column and marks
        // the positions whose letter lies in (p(n), p(1)], one step later.
        return rebuild(n, j, true, first_column_set(t), true, 1);
    }
    if (t.rows[0][1] != 2) throw std::invalid_argument("psi_shape_inverse: entry 2 misplaced");
    // 2 at (1,2): case p^-1(1) < p^-1(n); S is the first row and marks the
    // positions whose letter lies in [p(1), p(n)), one step later.
    const std::set<int> S(t.rows[0].begin(), t.rows[0].end());
    return rebuild(n, j, false, S, false, 1);
}

}  // namespace arcperm
