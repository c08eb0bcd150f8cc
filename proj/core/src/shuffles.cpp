#include "arcperm/shuffles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "arcperm/patterns.hpp"
#include "arcperm/tableaux.hpp"
#include "arcperm/weak_order.hpp"

namespace arcperm {

std::vector<Permutation> generate_shuffles(int k, int m) {
    if (k < 0 || m < 0 || k + m < 1) throw std::invalid_argument("generate_shuffles: bad sizes");
    const int n = k + m;
    std::vector<Permutation> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        std::vector<int> vals(n);
        int low = 1, high = k + 1;
        for (int i = 0; i < n; ++i) vals[i] = (mask >> i & 1u) ? low++ : high++;
        out.emplace_back(std::move(vals));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> generate_shuffle_union(int n) {
    std::set<Permutation> all;
    for (int k = 0; k <= n; ++k) {
        auto batch = generate_shuffles(k, n - k);
        all.insert(batch.begin(), batch.end());
    }
    return {all.begin(), all.end()};
}

const std::vector<Permutation>& shuffle_patterns() {
    static const std::vector<Permutation> pats{Permutation::parse("321"), Permutation::parse("2143"),
                                               Permutation::parse("2413")};
    return pats;
}

bool shuffle_pattern_check(int n) {
    return generate_shuffle_union(n) == avoidance_class(n, shuffle_patterns());
}

bool rectangle_filling_check(int k, int m) {
    if (k < 0 || m < 0 || k * m > 16) throw std::invalid_argument("rectangle_filling_check: k*m <= 16");
    const int n = k + m;
    if (n < 1) throw std::invalid_argument("rectangle_filling_check: empty rectangle");
    // Filled cell sets of partial fillings are the Young diagrams inside k x m.
    std::vector<std::vector<int>> diagrams;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int row, int cap) -> void {
        diagrams.push_back(parts);
        if (row == k) return;
        for (int len = cap; len >= 1; --len) {
            parts.push_back(len);
            self(self, row + 1, len);
            parts.pop_back();
        }
    };
    rec(rec, 0, m);

    std::set<Permutation> produced;
    const std::vector<Permutation> expected = generate_shuffles(k, m);
    for (const auto& diagram : diagrams) {
        if (diagram.empty()) {
            produced.insert(Permutation::identity(n));
            continue;
        }
        Permutation witness = Permutation::identity(0);
        bool first = true;
        // Every filling order must give the same product.
        for (const StandardTableau& t : generate_syt(Shape{diagram, false})) {
            std::vector<std::pair<int, int>> cell_of(static_cast<std::size_t>(t.size()) + 1);
            for (int r = 0; r < t.shape.rows(); ++r)
                for (int j = 0; j < t.shape.parts[r]; ++j)
                    cell_of[t.rows[r][j]] = {k - r, k + 1 + j};  // row label, column label
            Permutation p = Permutation::identity(n);
            for (int e = 1; e <= t.size(); ++e)
                p = p.swap_values(cell_of[e].first, cell_of[e].second);
            if (first) {
                witness = p;
                first = false;
            } else if (!(witness == p)) {
                return false;
            }
        }
        if (!std::binary_search(expected.begin(), expected.end(), witness)) return false;
        produced.insert(witness);
    }
    return std::vector<Permutation>(produced.begin(), produced.end()) == expected;
}

ShuffleOrderReport shuffle_weak_order_check(int n) {
    if (n < 2 || n > 7) throw std::invalid_argument("shuffle_weak_order_check: need 2 <= n <= 7");
    ShuffleOrderReport report;
    report.n = n;
    const std::vector<Permutation> elems = generate_shuffle_union(n);
    const int size = static_cast<int>(elems.size());
    std::vector<std::vector<bool>> leq(size, std::vector<bool>(size, false));
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b) leq[a][b] = weak_leq(elems[a], elems[b]);

    // Maximal elements must be exactly pi_k = (k+1)...n 1...k for 1 <= k <= n-1.
    std::set<Permutation> maxima;
    for (int a = 0; a < size; ++a) {
        bool maximal = true;
        for (int b = 0; b < size && maximal; ++b)
            if (b != a && leq[a][b]) maximal = false;
        if (maximal) maxima.insert(elems[a]);
    }
    std::set<Permutation> expected_maxima;
    for (int k = 1; k <= n - 1; ++k) {
        std::vector<int> vals;
        for (int v = k + 1; v <= n; ++v) vals.push_back(v);
        for (int v = 1; v <= k; ++v) vals.push_back(v);
        expected_maxima.insert(Permutation(std::move(vals)));
    }
    report.maxima_ok = maxima == expected_maxima;

    // Covers of the induced poset, by transitive reduction.
    FinitePoset poset;
    for (const Permutation& p : elems) poset.labels.push_back(p.to_wire());
    for (int a = 0; a < size; ++a) {
        for (int b = 0; b < size; ++b) {
            if (a == b || !leq[a][b]) continue;
            bool cover = true;
            for (int c = 0; c < size && cover; ++c)
                if (c != a && c != b && leq[a][c] && leq[c][b]) cover = false;
            if (cover) poset.covers.emplace_back(a, b);
        }
    }

    report.intervals_ok = true;
    report.chain_counts_ok = true;
    const int e_index = static_cast<int>(
        std::lower_bound(elems.begin(), elems.end(), Permutation::identity(n)) - elems.begin());
    for (int k = 1; k <= n - 1; ++k) {
        std::vector<int> vals;
        for (int v = k + 1; v <= n; ++v) vals.push_back(v);
        for (int v = 1; v <= k; ++v) vals.push_back(v);
        const Permutation pik(std::move(vals));
        const int top = static_cast<int>(
            std::lower_bound(elems.begin(), elems.end(), pik) - elems.begin());
        std::vector<Permutation> interval;
        for (int a = 0; a < size; ++a)
            if (leq[a][top]) interval.push_back(elems[a]);
        if (interval != generate_shuffles(k, n - k) ||
            BigInt(interval.size()) != binomial(n, k))
            report.intervals_ok = false;
        Shape rectangle{std::vector<int>(k, n - k), false};
        if (count_maximal_chains(poset, e_index, top) != count_syt_hook_formula(rectangle))
            report.chain_counts_ok = false;
    }
    return report;
}

}  // namespace arcperm
