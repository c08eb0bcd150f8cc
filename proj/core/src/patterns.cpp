#include "arcperm/patterns.hpp"

#include <algorithm>

namespace arcperm {

namespace {

// For each pattern index j, the indices of the already-placed pattern entries
// whose values are the closest below / above pattern(j+1). A candidate letter
// for slot j must lie strictly between the letters matched at those indices;
// this pins the full order-isomorphism incrementally.
struct Bounds {
    std::vector<int> below, above;  // -1 when absent
};

Bounds value_bounds(const Permutation& pat) {
    const int m = pat.degree();
    Bounds b{std::vector<int>(m, -1), std::vector<int>(m, -1)};
    for (int j = 0; j < m; ++j) {
        int lo_val = 0, hi_val = m + 1;
        for (int i = 0; i < j; ++i) {
            if (pat(i + 1) < pat(j + 1) && pat(i + 1) > lo_val) {
                lo_val = pat(i + 1);
                b.below[j] = i;
            }
            if (pat(i + 1) > pat(j + 1) && pat(i + 1) < hi_val) {
                hi_val = pat(i + 1);
                b.above[j] = i;
            }
        }
    }
    return b;
}

bool search(const Permutation& p, const Bounds& b, std::vector<int>& matched, int j, int start) {
    const int n = p.degree();
    const int m = static_cast<int>(matched.size());
    if (j == m) return true;
    for (int pos = start; pos <= n - (m - j) + 1; ++pos) {
        const int v = p(pos);
        const int lo = b.below[j] >= 0 ? matched[b.below[j]] : 0;
        const int hi = b.above[j] >= 0 ? matched[b.above[j]] : n + 1;
        if (v <= lo || v >= hi) continue;
        matched[j] = v;
        if (search(p, b, matched, j + 1, pos + 1)) return true;
    }
    return false;
}

}  // namespace

bool contains_pattern(const Permutation& p, const Permutation& pattern) {
    const int m = pattern.degree();
    if (m == 0) return true;
    if (m > p.degree()) return false;
    const Bounds b = value_bounds(pattern);
    std::vector<int> matched(m, 0);
    return search(p, b, matched, 0, 1);
}

bool avoids_all(const Permutation& p, const std::vector<Permutation>& patterns) {
    return std::none_of(patterns.begin(), patterns.end(),
                        [&](const Permutation& pat) { return contains_pattern(p, pat); });
}

std::vector<Permutation> avoidance_class(int n, const std::vector<Permutation>& patterns) {
    std::vector<Permutation> out;
    for (const Permutation& p : symmetric_group(n))
        if (avoids_all(p, patterns)) out.push_back(p);
    return out;
}

}  // namespace arcperm
