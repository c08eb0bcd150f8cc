#include "arcperm/characters.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "arcperm/arc_families.hpp"

namespace arcperm {

int Partition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::count_big() const {
    return static_cast<int>(std::count_if(parts.begin(), parts.end(), [](int p) { return p > 1; }));
}

int Partition::count_ones() const {
    return static_cast<int>(std::count(parts.begin(), parts.end(), 1));
}

bool Partition::valid() const {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) return false;
        if (i > 0 && parts[i] > parts[i - 1]) return false;
    }
    return true;
}

std::vector<int> Partition::prefix_sums() const {
    std::vector<int> out;
    int s = 0;
    for (int p : parts) out.push_back(s += p);
    return out;
}

std::vector<int> Partition::marker_positions() const { return prefix_sums(); }

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int rest, int cap) -> void {
        if (rest == 0) {
            out.push_back(Partition{current});
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

namespace {

bool v_shaped(const std::vector<int>& seq) {
    std::size_t i = 1;
    while (i < seq.size() && seq[i] < seq[i - 1]) ++i;
    for (; i < seq.size(); ++i)
        if (seq[i] < seq[i - 1]) return false;
    return true;
}

void require_mu(const Partition& mu, int n) {
    if (!mu.valid() || mu.n() != n) throw std::invalid_argument("partition does not match the degree");
}

}  // namespace

bool is_mu_left_unimodal(const Permutation& p, const Partition& mu) {
    require_mu(mu, p.degree());
    const Permutation inv = p.inverse();
    int start = 0;
    for (int part : mu.parts) {
        std::vector<int> seq;
        for (int v = start + 1; v <= start + part; ++v) seq.push_back(inv(v));
        if (!v_shaped(seq)) return false;
        start += part;
    }
    return true;
}

bool in_l_mu_inverse(const Permutation& p, const Partition& mu) {
    return is_mu_left_unimodal(p.inverse(), mu);
}

bool is_mu_unimodal_tableau(const StandardTableau& t, const Partition& mu) {
    require_mu(mu, t.size());
    const DescentSet des = t.descent_set();
    int start = 0;
    for (int part : mu.parts) {
        bool in_prefix = true;
        for (int k = 1; k < part; ++k) {
            const bool d = des.contains(start + k);
            if (d && !in_prefix) return false;
            if (!d) in_prefix = false;
        }
        start += part;
    }
    return true;
}

BigInt count_arc_mu(int n, const Partition& mu) {
    require_mu(mu, n);
    if (n < 2) throw std::invalid_argument("count_arc_mu: need n >= 2");
    const int r = mu.count_big(), s = mu.count_ones();
    BigInt prod = 1;
    for (int i = 0; i < r; ++i) prod *= mu.parts[i];
    // prod * 2^{r+s} * (r + s/4 - sum 1/mu_i), over the denominator 4 prod.
    BigInt numerator = 4 * r * prod + s * prod;
    for (int i = 0; i < r; ++i) numerator -= 4 * exact_div(prod, mu.parts[i]);
    return exact_div(prod * pow2(r + s) * numerator, 4 * prod);
}

long long signed_sum_arc_mu(int n, const Partition& mu) {
    require_mu(mu, n);
    const auto markers = mu.marker_positions();
    long long sum = 0;
    for (const Permutation& p : generate_family(n, Family::A)) {
        if (!in_l_mu_inverse(p, mu)) continue;
        int outside = 0;
        for (int pos : p.descent_set().positions())
            if (!std::binary_search(markers.begin(), markers.end(), pos)) ++outside;
        sum += outside % 2 ? -1 : 1;
    }
    return sum;
}

long long regev_character(int n, const Partition& mu) {
    require_mu(mu, n);
    if (n < 2) throw std::invalid_argument("regev_character: need n >= 2");
    for (int p : mu.parts)
        if (p % 2 == 0) return 0;
    const int t = static_cast<int>(mu.parts.size());
    const long long s = mu.count_ones();
    return s == 0 ? 0 : s << (t - 2);
}

long long mn_character(const Shape& lambda, const Partition& mu) {
    if (lambda.shifted) throw std::invalid_argument("mn_character: straight shapes only");
    if (!lambda.valid() || !mu.valid() || lambda.size() != mu.n())
        throw std::invalid_argument("mn_character: size mismatch");
    std::map<std::pair<std::vector<int>, std::size_t>, long long> memo;
    auto rec = [&](auto&& self, std::vector<int> shape, std::size_t idx) -> long long {
        if (shape.empty()) return 1;
        const auto key = std::make_pair(shape, idx);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const int strip = mu.parts[idx];
        const int rows = static_cast<int>(shape.size());
        std::vector<int> beta(rows);
        for (int i = 0; i < rows; ++i) beta[i] = shape[i] + (rows - 1 - i);
        long long total = 0;
        for (int i = 0; i < rows; ++i) {
            const int target = beta[i] - strip;
            if (target < 0) continue;
            if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
            int crossings = 0;  // strip height parity
            for (int b : beta)
                if (b > target && b < beta[i]) ++crossings;
            std::vector<int> nbeta = beta;
            nbeta[i] = target;
            std::sort(nbeta.rbegin(), nbeta.rend());
            std::vector<int> nshape;
            for (int k = 0; k < rows; ++k) {
                const int part = nbeta[k] - (rows - 1 - k);
                if (part > 0) nshape.push_back(part);
            }
            const long long sub = self(self, std::move(nshape), idx + 1);
            total += crossings % 2 ? -sub : sub;
        }
        memo[key] = total;
        return total;
    };
    return rec(rec, lambda.parts, 0);
}

long long irreducible_character(const Shape& lambda, const Partition& mu) {
    if (lambda.size() != mu.n()) throw std::invalid_argument("irreducible_character: size mismatch");
    const auto markers = mu.marker_positions();
    long long sum = 0;
    for (const StandardTableau& t : generate_syt(lambda)) {
        if (!is_mu_unimodal_tableau(t, mu)) continue;
        int outside = 0;
        for (int pos : t.descent_set().positions())
            if (!std::binary_search(markers.begin(), markers.end(), pos)) ++outside;
        sum += outside % 2 ? -1 : 1;
    }
    return sum;
}

RegevReport verify_regev(int n) {
    RegevReport report;
    report.n = n;
    report.pass = true;
    for (const Partition& mu : partitions_of(n)) {
        RegevRow row;
        row.mu = mu;
        row.closed_form = regev_character(n, mu);
        row.signed_sum = signed_sum_arc_mu(n, mu);
        long long total = 0;
        for (int k = 1; k <= n; ++k) {
            Shape hook{{k}, false};
            for (int i = 0; i < n - k; ++i) hook.parts.push_back(1);
            const long long value = mn_character(hook, mu);
            total += value;
            if (k >= 2 && k <= n - 1) total += value;  // interior hooks enter twice
        }
        for (int k = 2; k <= n - 2; ++k) {
            Shape shape{{k, 2}, false};
            for (int i = 0; i < n - k - 2; ++i) shape.parts.push_back(1);
            total += mn_character(shape, mu);
        }
        row.decomposition = total;
        row.pass = row.closed_form == row.decomposition && row.closed_form == row.signed_sum;
        report.pass = report.pass && row.pass;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace arcperm
