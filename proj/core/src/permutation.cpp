#include "arcperm/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace arcperm {

void DescentSet::insert(int i) {
    if (i < 1 || i >= n) throw std::out_of_range("DescentSet::insert: position out of range");
    mask |= 1u << (i - 1);
}

int DescentSet::size() const { return __builtin_popcount(mask); }

std::vector<int> DescentSet::positions() const {
    std::vector<int> out;
    for (int i = 1; i < n; ++i)
        if (mask >> (i - 1) & 1u) out.push_back(i);
    return out;
}

std::string DescentSet::to_key() const {
    std::string s;
    for (int i : positions()) {
        if (!s.empty()) s += ',';
        s += std::to_string(i);
    }
    return s;
}

Permutation::Permutation(std::vector<int> one_line) : vals_(std::move(one_line)) {
    const int n = degree();
    if (n > 32) throw std::invalid_argument("Permutation: degree above 32 is unsupported");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : vals_) {
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("Permutation: not a bijection on {1..n}");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - i;
    return Permutation(std::move(v));
}

Permutation Permutation::adjacent_transposition(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("adjacent_transposition: need 1 <= i <= n-1");
    Permutation p = identity(n);
    std::swap(p.vals_[i - 1], p.vals_[i]);
    return p;
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> vals;
    const bool has_sep = text.find_first_of(", \t") != std::string::npos;
    if (has_sep) {
        std::string norm = text;
        std::replace(norm.begin(), norm.end(), ',', ' ');
        std::istringstream words(norm);
        int v;
        while (words >> v) vals.push_back(v);
        if (!words.eof()) throw std::invalid_argument("Permutation::parse: bad token");
    } else {
        if (text.empty()) throw std::invalid_argument("Permutation::parse: empty input");
        if (text.size() == 1) {
            if (!std::isdigit(static_cast<unsigned char>(text[0])))
                throw std::invalid_argument("Permutation::parse: bad token");
            vals.push_back(text[0] - '0');
        } else {
            for (char c : text) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw std::invalid_argument("Permutation::parse: bad token");
                vals.push_back(c - '0');
            }
        }
    }
    return Permutation(std::move(vals));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(vals_.size());
    for (int i = 1; i <= degree(); ++i) inv[vals_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::reversed() const {
    std::vector<int> v(vals_.rbegin(), vals_.rend());
    return Permutation(std::move(v));
}

Permutation Permutation::complemented() const {
    const int n = degree();
    std::vector<int> v(vals_.size());
    for (int i = 0; i < n; ++i) v[i] = n + 1 - vals_[i];
    return Permutation(std::move(v));
}

Permutation Permutation::conjugate_by_longest() const {
    // (w0 p w0)(i) = n+1 - p(n+1-i): reverse and complement.
    return reversed().complemented();
}

DescentSet Permutation::descent_set() const {
    DescentSet d{degree(), 0};
    for (int i = 1; i < degree(); ++i)
        if (vals_[i - 1] > vals_[i]) d.mask |= 1u << (i - 1);
    return d;
}

int Permutation::inversions() const {
    int count = 0;
    const int n = degree();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (vals_[i] > vals_[j]) ++count;
    return count;
}

int Permutation::major_index() const {
    int m = 0;
    for (int i = 1; i < degree(); ++i)
        if (vals_[i - 1] > vals_[i]) m += i;
    return m;
}

Permutation Permutation::apply_position_swap(int i) const {
    if (i < 1 || i >= degree()) throw std::out_of_range("apply_position_swap: position out of range");
    Permutation p = *this;
    std::swap(p.vals_[i - 1], p.vals_[i]);
    return p;
}

Permutation Permutation::swap_values(int a, int b) const {
    Permutation p = *this;
    int pa = -1, pb = -1;
    for (int i = 0; i < degree(); ++i) {
        if (p.vals_[i] == a) pa = i;
        if (p.vals_[i] == b) pb = i;
    }
    if (pa < 0 || pb < 0) throw std::out_of_range("swap_values: value out of range");
    std::swap(p.vals_[pa], p.vals_[pb]);
    return p;
}

std::string Permutation::to_wire() const {
    std::string s;
    const bool compact = degree() <= 9;
    for (int i = 0; i < degree(); ++i) {
        if (!compact && i > 0) s += ',';
        s += std::to_string(vals_[i]);
    }
    return s;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> v(p.degree());
    for (int i = 1; i <= p.degree(); ++i) v[i - 1] = p(q(i));
    return Permutation(std::move(v));
}

Permutation left_cycle_shift(const Permutation& p, int k) {
    const int n = p.degree();
    if (n == 0) return p;
    const int shift = ((k % n) + n) % n;
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = (p.one_line()[i] - 1 + shift) % n + 1;
    return Permutation(std::move(v));
}

std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.one_line()) {
        h ^= static_cast<std::size_t>(v);
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace arcperm
