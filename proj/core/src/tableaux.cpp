#include "arcperm/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace arcperm {

int Shape::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Shape::valid() const {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) return false;
        if (i > 0) {
            if (shifted ? parts[i] >= parts[i - 1] : parts[i] > parts[i - 1]) return false;
        }
    }
    return true;
}

bool Shape::contained_in(const Shape& outer) const {
    if (shifted != outer.shifted) throw std::invalid_argument("Shape::contained_in: mixed kinds");
    if (parts.size() > outer.parts.size()) return false;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i] > outer.parts[i]) return false;
    return true;
}

Shape staircase_shape(int n) {
    Shape s{{}, true};
    for (int i = n - 1; i >= 1; --i) s.parts.push_back(i);
    return s;
}

bool StandardTableau::valid() const {
    if (!shape.valid()) return false;
    if (static_cast<int>(rows.size()) != shape.rows()) return false;
    const int total = shape.size();
    std::vector<char> seen(static_cast<std::size_t>(total) + 1, 0);
    for (int r = 0; r < shape.rows(); ++r) {
        if (static_cast<int>(rows[r].size()) != shape.parts[r]) return false;
        for (std::size_t j = 0; j < rows[r].size(); ++j) {
            const int e = rows[r][j];
            if (e < 1 || e > total || seen[e]) return false;
            seen[e] = 1;
            if (j > 0 && rows[r][j - 1] >= e) return false;
        }
    }
    // Column comparisons: below (r,j) sits (r+1,j) for straight shapes and
    // (r+1,j-1) for shifted ones (row r+1 is indented one extra cell).
    for (int r = 0; r + 1 < shape.rows(); ++r) {
        for (std::size_t j = 0; j < rows[r].size(); ++j) {
            const int jb = shape.shifted ? static_cast<int>(j) - 1 : static_cast<int>(j);
            if (jb >= 0 && jb < static_cast<int>(rows[r + 1].size()) &&
                rows[r][j] >= rows[r + 1][jb])
                return false;
        }
    }
    return true;
}

DescentSet StandardTableau::descent_set() const {
    const int total = shape.size();
    std::vector<int> row_of(static_cast<std::size_t>(total) + 1, 0);
    for (int r = 0; r < shape.rows(); ++r)
        for (int e : rows[r]) row_of[e] = r;
    DescentSet d{total, 0};
    for (int i = 1; i < total; ++i)
        if (row_of[i + 1] > row_of[i]) d.insert(i);
    return d;
}

std::string StandardTableau::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r > 0) s += '/';
        for (std::size_t j = 0; j < rows[r].size(); ++j) {
            if (j > 0) s += ',';
            s += std::to_string(rows[r][j]);
        }
    }
    return s;
}

std::vector<StandardTableau> generate_syt(const Shape& shape) {
    if (!shape.valid()) throw std::invalid_argument("generate_syt: invalid shape");
    const int total = shape.size();
    const int nrows = shape.rows();
    std::vector<int> filled(nrows, 0);  // cells used so far in each row
    StandardTableau t{shape, std::vector<std::vector<int>>(nrows)};
    for (int r = 0; r < nrows; ++r) t.rows[r].assign(shape.parts[r], 0);
    std::vector<StandardTableau> out;

    auto place = [&](auto&& self, int entry) -> void {
        if (entry > total) {
            out.push_back(t);
            return;
        }
        for (int r = 0; r < nrows; ++r) {
            const int j = filled[r];
            if (j >= shape.parts[r]) continue;
            if (r > 0) {
                // The cell above (r,j) must already hold a smaller entry.
                const int ja = shape.shifted ? j + 1 : j;
                if (filled[r - 1] <= ja) continue;
            }
            t.rows[r][j] = entry;
            ++filled[r];
            self(self, entry + 1);
            --filled[r];
            t.rows[r][j] = 0;
        }
    };
    place(place, 1);
    std::sort(out.begin(), out.end());
    return out;
}

BigInt count_syt_hook_formula(const Shape& shape) {
    if (shape.shifted) throw std::invalid_argument("count_syt_hook_formula: straight shapes only");
    if (!shape.valid()) throw std::invalid_argument("count_syt_hook_formula: invalid shape");
    const int n = shape.size();
    const int cols = shape.parts.empty() ? 0 : shape.parts[0];
    std::vector<int> conj(cols, 0);
    for (int r = 0; r < shape.rows(); ++r)
        for (int c = 0; c < shape.parts[r]; ++c) ++conj[c];
    BigInt hooks = 1;
    for (int r = 0; r < shape.rows(); ++r)
        for (int c = 0; c < shape.parts[r]; ++c)
            hooks *= (shape.parts[r] - c) + (conj[c] - r) - 1;
    return exact_div(factorial(n), hooks);
}

BigInt count_shifted_staircase(int n) {
    if (n < 2) throw std::invalid_argument("count_shifted_staircase: need n >= 2");
    const int m = n * (n - 1) / 2;
    BigInt num = factorial(m);
    BigInt den = 1;
    for (int i = 0; i <= n - 2; ++i) {
        num *= factorial(i);
        den *= factorial(2 * i + 1);
    }
    return exact_div(num, den);
}

namespace {

// Boundary-path reading of a shifted shape inside the degree-n staircase:
// rows are labeled 1..n-1 top to bottom and columns 2..n left to right, so
// row i spans columns i+1 .. i+parts[i]. Walking the lower-right profile from
// the diagonal corner of the last row to the staircase's top right corner,
// east steps read column labels and north steps read row labels.
std::vector<int> path_reading(const Shape& shape, int n) {
    const int t = shape.rows();
    std::vector<int> seq;
    auto east = [&](int from_col, int to_col) {
        for (int c = from_col; c <= to_col; ++c) seq.push_back(c);
    };
    if (t == 0) {
        east(1, n);
        return seq;
    }
    east(t + 1, t + shape.parts[t - 1]);
    seq.push_back(t);
    for (int i = t - 1; i >= 1; --i) {
        east(i + 2 + shape.parts[i], i + shape.parts[i - 1]);
        seq.push_back(i);
    }
    east(2 + shape.parts[0], n);
    return seq;
}

bool fits_staircase(const Shape& shape, int n) {
    if (!shape.shifted || !shape.valid()) return false;
    for (int i = 0; i < shape.rows(); ++i)
        if (shape.parts[i] > n - 1 - i) return false;
    return true;
}

}  // namespace

Permutation left_unimodal_from_shape(const Shape& shape, int n) {
    if (!fits_staircase(shape, n))
        throw std::invalid_argument("left_unimodal_from_shape: shape does not fit the staircase");
    return Permutation(path_reading(shape, n));
}

Shape shape_of_unimodal(const Permutation& p) {
    const int n = p.degree();
    // Left-unimodal test inline: every prefix an interval in Z.
    auto left_unimodal = [](const Permutation& q) {
        int lo = q(1), hi = q(1);
        for (int i = 2; i <= q.degree(); ++i) {
            if (q(i) == hi + 1) ++hi;
            else if (q(i) == lo - 1) --lo;
            else return false;
        }
        return true;
    };
    if (!left_unimodal(p)) {
        const Permutation conj = p.conjugate_by_longest();
        if (!left_unimodal(conj)) throw std::invalid_argument("shape_of_unimodal: not unimodal");
        return shape_of_unimodal(conj);
    }
    // Invert the path reading: the first letter fixes the number of rows,
    // letters <= t are north steps (row labels), larger ones east steps.
    const int t = p(1) - 1;
    std::vector<int> parts(t, 0);
    int x = t;
    for (int i = 1; i <= n; ++i) {
        const int c = p(i);
        if (c <= t) {
            parts[c - 1] = x - c;
        } else {
            if (c != x + 1) throw std::logic_error("shape_of_unimodal: reading is out of order");
            x = c;
        }
    }
    Shape s{std::move(parts), true};
    if (!fits_staircase(s, n)) throw std::logic_error("shape_of_unimodal: reading left the staircase");
    return s;
}

Permutation replay_filling(const StandardTableau& t, int n) {
    if (!t.shape.shifted) throw std::invalid_argument("replay_filling: shifted shapes only");
    if (!fits_staircase(t.shape, n))
        throw std::invalid_argument("replay_filling: shape does not fit the staircase");
    const int total = t.size();
    std::vector<std::pair<int, int>> cell_of(static_cast<std::size_t>(total) + 1);
    for (int r = 0; r < t.shape.rows(); ++r)
        for (int j = 0; j < t.shape.parts[r]; ++j) cell_of[t.rows[r][j]] = {r + 1, r + j + 2};
    Permutation p = Permutation::identity(n);
    for (int e = 1; e <= total; ++e) p = p.swap_values(cell_of[e].first, cell_of[e].second);
    return p;
}

std::vector<StandardTableau> generate_T_n(int n) {
    std::vector<StandardTableau> out;
    for (int k = 2; k <= n - 2; ++k) {
        Shape s{{k, 2}, false};
        for (int i = 0; i < n - k - 2; ++i) s.parts.push_back(1);
        auto batch = generate_syt(s);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<StandardTableau> generate_Hook_n(int n) {
    std::vector<StandardTableau> out;
    for (int k = 1; k <= n; ++k) {
        Shape s{{k}, false};
        for (int i = 0; i < n - k; ++i) s.parts.push_back(1);
        auto batch = generate_syt(s);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace arcperm
