#include "arcperm/descent_stats.hpp"

#include <stdexcept>

#include "arcperm/arc_families.hpp"

namespace arcperm {

namespace {

// Multilinear polynomial in x_1..x_{n-1}; signed coefficients are allowed
// while subtracting, the final result must be a nonnegative histogram.
using Poly = std::map<std::uint32_t, long long>;

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            if (ma & mb) throw std::logic_error("poly_mul: repeated variable");
            out[ma | mb] += ca * cb;
        }
    }
    return out;
}

void poly_add(Poly& a, const Poly& b, long long scale = 1) {
    for (const auto& [m, c] : b) {
        a[m] += scale * c;
        if (a[m] == 0) a.erase(m);
    }
}

Poly one_plus_x(int i) { return Poly{{0u, 1}, {1u << (i - 1), 1}}; }

// prod_{i=a}^{b} (1 + x_i); empty product for a > b.
Poly prod_one_plus(int a, int b) {
    Poly out{{0u, 1}};
    for (int i = a; i <= b; ++i) out = poly_mul(out, one_plus_x(i));
    return out;
}

DescentDistribution to_distribution(int n, const Poly& p) {
    DescentDistribution d{n, {}};
    for (const auto& [m, c] : p) {
        if (c < 0) throw std::logic_error("to_distribution: negative coefficient");
        if (c != 0) d.table[m] = c;
    }
    return d;
}

UnivariatePolynomial uni_mul(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    UnivariatePolynomial out;
    if (a.coeffs.empty() || b.coeffs.empty()) return out;
    out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return out;
}

void uni_add(UnivariatePolynomial& a, const UnivariatePolynomial& b, long long scale = 1) {
    if (a.coeffs.size() < b.coeffs.size()) a.coeffs.resize(b.coeffs.size(), 0);
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) a.coeffs[i] += scale * b.coeffs[i];
}

UnivariatePolynomial one_plus_q_pow(int e) {
    UnivariatePolynomial p;
    p.coeffs.assign(static_cast<std::size_t>(e) + 1, 0);
    p.coeffs[0] = 1;
    p.coeffs[e] = 1;
    return p;
}

}  // namespace

long long DescentDistribution::total() const {
    long long t = 0;
    for (const auto& [m, c] : table) t += c;
    return t;
}

long long DescentDistribution::at(std::uint32_t mask) const {
    auto it = table.find(mask);
    return it == table.end() ? 0 : it->second;
}

void UnivariatePolynomial::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

long long UnivariatePolynomial::at(int d) const {
    return d >= 0 && d < static_cast<int>(coeffs.size()) ? coeffs[d] : 0;
}

long long UnivariatePolynomial::eval_at_one() const {
    long long s = 0;
    for (long long c : coeffs) s += c;
    return s;
}

DescentDistribution descent_distribution(int n, const std::vector<Permutation>& family) {
    DescentDistribution d{n, {}};
    for (const Permutation& p : family) {
        if (p.degree() != n) throw std::invalid_argument("descent_distribution: mixed degrees");
        ++d.table[p.descent_set().mask];
    }
    return d;
}

DescentDistribution descent_distribution(int n, const std::vector<StandardTableau>& family) {
    DescentDistribution d{n, {}};
    for (const StandardTableau& t : family) {
        if (t.size() != n) throw std::invalid_argument("descent_distribution: mixed sizes");
        ++d.table[t.descent_set().mask];
    }
    return d;
}

DescentDistribution arc_descent_closed_form(int n) {
    if (n < 2) throw std::invalid_argument("arc_descent_closed_form: need n >= 2");
    Poly sum = prod_one_plus(1, n - 1);
    for (int i = 1; i <= n - 2; ++i) {
        Poly term = prod_one_plus(1, i - 1);
        Poly mid{{1u << (i - 1), 1}, {1u << i, 1}};  // x_i + x_{i+1}
        term = poly_mul(term, mid);
        term = poly_mul(term, prod_one_plus(i + 2, n - 1));
        poly_add(sum, term);
    }
    return to_distribution(n, sum);
}

DescentDistribution unimodal_descent_closed_form(int n) {
    if (n < 2) throw std::invalid_argument("unimodal_descent_closed_form: need n >= 2");
    Poly sum = prod_one_plus(1, n - 1);
    for (auto& [m, c] : sum) c *= 2;
    Poly ones{{0u, 1}};
    poly_add(sum, ones, -1);
    Poly full{{(1u << (n - 1)) - 1, 1}};  // x_1 x_2 ... x_{n-1}
    poly_add(sum, full, -1);
    return to_distribution(n, sum);
}

DescentDistribution z_descent_closed_form(int n) {
    Poly sum;
    for (const auto& [m, c] : arc_descent_closed_form(n).table) sum[m] = c;
    for (const auto& [m, c] : unimodal_descent_closed_form(n).table) {
        sum[m] -= c;
        if (sum[m] == 0) sum.erase(m);
    }
    return to_distribution(n, sum);
}

DescentDistribution hook_descent_closed_form(int n) {
    if (n < 1) throw std::invalid_argument("hook_descent_closed_form: need n >= 1");
    return to_distribution(n, prod_one_plus(1, n - 1));
}

UnivariatePolynomial maj_polynomial(const std::vector<Permutation>& family) {
    UnivariatePolynomial p;
    for (const Permutation& q : family) {
        const int m = q.major_index();
        if (m >= static_cast<int>(p.coeffs.size())) p.coeffs.resize(m + 1, 0);
        ++p.coeffs[m];
    }
    p.trim();
    return p;
}

UnivariatePolynomial arc_maj_closed_form(int n) {
    if (n < 2) throw std::invalid_argument("arc_maj_closed_form: need n >= 2");
    UnivariatePolynomial p{{1}};
    for (int i = 1; i <= n - 2; ++i) p = uni_mul(p, one_plus_q_pow(i));
    UnivariatePolynomial nq;  // [n]_q
    nq.coeffs.assign(n, 1);
    p = uni_mul(p, nq);
    p.trim();
    return p;
}

UnivariatePolynomial z_maj_closed_form(int n) {
    UnivariatePolynomial p = arc_maj_closed_form(n);
    UnivariatePolynomial full{{1}};
    for (int i = 1; i <= n - 1; ++i) full = uni_mul(full, one_plus_q_pow(i));
    uni_add(p, full, -2);
    uni_add(p, one_plus_q_pow(n * (n - 1) / 2));  // contributes 1 + q^C(n,2)
    p.trim();
    for (long long c : p.coeffs)
        if (c < 0) throw std::logic_error("z_maj_closed_form: negative coefficient");
    return p;
}

UnivariatePolynomial specialize_to_maj(const DescentDistribution& dist) {
    UnivariatePolynomial p;
    for (const auto& [mask, c] : dist.table) {
        int deg = 0;
        for (int i = 1; i < dist.n; ++i)
            if (mask >> (i - 1) & 1u) deg += i;
        if (deg >= static_cast<int>(p.coeffs.size())) p.coeffs.resize(deg + 1, 0);
        p.coeffs[deg] += c;
    }
    p.trim();
    return p;
}

bool unimodal_descent_identity(int n) {
    return descent_distribution(n, generate_family(n, Family::U)) ==
           unimodal_descent_closed_form(n);
}

bool tz_equidistribution(int n) {
    return descent_distribution(n, generate_T_n(n)) ==
           descent_distribution(n, generate_family(n, Family::Z));
}

}  // namespace arcperm
