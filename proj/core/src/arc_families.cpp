#include "arcperm/arc_families.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace arcperm {

namespace {

// Representative of m in {1..n} mod n.
int wrap(int m, int n) { return ((m - 1) % n + n) % n + 1; }

std::vector<Permutation> parse_patterns(std::initializer_list<const char*> texts) {
    std::vector<Permutation> out;
    for (const char* t : texts) out.push_back(Permutation::parse(t));
    return out;
}

}  // namespace

bool is_left_unimodal(const Permutation& p) {
    if (p.degree() == 0) return true;
    int lo = p(1), hi = p(1);
    for (int i = 2; i <= p.degree(); ++i) {
        if (p(i) == hi + 1) ++hi;
        else if (p(i) == lo - 1) --lo;
        else return false;
    }
    return true;
}

bool is_unimodal(const Permutation& p) {
    return is_left_unimodal(p) || is_left_unimodal(p.reversed());
}

bool is_arc(const Permutation& p) {
    const int n = p.degree();
    if (n == 0) return true;
    int lo = p(1), hi = p(1);
    for (int i = 2; i <= n; ++i) {
        if (p(i) == wrap(hi + 1, n)) hi = p(i);
        else if (p(i) == wrap(lo - 1, n)) lo = p(i);
        else return false;
    }
    return true;
}

std::vector<Permutation> generate_family(int n, Family f) {
    if (n < 1) throw std::invalid_argument("generate_family: need n >= 1");
    std::vector<Permutation> arcs;
    if (n == 1) {
        arcs.push_back(Permutation::identity(1));
    } else {
        for (int first = 1; first <= n; ++first) {
            for (std::uint32_t mask = 0; mask < (1u << (n - 2)); ++mask) {
                std::vector<int> seq{first};
                int lo = first, hi = first;
                for (int b = 0; b < n - 2; ++b) {
                    if (mask >> b & 1u) {
                        hi = wrap(hi + 1, n);
                        seq.push_back(hi);
                    } else {
                        lo = wrap(lo - 1, n);
                        seq.push_back(lo);
                    }
                }
                seq.push_back(wrap(hi + 1, n));  // last letter is forced
                arcs.emplace_back(std::move(seq));
            }
        }
    }
    std::sort(arcs.begin(), arcs.end());
    if (f == Family::A) return arcs;
    std::vector<Permutation> out;
    for (const Permutation& p : arcs) {
        const bool keep = f == Family::L   ? is_left_unimodal(p)
                          : f == Family::U ? is_unimodal(p)
                                           : !is_unimodal(p);
        if (keep) out.push_back(p);
    }
    return out;
}

const std::vector<Permutation>& arc_patterns() {
    static const std::vector<Permutation> pats =
        parse_patterns({"1324", "1342", "2413", "2431", "3124", "3142", "4213", "4231"});
    return pats;
}

const std::vector<Permutation>& unimodal_patterns() {
    static const std::vector<Permutation> pats = parse_patterns(
        {"1324", "1342", "2143", "2413", "2431", "3124", "3142", "3412", "4213", "4231"});
    return pats;
}

const std::vector<Permutation>& left_unimodal_patterns() {
    static const std::vector<Permutation> pats = parse_patterns({"132", "312"});
    return pats;
}

bool PsiCode::valid() const {
    if (n < 2 || psi0 < 0 || psi0 >= n) return false;
    if (static_cast<int>(bits.size()) != n - 2) return false;
    return std::all_of(bits.begin(), bits.end(), [](std::uint8_t b) { return b <= 1; });
}

std::string PsiCode::to_string() const {
    std::string s = std::to_string(psi0);
    for (std::uint8_t b : bits) {
        s += ',';
        s += std::to_string(int(b));
    }
    return s;
}

PsiCode PsiCode::parse(const std::string& text) {
    PsiCode c;
    std::istringstream in(text);
    std::string tok;
    std::vector<int> nums;
    while (std::getline(in, tok, ',')) {
        try {
            nums.push_back(std::stoi(tok));
        } catch (...) {
            throw std::invalid_argument("PsiCode::parse: bad token");
        }
    }
    if (nums.empty()) throw std::invalid_argument("PsiCode::parse: empty input");
    c.n = static_cast<int>(nums.size()) + 1;
    c.psi0 = nums[0];
    for (std::size_t i = 1; i < nums.size(); ++i) c.bits.push_back(static_cast<std::uint8_t>(nums[i]));
    if (!c.valid()) throw std::invalid_argument("PsiCode::parse: not a valid code");
    return c;
}

PsiCode psi_encode(const Permutation& p) {
    const int n = p.degree();
    if (n < 2) throw std::invalid_argument("psi_encode: need degree >= 2");
    if (!is_arc(p)) throw std::invalid_argument("psi_encode: not an arc permutation");
    PsiCode c{n, p(1) - 1, {}};
    int lo = p(1), hi = p(1);
    for (int i = 1; i <= n - 2; ++i) {
        if (p(i + 1) == wrap(hi + 1, n)) {
            c.bits.push_back(1);  // predecessor of p(i+1) already placed
            hi = p(i + 1);
        } else {
            assert(p(i + 1) == wrap(lo - 1, n));
            c.bits.push_back(0);
            lo = p(i + 1);
        }
    }
    return c;
}

Permutation psi_decode(const PsiCode& code) {
    if (!code.valid()) throw std::invalid_argument("psi_decode: invalid code");
    const int n = code.n;
    std::vector<int> seq{code.psi0 + 1};
    int lo = seq[0], hi = seq[0];
    for (std::uint8_t b : code.bits) {
        if (b) {
            hi = wrap(hi + 1, n);
            seq.push_back(hi);
        } else {
            lo = wrap(lo - 1, n);
            seq.push_back(lo);
        }
    }
    seq.push_back(wrap(hi + 1, n));
    return Permutation(std::move(seq));
}

bool DescentWord::valid() const {
    if (n < 2 || static_cast<int>(letters.size()) != n - 1) return false;
    for (char c : letters)
        if (c != 'A' && c != 'D') return false;
    if (underline) {
        const int u = *underline;
        if (u < 1 || u > n - 2) return false;
        if (letters[u - 1] == letters[u]) return false;  // must be AD or DA
    }
    return true;
}

std::string DescentWord::to_string() const {
    std::string s;
    for (int i = 0; i < static_cast<int>(letters.size()); ++i) {
        if (underline && i == *underline - 1) {
            s += '[';
            s += letters[i];
            s += letters[i + 1];
            s += ']';
            ++i;
        } else {
            s += letters[i];
        }
    }
    return s;
}

DescentWord DescentWord::parse(const std::string& text) {
    DescentWord w;
    bool in_bracket = false;
    int bracket_len = 0;
    for (char c : text) {
        if (c == '[') {
            if (in_bracket || w.underline) throw std::invalid_argument("DescentWord::parse: stray '['");
            in_bracket = true;
            bracket_len = 0;
            w.underline = static_cast<int>(w.letters.size()) + 1;
        } else if (c == ']') {
            if (!in_bracket || bracket_len != 2) throw std::invalid_argument("DescentWord::parse: stray ']'");
            in_bracket = false;
        } else if (c == 'A' || c == 'D') {
            w.letters += c;
            if (in_bracket) ++bracket_len;
        } else {
            throw std::invalid_argument("DescentWord::parse: bad character");
        }
    }
    if (in_bracket) throw std::invalid_argument("DescentWord::parse: unterminated '['");
    w.n = static_cast<int>(w.letters.size()) + 1;
    if (!w.valid()) throw std::invalid_argument("DescentWord::parse: not a valid word");
    return w;
}

DescentWord nu_encode(const Permutation& p) {
    const int n = p.degree();
    if (n < 2) throw std::invalid_argument("nu_encode: need degree >= 2");
    if (!is_arc(p)) throw std::invalid_argument("nu_encode: not an arc permutation");
    DescentWord w{n, std::string(n - 1, 'A'), std::nullopt};
    for (int i = 1; i < n; ++i)
        if (p(i) > p(i + 1)) w.letters[i - 1] = 'D';
    // Underline marks the first prefix that stops being an interval in Z.
    int lo = p(1), hi = p(1);
    for (int i = 2; i <= n; ++i) {
        if (p(i) == hi + 1) ++hi;
        else if (p(i) == lo - 1) --lo;
        else {
            w.underline = i - 1;
            break;
        }
    }
    assert(w.valid());
    return w;
}

Permutation nu_decode(const DescentWord& word) {
    if (!word.valid()) throw std::invalid_argument("nu_decode: invalid word");
    const int n = word.n;
    auto w = [&](int i) { return word.letters[i - 1]; };
    auto count = [&](char c, int a, int b) {
        int cnt = 0;
        for (int j = a; j <= b; ++j)
            if (w(j) == c) ++cnt;
        return cnt;
    };
    const int k = word.underline ? *word.underline + 1 : n + 1;
    const int delta = (word.underline && w(k - 1) == 'D') ? n + 1 : k;
    std::vector<int> vals(n, 0);
    for (int i = 1; i < k && i <= n; ++i) {
        if (i == 1 || w(i - 1) == 'A') vals[i - 1] = delta - 1 - count('A', i, k - 2);
        else vals[i - 1] = delta - k + 1 + count('D', i, k - 2);
    }
    if (k <= n) {
        const int dprime = delta % n;
        for (int i = k; i <= n; ++i) {
            // Both branches agree at i = n; the A branch is used there.
            if (i == n || w(i) == 'A') vals[i - 1] = dprime + count('A', k, i - 1);
            else vals[i - 1] = dprime + n - k - count('D', k, i - 1);
        }
    }
    Permutation p(std::move(vals));
    assert(is_arc(p));
    return p;
}

long long count_by_descent_set(int n, const DescentSet& B) {
    if (B.n != n) throw std::invalid_argument("count_by_descent_set: degree mismatch");
    long long extra = 0;
    for (int i = 1; i <= n - 2; ++i)
        if (B.contains(i) != B.contains(i + 1)) ++extra;
    return 1 + extra;
}

}  // namespace arcperm
