#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arcperm/permutation.hpp"

namespace arcperm {

// The nested families L_n (left-unimodal) < U_n (unimodal) < A_n (arc),
// and Z_n = A_n \ U_n.
enum class Family { L, U, A, Z };

/// Every prefix is an interval in Z.
bool is_left_unimodal(const Permutation& p);
/// Every prefix, or every suffix, is an interval in Z.
bool is_unimodal(const Permutation& p);
/// Every prefix is a cyclic interval in Z_n (value n adjacent to 1).
bool is_arc(const Permutation& p);

/// Members of the family in S_n, lexicographically sorted. A_n is built
/// constructively (choose the first letter, then extend the cyclic interval
/// at either end), independent of the pattern engine.
std::vector<Permutation> generate_family(int n, Family f);

/// The eight length-4 patterns with |t(1)-t(2)| = 2 characterizing A_n.
const std::vector<Permutation>& arc_patterns();
/// The ten patterns characterizing U_n.
const std::vector<Permutation>& unimodal_patterns();
/// {132, 312}, characterizing L_n.
const std::vector<Permutation>& left_unimodal_patterns();

/// Interval-endpoint encoding of an arc permutation: psi0 = p(1)-1, and bit i
/// records whether letter i+1 extends the prefix interval at the top end
/// (predecessor of p(i+1) already seen) or at the bottom end.
struct PsiCode {
    int n = 0;
    int psi0 = 0;
    std::vector<std::uint8_t> bits;  // exactly n-2 of them

    bool valid() const;
    std::string to_string() const;  // "3,0,1,0,0,0"
    static PsiCode parse(const std::string& text);

    friend bool operator==(const PsiCode&, const PsiCode&) = default;
};

PsiCode psi_encode(const Permutation& p);
Permutation psi_decode(const PsiCode& code);

/// Ascent/descent word of length n-1 with at most one underlined adjacent
/// pair, which must read AD or DA. The underline stores the left index of
/// the pair; it is absent exactly when the permutation is left-unimodal.
struct DescentWord {
    int n = 0;
    std::string letters;  // over {'A','D'}, length n-1
    std::optional<int> underline;  // left index in {1..n-2}

    bool valid() const;
    std::string to_string() const;  // underline rendered as brackets: "A[AD]D"
    static DescentWord parse(const std::string& text);

    friend bool operator==(const DescentWord&, const DescentWord&) = default;
};

DescentWord nu_encode(const Permutation& p);
Permutation nu_decode(const DescentWord& word);

/// Number of arc permutations in S_n with the given descent set:
/// 1 + #{ i in [n-2] : |B cap {i,i+1}| = 1 }.
long long count_by_descent_set(int n, const DescentSet& B);

}  // namespace arcperm
