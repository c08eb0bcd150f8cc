#pragma once

#include <string>
#include <vector>

namespace arcperm {

struct CheckRow {
    std::string name;
    std::string expected;
    std::string got;
    bool pass = false;
};

struct ClaimReport {
    std::string claim;
    int lo = 0, hi = 0;
    std::vector<CheckRow> rows;
    bool pass = false;
};

/// Registered claim ids, each an exhaustively checkable statement about the
/// arc-permutation families. See the README table for what each one covers.
std::vector<std::string> registered_claims();
bool claim_known(const std::string& claim);

/// The degree range a claim runs over when none is given, and the largest
/// degree accepted without an explicit override.
std::pair<int, int> claim_default_range(const std::string& claim);
int claim_max_n(const std::string& claim);

/// Runs every check of the claim across [lo, hi]; fixed worked-example rows
/// run regardless of the range. Throws std::invalid_argument for unknown
/// claims.
ClaimReport run_claim(const std::string& claim, int lo, int hi);

std::string claim_report_to_json(const ClaimReport& report);

}  // namespace arcperm
