// Command-line frontend: enumeration, claim verification, encodings, and
// graph/poset export. Exit codes: 0 success, 1 verification failure,
// 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "arcperm/arc_families.hpp"
#include "arcperm/io.hpp"
#include "arcperm/shuffles.hpp"
#include "arcperm/tableaux.hpp"
#include "arcperm/verify.hpp"

namespace {

constexpr int kDefaultFamilyCap = 12;
constexpr int kDefaultGraphCap = 8;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::optional<int> max_n_override() {
    const char* raw = std::getenv("ARCPERM_MAX_N");
    if (!raw || !*raw) return std::nullopt;
    try {
        return std::stoi(raw);
    } catch (...) {
        throw UsageError("invalid ARCPERM_MAX_N value");
    }
}

int effective_cap(int fallback) {
    const auto env = max_n_override();
    return env ? *env : fallback;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot open output file: " + out_path);
    out << text;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int n = std::stoi(text);
            return {n, n};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (...) {
        throw UsageError("invalid range: " + text);
    }
}

int cmd_gen(int n, const std::string& family, const std::string& format,
            const std::string& out_path) {
    if (n < 1 || n > effective_cap(kDefaultFamilyCap))
        throw UsageError("gen: n out of range (cap " +
                         std::to_string(effective_cap(kDefaultFamilyCap)) +
                         "; set ARCPERM_MAX_N to override)");
    std::vector<std::string> items;
    if (family == "L" || family == "U" || family == "A" || family == "Z") {
        const arcperm::Family f = family == "L"   ? arcperm::Family::L
                                  : family == "U" ? arcperm::Family::U
                                  : family == "A" ? arcperm::Family::A
                                                  : arcperm::Family::Z;
        for (const auto& p : arcperm::generate_family(n, f)) items.push_back(p.to_wire());
    } else if (family == "SHUF") {
        for (const auto& p : arcperm::generate_shuffle_union(n)) items.push_back(p.to_wire());
    } else if (family == "T") {
        for (const auto& t : arcperm::generate_T_n(n)) items.push_back(t.to_string());
    } else if (family == "HOOK") {
        for (const auto& t : arcperm::generate_Hook_n(n)) items.push_back(t.to_string());
    } else {
        throw UsageError("gen: unknown family '" + family + "' (L, U, A, Z, T, HOOK, SHUF)");
    }
    std::string text;
    if (format == "lines") {
        for (const auto& s : items) text += s + "\n";
        text += "# count=" + std::to_string(items.size()) + "\n";
    } else if (format == "json") {
        nlohmann::json j;
        j["n"] = n;
        j["family"] = family;
        j["items"] = items;
        j["count"] = items.size();
        text = j.dump(2) + "\n";
    } else {
        throw UsageError("gen: unknown format '" + format + "' (lines, json)");
    }
    write_output(text, out_path);
    return 0;
}

int cmd_verify(const std::string& claim, const std::string& range_text,
               const std::string& out_path) {
    if (!arcperm::claim_known(claim)) {
        std::ostringstream known;
        for (const auto& id : arcperm::registered_claims()) known << "\n  " << id;
        throw UsageError("verify: unknown claim '" + claim + "'; known claims:" + known.str());
    }
    auto [lo, hi] = arcperm::claim_default_range(claim);
    if (!range_text.empty()) std::tie(lo, hi) = parse_range(range_text);
    const int cap = effective_cap(arcperm::claim_max_n(claim));
    if (lo < 1 || hi < lo || hi > cap)
        throw UsageError("verify: range out of bounds for this claim (max n " +
                         std::to_string(cap) + "; set ARCPERM_MAX_N to override)");
    const arcperm::ClaimReport report = arcperm::run_claim(claim, lo, hi);
    write_output(arcperm::claim_report_to_json(report), out_path);
    return report.pass ? 0 : 1;
}

int cmd_encode(const std::string& perm_text, const std::string& scheme,
               const std::string& out_path) {
    arcperm::Permutation p;
    try {
        p = arcperm::Permutation::parse(perm_text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("encode: ") + e.what());
    }
    std::string text;
    try {
        if (scheme == "psi") text = arcperm::psi_encode(p).to_string() + "\n";
        else if (scheme == "nu") text = arcperm::nu_encode(p).to_string() + "\n";
        else throw UsageError("encode: unknown scheme '" + scheme + "' (psi, nu)");
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("encode: ") + e.what());
    }
    write_output(text, out_path);
    return 0;
}

int cmd_decode(const std::string& code_text, const std::string& scheme,
               const std::string& out_path) {
    std::string text;
    try {
        if (scheme == "psi") text = arcperm::psi_decode(arcperm::PsiCode::parse(code_text)).to_wire() + "\n";
        else if (scheme == "nu") text = arcperm::nu_decode(arcperm::DescentWord::parse(code_text)).to_wire() + "\n";
        else throw UsageError("decode: unknown scheme '" + scheme + "' (psi, nu)");
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("decode: ") + e.what());
    }
    write_output(text, out_path);
    return 0;
}

int cmd_graph(int n, const std::string& what, const std::string& format,
              const std::string& out_path) {
    if (n < 2 || n > effective_cap(kDefaultGraphCap))
        throw UsageError("graph: n out of range (cap " +
                         std::to_string(effective_cap(kDefaultGraphCap)) +
                         "; set ARCPERM_MAX_N to override)");
    arcperm::LabeledGraph g;
    if (what == "xn") g = arcperm::to_labeled_graph(arcperm::build_arc_graph(n));
    else if (what == "weak-u") g = arcperm::weak_hasse_labeled_graph(n);
    else if (what == "dominance") g = arcperm::dominance_labeled_graph(n);
    else throw UsageError("graph: unknown kind '" + what + "' (xn, weak-u, dominance)");
    std::string text;
    if (format == "dot") text = arcperm::to_dot(g);
    else if (format == "json") text = arcperm::to_json(g);
    else throw UsageError("graph: unknown format '" + format + "' (dot, json)");
    write_output(text, out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of arc permutations: families, encodings, orders, graphs"};
    app.require_subcommand(1);

    int n = 0;
    std::string family, what, scheme, text_arg, range_text, out_path;
    std::string format_lines = "lines", format_graph = "dot";

    auto* gen = app.add_subcommand("gen", "List a family (L, U, A, Z, T, HOOK, SHUF)");
    gen->add_option("n,--n", n, "degree")->required();
    gen->add_option("family", family, "family id")->required();
    gen->add_option("--format,-f", format_lines, "lines|json");
    gen->add_option("--out,-o", out_path, "write to file");

    auto* verify = app.add_subcommand("verify", "Run a registered claim check");
    verify->add_option("claim", text_arg, "claim id")->required();
    verify->add_option("range,--range", range_text, "degree range a..b (default per claim)");
    verify->add_option("--out,-o", out_path, "write to file");

    auto* encode = app.add_subcommand("encode", "Encode an arc permutation (psi or nu)");
    encode->add_option("perm", text_arg, "one-line notation")->required();
    encode->add_option("scheme", scheme, "psi|nu")->required();
    encode->add_option("--out,-o", out_path, "write to file");

    auto* decode = app.add_subcommand("decode", "Decode a psi or nu code");
    decode->add_option("code", text_arg, "code text")->required();
    decode->add_option("scheme", scheme, "psi|nu")->required();
    decode->add_option("--out,-o", out_path, "write to file");

    auto* graph = app.add_subcommand("graph", "Export a graph (xn, weak-u, dominance)");
    graph->add_option("n,--n", n, "degree")->required();
    graph->add_option("what", what, "xn|weak-u|dominance")->required();
    graph->add_option("--format,-f", format_graph, "dot|json");
    graph->add_option("--out,-o", out_path, "write to file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(n, family, format_lines, out_path);
        if (verify->parsed()) return cmd_verify(text_arg, range_text, out_path);
        if (encode->parsed()) return cmd_encode(text_arg, scheme, out_path);
        if (decode->parsed()) return cmd_decode(text_arg, scheme, out_path);
        if (graph->parsed()) return cmd_graph(n, what, format_graph, out_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
