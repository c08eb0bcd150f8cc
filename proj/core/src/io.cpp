#include "arcperm/io.hpp"

#include <algorithm>

#include <json.hpp>

namespace arcperm {

LabeledGraph to_labeled_graph(const ArcGraph& g) {
    LabeledGraph out;
    out.name = "xn-" + std::to_string(g.n);
    out.n = g.n;
    for (const Permutation& p : g.vertices) out.nodes.push_back(p.to_wire());
    for (const auto& [u, v, s] : g.edges()) out.edges.emplace_back(u, v, "s" + std::to_string(s));
    return out;
}

LabeledGraph weak_hasse_labeled_graph(int n) {
    LabeledGraph out;
    out.name = "weak-u-" + std::to_string(n);
    out.n = n;
    out.directed = true;
    const std::vector<Permutation> elems = generate_family(n, Family::U);
    for (const Permutation& p : elems) out.nodes.push_back(p.to_wire());
    auto index_of = [&](const Permutation& p) {
        auto it = std::lower_bound(elems.begin(), elems.end(), p);
        return it != elems.end() && *it == p ? static_cast<int>(it - elems.begin()) : -1;
    };
    for (int i = 0; i < static_cast<int>(elems.size()); ++i) {
        for (int s = 1; s < n; ++s) {
            if (elems[i](s) >= elems[i](s + 1)) continue;
            const int j = index_of(elems[i].apply_position_swap(s));
            if (j >= 0) out.edges.emplace_back(i, j, "s" + std::to_string(s));
        }
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

LabeledGraph dominance_labeled_graph(int n) {
    LabeledGraph out;
    out.name = "dominance-" + std::to_string(n);
    out.n = n;
    out.directed = true;
    const auto box = dominance_box(n);
    for (const DominanceVector& v : box) out.nodes.push_back(v.to_string());
    for (auto [i, j] : dominance_hasse_covers(box)) out.edges.emplace_back(i, j, "");
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

std::string to_dot(const LabeledGraph& g) {
    std::string s = (g.directed ? "digraph \"" : "graph \"") + g.name + "\" {\n";
    for (const std::string& node : g.nodes) s += "  \"" + node + "\";\n";
    for (const auto& [u, v, label] : g.edges) {
        s += "  \"" + g.nodes[u] + (g.directed ? "\" -> \"" : "\" -- \"") + g.nodes[v] + "\"";
        if (!label.empty()) s += " [label=\"" + label + "\"]";
        s += ";\n";
    }
    return s + "}\n";
}

std::string to_json(const LabeledGraph& g) {
    nlohmann::json j;
    j["n"] = g.n;
    j["nodes"] = g.nodes;
    auto& edges = j["edges"] = nlohmann::json::array();
    for (const auto& [u, v, label] : g.edges)
        edges.push_back({g.nodes[u], g.nodes[v], label});
    return j.dump(2) + "\n";
}

std::string poset_to_dot(const FinitePoset& poset, const std::string& name) {
    LabeledGraph g;
    g.name = name;
    g.directed = true;
    g.nodes = poset.labels;
    for (auto [lo, hi] : poset.covers) g.edges.emplace_back(lo, hi, "");
    std::sort(g.edges.begin(), g.edges.end());
    return to_dot(g);
}

std::string poset_to_json(const FinitePoset& poset, int n) {
    nlohmann::json j;
    j["n"] = n;
    j["elements"] = poset.labels;
    auto& covers = j["covers"] = nlohmann::json::array();
    auto sorted = poset.covers;
    std::sort(sorted.begin(), sorted.end());
    for (auto [lo, hi] : sorted) covers.push_back({lo, hi});
    return j.dump(2) + "\n";
}

std::string distribution_to_json(const DescentDistribution& dist) {
    nlohmann::json table = nlohmann::json::object();
    for (const auto& [mask, count] : dist.table) {
        DescentSet d{dist.n, mask};
        table[d.to_key()] = count;
    }
    nlohmann::json j;
    j["n"] = dist.n;
    j["table"] = table;
    j["total"] = dist.total();
    return j.dump(2) + "\n";
}

std::string regev_report_to_json(const RegevReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const RegevRow& row : report.rows) {
        nlohmann::json r;
        r["mu"] = row.mu.to_string();
        r["closed_form"] = row.closed_form;
        r["decomposition"] = row.decomposition;
        r["signed_sum"] = row.signed_sum;
        r["pass"] = row.pass;
        rows.push_back(r);
    }
    nlohmann::json j;
    j["n"] = report.n;
    j["rows"] = rows;
    j["pass"] = report.pass;
    return j.dump(2) + "\n";
}

}  // namespace arcperm
