#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "arcperm/arc_graph.hpp"
#include "arcperm/characters.hpp"
#include "arcperm/descent_stats.hpp"
#include "arcperm/weak_order.hpp"

namespace arcperm {

/// Node-labeled undirected graph with string edge labels; the common shape
/// for DOT/JSON export. Nodes and edges are kept sorted for byte-stable
/// output.
struct LabeledGraph {
    std::string name;
    int n = 0;
    bool directed = false;
    std::vector<std::string> nodes;
    std::vector<std::tuple<int, int, std::string>> edges;
};

LabeledGraph to_labeled_graph(const ArcGraph& g);
/// Hasse diagram of the weak order on the unimodal family, edges labeled by
/// the generator of the cover.
LabeledGraph weak_hasse_labeled_graph(int n);
/// Hasse diagram of the dominance order on the encoding box.
LabeledGraph dominance_labeled_graph(int n);

std::string to_dot(const LabeledGraph& g);
std::string to_json(const LabeledGraph& g);

std::string poset_to_dot(const FinitePoset& poset, const std::string& name);
/// {"covers": [[lo,hi],...], "elements": [...], "n": ...}
std::string poset_to_json(const FinitePoset& poset, int n);

/// {"n": ..., "table": {"1,3": 2, ...}, "total": ...}
std::string distribution_to_json(const DescentDistribution& dist);

/// Per-partition rows with the three computed values and a verdict.
std::string regev_report_to_json(const RegevReport& report);

}  // namespace arcperm
