#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arcperm/io.hpp"
#include "arcperm/verify.hpp"

using namespace arcperm;

TEST_CASE("graph export") {
    const LabeledGraph x3 = to_labeled_graph(build_arc_graph(3));
    CHECK(x3.nodes.size() == 6);
    CHECK(x3.edges.size() == 6);  // hexagon
    const LabeledGraph x4 = to_labeled_graph(build_arc_graph(4));
    CHECK(x4.nodes.size() == 16);
    CHECK(x4.edges.size() == 20);

    const std::string dot = to_dot(x3);
    CHECK(dot.find("graph \"xn-3\"") == 0);
    CHECK(dot.find("\"123\" -- \"132\" [label=\"s2\"]") != std::string::npos);
    CHECK(to_dot(x3) == dot);  // byte-stable

    const std::string json = to_json(x4);
    CHECK(json.find("\"n\": 4") != std::string::npos);
    CHECK(to_json(x4) == json);
}

TEST_CASE("weak order and dominance export") {
    const LabeledGraph weak = weak_hasse_labeled_graph(4);
    CHECK(weak.nodes.size() == 14);
    CHECK(weak.edges.size() == 16);
    CHECK(weak.directed);

    const LabeledGraph dom = dominance_labeled_graph(3);
    CHECK(dom.nodes.size() == 6);
    CHECK(dom.edges.size() == 5);  // the box {0,1,2} x {0,1} is a 6-chain
    CHECK(dom.nodes.front() == "00");

    const FinitePoset poset = build_weak_hasse(3, Ground::U);
    const std::string dot = poset_to_dot(poset, "weak-u-3");
    CHECK(dot.find("digraph") == 0);
    CHECK(poset_to_json(poset, 3).find("\"covers\"") != std::string::npos);
}

TEST_CASE("distribution and report serialization") {
    const DescentDistribution z4 = descent_distribution(4, generate_family(4, Family::Z));
    const std::string json = distribution_to_json(z4);
    CHECK(json.find("\"2\": 1") != std::string::npos);
    CHECK(json.find("\"1,3\": 1") != std::string::npos);
    CHECK(json.find("\"total\": 2") != std::string::npos);

    const std::string regev = regev_report_to_json(verify_regev(4));
    CHECK(regev.find("\"pass\": true") != std::string::npos);
    CHECK(regev.find("(3,1)") != std::string::npos);

    const ClaimReport claim = run_claim("family-counts", 2, 4);
    CHECK(claim.pass);
    const std::string claim_json = claim_report_to_json(claim);
    CHECK(claim_json.find("\"claim\": \"family-counts\"") != std::string::npos);
    CHECK(claim_report_to_json(claim) == claim_json);
}

TEST_CASE("claim registry") {
    CHECK(registered_claims().size() == 12);
    CHECK(claim_known("regev"));
    CHECK_FALSE(claim_known("nope"));
    CHECK(claim_default_range("maximal-chains") == std::pair<int, int>{3, 6});
    CHECK_THROWS_AS(run_claim("nope", 2, 3), std::invalid_argument);
}
