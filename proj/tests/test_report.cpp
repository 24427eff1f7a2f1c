#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "beilab/catalog.hpp"
#include "beilab/invariants.hpp"

using namespace beilab;

TEST_CASE("report of the five-cycle") {
    InvariantReport r = compute_invariants(cycle_graph(5));
    CHECK(r.n == 5);
    CHECK(r.edges.size() == 5);
    CHECK(r.connected);
    CHECK_FALSE(r.closed);
    CHECK(r.v == 3);
    CHECK(r.v_at_kn == 3);
    CHECK(r.gamma_c == 3);
    CHECK(r.theta == 3);
    CHECK(r.ell == 3);
    CHECK_FALSE(r.im_initial.has_value());
    CHECK(r.v_init == 3);
    CHECK(r.lf_max == 2);
    REQUIRE(r.achieving_prime.has_value());
    CHECK(r.achieving_prime->s.empty());
    CHECK(r.achieving_prime->components == std::vector<std::vector<int>>{{1, 2, 3, 4, 5}});
}

TEST_CASE("json schema field order and nulls") {
    InvariantReport r = compute_invariants(Graph::build(4, {{1, 2}, {3, 4}}));
    std::string json = report_to_json(r);
    const char* fields[] = {"\"n\"",       "\"edges\"",      "\"connected\"", "\"closed\"",
                            "\"v\"",       "\"v_at_Kn\"",    "\"gamma_c\"",   "\"theta\"",
                            "\"ell\"",     "\"im_initial\"", "\"v_init\"",    "\"lf_max\"",
                            "\"achieving_prime\""};
    size_t pos = 0;
    for (const char* f : fields) {
        size_t at = json.find(f, pos);
        REQUIRE(at != std::string::npos);
        pos = at;
    }
    auto parsed = nlohmann::json::parse(json);
    CHECK(parsed["v_at_Kn"].is_null());     // disconnected
    CHECK(parsed["gamma_c"].is_null());
    CHECK(parsed["lf_max"].is_null());
    CHECK(parsed["im_initial"].is_null());  // not closed under this labeling
    CHECK(parsed["v"] == 1);                // edge plus edge
    CHECK(parsed["v_init"] == 1);
}

TEST_CASE("reports are byte-deterministic") {
    Graph g = closed6_example();
    CHECK(report_to_json(compute_invariants(g)) == report_to_json(compute_invariants(g)));
    CHECK(report_to_text(compute_invariants(g)) == report_to_text(compute_invariants(g)));
}

TEST_CASE("closed graphs expose the bipartite matching number") {
    InvariantReport r = compute_invariants(closed6_example());
    CHECK(r.closed);
    REQUIRE(r.im_initial.has_value());
    CHECK(*r.im_initial == 3);
    CHECK(r.ell == 3);
}

TEST_CASE("edgeless graphs have the zero ideal") {
    InvariantReport r = compute_invariants(Graph::build(2, {}));
    CHECK(r.v == 0);
    CHECK(r.v_init == 0);
    REQUIRE(r.achieving_prime.has_value());
    CHECK(r.achieving_prime->s.empty());
    CHECK(r.achieving_prime->components.size() == 2);
    CHECK(r.theta == 2);
}
