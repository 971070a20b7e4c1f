#include <map>
#include <set>

#include "doctest.h"
#include "evp/diagram.hpp"
#include "evp/error.hpp"

using namespace evp;

TEST_CASE("builtin diagram integrity") {
  Diagram d = load_builtin_diagram();

  SUBCASE("ids are unique and edges touch real nodes") {
    std::set<std::string> ids;
    for (const InvariantNode& n : d.nodes) CHECK(ids.insert(n.id).second);
    for (const Relation& e : d.edges) {
      CHECK(d.has_node(e.from));
      CHECK(d.has_node(e.to));
    }
  }

  SUBCASE("every edge and note carries a citation") {
    for (const Relation& e : d.edges) CHECK(!e.citation.empty());
    for (const DiagramNote& n : d.notes) CHECK(!n.citation.empty());
  }

  SUBCASE("the provable relation is acyclic") {
    std::map<std::string, std::vector<std::string>> adj;
    std::map<std::string, int> indegree;
    for (const InvariantNode& n : d.nodes) indegree[n.id] = 0;
    for (const Relation& e : d.edges) {
      if (e.kind != RelationKind::ProvableLE) continue;
      adj[e.from].push_back(e.to);
      ++indegree[e.to];
    }
    std::vector<std::string> ready;
    for (auto& [id, deg] : indegree)
      if (deg == 0) ready.push_back(id);
    std::size_t seen = 0;
    while (!ready.empty()) {
      std::string cur = ready.back();
      ready.pop_back();
      ++seen;
      for (const std::string& next : adj[cur])
        if (--indegree[next] == 0) ready.push_back(next);
    }
    CHECK(seen == d.nodes.size());
  }

  SUBCASE("expected edges are present") {
    auto has_edge = [&](const std::string& from, const std::string& to) {
      for (const Relation& e : d.edges)
        if (e.kind == RelationKind::ProvableLE && e.from == from &&
            e.to == to)
          return true;
      return false;
    };
    CHECK(has_edge("add_L", "e_ell"));
    CHECK(has_edge("se", "unif_L"));
    CHECK(has_edge("s", "e_fin"));
    CHECK(has_edge("se", "e_prime"));
    CHECK(has_edge("lambda_star", "e_ubd"));
  }
}

TEST_CASE("diagram queries") {
  Diagram d = load_builtin_diagram();

  SUBCASE("reachability produces a cited path") {
    QueryResult r = query_diagram(d, "add_L", "add_M");
    CHECK(r.outcome == QueryOutcome::ProvableLE);
    REQUIRE(r.path.size() >= 2);
    CHECK(r.path.front() == "add_L");
    CHECK(r.path.back() == "add_M");
    CHECK(r.citations.size() == r.path.size() - 1);
    for (const std::string& c : r.citations) CHECK(!c.empty());
  }

  SUBCASE("e versus b is open") {
    QueryResult r = query_diagram(d, "e", "b");
    CHECK(r.outcome == QueryOutcome::Open);
    CHECK(!r.annotations.empty());
  }

  SUBCASE("provable with a consistency annotation") {
    QueryResult r = query_diagram(d, "e_ubd", "e_fin");
    CHECK(r.outcome == QueryOutcome::OneWayWithConsistency);
    CHECK(!r.path.empty());
  }

  SUBCASE("unknown nodes are rejected") {
    CHECK_THROWS_WITH_AS(query_diagram(d, "nope", "b"),
                         doctest::Contains("UnknownNode"), DomainError);
  }
}

TEST_CASE("DOT export is stable and complete") {
  Diagram d = load_builtin_diagram();
  std::string dot = diagram_to_dot(d);
  CHECK(dot == diagram_to_dot(d));
  for (const InvariantNode& n : d.nodes)
    CHECK(dot.find("\"" + n.id + "\"") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
}
