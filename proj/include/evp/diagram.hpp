#pragma once

#include <optional>
#include <string>
#include <vector>

namespace evp {

/// The inequality diagram is data, never derivation: nodes, cited provable
/// edges, and cited side notes (consistency statements, identities, open
/// questions). Queries compose citations along provable edges.
struct InvariantNode {
  std::string id;
  std::string label;
  std::string definition;
};

enum class RelationKind { ProvableLE, ConsistentlyStrict, Open };

struct Relation {
  std::string from;
  std::string to;
  RelationKind kind = RelationKind::ProvableLE;
  std::string citation;
};

struct DiagramNote {
  std::string text;
  std::string citation;
  std::string from;  // optional pair annotation
  std::string to;
};

struct Diagram {
  std::vector<InvariantNode> nodes;
  std::vector<Relation> edges;
  std::vector<DiagramNote> notes;

  bool has_node(const std::string& id) const;
};

Diagram load_builtin_diagram();

enum class QueryOutcome {
  ProvableLE,
  ConsistentlyStrictBothWays,
  OneWayWithConsistency,
  Open,
};

struct QueryResult {
  QueryOutcome outcome = QueryOutcome::Open;
  std::vector<std::string> path;       // node ids along a provable chain
  std::vector<std::string> citations;  // one per edge of the path
  std::vector<DiagramNote> annotations;
};

/// Reachability over the ProvableLE edges (breadth first, deterministic),
/// with the stored consistency annotations for the queried pair attached.
QueryResult query_diagram(const Diagram& d, const std::string& from,
                          const std::string& to);

/// DOT export of the nodes and the provable edges, stable ordering.
std::string diagram_to_dot(const Diagram& d);

const char* query_outcome_name(QueryOutcome o);

}  // namespace evp
