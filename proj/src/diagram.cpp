#include "evp/diagram.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "evp/error.hpp"

namespace evp {

bool Diagram::has_node(const std::string& id) const {
  for (const auto& n : nodes)
    if (n.id == id) return true;
  return false;
}

Diagram load_builtin_diagram() {
  Diagram d;
  auto node = [&](const char* id, const char* label, const char* def) {
    d.nodes.push_back({id, label, def});
  };
  node("omega1", "omega_1", "the first uncountable cardinal");
  node("continuum", "2^omega", "the cardinality of the continuum");
  node("p_inv", "p", "pseudointersection number");
  node("s", "s", "splitting number");
  node("r", "r", "reaping number");
  node("b", "b", "unbounding number");
  node("d", "d", "dominating number");
  node("add_L", "add(L)", "additivity of the null ideal");
  node("cov_L", "cov(L)", "covering number of the null ideal");
  node("unif_L", "unif(L)", "uniformity of the null ideal");
  node("cof_L", "cof(L)", "cofinality of the null ideal");
  node("add_M", "add(M)", "additivity of the meager ideal");
  node("cov_M", "cov(M)", "covering number of the meager ideal");
  node("unif_M", "unif(M)", "uniformity of the meager ideal");
  node("cof_M", "cof(M)", "cofinality of the meager ideal");
  node("unif_E", "unif(E)",
       "uniformity of the sigma-ideal generated by closed measure zero sets");
  node("cov_E", "cov(E)",
       "covering number of the sigma-ideal generated by closed measure zero "
       "sets");
  node("e", "e", "evasion number for omega-predictors");
  node("e_ell", "e_l", "linear evasion number over the rationals");
  node("e_ubd", "e_ubd", "unbounded evasion number, min over e_f");
  node("e_fin", "e_fin",
       "finite evasion number, min over e_n; e_n = e_fin for every n >= 2");
  node("e_prime", "e'",
       "least size of a family evading every countable set of block "
       "predictors");
  node("e_K_finite", "e_K (finite K)",
       "linear evasion number over a finite field");
  node("e_K_countable", "e_K (countable K)",
       "linear evasion number over a countable field");
  node("se", "se", "Specker-Eda number");
  node("lambda_star", "lambda*",
       "least size of a set meeting every size-n slalom infinitely often, "
       "some bounded space");
  node("cov_I", "cov(I_X)",
       "least number of predictors needed to predict every member of X");
  node("unif_I", "unif(I_X)",
       "least size of a subset of X outside the prediction ideal");

  auto edge = [&](const char* from, const char* to, const char* citation) {
    d.edges.push_back({from, to, RelationKind::ProvableLE, citation});
  };
  // classical chains
  edge("omega1", "add_L", "Intro: well-known, [Fr], [vD section 3]");
  edge("p_inv", "add_M", "Intro: well-known, [Fr], [vD section 3]");
  edge("add_M", "b", "Intro: well-known, [Fr], [vD section 3]");
  edge("b", "continuum", "Intro: well-known, [Fr], [vD section 3]");
  edge("p_inv", "s", "Intro: well-known, [Fr], [vD section 3]");
  edge("s", "continuum", "Intro: well-known, [Fr], [vD section 3]");
  // linear evasion
  edge("add_L", "e_ell", "Intro: Blass, add(L) <= e_l <= add(M)");
  edge("e_ell", "add_M", "Intro: Blass, add(L) <= e_l <= add(M)");
  edge("p_inv", "e_ell", "Intro: Blass, p <= e_l");
  edge("e_ell", "e", "Intro: clearly e_l <= e");
  edge("e_ell", "se", "Intro: Blass, e_l <= se");
  // Specker-Eda
  edge("se", "b", "Intro: Blass, se <= b");
  edge("se", "e_prime", "S2.4 Theorem: se <= e'");
  edge("se", "unif_L", "Theorem B: se <= unif(L)");
  // block predictors
  edge("e", "e_prime", "S2.3: clearly e' >= e");
  edge("e_prime", "unif_L", "S2.3: e' <= unif(M), unif(L)");
  edge("e_prime", "unif_M", "S2.3: e' <= unif(M), unif(L)");
  // bounded spaces
  edge("e", "e_ubd", "S3.1: trivially e <= e_ubd <= e_fin");
  edge("e_ubd", "e_fin", "S3.1: trivially e <= e_ubd <= e_fin");
  edge("e_fin", "unif_E", "S3.1: e_fin <= unif(E) <= unif(M), unif(L)");
  edge("unif_E", "unif_M", "S3.1: e_fin <= unif(E) <= unif(M), unif(L)");
  edge("unif_E", "unif_L", "S3.1: e_fin <= unif(E) <= unif(M), unif(L)");
  edge("s", "e_fin", "S3.2 Lemma 3: e_fin >= s");
  edge("s", "e_K_finite", "S3.2 Lemma 3: e_K >= s for finite fields");
  // field-valued linear evasion
  edge("add_L", "e_K_finite", "S3.1: e_K >= add(L), p for any such field");
  edge("add_L", "e_K_countable", "S3.1: e_K >= add(L), p for any such field");
  edge("p_inv", "e_K_finite", "S3.1: e_K >= add(L), p for any such field");
  edge("p_inv", "e_K_countable", "S3.1: e_K >= add(L), p for any such field");
  edge("e_K_countable", "e", "S3.1: e_K <= e for countable fields");
  edge("e_K_countable", "add_M", "S3.1: e_K <= add(M) for countable fields");
  edge("e_K_finite", "e_fin", "S3.1: e_K <= e_{|K|}, and e_n = e_fin");
  edge("e_K_countable", "b", "S4.4 remark: a strong way of saying e_K <= b");
  // slaloms and domination
  edge("lambda_star", "e_ubd", "S3.4: one easily sees lambda* <= e_ubd");
  edge("e", "d", "S3.4: by Blass, e <= d");
  // prediction ideals
  edge("e", "unif_I", "S3.5 Proposition: unif(I_X) >= e_X");
  // inequalities listed alongside the diagram
  edge("add_M", "unif_E", "S3.5: add(M) <= unif(E)");
  edge("cov_E", "cof_M", "S3.5: cov(E) <= cof(M)");
  edge("b", "unif_M", "S3.5: b <= unif(M)");
  edge("cov_M", "d", "S3.5: cov(M) <= d");
  edge("cov_L", "unif_M", "S3.5: cov(L) <= unif(M)");
  edge("cov_M", "unif_L", "S3.5: cov(M) <= unif(L)");
  edge("b", "r", "S3.5: b <= r");
  edge("s", "d", "S3.5: s <= d");

  auto note = [&](const char* text, const char* citation, const char* from,
                  const char* to) {
    d.notes.push_back({text, citation, from, to});
  };
  note("e_fin = e_n for all n >= 2", "S3.2 Lemma 2", "", "");
  note("min{b, e} = min{b, e_ubd}", "S3.2 Lemma 1", "", "");
  note("consistently e = omega_1 < b = add(M) = continuum", "Theorem A", "e",
       "add_M");
  note("consistently se < b", "Theorem B", "se", "b");
  note("consistently e < e_ubd", "Theorem C(b)", "e", "e_ubd");
  note("consistently e_ubd < e_fin (Mathias model)",
       "S3.2: CON(e_fin > e_ubd)", "e_ubd", "e_fin");
  note("consistently e_ubd = continuum and e = b = omega_1", "S3.3 Theorem",
       "", "");
  note("consistently e_ubd = continuum = omega_2 and d = omega_1",
       "S3.4 Theorem 1", "", "");
  note("open: relationship of e and b", "S5 question (2)", "e", "b");
  note("open: is se <= add(M)?", "S5 question (1)", "se", "add_M");
  note("open: relationship of e and e_l", "S5 question (2)", "e_ell", "e");
  note("open: is e_X = unif(I_X)?", "S5 question (4)", "e", "unif_I");
  note("e_Q equals e_l", "S3.1: e_Q = e_l", "", "");
  return d;
}

namespace {

void require_node(const Diagram& d, const std::string& id) {
  if (!d.has_node(id))
    throw DomainError(ErrorCode::UnknownNode, "no node with id " + id);
}

/// BFS over provable edges; deterministic because edges are scanned in their
/// stored order. Returns the node path, empty if unreachable.
std::vector<std::string> provable_path(const Diagram& d,
                                       const std::string& from,
                                       const std::string& to) {
  std::map<std::string, std::string> parent;
  std::deque<std::string> queue{from};
  parent[from] = "";
  while (!queue.empty()) {
    std::string cur = queue.front();
    queue.pop_front();
    if (cur == to) {
      std::vector<std::string> path;
      for (std::string at = to; !at.empty(); at = parent[at])
        path.push_back(at);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (const Relation& e : d.edges) {
      if (e.kind != RelationKind::ProvableLE || e.from != cur) continue;
      if (parent.count(e.to)) continue;
      parent[e.to] = cur;
      queue.push_back(e.to);
    }
  }
  return {};
}

std::string edge_citation(const Diagram& d, const std::string& from,
                          const std::string& to) {
  for (const Relation& e : d.edges)
    if (e.kind == RelationKind::ProvableLE && e.from == from && e.to == to)
      return e.citation;
  return "";
}

}  // namespace

QueryResult query_diagram(const Diagram& d, const std::string& from,
                          const std::string& to) {
  require_node(d, from);
  require_node(d, to);
  QueryResult result;
  for (const DiagramNote& n : d.notes)
    if ((n.from == from && n.to == to) || (n.from == to && n.to == from))
      result.annotations.push_back(n);

  std::vector<std::string> forward = provable_path(d, from, to);
  if (!forward.empty()) {
    result.outcome = result.annotations.empty()
                         ? QueryOutcome::ProvableLE
                         : QueryOutcome::OneWayWithConsistency;
    result.path = forward;
    for (std::size_t i = 0; i + 1 < forward.size(); ++i)
      result.citations.push_back(edge_citation(d, forward[i], forward[i + 1]));
    return result;
  }
  std::vector<std::string> backward = provable_path(d, to, from);
  if (!backward.empty()) {
    result.outcome = result.annotations.empty()
                         ? QueryOutcome::ProvableLE
                         : QueryOutcome::OneWayWithConsistency;
    result.path = backward;
    for (std::size_t i = 0; i + 1 < backward.size(); ++i)
      result.citations.push_back(
          edge_citation(d, backward[i], backward[i + 1]));
    return result;
  }
  // neither direction provable
  bool strict_notes = false;
  for (const DiagramNote& n : result.annotations)
    if (n.text.rfind("consistently", 0) == 0) strict_notes = true;
  result.outcome = strict_notes ? QueryOutcome::ConsistentlyStrictBothWays
                                : QueryOutcome::Open;
  return result;
}

std::string diagram_to_dot(const Diagram& d) {
  std::string out = "digraph invariants {\n  rankdir=BT;\n";
  for (const InvariantNode& n : d.nodes)
    out += "  \"" + n.id + "\" [label=\"" + n.label + "\"];\n";
  for (const Relation& e : d.edges)
    if (e.kind == RelationKind::ProvableLE)
      out += "  \"" + e.from + "\" -> \"" + e.to + "\";\n";
  out += "}\n";
  return out;
}

const char* query_outcome_name(QueryOutcome o) {
  switch (o) {
    case QueryOutcome::ProvableLE: return "provable_le";
    case QueryOutcome::ConsistentlyStrictBothWays:
      return "consistently_strict_both_ways";
    case QueryOutcome::OneWayWithConsistency:
      return "one_way_with_consistency";
    case QueryOutcome::Open: return "open";
  }
  return "unknown";
}

}  // namespace evp
