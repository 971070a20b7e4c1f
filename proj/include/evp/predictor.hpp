#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "evp/report.hpp"
#include "evp/space.hpp"
#include "evp/word.hpp"

namespace evp {

/// Compiled form of a prediction rule: given an index n in the domain and a
/// prefix of length n, produce the guessed value at n.
using CompiledRule =
    std::function<std::uint64_t(std::uint64_t index, const Word& prefix)>;

struct TableBacking {
  // per domain index, a total map from prefix words to guessed values
  std::map<std::uint64_t, std::map<Word, std::uint64_t>> tables;
};

struct RuleBacking {
  std::string name;         // catalog name; empty for local test closures
  std::string params_json;  // catalog parameter blob (JSON text)
  CompiledRule fn;          // compiled eagerly; immutable afterwards
};

/// A finite-horizon predictor: a strictly increasing domain D inside the
/// attached space's horizon, and for each n in D a total guessing rule on
/// prefixes of length n.
struct Predictor {
  SpaceSpec space;
  std::vector<std::uint64_t> domain;  // strictly increasing
  std::variant<TableBacking, RuleBacking> backing;

  bool is_table_backed() const {
    return std::holds_alternative<TableBacking>(backing);
  }
};

/// Builds a table-backed predictor, checking totality and value bounds.
/// Errors: IncompleteTable, OutOfBoundsValue, IndexBeyondHorizon.
Predictor make_table_predictor(
    const SpaceSpec& spec, const std::vector<std::uint64_t>& domain,
    const std::map<std::uint64_t, std::map<Word, std::uint64_t>>& tables);

/// Wraps a compiled closure. If `name` is empty the predictor cannot be
/// serialized but is otherwise first class (used heavily by tests and
/// exhaustive sweeps).
Predictor make_rule_predictor(const SpaceSpec& spec,
                              const std::vector<std::uint64_t>& domain,
                              CompiledRule fn, std::string name = "",
                              std::string params_json = "");

/// Evaluates the rule at a domain index on the given prefix.
std::uint64_t evaluate_predictor(const Predictor& p, std::uint64_t index,
                                 const Word& prefix);

/// Classifies every domain index n with grace <= n < lh(g): hit iff the rule
/// reproduces g(n) from g restricted to n. Errors: WordOutsideSpace,
/// PreconditionViolated (grace beyond the word).
PredictionReport check_prediction(const Predictor& p, const Word& g,
                                  std::uint64_t grace);

// --- rule catalog ---------------------------------------------------------

/// Compiles a named rule from its parameter blob. Registered names are pure
/// deterministic functions, so serialized experiments replay exactly.
using RuleCompiler = std::function<CompiledRule(const std::string& params_json,
                                                const SpaceSpec& space)>;

void register_rule(const std::string& name, RuleCompiler compiler);
bool rule_registered(const std::string& name);
CompiledRule compile_rule(const std::string& name,
                          const std::string& params_json,
                          const SpaceSpec& space);

}  // namespace evp
