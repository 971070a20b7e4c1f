#include "evp/predictor.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

namespace evp {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Predicted: return "predicted";
    case Verdict::Evades: return "evades";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

void check_domain(const SpaceSpec& spec,
                  const std::vector<std::uint64_t>& domain) {
  for (std::size_t i = 1; i < domain.size(); ++i)
    if (domain[i] <= domain[i - 1])
      throw DomainError(ErrorCode::InvalidArgument,
                        "predictor domain must be strictly increasing");
  if (!domain.empty() && domain.back() >= spec.horizon())
    throw DomainError(ErrorCode::IndexBeyondHorizon,
                      "domain index " + std::to_string(domain.back()) +
                          " not below horizon " +
                          std::to_string(spec.horizon()));
}

}  // namespace

Predictor make_table_predictor(
    const SpaceSpec& spec, const std::vector<std::uint64_t>& domain,
    const std::map<std::uint64_t, std::map<Word, std::uint64_t>>& tables) {
  spec.validate();
  check_domain(spec, domain);
  TableBacking backing;
  for (std::uint64_t n : domain) {
    auto it = tables.find(n);
    if (it == tables.end())
      throw DomainError(ErrorCode::IncompleteTable,
                        "no table for index " + std::to_string(n));
    const auto& table = it->second;
    for (const auto& [word, value] : table) {
      if (word.size() != n || !spec.contains(word))
        throw DomainError(ErrorCode::WordOutsideSpace,
                          "table key outside the space prefix at index " +
                              std::to_string(n));
      if (!spec.coordinate_ok(n, value))
        throw DomainError(ErrorCode::OutOfBoundsValue,
                          "table value " + std::to_string(value) +
                              " breaks the bound at index " +
                              std::to_string(n));
    }
    // totality over the space prefix at n
    std::size_t expected = 0;
    for_each_word(spec, n, [&](const Word& w) {
      ++expected;
      if (!table.count(w))
        throw DomainError(ErrorCode::IncompleteTable,
                          "table at index " + std::to_string(n) +
                              " is missing a word");
    });
    (void)expected;
    backing.tables[n] = table;
  }
  Predictor p;
  p.space = spec;
  p.domain = domain;
  p.backing = std::move(backing);
  return p;
}

Predictor make_rule_predictor(const SpaceSpec& spec,
                              const std::vector<std::uint64_t>& domain,
                              CompiledRule fn, std::string name,
                              std::string params_json) {
  spec.validate();
  check_domain(spec, domain);
  Predictor p;
  p.space = spec;
  p.domain = domain;
  p.backing = RuleBacking{std::move(name), std::move(params_json),
                          std::move(fn)};
  return p;
}

std::uint64_t evaluate_predictor(const Predictor& p, std::uint64_t index,
                                 const Word& prefix) {
  if (prefix.size() != index)
    throw DomainError(ErrorCode::LengthMismatch,
                      "prefix length does not equal the queried index");
  if (const auto* tb = std::get_if<TableBacking>(&p.backing)) {
    auto it = tb->tables.find(index);
    if (it == tb->tables.end())
      throw DomainError(ErrorCode::InvalidArgument,
                        "index outside predictor domain");
    auto jt = it->second.find(prefix);
    if (jt == it->second.end())
      throw DomainError(ErrorCode::IncompleteTable,
                        "prefix missing from table");
    return jt->second;
  }
  return std::get<RuleBacking>(p.backing).fn(index, prefix);
}

PredictionReport check_prediction(const Predictor& p, const Word& g,
                                  std::uint64_t grace) {
  if (!p.space.contains(g))
    throw DomainError(ErrorCode::WordOutsideSpace,
                      "word is not in the predictor's space prefix");
  if (grace > g.size())
    throw DomainError(ErrorCode::PreconditionViolated,
                      "grace exceeds the word length");
  std::vector<std::uint64_t> checked, hits, misses;
  for (std::uint64_t n : p.domain) {
    if (n < grace || n >= g.size()) continue;
    checked.push_back(n);
    Word prefix(g.begin(), g.begin() + n);
    if (evaluate_predictor(p, n, prefix) == g[n])
      hits.push_back(n);
    else
      misses.push_back(n);
  }
  return make_report(std::move(checked), std::move(hits), std::move(misses));
}

namespace {

std::unordered_map<std::string, RuleCompiler>& rule_registry() {
  static std::unordered_map<std::string, RuleCompiler> registry;
  return registry;
}

std::mutex& rule_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

void register_rule(const std::string& name, RuleCompiler compiler) {
  std::lock_guard<std::mutex> lock(rule_mutex());
  rule_registry()[name] = std::move(compiler);
}

bool rule_registered(const std::string& name) {
  std::lock_guard<std::mutex> lock(rule_mutex());
  return rule_registry().count(name) > 0;
}

CompiledRule compile_rule(const std::string& name,
                          const std::string& params_json,
                          const SpaceSpec& space) {
  RuleCompiler compiler;
  {
    std::lock_guard<std::mutex> lock(rule_mutex());
    auto it = rule_registry().find(name);
    if (it == rule_registry().end())
      throw DomainError(ErrorCode::InvalidArgument,
                        "unknown rule name: " + name);
    compiler = it->second;
  }
  return compiler(params_json, space);
}

}  // namespace evp
