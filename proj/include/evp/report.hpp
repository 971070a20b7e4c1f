#pragma once

#include <cstdint>
#include <vector>

#include "evp/error.hpp"

namespace evp {

enum class Verdict { Predicted, Evades, Inconclusive };

const char* verdict_name(Verdict v);

/// Outcome of a finite-horizon prediction check. The asymptotic "for all but
/// finitely many" is replaced by an explicit grace index: checkedIndices are
/// the domain indices in [grace, horizon) that could be evaluated, and the
/// verdict reads Predicted exactly when none of them missed.
struct PredictionReport {
  std::vector<std::uint64_t> checked;
  std::vector<std::uint64_t> hits;
  std::vector<std::uint64_t> misses;
  Verdict verdict = Verdict::Inconclusive;

  bool operator==(const PredictionReport&) const = default;
};

/// Builds the report from per-index outcomes; hits and misses must partition
/// checked (both sorted ascending).
inline PredictionReport make_report(std::vector<std::uint64_t> checked,
                                    std::vector<std::uint64_t> hits,
                                    std::vector<std::uint64_t> misses) {
  if (hits.size() + misses.size() != checked.size())
    throw DomainError(ErrorCode::InvalidArgument,
                      "hits and misses must partition checked indices");
  PredictionReport r;
  r.checked = std::move(checked);
  r.hits = std::move(hits);
  r.misses = std::move(misses);
  if (r.checked.empty())
    r.verdict = Verdict::Inconclusive;
  else
    r.verdict = r.misses.empty() ? Verdict::Predicted : Verdict::Evades;
  return r;
}

}  // namespace evp
