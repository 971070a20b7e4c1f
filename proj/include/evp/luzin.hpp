#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "evp/linalg.hpp"
#include "evp/word.hpp"

namespace evp {

/// Memoized engine for the index recursion sigma*. For sigma of length n with
/// last entry m, sigma*(n-1) is the least l such that a_l avoids every value
/// phi_k(a_{l_0}, ..., a_{l_{d-1}}) with k < m and the l_j drawn (with
/// repetition) from the indices union {ran(tau*) : tau in m^{<=n}}. Earlier
/// coordinates come from the prefixes, so sigma* is coherent by construction.
///
/// Construction is single-writer; freeze() makes the cache immutable and
/// shareable afterwards.
class SigmaStarCache {
 public:
  explicit SigmaStarCache(const FieldDescriptor& field,
                          std::uint64_t step_budget = kDefaultStepBudget);

  static constexpr std::uint64_t kDefaultStepBudget = 2'000'000;

  const FieldDescriptor& field() const { return field_; }

  /// sigma*(lh(sigma)-1) for a nonempty word.
  std::uint64_t rho(const Word& sigma);

  /// Sorted union of ran(tau*) over nonempty tau with entries < m and
  /// length <= n.
  const std::vector<std::uint64_t>& union_set(std::uint64_t m,
                                              std::uint64_t n);

  const Scalar& element(std::uint64_t index);
  const LinearForm& form(std::uint64_t k);

  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

  std::uint64_t steps() const { return steps_; }
  std::size_t memo_size() const { return rho_.size(); }

 private:
  void count_step();
  void require_writable() const;

  FieldDescriptor field_;
  std::uint64_t step_budget_;
  std::uint64_t steps_ = 0;
  bool frozen_ = false;
  std::map<Word, std::uint64_t> rho_;
  std::map<std::pair<std::uint64_t, std::uint64_t>,
           std::vector<std::uint64_t>>
      union_cache_;
  std::vector<Scalar> elements_;
  std::vector<LinearForm> forms_;
};

/// Full index word sigma* of a nonempty sigma.
std::vector<std::uint64_t> sigma_star(const Word& sigma,
                                      SigmaStarCache& cache);

/// The generator word: g(n) = a at index (f restricted to n+1)*(n).
FieldWord luzin_vector(const Word& f, std::uint64_t horizon,
                       SigmaStarCache& cache);

/// Re-derives every avoidance constraint behind a constructed generator and
/// verifies g(n) misses all of them; returns the number of constraints
/// checked. Any hit raises AuditFailure (an implementation-bug signal).
std::uint64_t avoidance_audit(const FieldWord& g, const Word& f,
                              SigmaStarCache& cache);

struct LuzinFamily {
  FieldDescriptor field;
  std::uint64_t horizon = 0;
  std::vector<Word> sources;
  std::vector<FieldWord> generators;
};

LuzinFamily build_luzin_family(const std::vector<Word>& sources,
                               std::uint64_t horizon, SigmaStarCache& cache);

struct LuzinScanBudget {
  std::size_t max_domain_size = 1;
  std::uint64_t form_coeff_indices = 2;  // field-enumeration indices per slot
  std::uint64_t max_predictors = 20000;
  std::uint64_t grace = 0;
};

struct LuzinScanRow {
  std::uint64_t predictor_id = 0;
  std::vector<std::uint64_t> domain;
  std::uint64_t predicted_count = 0;
  std::string witness;  // first predicted combination, comma separated indices
};

struct LuzinScanTable {
  std::uint64_t combination_count = 0;
  std::vector<LuzinScanRow> rows;
  std::uint64_t max_predicted = 0;
};

/// Enumerates every nonzero coefficient combination of the generators (all
/// coefficient tuples with field-enumeration indices below coeff_bound) and
/// every linear predictor inside the budget, and tabulates how many
/// combinations each predictor predicts from the given grace.
LuzinScanTable brute_force_luzinity(const LuzinFamily& family,
                                    std::uint64_t coeff_bound,
                                    const LuzinScanBudget& budget);

}  // namespace evp
