#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "evp/predictor.hpp"
#include "evp/space.hpp"
#include "evp/word.hpp"

namespace evp {

/// A condition of the predictor-adding poset for the space prod_n x(n):
/// a finite index set d, a total guessing table for each k in d, and a finite
/// set of promise words (initial segments, possibly the full horizon).
/// Extensions must add indices above max(d), keep the tables, and predict
/// every promise at each new index inside its domain.
struct PxCondition {
  SpaceSpec space;
  std::vector<std::uint64_t> d;  // strictly increasing
  std::map<std::uint64_t, std::map<Word, std::uint64_t>> tables;
  std::vector<Word> promises;    // sorted, duplicate free

  void validate() const;
  void normalize();  // sorts/dedups promises

  bool operator==(const PxCondition&) const = default;
};

/// h(c) = max(max(d), |F|) with max(emptyset) = 0.
std::uint64_t height(const PxCondition& c);

/// True iff c1 extends c2: the order of the predictor-adding poset.
/// Clause 1: d1 contains d2 with the new indices above max(d2) (no constraint
/// when d2 is empty). Clause 2: tables agree on d2. Clause 3: every promise of
/// c2 extends to one of c1, and every new index predicts every c2-promise that
/// reaches it.
bool px_leq(const PxCondition& c1, const PxCondition& c2);

enum class CompatStatus { Compatible, BoundedlyIncompatible };

struct CompatResult {
  CompatStatus status = CompatStatus::BoundedlyIncompatible;
  std::optional<PxCondition> common;  // a witness extension when compatible
};

/// Looks for a common extension. Two conditions sharing (d, tables) merge
/// immediately into (d, tables, F union G); otherwise the domains must be
/// nested and the fixed tables must satisfy the other side's promises, in
/// which case the merged condition is returned. Failures are reported as
/// boundedly incompatible (no extension exists inside this horizon).
CompatResult px_compatible(const PxCondition& c1, const PxCondition& c2);

/// The finite witness set of the softness axiom (II): conditions below q,
/// each incompatible with p, such that every q' <= q incompatible with p of
/// height <= m lies below one of them. Implements the four-case analysis on
/// how an extension of q can permanently clash with p. Requires p, q
/// compatible and q not below p.
std::vector<PxCondition> softness_witnesses(const PxCondition& p,
                                            const PxCondition& q,
                                            std::uint64_t m);

/// Softness axiom (III): find r below both with h(r) <= h(p) + h(q).
bool verify_property_iii(const PxCondition& p, const PxCondition& q);

/// Softness axiom (I) on a finite decreasing chain of height <= m: builds the
/// lower bound from the stabilized (d, tables) and the accumulated promises
/// and verifies it sits below every element.
bool verify_property_i(const std::vector<PxCondition>& chain, std::uint64_t m);

struct GenericExtraction {
  Predictor predictor;
  // for every promise of every chain element: the new indices past its entry
  // where the accumulated tables reproduce it (guaranteed by the order)
  struct PromiseCoverage {
    std::size_t chain_pos = 0;
    Word promise;
    std::vector<std::uint64_t> predicted_at;
  };
  std::vector<PromiseCoverage> coverage;
};

/// Union of the tables over the union of the index sets along a decreasing
/// chain, as a table-backed predictor, plus the promise-coverage report.
GenericExtraction generic_predictor(const std::vector<PxCondition>& chain);

}  // namespace evp
