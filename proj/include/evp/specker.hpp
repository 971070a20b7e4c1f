#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "evp/field.hpp"
#include "evp/generalized.hpp"
#include "evp/word.hpp"

namespace evp {

/// First `count` primes.
std::vector<std::uint64_t> first_primes(std::size_t count);

/// The prime-power image of a word: x(0) = 1 and
/// x(n) = prod_{i<n} p_i^{f(i)+n-i-1}. Exact integers throughout.
struct SpeckerVector {
  Word source;
  std::vector<BigInt> entries;
};

SpeckerVector specker_encode(const Word& f, std::size_t n);

/// One solved divisibility chain: the values x-hat_{kn+1} .. x-hat_{ln},
/// per-step integrality, and the first break if any.
struct ChainResult {
  std::vector<BigRat> values;
  std::vector<bool> integral;
  std::optional<std::uint64_t> breaks_at;  // absolute index j of first break

  bool all_integral() const { return !breaks_at.has_value(); }
};

/// Solves the block recursion
///   xhat_{kn+1} * b_{kn+1} * p^{f(kn)} = a
///   xhat_j * b_j * p^{f(kn)+j-kn-1}
///     = h(e_j) * b_j * p^{f(kn)+j-kn-1} + xhat_{j+1} * b_{j+1} * p^{f(kn)+j-kn}
/// where b_j = prod_{i<j, i != kn} p_i^{f(i)+j-i-1} and p = p_{kn}.
/// h_values[t] is h(e_{kn+1+t}); entries beyond index ln-kn-2 are unused by
/// the recursion but accepted.
ChainResult hat_chain(const BigInt& a, std::uint64_t kn, std::uint64_t ln,
                      const Word& f_gamma, const std::vector<BigInt>& h_values,
                      const std::vector<std::uint64_t>& primes);

struct RefuterWitness {
  BigInt a;
  std::vector<BigInt> h_values;
};

struct RefuterResult {
  bool refuted = true;
  std::optional<RefuterWitness> counterexample;
  std::uint64_t grid_points = 0;
  std::uint64_t integral_alpha = 0;  // grid points with the first chain whole
  std::uint64_t integral_beta = 0;
  std::uint64_t decay_checks = 0;    // per-step p-valuation drops verified
  std::uint64_t decay_violations = 0;

  struct GridRow {
    BigInt a;
    std::vector<BigInt> h_values;
    std::optional<std::uint64_t> alpha_break;
    std::optional<std::uint64_t> beta_break;
  };
  std::vector<GridRow> rows;  // filled when keep_rows is requested
};

/// Exhaustively scans a and the block h-values over the given bounds; returns
/// Refuted when no assignment makes both chains integral with the same a != 0
/// (the finite shadow of the uniqueness argument). h_kn_bound is the declared
/// bound on |h(e_kn)| gating the spacing precondition
/// ln - kn > 2 * h_kn_bound^2.
RefuterResult collision_refuter(const Word& f_alpha, const Word& f_beta,
                                std::uint64_t kn, std::uint64_t ln,
                                std::uint64_t a_bound, std::uint64_t h_bound,
                                std::uint64_t h_kn_bound,
                                bool keep_rows = false);

struct BlockSchedule {
  std::vector<std::uint64_t> ks;
  std::vector<std::uint64_t> ls;
};

/// Builds the block predictor of a finite family: at each block the rule maps
/// the off-kn values to the kn value of the first family member matching
/// them. When two members collide at kn the refuter must rule the collision
/// out; a counterexample raises AmbiguousValue.
GeneralizedPredictorDE predictor_from_refuter(const std::vector<Word>& family,
                                              const BlockSchedule& schedule,
                                              std::uint64_t a_bound,
                                              std::uint64_t h_bound,
                                              std::uint64_t h_kn_bound);

}  // namespace evp
