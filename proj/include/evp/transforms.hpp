#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "evp/linear_predictor.hpp"
#include "evp/predictor.hpp"

namespace evp {

/// sigma'(n) = sigma(n) when below the bound x(n), else 0.
Word clamp_word(const Word& sigma, const Word& x);

/// Extends a predictor over prod_n x(n) to the unbounded space of the same
/// horizon: the new rule clamps its argument into the bounded space first.
/// If the extended predictor predicts the clamp of f and f already agrees
/// with its clamp past the grace index, it predicts f itself.
Predictor extend_predictor_to_omega(const Predictor& p, const Word& x);

/// The two recodings behind the n -> 2 reduction: g flags the entries equal
/// to 1, h shifts the entries at the sampled indices k_m of d2 down by one
/// (collapsing 0 and 1).
std::pair<Word, Word> indicator_split(const Word& f,
                                      const std::vector<std::uint64_t>& d2);

/// Builds the n-valued predictor from a 2-valued one (domain {k_m}) and an
/// (n-1)-valued one whose domain indexes positions of that enumeration.
Predictor combine_predictors(const Predictor& pi2, const Predictor& pi_prime);

/// From an unsplit set B = {b_0 < b_1 < ...}: guesses sigma(b_{2n}) at index
/// b_{2n+1}. Linear with a single coefficient 1. Predicts every word that is
/// constant on B once the constancy has started.
LinearPredictor predictor_from_unsplit_set(const std::vector<std::uint64_t>& b,
                                           const FieldDescriptor& field);

/// Consecutive intervals I_n with |I_n| = n^2 starting at 0, and per block a
/// list of at most n candidate patterns defined exactly on I_n. Blocks 0 and 1
/// carry no options.
struct SlalomBlockSystem {
  SpaceSpec spec;                         // horizon = sum of block sizes
  std::size_t block_count = 0;
  std::vector<std::vector<Word>> options; // options[n]: words of length n^2

  static std::uint64_t block_start(std::size_t n);
  static std::uint64_t block_size(std::size_t n) { return n * n; }
  void validate() const;
};

/// Field-valued variant used by the linear construction.
struct FieldSlalomBlockSystem {
  FieldDescriptor field;
  std::size_t block_count = 0;
  std::vector<std::vector<FieldWord>> options;

  void validate() const;
};

/// Minimal position m in the block such that any two options with equal
/// restrictions below m agree at m. Existence is a pigeonhole fact: each pair
/// rules out at most its first-difference position and there are fewer pairs
/// than positions.
std::uint64_t find_merge_point(const std::vector<Word>& options,
                               std::uint64_t block_start,
                               std::uint64_t block_size);

/// The branch predictor: at each block's merge point, answer with the value
/// of the unique option class matching the visible part of the block, else 0.
Predictor predictor_from_slalom(const SlalomBlockSystem& s);

/// Linear variant: per block keep a maximal linearly independent subset of
/// the options (greedy by option index), place the merge point where the
/// visible restriction determines the value on the span of the kept options,
/// and realize that determination as a linear functional.
LinearPredictor linear_predictor_from_slalom(const FieldSlalomBlockSystem& s);

}  // namespace evp
