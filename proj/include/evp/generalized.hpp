#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "evp/report.hpp"
#include "evp/word.hpp"

namespace evp {

/// Guesses f(k_n) from f on l_n \ {k_n}, for interleaved blocks
/// k_n <= l_n < k_{n+1}. The block rule reads the word restricted to
/// [0, l_n) \ {k_n}, listed in increasing position order.
struct GeneralizedPredictorDE {
  struct BlockRule {
    enum class Kind { Table, CopyPosition };
    Kind kind = Kind::Table;
    std::map<Word, std::uint64_t> table;
    std::uint64_t fallback = 0;   // Table: value when the key is absent
    std::size_t copy_pos = 0;     // CopyPosition: index into the restriction

    std::uint64_t apply(const Word& restricted) const;
  };

  std::vector<std::uint64_t> ks;
  std::vector<std::uint64_t> ls;
  std::vector<BlockRule> rules;

  std::size_t block_count() const { return ks.size(); }
  void validate() const;
};

/// g restricted to [0, l) \ {k}, increasing position order.
Word restrict_off_index(const Word& g, std::uint64_t l, std::uint64_t k);

/// Hit at block n iff the rule applied to g on l_n \ {k_n} equals g(k_n).
/// Blocks whose data is not fully inside g are skipped; grace filters on k_n.
PredictionReport check_prediction_de(const GeneralizedPredictorDE& p,
                                     const Word& g, std::uint64_t grace);

/// Per k, a finite block A_k subseteq [k, horizon) and for each l in A_k a
/// finite guess set computed from g restricted to l.
struct SetValuedPredictor {
  struct SetRule {
    std::map<Word, std::vector<std::uint64_t>> table;  // sorted guess sets
    std::vector<std::uint64_t> fallback;
  };
  struct Block {
    std::uint64_t k = 0;
    std::vector<std::uint64_t> ls;  // strictly increasing, all >= k
  };

  std::vector<Block> blocks;                              // sorted by k
  std::map<std::pair<std::uint64_t, std::uint64_t>, SetRule> rules;

  void validate() const;
};

/// Hit at k iff some l in A_k has g(l) inside the guess set at (k, l).
PredictionReport check_prediction_setvalued(const SetValuedPredictor& p,
                                            const Word& g,
                                            std::uint64_t grace);

/// A slalom: per represented index n a permitted set phi(n) with
/// |phi(n)| <= n. The report marks n as a miss ("escape") iff x(n) is not in
/// phi(n); verdict Evades iff at least one escape at or beyond grace.
using Slalom = std::map<std::uint64_t, std::vector<std::uint64_t>>;

PredictionReport check_slalom_evasion(const Slalom& phi, const Word& x,
                                      std::uint64_t grace);

}  // namespace evp
