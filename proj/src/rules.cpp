#include <algorithm>

#include "evp/generalized.hpp"

namespace evp {

std::uint64_t GeneralizedPredictorDE::BlockRule::apply(
    const Word& restricted) const {
  if (kind == Kind::CopyPosition) {
    if (copy_pos >= restricted.size())
      throw DomainError(ErrorCode::LengthMismatch,
                        "copy position outside the restricted word");
    return restricted[copy_pos];
  }
  auto it = table.find(restricted);
  return it == table.end() ? fallback : it->second;
}

void GeneralizedPredictorDE::validate() const {
  if (ks.size() != ls.size() || ks.size() != rules.size())
    throw DomainError(ErrorCode::InvalidArgument,
                      "block sequences and rules must have equal length");
  for (std::size_t n = 0; n < ks.size(); ++n) {
    if (ks[n] > ls[n])
      throw DomainError(ErrorCode::InvalidArgument,
                        "interleaving requires k_n <= l_n");
    if (n + 1 < ks.size() && ls[n] >= ks[n + 1])
      throw DomainError(ErrorCode::InvalidArgument,
                        "interleaving requires l_n < k_{n+1}");
  }
}

Word restrict_off_index(const Word& g, std::uint64_t l, std::uint64_t k) {
  Word out;
  for (std::uint64_t i = 0; i < l && i < g.size(); ++i)
    if (i != k) out.push_back(g[i]);
  return out;
}

PredictionReport check_prediction_de(const GeneralizedPredictorDE& p,
                                     const Word& g, std::uint64_t grace) {
  p.validate();
  std::vector<std::uint64_t> checked, hits, misses;
  for (std::size_t n = 0; n < p.block_count(); ++n) {
    const std::uint64_t k = p.ks[n], l = p.ls[n];
    if (k < grace) continue;
    if (l > g.size() || k >= g.size()) continue;  // block data incomplete
    checked.push_back(k);
    Word restricted = restrict_off_index(g, l, k);
    if (p.rules[n].apply(restricted) == g[k])
      hits.push_back(k);
    else
      misses.push_back(k);
  }
  return make_report(std::move(checked), std::move(hits), std::move(misses));
}

void SetValuedPredictor::validate() const {
  for (const Block& b : blocks)
    for (std::uint64_t l : b.ls)
      if (l < b.k)
        throw DomainError(ErrorCode::InvalidArgument,
                          "block A_k must lie inside [k, horizon)");
}

PredictionReport check_prediction_setvalued(const SetValuedPredictor& p,
                                            const Word& g,
                                            std::uint64_t grace) {
  p.validate();
  std::vector<std::uint64_t> checked, hits, misses;
  for (const auto& block : p.blocks) {
    if (block.k < grace || block.ls.empty()) continue;
    const std::uint64_t max_l = *std::max_element(block.ls.begin(),
                                                  block.ls.end());
    if (max_l >= g.size()) continue;  // incomplete data, skip the block
    checked.push_back(block.k);
    bool hit = false;
    for (std::uint64_t l : block.ls) {
      auto it = p.rules.find({block.k, l});
      if (it == p.rules.end()) continue;
      Word prefix(g.begin(), g.begin() + l);
      auto jt = it->second.table.find(prefix);
      const auto& guesses =
          jt == it->second.table.end() ? it->second.fallback : jt->second;
      if (std::binary_search(guesses.begin(), guesses.end(), g[l])) {
        hit = true;
        break;
      }
    }
    (hit ? hits : misses).push_back(block.k);
  }
  return make_report(std::move(checked), std::move(hits), std::move(misses));
}

PredictionReport check_slalom_evasion(const Slalom& phi, const Word& x,
                                      std::uint64_t grace) {
  for (const auto& [n, allowed] : phi)
    if (allowed.size() > n)
      throw DomainError(ErrorCode::SlalomTooWide,
                        "slalom set at " + std::to_string(n) + " has " +
                            std::to_string(allowed.size()) + " > " +
                            std::to_string(n) + " elements");
  std::vector<std::uint64_t> checked, captured, escapes;
  for (const auto& [n, allowed] : phi) {
    if (n < grace || n >= x.size()) continue;
    checked.push_back(n);
    if (std::find(allowed.begin(), allowed.end(), x[n]) != allowed.end())
      captured.push_back(n);
    else
      escapes.push_back(n);
  }
  return make_report(std::move(checked), std::move(captured),
                     std::move(escapes));
}

}  // namespace evp
