#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace evp {

/// A finite sequence of naturals. Index i of a word of length n corresponds
/// to the coordinate i of the ambient sequence space; restriction to m takes
/// the first m entries.
using Word = std::vector<std::uint64_t>;

inline Word restrict_word(const Word& w, std::size_t len) {
  return Word(w.begin(), w.begin() + len);
}

/// True iff a is an initial segment of b (allowing a == b).
inline bool is_prefix(const Word& a, const Word& b) {
  if (a.size() > b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace evp
