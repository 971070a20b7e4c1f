#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "evp/error.hpp"
#include "evp/word.hpp"

namespace evp {

/// Per-coordinate bound. Empty optional means the coordinate is unbounded;
/// a value b means entries at that coordinate range over [0, b) with b >= 2.
using Bound = std::optional<std::uint64_t>;

/// A finite prefix of a sequence space prod_n f(n): one bound per coordinate
/// below the horizon.
struct SpaceSpec {
  std::vector<Bound> bounds;

  std::size_t horizon() const { return bounds.size(); }

  void validate() const {
    for (const Bound& b : bounds)
      if (b && *b < 2)
        throw DomainError(ErrorCode::InvalidArgument,
                          "space bound must be >= 2");
  }

  bool coordinate_ok(std::size_t i, std::uint64_t value) const {
    if (i >= bounds.size()) return false;
    return !bounds[i] || value < *bounds[i];
  }

  /// Membership in the space prefix: length within horizon and every entry
  /// below its bound (unbounded coordinates accept anything).
  bool contains(const Word& w) const {
    if (w.size() > horizon()) return false;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (bounds[i] && w[i] >= *bounds[i]) return false;
    return true;
  }

  static SpaceSpec constant(std::uint64_t bound, std::size_t horizon) {
    SpaceSpec s;
    s.bounds.assign(horizon, Bound(bound));
    return s;
  }

  static SpaceSpec unbounded(std::size_t horizon) {
    SpaceSpec s;
    s.bounds.assign(horizon, std::nullopt);
    return s;
  }

  static SpaceSpec from_bounds(const std::vector<std::uint64_t>& b) {
    SpaceSpec s;
    for (std::uint64_t x : b) s.bounds.emplace_back(x);
    s.validate();
    return s;
  }

  bool operator==(const SpaceSpec& other) const = default;
};

/// Enumerates all words of the given length inside the space prefix, in
/// lexicographic order. Throws if some coordinate below len is unbounded.
template <typename Fn>
void for_each_word(const SpaceSpec& spec, std::size_t len, Fn&& fn) {
  if (len > spec.horizon())
    throw DomainError(ErrorCode::IndexBeyondHorizon,
                      "word length exceeds horizon");
  for (std::size_t i = 0; i < len; ++i)
    if (!spec.bounds[i])
      throw DomainError(ErrorCode::IncompleteTable,
                        "cannot enumerate words over an unbounded coordinate");
  Word w(len, 0);
  while (true) {
    fn(const_cast<const Word&>(w));
    std::size_t i = len;
    while (i > 0) {
      --i;
      if (++w[i] < *spec.bounds[i]) break;
      w[i] = 0;
      if (i == 0) return;
    }
    if (len == 0) return;
  }
}

}  // namespace evp
