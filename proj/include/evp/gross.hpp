#pragma once

#include <cstdint>
#include <vector>

#include "evp/linalg.hpp"
#include "evp/rng.hpp"
#include "evp/word.hpp"

namespace evp {

/// A finite family of injections h_alpha : [0, alpha) -> omega with
/// pairwise-finite disagreement below common levels and co-infinite ranges
/// (witnessed here by avoiding all but finitely many odd numbers).
struct CoherentInjections {
  std::vector<std::vector<std::uint64_t>> maps;  // maps[alpha] has length alpha

  std::size_t size() const { return maps.size(); }
  void validate() const;
};

enum class InjectionStyle { Canonical, Perturbed };

/// Canonical: h_alpha(gamma) = 2 * gamma. Perturbed: finitely many values per
/// level rerouted to fresh odd numbers, deterministically from the seed.
CoherentInjections make_coherent_injections(std::size_t n, InjectionStyle style,
                                            std::uint64_t seed = 0);

/// Reads the column of the fragment at alpha over the first split_idx basis
/// vectors: f_alpha(n) = Phi(e_n, e_alpha) for n < split_idx. The indices
/// below split_idx play the countable basis; alpha must sit at or above it.
FieldWord gross_to_luzin(const BilinearFragment& phi, std::size_t alpha,
                         std::size_t split_idx);

/// Builds the fragment from generator words: Phi(e_alpha, e_beta) =
/// g_beta(h_beta(alpha)) for alpha < beta, mirrored below the diagonal; the
/// diagonal is set to 0 (the source equations never constrain it).
BilinearFragment luzin_to_gross(const std::vector<FieldWord>& generators,
                                const CoherentInjections& h, std::size_t n);

struct RoundtripMismatch {
  std::size_t beta = 0;
  std::size_t n = 0;
};

struct RoundtripReport {
  std::uint64_t checked = 0;
  std::vector<RoundtripMismatch> mismatches;
};

/// Composes the two translations and verifies f_beta(n) = g_beta(h_beta(n))
/// for all n < min(split_idx, beta). Any mismatch is an implementation bug.
RoundtripReport roundtrip_check(const std::vector<FieldWord>& generators,
                                const CoherentInjections& h, std::size_t n,
                                std::size_t split_idx);

/// dim(U-perp) along an increasing chain of subspaces, via the exact kernel
/// computation. Monotone nonincreasing.
std::vector<std::size_t> complement_growth_scan(
    const BilinearFragment& phi,
    const std::vector<std::vector<FieldWord>>& chain);

}  // namespace evp
