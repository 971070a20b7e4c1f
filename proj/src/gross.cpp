#include "evp/gross.hpp"

#include <algorithm>
#include <set>

namespace evp {

void CoherentInjections::validate() const {
  for (std::size_t alpha = 0; alpha < maps.size(); ++alpha) {
    if (maps[alpha].size() != alpha)
      throw DomainError(ErrorCode::InvalidArgument,
                        "h_alpha must have domain [0, alpha)");
    std::set<std::uint64_t> seen(maps[alpha].begin(), maps[alpha].end());
    if (seen.size() != alpha)
      throw DomainError(ErrorCode::InvalidArgument,
                        "h_alpha must be injective");
    // finite shadow of a co-infinite range: something below 2*alpha+4 is free
    bool free_slot = false;
    for (std::uint64_t v = 0; v < 2 * alpha + 4 && !free_slot; ++v)
      if (!seen.count(v)) free_slot = true;
    if (!free_slot)
      throw DomainError(ErrorCode::InvalidArgument,
                        "h_alpha range must leave the working horizon roomy");
    // finite disagreement below common levels is automatic at finite size;
    // asserted anyway so the perturbed generator exercises it
    for (std::size_t beta = 0; beta < alpha; ++beta) {
      std::size_t disagreements = 0;
      for (std::size_t gamma = 0; gamma < beta; ++gamma)
        if (maps[beta][gamma] != maps[alpha][gamma]) ++disagreements;
      if (disagreements > beta)
        throw std::logic_error("disagreement count exceeded the level");
    }
  }
}

CoherentInjections make_coherent_injections(std::size_t n,
                                            InjectionStyle style,
                                            std::uint64_t seed) {
  if (n < 1)
    throw DomainError(ErrorCode::InvalidArgument, "need at least one level");
  CoherentInjections h;
  h.maps.resize(n);
  for (std::size_t alpha = 0; alpha < n; ++alpha) {
    h.maps[alpha].resize(alpha);
    for (std::size_t gamma = 0; gamma < alpha; ++gamma)
      h.maps[alpha][gamma] = 2 * gamma;
  }
  if (style == InjectionStyle::Perturbed) {
    SplitMix64 rng(seed);
    for (std::size_t alpha = 1; alpha < n; ++alpha) {
      const std::uint64_t reroutes = rng.below(2);  // 0 or 1 per level
      for (std::uint64_t r = 0; r < reroutes; ++r) {
        const std::size_t gamma = static_cast<std::size_t>(rng.below(alpha));
        // fresh odd target, unique within this level and below 2*(alpha+2)
        std::uint64_t target = 2 * rng.below(alpha + 2) + 1;
        while (std::find(h.maps[alpha].begin(), h.maps[alpha].end(),
                         target) != h.maps[alpha].end())
          target += 2;
        h.maps[alpha][gamma] = target;
      }
    }
  }
  h.validate();
  return h;
}

FieldWord gross_to_luzin(const BilinearFragment& phi, std::size_t alpha,
                         std::size_t split_idx) {
  phi.validate();
  if (alpha < split_idx)
    throw DomainError(ErrorCode::IndexOrder,
                      "alpha must lie at or above the split index");
  if (alpha >= phi.dimension())
    throw DomainError(ErrorCode::DimensionMismatch,
                      "alpha outside the fragment");
  FieldWord f;
  for (std::size_t n = 0; n < split_idx; ++n)
    f.push_back(phi.entries[n][alpha]);
  return f;
}

BilinearFragment luzin_to_gross(const std::vector<FieldWord>& generators,
                                const CoherentInjections& h, std::size_t n) {
  h.validate();
  if (generators.size() < n)
    throw DomainError(ErrorCode::DimensionMismatch,
                      "need at least n generator words");
  if (h.size() < n)
    throw DomainError(ErrorCode::DimensionMismatch,
                      "need at least n injection levels");
  if (n == 0 || generators.empty())
    throw DomainError(ErrorCode::InvalidArgument, "empty fragment");
  FieldDescriptor field;
  bool found = false;
  for (const FieldWord& g : generators)
    if (!g.empty()) {
      field = g[0].field();
      found = true;
      break;
    }
  if (!found)
    throw DomainError(ErrorCode::InvalidArgument,
                      "cannot infer the field from empty generator words");

  BilinearFragment phi;
  phi.field = field;
  phi.entries.assign(n, std::vector<Scalar>(n, Scalar::zero(field)));
  for (std::size_t beta = 0; beta < n; ++beta) {
    for (std::size_t alpha = 0; alpha < beta; ++alpha) {
      const std::uint64_t pos = h.maps[beta][alpha];
      if (pos >= generators[beta].size())
        throw DomainError(ErrorCode::HorizonTooShort,
                          "generator word too short for h_beta(alpha)");
      phi.entries[alpha][beta] = generators[beta][pos];
      phi.entries[beta][alpha] = generators[beta][pos];
    }
  }
  phi.validate();
  return phi;
}

RoundtripReport roundtrip_check(const std::vector<FieldWord>& generators,
                                const CoherentInjections& h, std::size_t n,
                                std::size_t split_idx) {
  BilinearFragment phi = luzin_to_gross(generators, h, n);
  RoundtripReport report;
  for (std::size_t beta = split_idx; beta < n; ++beta) {
    FieldWord f = gross_to_luzin(phi, beta, split_idx);
    const std::size_t upto = std::min<std::size_t>(split_idx, beta);
    for (std::size_t i = 0; i < upto; ++i) {
      ++report.checked;
      if (!(f[i] == generators[beta][h.maps[beta][i]]))
        report.mismatches.push_back({beta, i});
    }
  }
  return report;
}

std::vector<std::size_t> complement_growth_scan(
    const BilinearFragment& phi,
    const std::vector<std::vector<FieldWord>>& chain) {
  phi.validate();
  std::vector<std::size_t> dims;
  for (const auto& u : chain)
    dims.push_back(orthogonal_complement(phi, u).size());
  return dims;
}

}  // namespace evp
