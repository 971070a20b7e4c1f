#include "evp/poset.hpp"

#include <algorithm>
#include <set>

namespace evp {

namespace {

bool tables_equal_on(const PxCondition& a, const PxCondition& b,
                     const std::vector<std::uint64_t>& indices) {
  for (std::uint64_t k : indices) {
    auto ia = a.tables.find(k), ib = b.tables.find(k);
    if (ia == a.tables.end() || ib == b.tables.end()) return false;
    if (!(ia->second == ib->second)) return false;
  }
  return true;
}

bool is_subset(const std::vector<std::uint64_t>& a,
               const std::vector<std::uint64_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// new indices of e relative to d must all sit above max(d)
bool interleaves_above(const std::vector<std::uint64_t>& e,
                       const std::vector<std::uint64_t>& d) {
  if (d.empty()) return true;
  for (std::uint64_t k : e)
    if (k > d.back() || std::binary_search(d.begin(), d.end(), k)) continue;
    else
      return false;
  return true;
}

// table value of c at index k on the prefix w (tables are total)
std::uint64_t table_value(const PxCondition& c, std::uint64_t k,
                          const Word& prefix) {
  return c.tables.at(k).at(prefix);
}

bool predicts_promise_at(const PxCondition& c, std::uint64_t k,
                         const Word& f) {
  if (k >= f.size()) return true;  // index outside the promise's domain
  Word prefix(f.begin(), f.begin() + k);
  return table_value(c, k, prefix) == f[k];
}

}  // namespace

void PxCondition::validate() const {
  space.validate();
  for (std::size_t i = 1; i < d.size(); ++i)
    if (d[i] <= d[i - 1])
      throw DomainError(ErrorCode::InvalidArgument,
                        "index set must be strictly increasing");
  if (!d.empty() && d.back() >= space.horizon())
    throw DomainError(ErrorCode::IndexBeyondHorizon,
                      "index set exceeds the horizon");
  for (std::uint64_t k : d) {
    auto it = tables.find(k);
    if (it == tables.end())
      throw DomainError(ErrorCode::IncompleteTable,
                        "missing table at index " + std::to_string(k));
    for_each_word(space, k, [&](const Word& w) {
      auto jt = it->second.find(w);
      if (jt == it->second.end())
        throw DomainError(ErrorCode::IncompleteTable,
                          "table not total at index " + std::to_string(k));
      if (!space.coordinate_ok(k, jt->second))
        throw DomainError(ErrorCode::OutOfBoundsValue,
                          "table value breaks the bound at index " +
                              std::to_string(k));
    });
  }
  for (const Word& f : promises)
    if (!space.contains(f))
      throw DomainError(ErrorCode::WordOutsideSpace,
                        "promise outside the space prefix");
}

void PxCondition::normalize() {
  std::sort(promises.begin(), promises.end());
  promises.erase(std::unique(promises.begin(), promises.end()),
                 promises.end());
}

std::uint64_t height(const PxCondition& c) {
  const std::uint64_t dmax = c.d.empty() ? 0 : c.d.back();
  return std::max<std::uint64_t>(dmax, c.promises.size());
}

bool px_leq(const PxCondition& c1, const PxCondition& c2) {
  if (!(c1.space == c2.space))
    throw DomainError(ErrorCode::SpecMismatch,
                      "conditions live on different spaces");
  // (1) domain containment with new indices above
  if (!is_subset(c2.d, c1.d)) return false;
  if (!interleaves_above(c1.d, c2.d)) return false;
  // (2) table agreement on the old indices
  if (!tables_equal_on(c1, c2, c2.d)) return false;
  // (3) promises extend, and new indices predict the old promises
  for (const Word& f : c2.promises) {
    bool extended = false;
    for (const Word& g : c1.promises)
      if (is_prefix(f, g)) {
        extended = true;
        break;
      }
    if (!extended) return false;
  }
  for (std::uint64_t k : c1.d) {
    if (std::binary_search(c2.d.begin(), c2.d.end(), k)) continue;
    for (const Word& f : c2.promises)
      if (!predicts_promise_at(c1, k, f)) return false;
  }
  return true;
}

CompatResult px_compatible(const PxCondition& c1, const PxCondition& c2) {
  if (!(c1.space == c2.space))
    throw DomainError(ErrorCode::SpecMismatch,
                      "conditions live on different spaces");
  const PxCondition* small = &c1;
  const PxCondition* big = &c2;
  if (!is_subset(small->d, big->d)) std::swap(small, big);
  if (!is_subset(small->d, big->d)) return {};  // domains not nested

  if (!interleaves_above(big->d, small->d)) return {};
  if (!tables_equal_on(*big, *small, small->d)) return {};
  // the big side's fixed tables must honor the small side's promises at the
  // indices the small side lacks
  for (std::uint64_t k : big->d) {
    if (std::binary_search(small->d.begin(), small->d.end(), k)) continue;
    for (const Word& f : small->promises)
      if (!predicts_promise_at(*big, k, f)) return {};
  }

  PxCondition merged = *big;
  merged.promises.insert(merged.promises.end(), small->promises.begin(),
                         small->promises.end());
  merged.normalize();
  return {CompatStatus::Compatible, merged};
}

namespace {

// all total tables at index k, in lexicographic value order
std::vector<std::map<Word, std::uint64_t>> all_tables_at(const SpaceSpec& spec,
                                                         std::uint64_t k) {
  std::vector<Word> keys;
  for_each_word(spec, k, [&](const Word& w) { keys.push_back(w); });
  const std::uint64_t bound = *spec.bounds[k];
  std::vector<std::map<Word, std::uint64_t>> out;
  std::vector<std::uint64_t> values(keys.size(), 0);
  while (true) {
    std::map<Word, std::uint64_t> table;
    for (std::size_t i = 0; i < keys.size(); ++i) table[keys[i]] = values[i];
    out.push_back(std::move(table));
    std::size_t pos = 0;
    while (pos < values.size() && ++values[pos] == bound) values[pos++] = 0;
    if (pos == values.size()) break;
  }
  return out;
}

// every word with domain an initial segment of [0, cap), inside the space
std::vector<Word> all_partial_words(const SpaceSpec& spec, std::size_t cap) {
  std::vector<Word> out;
  for (std::size_t len = 1; len <= cap && len <= spec.horizon(); ++len)
    for_each_word(spec, len, [&](const Word& w) { out.push_back(w); });
  return out;
}

}  // namespace

std::vector<PxCondition> softness_witnesses(const PxCondition& p,
                                            const PxCondition& q,
                                            std::uint64_t m) {
  CompatResult pq = px_compatible(p, q);
  if (pq.status != CompatStatus::Compatible)
    throw DomainError(ErrorCode::PreconditionViolated,
                      "witness construction requires compatible conditions");
  if (px_leq(q, p))
    throw DomainError(ErrorCode::PreconditionViolated,
                      "witness construction requires q not below p");

  const SpaceSpec& spec = q.space;
  const std::uint64_t horizon = spec.horizon();
  std::vector<PxCondition> witnesses;

  auto emit = [&](PxCondition w) {
    w.normalize();
    if (!w.d.empty() && w.d.back() > m) return;
    if (!px_leq(w, q)) return;
    if (px_compatible(w, p).status == CompatStatus::Compatible) return;
    if (std::find(witnesses.begin(), witnesses.end(), w) == witnesses.end())
      witnesses.push_back(std::move(w));
  };

  const bool p_inside_q = is_subset(p.d, q.d);

  // promises of p that no promise of q extends
  std::vector<Word> bad;
  for (const Word& f : p.promises) {
    bool extended = false;
    for (const Word& g : q.promises)
      if (is_prefix(f, g)) extended = true;
    if (!extended) bad.push_back(f);
  }

  // enumerate domains e' extending q.d upward with max(e') <= m, together
  // with all total tables at the new indices, then apply the case filters
  std::vector<std::uint64_t> fresh;
  for (std::uint64_t k = q.d.empty() ? 0 : q.d.back() + 1;
       k < horizon && k <= m; ++k)
    fresh.push_back(k);

  const std::size_t subsets = std::size_t{1} << fresh.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::vector<std::uint64_t> added;
    for (std::size_t i = 0; i < fresh.size(); ++i)
      if (mask & (std::size_t{1} << i)) added.push_back(fresh[i]);

    PxCondition base = q;
    base.d.insert(base.d.end(), added.begin(), added.end());

    // odometer over the table choices at the added indices
    std::vector<std::vector<std::map<Word, std::uint64_t>>> choices;
    for (std::uint64_t k : added) choices.push_back(all_tables_at(spec, k));
    std::vector<std::size_t> pick(added.size(), 0);
    while (true) {
      PxCondition w = base;
      for (std::size_t i = 0; i < added.size(); ++i)
        w.tables[added[i]] = choices[i][pick[i]];

      if (p_inside_q) {
        // an extension of q clashes with p permanently only by contradicting
        // an unextended promise of p at a new index
        bool defect = false;
        for (const Word& f : bad)
          for (std::uint64_t k : added)
            if (!predicts_promise_at(w, k, f)) defect = true;
        if (defect) emit(w);
      } else {
        const std::uint64_t dmax = p.d.back();
        const bool q_promises_fit = q.promises.size() <= m;

        // (a) domain interleaving clash with p
        if (q_promises_fit) {
          bool clash = false;
          if (!w.d.empty()) {
            for (std::uint64_t k : p.d)
              if (k < w.d.back() &&
                  !std::binary_search(w.d.begin(), w.d.end(), k))
                clash = true;
            for (std::uint64_t k : w.d)
              if (k < dmax &&
                  !std::binary_search(p.d.begin(), p.d.end(), k))
                clash = true;
          }
          if (clash) emit(w);

          // (b) table disagreement with p at a shared new index
          bool table_clash = false;
          for (std::uint64_t k : w.d)
            if (std::binary_search(p.d.begin(), p.d.end(), k) &&
                !std::binary_search(q.d.begin(), q.d.end(), k) &&
                w.tables.count(k) && !(w.tables[k] == p.tables.at(k)))
              table_clash = true;
          if (table_clash) emit(w);

          // (d) q grew past p's whole domain and contradicts an unextended
          // promise of p beyond it
          if (is_subset(p.d, w.d) && w.d.size() > p.d.size()) {
            bool defect = false;
            for (const Word& f : bad)
              for (std::uint64_t k : w.d)
                if (!std::binary_search(p.d.begin(), p.d.end(), k) &&
                    !predicts_promise_at(w, k, f))
                  defect = true;
            if (defect) emit(w);
          }
        }

        // (c) add promises of domain <= max(p.d)+1 that p's own tables
        // already violate at an index q does not see
        std::vector<Word> candidates = all_partial_words(spec, dmax + 1);
        std::vector<Word> violating;
        for (const Word& g : candidates) {
          for (std::uint64_t k : p.d) {
            if (std::binary_search(w.d.begin(), w.d.end(), k)) continue;
            if (!predicts_promise_at(p, k, g)) {
              violating.push_back(g);
              break;
            }
          }
        }
        if (!violating.empty() && q.promises.size() < m) {
          const std::size_t room = m - q.promises.size();
          const std::size_t vmask_end = std::size_t{1} << violating.size();
          for (std::size_t vmask = 1; vmask < vmask_end; ++vmask) {
            if (static_cast<std::size_t>(__builtin_popcountll(vmask)) > room)
              continue;
            PxCondition wc = w;
            for (std::size_t i = 0; i < violating.size(); ++i)
              if (vmask & (std::size_t{1} << i))
                wc.promises.push_back(violating[i]);
            emit(std::move(wc));
          }
        }
      }

      std::size_t pos = 0;
      while (pos < pick.size() && ++pick[pos] == choices[pos].size())
        pick[pos++] = 0;
      if (pos == pick.size()) break;
    }
  }
  return witnesses;
}

bool verify_property_iii(const PxCondition& p, const PxCondition& q) {
  CompatResult r = px_compatible(p, q);
  if (r.status != CompatStatus::Compatible)
    throw DomainError(ErrorCode::NotCompatible,
                      "property (III) needs a compatible pair");
  return height(*r.common) <= height(p) + height(q);
}

bool verify_property_i(const std::vector<PxCondition>& chain,
                       std::uint64_t m) {
  if (chain.empty())
    throw DomainError(ErrorCode::NotAChain, "empty chain");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!px_leq(chain[i + 1], chain[i]))
      throw DomainError(ErrorCode::NotAChain,
                        "sequence is not decreasing at position " +
                            std::to_string(i));
  for (const PxCondition& c : chain)
    if (height(c) > m)
      throw DomainError(ErrorCode::HeightExceeded,
                        "chain element exceeds the height bound");

  // bounded height pins max(d), and d only grows upward, so the last element
  // carries the stabilized index set and tables; promises accumulate
  PxCondition bound = chain.back();
  for (const PxCondition& c : chain)
    bound.promises.insert(bound.promises.end(), c.promises.begin(),
                          c.promises.end());
  bound.normalize();
  for (const PxCondition& c : chain)
    if (!px_leq(bound, c)) return false;
  return true;
}

GenericExtraction generic_predictor(const std::vector<PxCondition>& chain) {
  if (chain.empty())
    throw DomainError(ErrorCode::NotAChain, "empty chain");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!px_leq(chain[i + 1], chain[i]))
      throw DomainError(ErrorCode::NotAChain,
                        "sequence is not decreasing at position " +
                            std::to_string(i));
  const PxCondition& last = chain.back();

  GenericExtraction out{
      make_table_predictor(last.space, last.d, last.tables), {}};
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (const Word& f : chain[i].promises) {
      GenericExtraction::PromiseCoverage cov;
      cov.chain_pos = i;
      cov.promise = f;
      for (std::uint64_t k : last.d) {
        if (std::binary_search(chain[i].d.begin(), chain[i].d.end(), k))
          continue;
        if (k < f.size() && predicts_promise_at(last, k, f))
          cov.predicted_at.push_back(k);
      }
      out.coverage.push_back(std::move(cov));
    }
  }
  return out;
}

}  // namespace evp
