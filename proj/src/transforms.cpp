#include "evp/transforms.hpp"

#include <algorithm>

#include "evp/json_io.hpp"

namespace evp {

void LinearPredictor::validate() const {
  for (std::size_t i = 1; i < domain.size(); ++i)
    if (domain[i] <= domain[i - 1])
      throw DomainError(ErrorCode::InvalidArgument,
                        "predictor domain must be strictly increasing");
  for (std::uint64_t m : domain) {
    auto it = forms.find(m);
    if (it == forms.end())
      throw DomainError(ErrorCode::IncompleteTable,
                        "no form at index " + std::to_string(m));
    if (it->second.arity() != m)
      throw DomainError(ErrorCode::DimensionMismatch,
                        "form arity must equal its index");
    if (!(it->second.field == field))
      throw DomainError(ErrorCode::SpecMismatch,
                        "form field differs from predictor field");
  }
}

PredictionReport check_prediction_linear(const LinearPredictor& p,
                                         const FieldWord& g,
                                         std::uint64_t grace) {
  p.validate();
  if (grace > g.size())
    throw DomainError(ErrorCode::PreconditionViolated,
                      "grace exceeds the word length");
  std::vector<std::uint64_t> checked, hits, misses;
  for (std::uint64_t m : p.domain) {
    if (m < grace || m >= g.size()) continue;
    checked.push_back(m);
    FieldWord prefix(g.begin(), g.begin() + m);
    if (p.forms.at(m).evaluate(prefix) == g[m])
      hits.push_back(m);
    else
      misses.push_back(m);
  }
  return make_report(std::move(checked), std::move(hits), std::move(misses));
}

Word clamp_word(const Word& sigma, const Word& x) {
  if (sigma.size() > x.size())
    throw DomainError(ErrorCode::LengthMismatch,
                      "word longer than the bound word");
  Word out(sigma.size());
  for (std::size_t n = 0; n < sigma.size(); ++n)
    out[n] = sigma[n] < x[n] ? sigma[n] : 0;
  return out;
}

namespace {

bool serializable(const Predictor& p) {
  if (std::holds_alternative<TableBacking>(p.backing)) return true;
  return !std::get<RuleBacking>(p.backing).name.empty();
}

}  // namespace

Predictor extend_predictor_to_omega(const Predictor& p, const Word& x) {
  if (p.space.horizon() != x.size())
    throw DomainError(ErrorCode::SpecMismatch,
                      "bound word length differs from the horizon");
  for (std::size_t n = 0; n < x.size(); ++n)
    if (!p.space.bounds[n] || *p.space.bounds[n] != x[n])
      throw DomainError(ErrorCode::SpecMismatch,
                        "predictor space does not match the bound word");
  Predictor base = p;
  CompiledRule fn = [base, x](std::uint64_t index, const Word& prefix) {
    return evaluate_predictor(base, index, clamp_word(prefix, x));
  };
  if (!serializable(p))
    return make_rule_predictor(SpaceSpec::unbounded(x.size()), p.domain,
                               std::move(fn));
  return make_rule_predictor(SpaceSpec::unbounded(x.size()), p.domain,
                             std::move(fn), "clamp_extend",
                             clamp_extend_params(p, x));
}

std::pair<Word, Word> indicator_split(const Word& f,
                                      const std::vector<std::uint64_t>& d2) {
  for (std::size_t i = 1; i < d2.size(); ++i)
    if (d2[i] <= d2[i - 1])
      throw DomainError(ErrorCode::InvalidArgument,
                        "index set must be strictly increasing");
  Word g(f.size());
  for (std::size_t m = 0; m < f.size(); ++m) g[m] = f[m] == 1 ? 1 : 0;
  Word h;
  for (std::uint64_t k : d2) {
    if (k >= f.size()) break;
    h.push_back(f[k] <= 1 ? 0 : f[k] - 1);
  }
  return {std::move(g), std::move(h)};
}

Predictor combine_predictors(const Predictor& pi2, const Predictor& pi_prime) {
  for (const Bound& b : pi2.space.bounds)
    if (!b || *b != 2)
      throw DomainError(ErrorCode::SpecMismatch,
                        "first predictor must live on the binary space");
  if (pi_prime.space.bounds.empty() || !pi_prime.space.bounds[0])
    throw DomainError(ErrorCode::SpecMismatch,
                      "second predictor must live on a bounded space");
  const std::uint64_t n_minus_1 = *pi_prime.space.bounds[0];
  for (const Bound& b : pi_prime.space.bounds)
    if (!b || *b != n_minus_1)
      throw DomainError(ErrorCode::SpecMismatch,
                        "second predictor must have a constant bound");
  const std::uint64_t n = n_minus_1 + 1;

  const std::vector<std::uint64_t>& enumeration = pi2.domain;
  for (std::uint64_t m : pi_prime.domain)
    if (m >= enumeration.size())
      throw DomainError(ErrorCode::EnumerationMismatch,
                        "position " + std::to_string(m) +
                            " has no matching index in the binary domain");

  std::vector<std::uint64_t> domain;
  for (std::uint64_t m : pi_prime.domain) domain.push_back(enumeration[m]);
  if (!std::is_sorted(domain.begin(), domain.end()))
    throw DomainError(ErrorCode::EnumerationMismatch,
                      "combined domain is not increasing");

  Predictor two = pi2, prime = pi_prime;
  CompiledRule fn = [two, prime, enumeration](std::uint64_t index,
                                              const Word& sigma) {
    std::size_t position = 0;
    while (enumeration[position] != index) ++position;
    Word sigma_g(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i)
      sigma_g[i] = sigma[i] == 1 ? 1 : 0;
    Word sigma_prime(position);
    for (std::size_t i = 0; i < position; ++i) {
      std::uint64_t v = sigma[enumeration[i]];
      sigma_prime[i] = v <= 1 ? 0 : v - 1;
    }
    const std::uint64_t a = evaluate_predictor(two, index, sigma_g);
    const std::uint64_t b = evaluate_predictor(prime, position, sigma_prime);
    if (a == 1 && b == 0) return std::uint64_t{1};
    if (a == 0 && b >= 1) return b + 1;
    return std::uint64_t{0};
  };
  const SpaceSpec target = SpaceSpec::constant(n, pi2.space.horizon());
  if (!serializable(pi2) || !serializable(pi_prime))
    return make_rule_predictor(target, domain, std::move(fn));
  return make_rule_predictor(target, domain, std::move(fn), "combine",
                             combine_params(pi2, pi_prime));
}

LinearPredictor predictor_from_unsplit_set(const std::vector<std::uint64_t>& b,
                                           const FieldDescriptor& field) {
  if (b.size() < 2)
    throw DomainError(ErrorCode::SetTooSmall,
                      "need at least two elements in the unsplit set");
  for (std::size_t i = 1; i < b.size(); ++i)
    if (b[i] <= b[i - 1])
      throw DomainError(ErrorCode::InvalidArgument,
                        "unsplit set must be strictly increasing");
  LinearPredictor p;
  p.field = field;
  for (std::size_t i = 1; i < b.size(); i += 2) {
    const std::uint64_t target = b[i], source = b[i - 1];
    p.domain.push_back(target);
    LinearForm form;
    form.field = field;
    form.coeffs.assign(target, Scalar::zero(field));
    form.coeffs[source] = Scalar::one(field);
    p.forms[target] = std::move(form);
  }
  return p;
}

std::uint64_t SlalomBlockSystem::block_start(std::size_t n) {
  std::uint64_t start = 0;
  for (std::size_t i = 0; i < n; ++i) start += i * i;
  return start;
}

void SlalomBlockSystem::validate() const {
  if (options.size() != block_count)
    throw DomainError(ErrorCode::InvalidArgument,
                      "one option list per block required");
  if (spec.horizon() != block_start(block_count))
    throw DomainError(ErrorCode::InvalidArgument,
                      "horizon must equal the total block length");
  for (std::size_t n = 0; n < block_count; ++n) {
    if (n < 2 && !options[n].empty())
      throw DomainError(ErrorCode::InvalidArgument,
                        "blocks 0 and 1 carry no options");
    if (options[n].size() > n)
      throw DomainError(ErrorCode::InvalidArgument,
                        "more than n options at block n");
    const std::uint64_t start = block_start(n);
    for (const Word& o : options[n]) {
      if (o.size() != block_size(n))
        throw DomainError(ErrorCode::LengthMismatch,
                          "option must be defined exactly on its block");
      for (std::size_t i = 0; i < o.size(); ++i)
        if (!spec.coordinate_ok(start + i, o[i]))
          throw DomainError(ErrorCode::OutOfBoundsValue,
                            "option entry outside the space");
    }
  }
}

void FieldSlalomBlockSystem::validate() const {
  if (options.size() != block_count)
    throw DomainError(ErrorCode::InvalidArgument,
                      "one option list per block required");
  for (std::size_t n = 0; n < block_count; ++n) {
    if (n < 2 && !options[n].empty())
      throw DomainError(ErrorCode::InvalidArgument,
                        "blocks 0 and 1 carry no options");
    if (options[n].size() > n)
      throw DomainError(ErrorCode::InvalidArgument,
                        "more than n options at block n");
    for (const FieldWord& o : options[n])
      if (o.size() != SlalomBlockSystem::block_size(n))
        throw DomainError(ErrorCode::LengthMismatch,
                          "option must be defined exactly on its block");
  }
}

std::uint64_t find_merge_point(const std::vector<Word>& options,
                               std::uint64_t block_start,
                               std::uint64_t block_size) {
  for (std::uint64_t m = 0; m < block_size; ++m) {
    bool ok = true;
    for (std::size_t i = 0; i < options.size() && ok; ++i)
      for (std::size_t j = i + 1; j < options.size() && ok; ++j) {
        if (std::equal(options[i].begin(), options[i].begin() + m,
                       options[j].begin()) &&
            options[i][m] != options[j][m])
          ok = false;
      }
    if (ok) return block_start + m;
  }
  // n(n-1)/2 pairs cannot forbid n^2 positions
  throw std::logic_error("find_merge_point: no position survived");
}

Predictor predictor_from_slalom(const SlalomBlockSystem& s) {
  s.validate();
  std::vector<std::uint64_t> domain;
  std::vector<std::size_t> domain_block;
  std::vector<std::uint64_t> merge_rel;
  for (std::size_t n = 0; n < s.block_count; ++n) {
    if (s.options[n].empty()) continue;
    const std::uint64_t start = SlalomBlockSystem::block_start(n);
    const std::uint64_t m = find_merge_point(
        s.options[n], start, SlalomBlockSystem::block_size(n));
    domain.push_back(m);
    domain_block.push_back(n);
    merge_rel.push_back(m - start);
  }
  SlalomBlockSystem sys = s;
  CompiledRule fn = [sys, domain, domain_block,
                     merge_rel](std::uint64_t index, const Word& sigma) {
    std::size_t pos = 0;
    while (domain[pos] != index) ++pos;
    const std::size_t n = domain_block[pos];
    const std::uint64_t start = SlalomBlockSystem::block_start(n);
    const std::uint64_t rel = merge_rel[pos];
    for (const Word& option : sys.options[n]) {
      if (std::equal(option.begin(), option.begin() + rel,
                     sigma.begin() + start))
        return option[rel];
    }
    return std::uint64_t{0};
  };
  return make_rule_predictor(sys.spec, domain, std::move(fn), "slalom",
                             slalom_params(s));
}

LinearPredictor linear_predictor_from_slalom(const FieldSlalomBlockSystem& s) {
  s.validate();
  LinearPredictor p;
  p.field = s.field;
  for (std::size_t n = 0; n < s.block_count; ++n) {
    if (s.options[n].empty()) continue;
    const std::uint64_t start = SlalomBlockSystem::block_start(n);
    const std::uint64_t size = SlalomBlockSystem::block_size(n);

    // maximal independent subset, greedy in option order
    std::vector<FieldWord> kept;
    {
      Matrix probe;
      probe.field = s.field;
      for (const FieldWord& o : s.options[n]) {
        probe.rows.push_back(o);
        if (row_reduce(probe).rank == probe.rows.size())
          kept.push_back(o);
        else
          probe.rows.pop_back();
      }
    }

    // merge point for the linear rule: the first position where the visible
    // restriction of the kept span determines the value there, i.e. where
    // rank[restrictions] == rank[restrictions | values].
    std::uint64_t rel = size;
    Matrix plain, augmented;
    plain.field = augmented.field = s.field;
    for (std::uint64_t m = 0; m < size; ++m) {
      plain.rows.clear();
      augmented.rows.clear();
      for (const FieldWord& o : kept) {
        FieldWord u(o.begin(), o.begin() + m);
        FieldWord ut = u;
        ut.push_back(o[m]);
        plain.rows.push_back(std::move(u));
        augmented.rows.push_back(std::move(ut));
      }
      if (kept.empty() || row_reduce(plain).rank == row_reduce(augmented).rank) {
        rel = m;
        break;
      }
    }
    if (rel == size)
      throw std::logic_error(
          "linear_predictor_from_slalom: no consistent position in block");

    // solve c . u_k = t_k; free variables set to zero
    FieldWord c(rel, Scalar::zero(s.field));
    if (!kept.empty() && rel > 0) {
      Matrix system;
      system.field = s.field;
      for (const FieldWord& o : kept) {
        FieldWord row(o.begin(), o.begin() + rel);
        row.push_back(o[rel]);
        system.rows.push_back(std::move(row));
      }
      RowReduction rr = row_reduce(system);
      for (std::size_t r = 0; r < rr.pivot_columns.size(); ++r) {
        const std::size_t pc = rr.pivot_columns[r];
        if (pc < rel) c[pc] = rr.rref.rows[r][rel];
      }
    }

    const std::uint64_t index = start + rel;
    LinearForm form;
    form.field = s.field;
    form.coeffs.assign(index, Scalar::zero(s.field));
    for (std::uint64_t i = 0; i < rel; ++i) form.coeffs[start + i] = c[i];
    p.domain.push_back(index);
    p.forms[index] = std::move(form);
  }
  return p;
}

}  // namespace evp
