#include "evp/luzin.hpp"

#include <algorithm>
#include <set>

#include "evp/linear_predictor.hpp"

namespace evp {

SigmaStarCache::SigmaStarCache(const FieldDescriptor& field,
                               std::uint64_t step_budget)
    : field_(field), step_budget_(step_budget) {
  if (field.finite())
    throw DomainError(ErrorCode::InfeasibleOverFiniteField,
                      "the avoidance recursion needs an infinite field");
}

void SigmaStarCache::count_step() {
  if (++steps_ > step_budget_)
    throw BudgetError("sigma* recursion exceeded " +
                      std::to_string(step_budget_) + " steps");
}

void SigmaStarCache::require_writable() const {
  if (frozen_)
    throw DomainError(ErrorCode::InvalidArgument,
                      "cache is frozen; construct before freezing");
}

const Scalar& SigmaStarCache::element(std::uint64_t index) {
  while (elements_.size() <= index) {
    require_writable();
    elements_.push_back(enumerate_field(field_, elements_.size()));
  }
  return elements_[index];
}

const LinearForm& SigmaStarCache::form(std::uint64_t k) {
  while (forms_.size() <= k) {
    require_writable();
    forms_.push_back(
        realize_form(field_, nth_form_descriptor(field_, forms_.size())));
  }
  return forms_[k];
}

const std::vector<std::uint64_t>& SigmaStarCache::union_set(std::uint64_t m,
                                                            std::uint64_t n) {
  const auto key = std::make_pair(m, n);
  auto it = union_cache_.find(key);
  if (it != union_cache_.end()) return it->second;
  require_writable();

  std::set<std::uint64_t> acc;
  // all nonempty tau with entries < m, length <= n; ran(tau*) contributes
  // rho(tau-prefix) for every prefix, and prefixes are themselves such words,
  // so collecting rho(tau) over the whole family suffices
  Word tau;
  std::function<void(std::uint64_t)> walk = [&](std::uint64_t remaining) {
    if (!tau.empty()) acc.insert(rho(tau));
    if (remaining == 0) return;
    for (std::uint64_t v = 0; v < m; ++v) {
      tau.push_back(v);
      walk(remaining - 1);
      tau.pop_back();
    }
  };
  walk(n);

  auto [pos, inserted] = union_cache_.emplace(
      key, std::vector<std::uint64_t>(acc.begin(), acc.end()));
  return pos->second;
}

std::uint64_t SigmaStarCache::rho(const Word& sigma) {
  if (sigma.empty())
    throw DomainError(ErrorCode::PreconditionViolated,
                      "rho of the empty word");
  auto it = rho_.find(sigma);
  if (it != rho_.end()) return it->second;
  require_writable();
  count_step();

  const std::uint64_t n = sigma.size();
  const std::uint64_t m = sigma.back();

  std::set<Scalar> forbidden;
  if (m > 0) {
    const std::vector<std::uint64_t>& indices = union_set(m, n);
    for (std::uint64_t k = 0; k < m; ++k) {
      const LinearForm& phi = form(k);
      const std::size_t d = phi.arity();
      // all argument tuples from `indices`, repetition allowed
      std::vector<std::size_t> pick(d, 0);
      if (indices.empty()) continue;
      while (true) {
        count_step();
        FieldWord args;
        args.reserve(d);
        for (std::size_t j = 0; j < d; ++j)
          args.push_back(element(indices[pick[j]]));
        forbidden.insert(phi.evaluate(args));
        std::size_t pos = 0;
        while (pos < d && ++pick[pos] == indices.size()) pick[pos++] = 0;
        if (pos == d) break;
      }
    }
  }

  std::uint64_t l = 0;
  while (forbidden.count(element(l))) ++l;
  rho_[sigma] = l;
  return l;
}

std::vector<std::uint64_t> sigma_star(const Word& sigma,
                                      SigmaStarCache& cache) {
  if (sigma.empty())
    throw DomainError(ErrorCode::PreconditionViolated,
                      "sigma* of the empty word");
  std::vector<std::uint64_t> out;
  for (std::size_t i = 1; i <= sigma.size(); ++i)
    out.push_back(cache.rho(Word(sigma.begin(), sigma.begin() + i)));
  return out;
}

FieldWord luzin_vector(const Word& f, std::uint64_t horizon,
                       SigmaStarCache& cache) {
  if (f.size() < horizon)
    throw DomainError(ErrorCode::LengthMismatch,
                      "source word shorter than the horizon");
  for (std::size_t i = 1; i < horizon; ++i)
    if (f[i] <= f[i - 1])
      throw DomainError(ErrorCode::NotStrictlyIncreasing,
                        "source word must be strictly increasing");
  FieldWord g;
  for (std::uint64_t n = 0; n < horizon; ++n) {
    const std::uint64_t index = cache.rho(Word(f.begin(), f.begin() + n + 1));
    g.push_back(cache.element(index));
  }
  return g;
}

std::uint64_t avoidance_audit(const FieldWord& g, const Word& f,
                              SigmaStarCache& cache) {
  if (f.size() < g.size())
    throw DomainError(ErrorCode::LengthMismatch,
                      "source word shorter than the generator");
  std::uint64_t checked = 0;
  for (std::uint64_t n = 0; n < g.size(); ++n) {
    const std::uint64_t m = f[n];
    const std::vector<std::uint64_t>& indices = cache.union_set(m, n + 1);
    for (std::uint64_t k = 0; k < m; ++k) {
      const LinearForm& phi = cache.form(k);
      const std::size_t d = phi.arity();
      if (indices.empty()) continue;
      std::vector<std::size_t> pick(d, 0);
      while (true) {
        FieldWord args;
        args.reserve(d);
        for (std::size_t j = 0; j < d; ++j)
          args.push_back(cache.element(indices[pick[j]]));
        ++checked;
        if (g[n] == phi.evaluate(args))
          throw DomainError(
              ErrorCode::AuditFailure,
              "generator value at " + std::to_string(n) +
                  " equals a forbidden image under form " +
                  std::to_string(k));
        std::size_t pos = 0;
        while (pos < d && ++pick[pos] == indices.size()) pick[pos++] = 0;
        if (pos == d) break;
      }
    }
  }
  return checked;
}

LuzinFamily build_luzin_family(const std::vector<Word>& sources,
                               std::uint64_t horizon, SigmaStarCache& cache) {
  LuzinFamily fam;
  fam.field = cache.field();
  fam.horizon = horizon;
  for (const Word& f : sources) {
    fam.sources.push_back(Word(f.begin(),
                               f.begin() + std::min<std::size_t>(f.size(),
                                                                 horizon)));
    fam.generators.push_back(luzin_vector(f, horizon, cache));
  }
  return fam;
}

namespace {

bool next_index_tuple(std::vector<std::uint64_t>& t, std::uint64_t bound) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (++t[i] < bound) {
      for (std::size_t j = 0; j < i; ++j) t[j] = 0;
      return true;
    }
    t[i] = 0;
  }
  return false;
}

}  // namespace

LuzinScanTable brute_force_luzinity(const LuzinFamily& family,
                                    std::uint64_t coeff_bound,
                                    const LuzinScanBudget& budget) {
  const FieldDescriptor& K = family.field;
  const std::uint64_t horizon = family.horizon;
  LuzinScanTable table;

  // nonzero combinations of the generators
  std::vector<FieldWord> combos;
  std::vector<std::string> combo_names;
  if (!family.generators.empty() && coeff_bound > 0) {
    std::vector<std::uint64_t> tuple(family.generators.size(), 0);
    do {
      bool all_zero = true;
      for (std::uint64_t idx : tuple)
        if (!enumerate_field(K, idx).is_zero()) all_zero = false;
      if (all_zero) continue;
      FieldWord w(horizon, Scalar::zero(K));
      for (std::size_t i = 0; i < family.generators.size(); ++i) {
        Scalar c = enumerate_field(K, tuple[i]);
        if (c.is_zero()) continue;
        for (std::uint64_t n = 0; n < horizon; ++n)
          w[n] = w[n] + c * family.generators[i][n];
      }
      combos.push_back(std::move(w));
      std::string name;
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) name += ',';
        name += std::to_string(tuple[i]);
      }
      combo_names.push_back(std::move(name));
    } while (next_index_tuple(tuple, coeff_bound));
  }
  table.combination_count = combos.size();

  // candidate linear predictors: domains D, then a form per index
  std::vector<std::vector<std::uint64_t>> domains;
  {
    std::vector<std::uint64_t> stack;
    std::function<void(std::uint64_t)> grow = [&](std::uint64_t from) {
      if (!stack.empty()) domains.push_back(stack);
      if (stack.size() == budget.max_domain_size) return;
      for (std::uint64_t m = from; m < horizon; ++m) {
        stack.push_back(m);
        grow(m + 1);
        stack.pop_back();
      }
    };
    grow(0);
  }

  std::uint64_t id = 0;
  for (const auto& domain : domains) {
    // odometer over the coefficient indices of all forms at once
    std::size_t total_slots = 0;
    for (std::uint64_t m : domain) total_slots += m;
    std::vector<std::uint64_t> coeffs(total_slots, 0);
    do {
      if (++id > budget.max_predictors)
        throw BudgetError("predictor enumeration exceeded " +
                          std::to_string(budget.max_predictors));
      LinearPredictor p;
      p.field = K;
      p.domain = domain;
      std::size_t offset = 0;
      for (std::uint64_t m : domain) {
        LinearForm form;
        form.field = K;
        for (std::uint64_t i = 0; i < m; ++i)
          form.coeffs.push_back(enumerate_field(K, coeffs[offset + i]));
        offset += m;
        p.forms[m] = std::move(form);
      }

      LuzinScanRow row;
      row.predictor_id = id - 1;
      row.domain = domain;
      for (std::size_t c = 0; c < combos.size(); ++c) {
        PredictionReport r =
            check_prediction_linear(p, combos[c], budget.grace);
        if (r.verdict == Verdict::Predicted) {
          ++row.predicted_count;
          if (row.witness.empty()) row.witness = combo_names[c];
        }
      }
      table.max_predicted = std::max(table.max_predicted,
                                     row.predicted_count);
      table.rows.push_back(std::move(row));
    } while (next_index_tuple(coeffs, budget.form_coeff_indices));
  }
  return table;
}

}  // namespace evp
