#include "evp/specker.hpp"

namespace evp {

std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t n = 2; primes.size() < count; ++n)
    if (is_prime(n)) primes.push_back(n);
  return primes;
}

namespace {

BigInt int_pow(std::uint64_t base, std::uint64_t exp) {
  BigInt r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r *= base;
  return r;
}

bool is_integer(const BigRat& r) {
  return boost::multiprecision::denominator(r) == 1;
}

// b_j = prod_{i<j, i != kn} p_i^{f(i)+j-i-1}
BigInt chain_b(std::uint64_t j, std::uint64_t kn, const Word& f,
               const std::vector<std::uint64_t>& primes) {
  BigInt b = 1;
  for (std::uint64_t i = 0; i < j; ++i) {
    if (i == kn) continue;
    b *= int_pow(primes[i], f[i] + j - i - 1);
  }
  return b;
}

}  // namespace

SpeckerVector specker_encode(const Word& f, std::size_t n) {
  if (f.size() < n)
    throw DomainError(ErrorCode::LengthMismatch,
                      "word shorter than the requested length");
  const auto primes = first_primes(n == 0 ? 0 : n - 1);
  SpeckerVector v;
  v.source = Word(f.begin(), f.begin() + n);
  for (std::size_t k = 0; k < n; ++k) {
    BigInt x = 1;
    for (std::size_t i = 0; i < k; ++i)
      x *= int_pow(primes[i], f[i] + k - i - 1);
    v.entries.push_back(std::move(x));
  }
  return v;
}

ChainResult hat_chain(const BigInt& a, std::uint64_t kn, std::uint64_t ln,
                      const Word& f_gamma, const std::vector<BigInt>& h_values,
                      const std::vector<std::uint64_t>& primes) {
  if (kn >= ln)
    throw DomainError(ErrorCode::DegenerateBlock, "block requires kn < ln");
  if (a == 0)
    throw DomainError(ErrorCode::PreconditionViolated, "a must be nonzero");
  if (f_gamma.size() < ln)
    throw DomainError(ErrorCode::LengthMismatch,
                      "word must be defined on [0, ln)");
  if (primes.size() < ln)
    throw DomainError(ErrorCode::LengthMismatch, "not enough primes supplied");
  if (h_values.size() < ln - kn - 1)
    throw DomainError(ErrorCode::LengthMismatch,
                      "need h(e_j) for kn < j < ln");

  const std::uint64_t p = primes[kn];
  ChainResult out;
  // xhat_{kn+1} = a / (b_{kn+1} * p^{f(kn)})
  BigRat xhat = BigRat(a) / BigRat(chain_b(kn + 1, kn, f_gamma, primes) *
                                   int_pow(p, f_gamma[kn]));
  out.values.push_back(xhat);
  out.integral.push_back(is_integer(xhat));
  if (!out.integral.back()) out.breaks_at = kn + 1;

  for (std::uint64_t j = kn + 1; j < ln; ++j) {
    const BigInt bj = chain_b(j, kn, f_gamma, primes);
    const BigInt bj1 = chain_b(j + 1, kn, f_gamma, primes);
    const BigInt& hj = h_values[j - kn - 1];
    // xhat_{j+1} = (xhat_j - h(e_j)) * b_j * p^{...-1} / (b_{j+1} * p^{...})
    BigRat next = (xhat - BigRat(hj)) *
                  BigRat(bj * int_pow(p, f_gamma[kn] + j - kn - 1)) /
                  BigRat(bj1 * int_pow(p, f_gamma[kn] + j - kn));
    out.values.push_back(next);
    out.integral.push_back(is_integer(next));
    if (!out.integral.back() && !out.breaks_at) out.breaks_at = j + 1;
    xhat = next;
  }
  return out;
}

namespace {

std::uint64_t p_valuation(BigInt v, std::uint64_t p) {
  std::uint64_t count = 0;
  while (v != 0 && v % p == 0) {
    v /= p;
    ++count;
  }
  return count;
}

// Enumerate h-value tuples in [-h_bound, h_bound]^len, odometer order.
bool next_tuple(std::vector<std::int64_t>& t, std::int64_t lo,
                std::int64_t hi) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < hi) {
      ++t[i];
      for (std::size_t j = 0; j < i; ++j) t[j] = lo;
      return true;
    }
  }
  return false;
}

}  // namespace

RefuterResult collision_refuter(const Word& f_alpha, const Word& f_beta,
                                std::uint64_t kn, std::uint64_t ln,
                                std::uint64_t a_bound, std::uint64_t h_bound,
                                std::uint64_t h_kn_bound, bool keep_rows) {
  if (kn >= ln)
    throw DomainError(ErrorCode::DegenerateBlock, "block requires kn < ln");
  if (f_alpha.size() < ln || f_beta.size() < ln)
    throw DomainError(ErrorCode::LengthMismatch,
                      "words must be defined on [0, ln)");
  for (std::uint64_t i = 0; i < ln; ++i) {
    if (i == kn) continue;
    if (f_alpha[i] != f_beta[i])
      throw DomainError(ErrorCode::PreconditionViolated,
                        "words must agree off kn");
  }
  if (f_alpha[kn] == f_beta[kn])
    throw DomainError(ErrorCode::PreconditionViolated,
                      "words must differ at kn");
  if (ln - kn <= 2 * h_kn_bound * h_kn_bound)
    throw DomainError(ErrorCode::PreconditionViolated,
                      "spacing requires ln - kn > 2 * |h(e_kn)|^2");
  if (a_bound >= ln - kn)
    throw DomainError(ErrorCode::PreconditionViolated,
                      "search requires |a| < ln - kn");

  const auto primes = first_primes(ln);
  const std::uint64_t p = primes[kn];
  const std::size_t h_len = ln - kn - 1;

  RefuterResult result;
  for (std::int64_t a = -static_cast<std::int64_t>(a_bound);
       a <= static_cast<std::int64_t>(a_bound); ++a) {
    if (a == 0) continue;
    std::vector<std::int64_t> tuple(h_len,
                                    -static_cast<std::int64_t>(h_bound));
    bool more = true;
    while (more) {
      std::vector<BigInt> hs(tuple.begin(), tuple.end());
      ChainResult ca = hat_chain(BigInt(a), kn, ln, f_alpha, hs, primes);
      ChainResult cb = hat_chain(BigInt(a), kn, ln, f_beta, hs, primes);
      ++result.grid_points;
      if (ca.all_integral()) ++result.integral_alpha;
      if (cb.all_integral()) ++result.integral_beta;

      // The proof's engine: while both chains stay integral the difference
      // drops exactly one factor of p per step.
      for (std::size_t t = 0; t + 1 < ca.values.size(); ++t) {
        if (!(ca.integral[t] && cb.integral[t] && ca.integral[t + 1] &&
              cb.integral[t + 1]))
          break;
        BigRat diff0 = ca.values[t] - cb.values[t];
        BigRat diff1 = ca.values[t + 1] - cb.values[t + 1];
        BigInt d0 = boost::multiprecision::numerator(diff0);
        BigInt d1 = boost::multiprecision::numerator(diff1);
        if (d0 == 0) continue;
        ++result.decay_checks;
        if (d1 != 0 && p_valuation(d1, p) + 1 != p_valuation(d0, p))
          ++result.decay_violations;
        if (d1 == 0) ++result.decay_violations;  // the difference never dies
      }

      if (ca.all_integral() && cb.all_integral()) {
        result.refuted = false;
        if (!result.counterexample)
          result.counterexample = RefuterWitness{BigInt(a), hs};
      }
      if (keep_rows)
        result.rows.push_back(
            {BigInt(a), hs, ca.breaks_at, cb.breaks_at});
      more = next_tuple(tuple, -static_cast<std::int64_t>(h_bound),
                        static_cast<std::int64_t>(h_bound));
      if (h_len == 0) break;
    }
  }
  return result;
}

GeneralizedPredictorDE predictor_from_refuter(const std::vector<Word>& family,
                                              const BlockSchedule& schedule,
                                              std::uint64_t a_bound,
                                              std::uint64_t h_bound,
                                              std::uint64_t h_kn_bound) {
  if (schedule.ks.size() != schedule.ls.size())
    throw DomainError(ErrorCode::InvalidArgument,
                      "schedule sequences must have equal length");
  GeneralizedPredictorDE p;
  if (family.empty()) return p;  // empty rules: downstream Inconclusive

  for (std::size_t n = 0; n < schedule.ks.size(); ++n) {
    const std::uint64_t kn = schedule.ks[n], ln = schedule.ls[n];
    if (ln - kn <= 2 * h_kn_bound * h_kn_bound)
      throw DomainError(ErrorCode::PreconditionViolated,
                        "spacing requires ln - kn > 2 * |h(e_kn)|^2");
    GeneralizedPredictorDE::BlockRule rule;
    rule.fallback = 0;
    for (const Word& f : family) {
      if (f.size() < ln || kn >= f.size()) continue;
      Word key = restrict_off_index(f, ln, kn);
      auto it = rule.table.find(key);
      if (it == rule.table.end()) {
        rule.table[key] = f[kn];
        continue;
      }
      if (it->second == f[kn]) continue;
      // two members collide off kn: the chain argument must refute it
      Word first;
      for (const Word& g : family) {
        if (g.size() >= ln && restrict_off_index(g, ln, kn) == key &&
            g[kn] == it->second) {
          first = g;
          break;
        }
      }
      RefuterResult r = collision_refuter(first, f, kn, ln, a_bound, h_bound,
                                          h_kn_bound);
      if (!r.refuted)
        throw DomainError(ErrorCode::AmbiguousValue,
                          "collision at block " + std::to_string(n) +
                              " admits a consistent assignment");
      // keep the earlier member's value: the uniquely consistent guess for
      // the homomorphism value it models
    }
    p.ks.push_back(kn);
    p.ls.push_back(ln);
    p.rules.push_back(std::move(rule));
  }
  p.validate();
  return p;
}

}  // namespace evp
