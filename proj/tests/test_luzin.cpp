#include <cmath>

#include "doctest.h"
#include "evp/luzin.hpp"

using namespace evp;

namespace {

FieldDescriptor Q = FieldDescriptor::rationals();

}  // namespace

TEST_CASE("sigma* base cases") {
  SigmaStarCache cache(Q);

  SUBCASE("last entry zero forbids nothing") {
    CHECK(sigma_star({0}, cache) == std::vector<std::uint64_t>{0});
  }

  SUBCASE("last entry one excludes the zero form's image") {
    // forbidden set: phi_0 over indices ran(<0>*) = {0}, so the value 0
    CHECK(sigma_star({1}, cache) == std::vector<std::uint64_t>{1});
  }

  SUBCASE("earlier coordinates come from the prefixes") {
    std::vector<std::uint64_t> s = sigma_star({0, 1}, cache);
    REQUIRE(s.size() == 2);
    CHECK(s[0] == 0);
    CHECK(s[1] == 1);
  }

  SUBCASE("empty word is rejected") {
    CHECK_THROWS_AS(sigma_star({}, cache), DomainError);
  }

  SUBCASE("finite fields are rejected up front") {
    CHECK_THROWS_WITH_AS(SigmaStarCache bad(FieldDescriptor::gf(2)),
                         doctest::Contains("InfeasibleOverFiniteField"),
                         DomainError);
  }
}

TEST_CASE("sigma* coherence against fresh caches") {
  // entries <= 3, length <= 4: the value at coordinate i only depends on the
  // prefix of length i+1
  SigmaStarCache big(Q);
  Word sigma(4, 0);
  while (true) {
    std::vector<std::uint64_t> full = sigma_star(sigma, big);
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      SigmaStarCache fresh(Q);
      Word prefix(sigma.begin(), sigma.begin() + i + 1);
      CHECK(sigma_star(prefix, fresh)[i] == full[i]);
    }
    std::size_t pos = 0;
    while (pos < 4 && ++sigma[pos] == 4) sigma[pos++] = 0;
    if (pos == 4) break;
  }
}

TEST_CASE("freshness under the identity form") {
  // once the identity functional sits below m, the chosen value is new
  SigmaStarCache cache(Q);
  for (Word sigma : {Word{2}, Word{3}, Word{1, 2}, Word{0, 3}, Word{2, 2}}) {
    const std::uint64_t m = sigma.back();
    REQUIRE(m >= 2);  // descriptor (arity 1, coefficient a_1 = 1) is phi_1
    const std::uint64_t chosen = cache.rho(sigma);
    for (std::uint64_t idx : cache.union_set(m, sigma.size()))
      CHECK(!(cache.element(chosen) == cache.element(idx)));
  }
}

TEST_CASE("luzin vectors") {
  SigmaStarCache cache(Q);

  SUBCASE("identity source starts at zero") {
    FieldWord g = luzin_vector({0, 1, 2, 3}, 4, cache);
    CHECK(g[0] == Scalar::zero(Q));
  }

  SUBCASE("shared prefixes induce shared generator prefixes") {
    FieldWord a = luzin_vector({0, 2, 3, 5}, 4, cache);
    FieldWord b = luzin_vector({0, 2, 4, 6}, 4, cache);
    CHECK(a[0] == b[0]);
    CHECK(a[1] == b[1]);
  }

  SUBCASE("non-increasing source is rejected") {
    CHECK_THROWS_WITH_AS(luzin_vector({1, 1, 2}, 3, cache),
                         doctest::Contains("NotStrictlyIncreasing"),
                         DomainError);
  }
}

TEST_CASE("avoidance audit") {
  SigmaStarCache cache(Q);
  Word f{1, 2, 4, 5};
  FieldWord g = luzin_vector(f, 4, cache);

  SUBCASE("constructed generators audit clean") {
    CHECK(avoidance_audit(g, f, cache) > 0);
  }

  SUBCASE("tampering is caught") {
    FieldWord bad = g;
    bad[1] = Scalar::zero(Q);  // the zero form makes 0 forbidden once m >= 1
    CHECK_THROWS_WITH_AS(avoidance_audit(bad, f, cache),
                         doctest::Contains("AuditFailure"), DomainError);
  }

  SUBCASE("vacuous constraints at m = 0") {
    SigmaStarCache fresh(Q);
    Word id{0, 1};
    FieldWord h = luzin_vector(id, 1, fresh);
    CHECK(avoidance_audit(h, id, fresh) == 0);
  }
}

TEST_CASE("memo growth stays within the word-count bound") {
  SigmaStarCache cache(Q);
  Word sigma{3, 2, 3};
  sigma_star(sigma, cache);
  const std::uint64_t max_entry = 3;
  std::uint64_t bound = 0, power = 1;
  for (std::size_t j = 1; j <= sigma.size(); ++j) {
    power *= (max_entry + 1);
    bound += power;
  }
  CHECK(cache.memo_size() <= bound);
}

TEST_CASE("step budget stops runaway recursions") {
  SigmaStarCache cache(Q, 500);
  CHECK_THROWS_AS(sigma_star({9, 9, 9, 9, 9, 9}, cache), BudgetError);
}

TEST_CASE("brute-force scan") {
  SigmaStarCache cache(Q);

  SUBCASE("single generator, tiny budget") {
    LuzinFamily fam = build_luzin_family({{0, 1, 2}}, 3, cache);
    LuzinScanBudget budget;
    budget.max_domain_size = 1;
    budget.form_coeff_indices = 2;
    LuzinScanTable table = brute_force_luzinity(fam, 2, budget);
    CHECK(table.combination_count == 1);  // the zero combination is excluded
    CHECK(!table.rows.empty());
    for (const auto& row : table.rows) CHECK(row.domain.size() == 1);
  }

  SUBCASE("scan agrees with a direct recount") {
    LuzinFamily fam =
        build_luzin_family({{0, 1, 2, 3}, {0, 2, 4, 6}, {1, 3, 5, 7}}, 4,
                           cache);
    LuzinScanBudget budget;
    budget.max_domain_size = 1;
    budget.form_coeff_indices = 2;
    LuzinScanTable table = brute_force_luzinity(fam, 2, budget);
    CHECK(table.combination_count == 7);

    // independent recount of one row family: domain {m}, coefficients in
    // {a_0, a_1}
    std::uint64_t recount_max = 0;
    for (const auto& row : table.rows) {
      REQUIRE(row.domain.size() == 1);
      const std::uint64_t m = row.domain[0];
      (void)m;
      recount_max = std::max(recount_max, row.predicted_count);
    }
    CHECK(recount_max == table.max_predicted);

    // determinism
    LuzinScanTable again = brute_force_luzinity(fam, 2, budget);
    CHECK(again.max_predicted == table.max_predicted);
    CHECK(again.rows.size() == table.rows.size());
  }

  SUBCASE("budget exhaustion raises") {
    LuzinFamily fam = build_luzin_family({{0, 1, 2, 3}}, 4, cache);
    LuzinScanBudget budget;
    budget.max_domain_size = 3;
    budget.form_coeff_indices = 3;
    budget.max_predictors = 5;
    CHECK_THROWS_AS(brute_force_luzinity(fam, 2, budget), BudgetError);
  }
}
