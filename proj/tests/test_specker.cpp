#include "doctest.h"
#include "evp/specker.hpp"

using namespace evp;

TEST_CASE("prime-power encoding") {
  SUBCASE("zero word") {
    SpeckerVector v = specker_encode({0, 0, 0, 0}, 4);
    REQUIRE(v.entries.size() == 4);
    CHECK(v.entries[0] == 1);
    CHECK(v.entries[1] == 1);
    CHECK(v.entries[2] == 2);
    CHECK(v.entries[3] == 12);
  }

  SUBCASE("ones word") {
    SpeckerVector v = specker_encode({1, 1, 0}, 3);
    CHECK(v.entries[0] == 1);
    CHECK(v.entries[1] == 2);
    CHECK(v.entries[2] == 12);
  }

  SUBCASE("mixed word") {
    SpeckerVector v = specker_encode({0, 1, 0}, 3);
    CHECK(v.entries[0] == 1);
    CHECK(v.entries[1] == 1);
    CHECK(v.entries[2] == 6);
  }

  SUBCASE("divisibility ladder is exact, exhaustive small grid") {
    // entries <= 2, length <= 5: p_i^{f(i)+n-i-1} divides x(n), nothing more
    const auto primes = first_primes(5);
    Word f(5, 0);
    auto valuation = [](BigInt v, std::uint64_t p) {
      std::uint64_t c = 0;
      while (v % p == 0) {
        v /= p;
        ++c;
      }
      return c;
    };
    while (true) {
      SpeckerVector v = specker_encode(f, 5);
      for (std::size_t n = 0; n < 5; ++n)
        for (std::size_t i = 0; i < n; ++i)
          CHECK(valuation(v.entries[n], primes[i]) == f[i] + n - i - 1);
      std::size_t pos = 0;
      while (pos < 5 && ++f[pos] == 3) f[pos++] = 0;
      if (pos == 5) break;
    }
  }
}

TEST_CASE("hat chain worked examples") {
  const auto primes = first_primes(3);
  Word f{1, 0};

  SUBCASE("integral chain") {
    ChainResult r = hat_chain(6, 0, 2, f, {1}, primes);
    REQUIRE(r.values.size() == 2);
    CHECK(r.values[0] == BigRat(3));
    CHECK(r.values[1] == BigRat(1));
    CHECK(r.all_integral());
  }

  SUBCASE("breaks immediately") {
    ChainResult r = hat_chain(3, 0, 2, f, {1}, primes);
    REQUIRE(r.breaks_at.has_value());
    CHECK(*r.breaks_at == 1);
    CHECK(r.values[0] == BigRat(BigInt(3), BigInt(2)));
  }

  SUBCASE("breaks at the second step") {
    ChainResult r = hat_chain(6, 0, 2, f, {2}, primes);
    REQUIRE(r.breaks_at.has_value());
    CHECK(*r.breaks_at == 2);
    CHECK(r.values[1] == BigRat(BigInt(1), BigInt(2)));
  }

  SUBCASE("degenerate block") {
    CHECK_THROWS_WITH_AS(hat_chain(1, 2, 2, f, {}, primes),
                         doctest::Contains("DegenerateBlock"), DomainError);
  }
}

TEST_CASE("hat chain is linear in the pair (a, h)") {
  const auto primes = first_primes(6);
  Word f{2, 1, 0, 1, 0, 0};
  const std::vector<BigInt> h{1, -2, 0, 3};
  ChainResult base = hat_chain(5, 0, 5, f, h, primes);
  for (std::int64_t c : {2, -3, 7}) {
    std::vector<BigInt> ch;
    for (const BigInt& v : h) ch.push_back(v * c);
    ChainResult scaled = hat_chain(BigInt(5 * c), 0, 5, f, ch, primes);
    for (std::size_t i = 0; i < base.values.size(); ++i)
      CHECK(scaled.values[i] == base.values[i] * c);
  }
  // with h = 0 the chain is linear in a alone
  std::vector<BigInt> zeros(4, BigInt(0));
  ChainResult unit = hat_chain(1, 0, 5, f, zeros, primes);
  ChainResult tripled = hat_chain(3, 0, 5, f, zeros, primes);
  for (std::size_t i = 0; i < unit.values.size(); ++i)
    CHECK(tripled.values[i] == unit.values[i] * 3);
}

TEST_CASE("collision refuter") {
  SUBCASE("spec example grid is refuted") {
    Word fa{0, 0, 0, 0}, fb{1, 0, 0, 0};
    RefuterResult r = collision_refuter(fa, fb, 0, 4, 3, 1, 1);
    CHECK(r.refuted);
    CHECK(r.grid_points > 0);
    CHECK(r.decay_violations == 0);
  }

  SUBCASE("equal words are rejected") {
    Word f{1, 0, 0, 0};
    CHECK_THROWS_WITH_AS(collision_refuter(f, f, 0, 4, 3, 1, 1),
                         doctest::Contains("PreconditionViolated"),
                         DomainError);
  }

  SUBCASE("violated spacing is rejected") {
    Word fa{0, 0}, fb{1, 0};
    CHECK_THROWS_WITH_AS(collision_refuter(fa, fb, 0, 2, 1, 1, 1),
                         doctest::Contains("PreconditionViolated"),
                         DomainError);
  }

  SUBCASE("disagreement off kn is rejected") {
    Word fa{0, 1, 0, 0}, fb{1, 0, 0, 0};
    CHECK_THROWS_AS(collision_refuter(fa, fb, 0, 4, 3, 1, 1), DomainError);
  }
}

TEST_CASE("predictor from the refuter") {
  SUBCASE("single word reproduces its own values") {
    Word f{3, 1, 2, 0, 1};
    BlockSchedule schedule{{0}, {4}};
    GeneralizedPredictorDE p =
        predictor_from_refuter({f}, schedule, 3, 1, 1);
    PredictionReport r = check_prediction_de(p, f, 0);
    CHECK(r.verdict == Verdict::Predicted);
  }

  SUBCASE("colliding pair survives via the refuter") {
    Word fa{0, 0, 0, 0, 0}, fb{1, 0, 0, 0, 0};
    BlockSchedule schedule{{0}, {4}};
    GeneralizedPredictorDE p =
        predictor_from_refuter({fa, fb}, schedule, 3, 1, 1);
    // the earlier member wins the shared key
    CHECK(check_prediction_de(p, fa, 0).verdict == Verdict::Predicted);
    CHECK(check_prediction_de(p, fb, 0).verdict == Verdict::Evades);
  }

  SUBCASE("empty family gives empty rules") {
    GeneralizedPredictorDE p = predictor_from_refuter({}, {{0}, {4}}, 3, 1, 1);
    CHECK(p.block_count() == 0);
    CHECK(check_prediction_de(p, {1, 2, 3}, 0).verdict ==
          Verdict::Inconclusive);
  }
}
