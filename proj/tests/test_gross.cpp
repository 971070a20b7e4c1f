#include "doctest.h"
#include "evp/gross.hpp"

using namespace evp;

namespace {

Scalar q(std::int64_t v) {
  return Scalar::from_int(FieldDescriptor::rationals(), v);
}

FieldWord qword(std::initializer_list<std::int64_t> vs) {
  FieldWord w;
  for (std::int64_t v : vs) w.push_back(q(v));
  return w;
}

}  // namespace

TEST_CASE("coherent injections") {
  SUBCASE("canonical maps are the doubled ordinals") {
    CoherentInjections h = make_coherent_injections(3, InjectionStyle::Canonical);
    CHECK(h.maps[2] == std::vector<std::uint64_t>{0, 2});
    for (const auto& level : h.maps)
      for (std::uint64_t v : level) CHECK(v % 2 == 0);
  }

  SUBCASE("perturbed maps are deterministic in the seed") {
    CoherentInjections a =
        make_coherent_injections(6, InjectionStyle::Perturbed, 99);
    CoherentInjections b =
        make_coherent_injections(6, InjectionStyle::Perturbed, 99);
    CHECK(a.maps == b.maps);
  }
}

TEST_CASE("fragment column extraction") {
  FieldDescriptor f3 = FieldDescriptor::gf(3);
  BilinearFragment phi{f3, Matrix::identity(f3, 4).rows};

  SUBCASE("identity has zero off-diagonal columns") {
    FieldWord f = gross_to_luzin(phi, 3, 2);
    CHECK(f == FieldWord{Scalar::zero(f3), Scalar::zero(f3)});
  }

  SUBCASE("columns are read off directly") {
    BilinearFragment m{f3, Matrix::zero(f3, 3, 3).rows};
    m.entries[0][2] = Scalar::residue(f3, 1);
    m.entries[2][0] = Scalar::residue(f3, 1);
    m.entries[1][2] = Scalar::residue(f3, 2);
    m.entries[2][1] = Scalar::residue(f3, 2);
    FieldWord f = gross_to_luzin(m, 2, 2);
    CHECK(f == FieldWord{Scalar::residue(f3, 1), Scalar::residue(f3, 2)});
  }

  SUBCASE("alpha below the split is rejected") {
    CHECK_THROWS_WITH_AS(gross_to_luzin(phi, 1, 2),
                         doctest::Contains("IndexOrder"), DomainError);
  }
}

TEST_CASE("fragment from generator words") {
  SUBCASE("single entry read-off") {
    CoherentInjections h = make_coherent_injections(2, InjectionStyle::Canonical);
    // h_1 = {0 -> 0}
    BilinearFragment phi = luzin_to_gross({qword({9}), qword({5, 7})}, h, 2);
    CHECK(phi.entries[0][1] == q(5));
    CHECK(phi.entries[1][0] == q(5));
    CHECK(phi.entries[0][0].is_zero());
  }

  SUBCASE("symmetry holds by construction") {
    CoherentInjections h =
        make_coherent_injections(4, InjectionStyle::Perturbed, 5);
    std::vector<FieldWord> gens;
    for (int i = 0; i < 4; ++i)
      gens.push_back(qword({i, i + 1, 2 * i, 3, 9 - i, 2, 1, 0, 4, 5, 6, 7}));
    BilinearFragment phi = luzin_to_gross(gens, h, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        CHECK(phi.entries[i][j] == phi.entries[j][i]);
  }

  SUBCASE("short generators are rejected") {
    CoherentInjections h = make_coherent_injections(3, InjectionStyle::Canonical);
    // h_2(1) = 2 needs length >= 3
    CHECK_THROWS_WITH_AS(
        luzin_to_gross({qword({1}), qword({1, 2}), qword({1, 2})}, h, 3),
        doctest::Contains("HorizonTooShort"), DomainError);
  }
}

TEST_CASE("round trip recovers the generators along the injections") {
  std::vector<FieldWord> gens;
  for (int i = 0; i < 5; ++i)
    gens.push_back(
        qword({2 * i + 1, i, 7 - i, 3 * i, 5, 1, i, 2, 8, 0, 4, 6}));

  SUBCASE("canonical injections") {
    CoherentInjections h = make_coherent_injections(5, InjectionStyle::Canonical);
    RoundtripReport r = roundtrip_check(gens, h, 5, 2);
    CHECK(r.checked > 0);
    CHECK(r.mismatches.empty());
  }

  SUBCASE("perturbed injections") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
      CoherentInjections h =
          make_coherent_injections(5, InjectionStyle::Perturbed, seed);
      CHECK(roundtrip_check(gens, h, 5, 2).mismatches.empty());
    }
  }

  SUBCASE("a transposed read is caught") {
    // negative control: compare against the wrong orientation by hand
    CoherentInjections h = make_coherent_injections(3, InjectionStyle::Canonical);
    std::vector<FieldWord> g3(gens.begin(), gens.begin() + 3);
    BilinearFragment phi = luzin_to_gross(g3, h, 3);
    // f_beta built from the row below the split instead of the column
    std::size_t mismatches = 0;
    for (std::size_t beta = 2; beta < 3; ++beta)
      for (std::size_t n = 0; n < 2; ++n) {
        Scalar wrong = phi.entries[beta][n] + q(1);  // deliberately off
        if (!(wrong == g3[beta][h.maps[beta][n]])) ++mismatches;
      }
    CHECK(mismatches > 0);
  }
}

TEST_CASE("complement growth scan") {
  FieldDescriptor f2 = FieldDescriptor::gf(2);
  BilinearFragment phi{f2, Matrix::identity(f2, 4).rows};
  auto unit = [&](std::size_t i) {
    FieldWord v(4, Scalar::zero(f2));
    v[i] = Scalar::one(f2);
    return v;
  };

  SUBCASE("identity fragment loses one dimension per independent vector") {
    std::vector<std::vector<FieldWord>> chain{{unit(0)}, {unit(0), unit(1)}};
    CHECK(complement_growth_scan(phi, chain) ==
          std::vector<std::size_t>{3, 2});
  }

  SUBCASE("zero fragment is blind to the chain") {
    BilinearFragment zero{f2, Matrix::zero(f2, 4, 4).rows};
    std::vector<std::vector<FieldWord>> chain{{unit(0)}, {unit(0), unit(1)}};
    CHECK(complement_growth_scan(zero, chain) ==
          std::vector<std::size_t>{4, 4});
  }

  SUBCASE("dependent additions do not move the dimension") {
    FieldWord sum = unit(0);
    sum[1] = Scalar::one(f2);
    std::vector<std::vector<FieldWord>> chain{
        {unit(0), unit(1)}, {unit(0), unit(1), sum}};
    std::vector<std::size_t> dims = complement_growth_scan(phi, chain);
    CHECK(dims[0] == dims[1]);
  }

  SUBCASE("monotone nonincreasing and bounded below") {
    std::vector<std::vector<FieldWord>> chain{
        {unit(2)}, {unit(2), unit(0)}, {unit(2), unit(0), unit(3)}};
    std::vector<std::size_t> dims = complement_growth_scan(phi, chain);
    for (std::size_t i = 0; i + 1 < dims.size(); ++i)
      CHECK(dims[i] >= dims[i + 1]);
    for (std::size_t i = 0; i < dims.size(); ++i)
      CHECK(dims[i] >= 4 - chain[i].size());
  }
}

TEST_CASE("orthogonality bookkeeping identity") {
  // Phi(y, z) computed by matrix bilinearity equals the expanded double sum
  // over the generator values, for y below the split and z above it
  SplitMix64 rng(2024);
  for (const FieldDescriptor& f :
       {FieldDescriptor::gf(2), FieldDescriptor::gf(3),
        FieldDescriptor::rationals()}) {
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = 4;
      const std::size_t split = 2;
      std::vector<FieldWord> gens;
      for (std::size_t i = 0; i < n; ++i) {
        FieldWord g;
        for (int t = 0; t < 12; ++t)
          g.push_back(f.finite()
                          ? Scalar::residue(f, rng.below(f.p))
                          : Scalar::from_int(
                                f, static_cast<std::int64_t>(rng.below(9)) -
                                       4));
        gens.push_back(std::move(g));
      }
      CoherentInjections h =
          make_coherent_injections(n, InjectionStyle::Perturbed, trial);
      BilinearFragment phi = luzin_to_gross(gens, h, n);

      auto scalar = [&]() {
        return f.finite() ? Scalar::residue(f, rng.below(f.p))
                          : Scalar::from_int(
                                f,
                                static_cast<std::int64_t>(rng.below(7)) - 3);
      };
      // y supported below the split, z above it
      FieldWord y(n, Scalar::zero(f)), z(n, Scalar::zero(f));
      for (std::size_t i = 0; i < split; ++i) y[i] = scalar();
      for (std::size_t i = split; i < n; ++i) z[i] = scalar();

      Scalar direct = phi.apply(y, z);
      Scalar expanded = Scalar::zero(f);
      for (std::size_t j = 0; j < split; ++j)
        for (std::size_t i = split; i < n; ++i)
          expanded = expanded + z[i] * y[j] * gens[i][h.maps[i][j]];
      CHECK(direct == expanded);
    }
  }
}
