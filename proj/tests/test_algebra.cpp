#include "doctest.h"
#include "evp/linalg.hpp"
#include "evp/rng.hpp"

using namespace evp;

namespace {

Scalar q(std::int64_t num, std::int64_t den = 1) {
  return Scalar::from_rational(BigRat(BigInt(num), BigInt(den)));
}

Scalar gf(std::uint64_t p, std::uint64_t v) {
  return Scalar::residue(FieldDescriptor::gf(p), v);
}

Scalar random_scalar(const FieldDescriptor& f, SplitMix64& rng) {
  if (f.finite()) return Scalar::residue(f, rng.below(f.p));
  std::int64_t num = static_cast<std::int64_t>(rng.below(2001)) - 1000;
  std::int64_t den = static_cast<std::int64_t>(rng.below(1000)) + 1;
  return Scalar::from_rational(BigRat(BigInt(num), BigInt(den)));
}

}  // namespace

TEST_CASE("field descriptor checks primality") {
  CHECK_THROWS_WITH_AS(FieldDescriptor::gf(6),
                       doctest::Contains("not prime"), DomainError);
  CHECK(FieldDescriptor::gf(7).p == 7);
}

TEST_CASE("field axioms on random samples") {
  for (const FieldDescriptor& f :
       {FieldDescriptor::gf(2), FieldDescriptor::gf(3), FieldDescriptor::gf(5),
        FieldDescriptor::rationals()}) {
    SplitMix64 rng(42);
    for (int i = 0; i < 200; ++i) {
      Scalar a = random_scalar(f, rng), b = random_scalar(f, rng),
             c = random_scalar(f, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == Scalar::zero(f));
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == Scalar::one(f));
        CHECK(a / a == Scalar::one(f));
      }
    }
  }
}

TEST_CASE("scalar serialization round trip") {
  CHECK(gf(3, 2).to_string() == "p:3:2");
  CHECK(q(-1, 2).to_string() == "q:-1/2");
  CHECK(q(4).to_string() == "q:4");
  CHECK(Scalar::parse("p:3:2") == gf(3, 2));
  CHECK(Scalar::parse("q:-1/2") == q(-1, 2));
}

TEST_CASE("field enumeration") {
  SUBCASE("prime field") {
    FieldDescriptor f = FieldDescriptor::gf(3);
    CHECK(enumerate_field(f, 0) == gf(3, 0));
    CHECK(enumerate_field(f, 1) == gf(3, 1));
    CHECK(enumerate_field(f, 2) == gf(3, 2));
    CHECK_THROWS_WITH_AS(enumerate_field(FieldDescriptor::gf(2), 2),
                         doctest::Contains("IndexOutOfField"), DomainError);
  }
  SUBCASE("rationals, first entries of the zig-zag") {
    FieldDescriptor f = FieldDescriptor::rationals();
    CHECK(enumerate_field(f, 0) == q(0));
    CHECK(enumerate_field(f, 1) == q(1));
    CHECK(enumerate_field(f, 2) == q(-1));
    CHECK(enumerate_field(f, 3) == q(1, 2));
    CHECK(enumerate_field(f, 4) == q(-1, 2));
    CHECK(enumerate_field(f, 5) == q(2));
    // injectivity over a prefix
    std::vector<Scalar> seen;
    for (std::uint64_t i = 0; i < 60; ++i) {
      Scalar s = enumerate_field(f, i);
      for (const Scalar& t : seen) CHECK(!(s == t));
      seen.push_back(s);
    }
  }
}

TEST_CASE("row reduction") {
  FieldDescriptor f2 = FieldDescriptor::gf(2);

  SUBCASE("identity is already reduced") {
    Matrix id = Matrix::identity(f2, 3);
    RowReduction rr = row_reduce(id);
    CHECK(rr.rank == 3);
    CHECK(rr.rref.rows == id.rows);
  }

  SUBCASE("all ones has rank 1") {
    Matrix m = Matrix::zero(f2, 2, 2);
    for (auto& row : m.rows)
      for (auto& x : row) x = Scalar::one(f2);
    CHECK(row_reduce(m).rank == 1);
  }

  SUBCASE("zero matrix has rank 0") {
    CHECK(row_reduce(Matrix::zero(f2, 3, 4)).rank == 0);
  }

  SUBCASE("idempotence on random matrices") {
    for (const FieldDescriptor& f :
         {FieldDescriptor::gf(2), FieldDescriptor::gf(3),
          FieldDescriptor::rationals()}) {
      SplitMix64 rng(7);
      for (int trial = 0; trial < 30; ++trial) {
        Matrix m = Matrix::zero(f, 3, 4);
        for (auto& row : m.rows)
          for (auto& x : row) x = random_scalar(f, rng);
        Matrix once = row_reduce(m).rref;
        CHECK(row_reduce(once).rref.rows == once.rows);
      }
    }
  }
}

TEST_CASE("orthogonal complement") {
  FieldDescriptor f2 = FieldDescriptor::gf(2);

  SUBCASE("identity form, single basis vector") {
    BilinearFragment phi{f2, Matrix::identity(f2, 3).rows};
    FieldWord e0{Scalar::one(f2), Scalar::zero(f2), Scalar::zero(f2)};
    auto basis = orthogonal_complement(phi, {e0});
    CHECK(basis.size() == 2);
    for (const FieldWord& v : basis) CHECK(phi.apply(e0, v).is_zero());
  }

  SUBCASE("all-ones form, isotropic vector spans nothing new") {
    BilinearFragment phi{f2, {}};
    phi.entries.assign(3, std::vector<Scalar>(3, Scalar::one(f2)));
    FieldWord u{Scalar::one(f2), Scalar::one(f2), Scalar::zero(f2)};
    CHECK(orthogonal_complement(phi, {u}).size() == 3);
  }

  SUBCASE("empty conditions give the whole space") {
    BilinearFragment phi{f2, Matrix::identity(f2, 4).rows};
    CHECK(orthogonal_complement(phi, {}).size() == 4);
  }

  SUBCASE("rank-nullity over random fragments") {
    for (const FieldDescriptor& f :
         {FieldDescriptor::gf(2), FieldDescriptor::gf(3)}) {
      SplitMix64 rng(11);
      for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng.below(5);  // up to 6
        BilinearFragment phi{f, {}};
        phi.entries.assign(n, std::vector<Scalar>(n, Scalar::zero(f)));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i; j < n; ++j) {
            Scalar v = random_scalar(f, rng);
            phi.entries[i][j] = v;
            phi.entries[j][i] = v;
          }
        std::vector<FieldWord> u;
        const std::size_t count = rng.below(n + 1);
        Matrix gram = Matrix::zero(f, 0, n);
        for (std::size_t r = 0; r < count; ++r) {
          FieldWord v;
          for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(f, rng));
          u.push_back(v);
          std::vector<Scalar> row;
          for (std::size_t j = 0; j < n; ++j) {
            Scalar acc = Scalar::zero(f);
            for (std::size_t i = 0; i < n; ++i)
              acc = acc + v[i] * phi.entries[i][j];
            row.push_back(acc);
          }
          gram.rows.push_back(row);
        }
        const std::size_t rank = row_reduce(gram).rank;
        CHECK(orthogonal_complement(phi, u).size() == n - rank);
      }
    }
  }
}

TEST_CASE("coefficient extraction") {
  FieldDescriptor Q = FieldDescriptor::rationals();

  SUBCASE("affine-free rule is read off the units") {
    FieldRule rule = [&](const FieldWord& w) { return w[0] + q(2) * w[1]; };
    LinearForm form = coefficients_of(rule, 2, Q);
    CHECK(form.coeffs == std::vector<Scalar>{q(1), q(2)});
  }

  SUBCASE("zero rule") {
    FieldRule rule = [&](const FieldWord&) { return q(0); };
    CHECK(coefficients_of(rule, 3, Q).coeffs ==
          std::vector<Scalar>(3, q(0)));
  }

  SUBCASE("products are rejected") {
    FieldRule rule = [&](const FieldWord& w) { return w[0] * w[1]; };
    CHECK_THROWS_WITH_AS(coefficients_of(rule, 2, Q),
                         doctest::Contains("NotLinear"), DomainError);
  }

  SUBCASE("left inverse of form realization") {
    SplitMix64 rng(3);
    for (const FieldDescriptor& f :
         {FieldDescriptor::gf(3), FieldDescriptor::rationals()}) {
      for (int trial = 0; trial < 20; ++trial) {
        LinearForm form;
        form.field = f;
        const std::size_t arity = 1 + rng.below(4);
        for (std::size_t i = 0; i < arity; ++i)
          form.coeffs.push_back(random_scalar(f, rng));
        FieldRule rule = [&form](const FieldWord& w) {
          return form.evaluate(w);
        };
        CHECK(coefficients_of(rule, arity, f).coeffs == form.coeffs);
      }
    }
  }
}

TEST_CASE("linear form enumeration") {
  SUBCASE("first form is the zero functional of arity 1") {
    for (const FieldDescriptor& f :
         {FieldDescriptor::gf(2), FieldDescriptor::rationals()}) {
      auto forms = enumerate_linear_forms(f, 1);
      REQUIRE(forms.size() == 1);
      CHECK(forms[0].arity() == 1);
      CHECK(forms[0].coeffs[0].is_zero());
    }
  }

  SUBCASE("GF(2) prefix holds both arity-1 forms") {
    auto forms = enumerate_linear_forms(FieldDescriptor::gf(2), 10);
    int arity1 = 0;
    for (const LinearForm& f : forms)
      if (f.arity() == 1) ++arity1;
    CHECK(arity1 == 2);
  }

  SUBCASE("deterministic reconstruction from the index") {
    for (std::uint64_t k = 0; k < 25; ++k) {
      FormDescriptor a = nth_form_descriptor(FieldDescriptor::rationals(), k);
      FormDescriptor b = nth_form_descriptor(FieldDescriptor::rationals(), k);
      CHECK(a.arity == b.arity);
      CHECK(a.coeff_indices == b.coeff_indices);
    }
  }
}
