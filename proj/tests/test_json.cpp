#include "doctest.h"
#include "evp/json_io.hpp"
#include "evp/rng.hpp"

using namespace evp;

TEST_CASE("round trips are identities") {
  SUBCASE("space with mixed bounds") {
    SpaceSpec s;
    s.bounds = {Bound(2), Bound(5), std::nullopt, Bound(3)};
    CHECK(space_from_json(space_to_json(s)) == s);
  }

  SUBCASE("words") {
    Word w{0, 3, 1, 7};
    CHECK(word_from_json(word_to_json(w)) == w);
  }

  SUBCASE("field words over both field kinds") {
    FieldDescriptor f3 = FieldDescriptor::gf(3);
    FieldWord a{Scalar::residue(f3, 2), Scalar::residue(f3, 0)};
    CHECK(field_word_from_json(field_word_to_json(a)) == a);
    FieldWord b{Scalar::parse("q:-1/2"), Scalar::parse("q:7")};
    CHECK(field_word_from_json(field_word_to_json(b)) == b);
  }

  SUBCASE("table predictor") {
    SpaceSpec spec = SpaceSpec::from_bounds({2, 2});
    Predictor p = make_table_predictor(spec, {1}, {{1, {{{0}, 1}, {{1}, 0}}}});
    Json j = predictor_to_json(p);
    Predictor back = predictor_from_json(j);
    CHECK(dump_canonical(predictor_to_json(back)) == dump_canonical(j));
    CHECK(evaluate_predictor(back, 1, {0}) == 1);
  }

  SUBCASE("rule predictor via the catalog") {
    SpaceSpec spec = SpaceSpec::from_bounds({2, 2, 2});
    std::map<Word, std::uint64_t> table;
    for_each_word(spec, 2, [&](const Word& w) { table[w] = w[0]; });
    Predictor base = make_table_predictor(spec, {2}, {{2, table}});
    Predictor ext = extend_predictor_to_omega(base, {2, 2, 2});
    Json j = predictor_to_json(ext);
    Predictor back = predictor_from_json(j);
    CHECK(dump_canonical(predictor_to_json(back)) == dump_canonical(j));
    CHECK(evaluate_predictor(back, 2, {7, 1}) ==
          evaluate_predictor(ext, 2, {7, 1}));
  }

  SUBCASE("local closures refuse to serialize") {
    Predictor local = make_rule_predictor(
        SpaceSpec::unbounded(2), {1},
        [](std::uint64_t, const Word&) { return std::uint64_t{0}; });
    CHECK_THROWS_AS(predictor_to_json(local), DomainError);
  }

  SUBCASE("prediction report") {
    PredictionReport r = make_report({0, 2, 3}, {0, 3}, {2});
    Json j = report_to_json(r);
    CHECK(report_from_json(j) == r);
  }

  SUBCASE("block predictor") {
    GeneralizedPredictorDE p;
    p.ks = {0, 3};
    p.ls = {2, 4};
    GeneralizedPredictorDE::BlockRule copy;
    copy.kind = GeneralizedPredictorDE::BlockRule::Kind::CopyPosition;
    copy.copy_pos = 0;
    GeneralizedPredictorDE::BlockRule table;
    table.table[{1, 1, 1}] = 4;
    table.fallback = 9;
    p.rules = {copy, table};
    Json j = de_predictor_to_json(p);
    GeneralizedPredictorDE back = de_predictor_from_json(j);
    CHECK(dump_canonical(de_predictor_to_json(back)) == dump_canonical(j));
  }

  SUBCASE("set predictor") {
    SetValuedPredictor p;
    p.blocks = {{1, {1, 2}}};
    SetValuedPredictor::SetRule rule;
    rule.table[{0}] = {1, 2};
    rule.fallback = {0};
    p.rules[{1, 1}] = rule;
    p.rules[{1, 2}] = rule;
    Json j = set_predictor_to_json(p);
    SetValuedPredictor back = set_predictor_from_json(j);
    CHECK(dump_canonical(set_predictor_to_json(back)) == dump_canonical(j));
  }

  SUBCASE("slalom") {
    Slalom s{{2, {0, 1}}, {5, {3}}};
    CHECK(slalom_from_json(slalom_to_json(s)) == s);
  }

  SUBCASE("linear predictor") {
    LinearPredictor p =
        predictor_from_unsplit_set({0, 1, 2, 3}, FieldDescriptor::gf(3));
    Json j = linear_predictor_to_json(p);
    LinearPredictor back = linear_predictor_from_json(j);
    CHECK(dump_canonical(linear_predictor_to_json(back)) == dump_canonical(j));
  }

  SUBCASE("bilinear fragment") {
    FieldDescriptor f2 = FieldDescriptor::gf(2);
    BilinearFragment phi{f2, Matrix::identity(f2, 3).rows};
    Json j = fragment_to_json(phi);
    BilinearFragment back = fragment_from_json(j);
    CHECK(dump_canonical(fragment_to_json(back)) == dump_canonical(j));
  }

  SUBCASE("coherent injections") {
    CoherentInjections h =
        make_coherent_injections(4, InjectionStyle::Perturbed, 11);
    Json j = injections_to_json(h);
    CHECK(injections_from_json(j).maps == h.maps);
  }

  SUBCASE("block system") {
    SlalomBlockSystem s;
    s.block_count = 3;
    s.spec = SpaceSpec::constant(2, 5);
    s.options = {{}, {}, {{0, 1, 0, 1}, {1, 0, 1, 0}}};
    Json j = block_system_to_json(s);
    SlalomBlockSystem back = block_system_from_json(j);
    CHECK(dump_canonical(block_system_to_json(back)) == dump_canonical(j));
  }

  SUBCASE("px condition") {
    PxCondition c;
    c.space = SpaceSpec::constant(2, 2);
    c.d = {1};
    c.tables[1] = {{{0}, 1}, {{1}, 0}};
    c.promises = {{0, 1}, {1}};
    c.normalize();
    Json j = condition_to_json(c);
    PxCondition back = condition_from_json(j);
    CHECK(dump_canonical(condition_to_json(back)) == dump_canonical(j));
  }

  SUBCASE("luzin family") {
    SigmaStarCache cache(FieldDescriptor::rationals());
    LuzinFamily fam = build_luzin_family({{0, 2, 3}, {1, 4, 6}}, 3, cache);
    Json j = luzin_family_to_json(fam);
    LuzinFamily back = luzin_family_from_json(j);
    CHECK(dump_canonical(luzin_family_to_json(back)) == dump_canonical(j));
  }
}

TEST_CASE("canonical dumps are deterministic") {
  SpaceSpec spec = SpaceSpec::from_bounds({2, 2});
  Predictor p = make_table_predictor(spec, {1}, {{1, {{{0}, 1}, {{1}, 0}}}});
  CHECK(dump_canonical(predictor_to_json(p)) ==
        dump_canonical(predictor_to_json(p)));
}
