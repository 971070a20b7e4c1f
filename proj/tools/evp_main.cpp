// Command line harness over the library: every subcommand is a pure function
// of its config and input files, and artifacts are written canonically so a
// repeated run is byte identical.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "evp/json_io.hpp"
#include "evp/specker.hpp"

namespace {

using namespace evp;

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw DomainError(ErrorCode::InvalidArgument, "cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw DomainError(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
}

void write_json(const std::string& path, const Json& j) {
  write_text(path, dump_canonical(j));
}

std::vector<Word> words_from_json(const Json& j) {
  std::vector<Word> out;
  for (const Json& w : j.at("words")) out.push_back(w.get<Word>());
  return out;
}

std::vector<BigInt> parse_int_list(const std::string& csv) {
  std::vector<BigInt> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.emplace_back(BigInt(item));
  }
  return out;
}

struct Options {
  std::string out;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::uint64_t horizon = 0;
  std::uint64_t budget_steps = 5'000'000;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-scale laboratory for evasion and prediction"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--out", opt.out, "primary artifact path");
  app.add_option("--seed", opt.seed, "PRNG seed (SplitMix64)")
      ->each([&](const std::string&) { opt.seed_set = true; });
  app.add_option("--horizon", opt.horizon, "horizon override");
  app.add_option("--budget-steps", opt.budget_steps,
                 "step budget for recursive constructions");

  std::function<int()> body;

  // ---- predict ----
  auto* predict = app.add_subcommand("predict", "prediction checks");
  {
    {
    auto* check = predict->add_subcommand("check", "run one prediction check");
    auto p_path = std::make_shared<std::string>();
    auto w_path = std::make_shared<std::string>();
    auto grace = std::make_shared<std::uint64_t>(0);
    check->add_option("--predictor", *p_path)->required();
    check->add_option("--word", *w_path)->required();
    check->add_option("--grace", *grace);
    check->callback([&, p_path, w_path, grace] {
      body = [&, p_path, w_path, grace]() {
        Json pj = read_json(*p_path);
        PredictionReport report;
        Word w = word_from_json(read_json(*w_path));
        if (pj.at("kind") == "linear_predictor") {
          LinearPredictor p = linear_predictor_from_json(pj);
          FieldWord fw;
          for (std::uint64_t v : w)
            fw.push_back(Scalar::from_int(p.field,
                                          static_cast<std::int64_t>(v)));
          report = check_prediction_linear(p, fw, *grace);
        } else if (pj.at("kind") == "de_predictor") {
          report = check_prediction_de(de_predictor_from_json(pj), w, *grace);
        } else if (pj.at("kind") == "set_predictor") {
          report =
              check_prediction_setvalued(set_predictor_from_json(pj), w, *grace);
        } else if (pj.at("kind") == "slalom") {
          report = check_slalom_evasion(slalom_from_json(pj), w, *grace);
        } else {
          report = check_prediction(predictor_from_json(pj), w, *grace);
        }
        write_json(opt.out, report_to_json(report));
        std::cout << "predict check: " << verdict_name(report.verdict) << " ("
                  << report.hits.size() << " hits, " << report.misses.size()
                  << " misses)\n";
        return 0;
      };
    });
    }
  }

  // ---- transform ----
  auto* transform = app.add_subcommand("transform", "predictor constructions");
  {
    {
    auto* extend = transform->add_subcommand("extend", "clamp extension");
    auto p_path = std::make_shared<std::string>();
    auto bounds = std::make_shared<std::string>();
    extend->add_option("--predictor", *p_path)->required();
    extend->add_option("--bounds", *bounds)->required();
    extend->callback([&, p_path, bounds] {
      body = [&, p_path, bounds]() {
        Predictor p = predictor_from_json(read_json(*p_path));
        Word x = word_from_json(read_json(*bounds));
        Predictor ext = extend_predictor_to_omega(p, x);
        write_json(opt.out, predictor_to_json(ext));
        std::cout << "transform extend: domain size " << ext.domain.size()
                  << "\n";
        return 0;
      };
    });

    }
    {
    auto* combine = transform->add_subcommand("combine", "n -> 2 reduction");
    auto pi2 = std::make_shared<std::string>();
    auto pip = std::make_shared<std::string>();
    combine->add_option("--pi2", *pi2)->required();
    combine->add_option("--pi-prime", *pip)->required();
    combine->callback([&, pi2, pip] {
      body = [&, pi2, pip]() {
        Predictor a = predictor_from_json(read_json(*pi2));
        Predictor b = predictor_from_json(read_json(*pip));
        Predictor c = combine_predictors(a, b);
        write_json(opt.out, predictor_to_json(c));
        std::cout << "transform combine: domain size " << c.domain.size()
                  << "\n";
        return 0;
      };
    });

    }
    {
    auto* split = transform->add_subcommand("split-set",
                                            "predictor from an unsplit set");
    auto set_csv = std::make_shared<std::string>();
    auto field = std::make_shared<std::string>("q");
    split->add_option("--set", *set_csv)->required();
    split->add_option("--field", *field);
    split->callback([&, set_csv, field] {
      body = [&, set_csv, field]() {
        std::vector<std::uint64_t> b;
        for (const BigInt& v : parse_int_list(*set_csv))
          b.push_back(v.convert_to<std::uint64_t>());
        LinearPredictor p =
            predictor_from_unsplit_set(b, FieldDescriptor::parse(*field));
        write_json(opt.out, linear_predictor_to_json(p));
        std::cout << "transform split-set: domain size " << p.domain.size()
                  << "\n";
        return 0;
      };
    });

    }
    {
    auto* slalom = transform->add_subcommand("slalom",
                                             "predictor from a block system");
    auto sys = std::make_shared<std::string>();
    slalom->add_option("--system", *sys)->required();
    slalom->callback([&, sys] {
      body = [&, sys]() {
        Json j = read_json(*sys);
        if (j.at("kind") == "field_slalom_block_system") {
          LinearPredictor p =
              linear_predictor_from_slalom(field_block_system_from_json(j));
          write_json(opt.out, linear_predictor_to_json(p));
          std::cout << "transform slalom: linear, domain size "
                    << p.domain.size() << "\n";
        } else {
          Predictor p = predictor_from_slalom(block_system_from_json(j));
          write_json(opt.out, predictor_to_json(p));
          std::cout << "transform slalom: domain size " << p.domain.size()
                    << "\n";
        }
        return 0;
      };
    });
    }
  }

  // ---- specker ----
  auto* specker = app.add_subcommand("specker", "prime-power embedding");
  {
    {
    auto* encode = specker->add_subcommand("encode", "prime-power vector");
    auto w_path = std::make_shared<std::string>();
    auto length = std::make_shared<std::uint64_t>(0);
    encode->add_option("--word", *w_path)->required();
    encode->add_option("--length", *length)->required();
    encode->callback([&, w_path, length] {
      body = [&, w_path, length]() {
        Word f = word_from_json(read_json(*w_path));
        SpeckerVector v = specker_encode(f, *length);
        Json entries = Json::array();
        for (const BigInt& e : v.entries) entries.push_back(e.str());
        write_json(opt.out, Json{{"schema_version", kSchemaVersion},
                                 {"kind", "specker_vector"},
                                 {"source", v.source},
                                 {"entries", entries}});
        std::cout << "specker encode: " << v.entries.size() << " entries\n";
        return 0;
      };
    });

    }
    {
    auto* chain = specker->add_subcommand("chain", "solve one hat chain");
    auto w_path = std::make_shared<std::string>();
    auto a_str = std::make_shared<std::string>();
    auto kn = std::make_shared<std::uint64_t>(0);
    auto ln = std::make_shared<std::uint64_t>(0);
    auto hs = std::make_shared<std::string>("");
    chain->add_option("--word", *w_path)->required();
    chain->add_option("--a", *a_str)->required();
    chain->add_option("--kn", *kn)->required();
    chain->add_option("--ln", *ln)->required();
    chain->add_option("--h", *hs, "comma separated h(e_j), kn < j < ln");
    chain->callback([&, w_path, a_str, kn, ln, hs] {
      body = [&, w_path, a_str, kn, ln, hs]() {
        Word f = word_from_json(read_json(*w_path));
        ChainResult r = hat_chain(BigInt(*a_str), *kn, *ln, f,
                                  parse_int_list(*hs), first_primes(*ln));
        Json values = Json::array();
        for (const BigRat& v : r.values) values.push_back(v.str());
        Json out{{"schema_version", kSchemaVersion},
                 {"kind", "chain_result"},
                 {"values", values},
                 {"integral", r.integral},
                 {"verdict", r.all_integral() ? "all_integral" : "breaks"}};
        if (r.breaks_at) out["breaks_at"] = *r.breaks_at;
        write_json(opt.out, out);
        std::cout << "specker chain: "
                  << (r.all_integral()
                          ? std::string("all integral")
                          : "breaks at " + std::to_string(*r.breaks_at))
                  << "\n";
        return 0;
      };
    });

    }
    {
    auto* refute = specker->add_subcommand("refute", "collision grid search");
    auto fa = std::make_shared<std::string>();
    auto fb = std::make_shared<std::string>();
    auto kn = std::make_shared<std::uint64_t>(0);
    auto ln = std::make_shared<std::uint64_t>(0);
    auto ab = std::make_shared<std::uint64_t>(1);
    auto hb = std::make_shared<std::uint64_t>(1);
    auto hkb = std::make_shared<std::uint64_t>(1);
    auto csv = std::make_shared<std::string>();
    refute->add_option("--alpha", *fa)->required();
    refute->add_option("--beta", *fb)->required();
    refute->add_option("--kn", *kn)->required();
    refute->add_option("--ln", *ln)->required();
    refute->add_option("--a-bound", *ab);
    refute->add_option("--h-bound", *hb);
    refute->add_option("--hkn-bound", *hkb);
    refute->add_option("--csv", *csv, "grid CSV path");
    refute->callback([&, fa, fb, kn, ln, ab, hb, hkb, csv] {
      body = [&, fa, fb, kn, ln, ab, hb, hkb, csv]() {
        Word a = word_from_json(read_json(*fa));
        Word b = word_from_json(read_json(*fb));
        RefuterResult r =
            collision_refuter(a, b, *kn, *ln, *ab, *hb, *hkb, !csv->empty());
        Json out{{"schema_version", kSchemaVersion},
                 {"kind", "refuter_result"},
                 {"refuted", r.refuted},
                 {"grid_points", r.grid_points},
                 {"decay_checks", r.decay_checks},
                 {"decay_violations", r.decay_violations}};
        if (r.counterexample) {
          Json h = Json::array();
          for (const BigInt& v : r.counterexample->h_values)
            h.push_back(v.str());
          out["counterexample"] = Json{{"a", r.counterexample->a.str()},
                                       {"h", h}};
        }
        write_json(opt.out, out);
        if (!csv->empty()) {
          std::string text = "a";
          for (std::size_t i = 0; i + 1 < *ln - *kn; ++i)
            text += ",h" + std::to_string(*kn + 1 + i);
          text += ",alpha_break,beta_break,both_integral\n";
          for (const auto& row : r.rows) {
            text += row.a.str();
            for (const BigInt& v : row.h_values) text += "," + v.str();
            text += ",";
            text += row.alpha_break ? std::to_string(*row.alpha_break) : "-";
            text += ",";
            text += row.beta_break ? std::to_string(*row.beta_break) : "-";
            text += ",";
            text += (!row.alpha_break && !row.beta_break) ? "1" : "0";
            text += "\n";
          }
          write_text(*csv, text);
        }
        std::cout << "specker refute: "
                  << (r.refuted ? "refuted" : "counterexample found") << " ("
                  << r.grid_points << " grid points)\n";
        return 0;
      };
    });
    }
  }

  // ---- luzin ----
  auto* luzin = app.add_subcommand("luzin", "generator construction");
  {
    {
    auto* build = luzin->add_subcommand("build", "generators from sources");
    auto fam = std::make_shared<std::string>();
    build->add_option("--family", *fam)->required();
    build->callback([&, fam] {
      body = [&, fam]() {
        std::vector<Word> sources = words_from_json(read_json(*fam));
        const std::uint64_t horizon =
            opt.horizon ? opt.horizon
                        : (sources.empty() ? 0 : sources[0].size());
        SigmaStarCache cache(FieldDescriptor::rationals(), opt.budget_steps);
        LuzinFamily family = build_luzin_family(sources, horizon, cache);
        write_json(opt.out, luzin_family_to_json(family));
        std::cout << "luzin build: " << family.generators.size()
                  << " generators at horizon " << horizon << " ("
                  << cache.steps() << " steps)\n";
        return 0;
      };
    });

    }
    {
    auto* audit = luzin->add_subcommand("audit", "re-check avoidance");
    auto fam = std::make_shared<std::string>();
    audit->add_option("--family", *fam)->required();
    audit->callback([&, fam] {
      body = [&, fam]() {
        LuzinFamily family = luzin_family_from_json(read_json(*fam));
        SigmaStarCache cache(family.field, opt.budget_steps);
        std::uint64_t checked = 0;
        for (std::size_t i = 0; i < family.generators.size(); ++i) {
          FieldWord rebuilt =
              luzin_vector(family.sources[i], family.horizon, cache);
          if (!(rebuilt == family.generators[i]))
            throw DomainError(ErrorCode::AuditFailure,
                              "generator " + std::to_string(i) +
                                  " does not match its source");
          checked +=
              avoidance_audit(family.generators[i], family.sources[i], cache);
        }
        write_json(opt.out, Json{{"schema_version", kSchemaVersion},
                                 {"kind", "audit_report"},
                                 {"constraints_checked", checked},
                                 {"failures", 0}});
        std::cout << "luzin audit: " << checked << " constraints, 0 failures\n";
        return 0;
      };
    });

    }
    {
    auto* scan = luzin->add_subcommand("scan", "brute-force predictor table");
    auto fam = std::make_shared<std::string>();
    auto coeff = std::make_shared<std::uint64_t>(2);
    auto maxd = std::make_shared<std::uint64_t>(1);
    auto formb = std::make_shared<std::uint64_t>(2);
    auto grace = std::make_shared<std::uint64_t>(0);
    scan->add_option("--family", *fam)->required();
    scan->add_option("--coeff-bound", *coeff);
    scan->add_option("--max-domain", *maxd);
    scan->add_option("--form-coeff-bound", *formb);
    scan->add_option("--grace", *grace);
    scan->callback([&, fam, coeff, maxd, formb, grace] {
      body = [&, fam, coeff, maxd, formb, grace]() {
        LuzinFamily family = luzin_family_from_json(read_json(*fam));
        LuzinScanBudget budget;
        budget.max_domain_size = *maxd;
        budget.form_coeff_indices = *formb;
        budget.grace = *grace;
        LuzinScanTable table = brute_force_luzinity(family, *coeff, budget);
        std::string text = "predictor_id,domain_size,predicted_count,witness\n";
        for (const auto& row : table.rows) {
          text += std::to_string(row.predictor_id) + "," +
                  std::to_string(row.domain.size()) + "," +
                  std::to_string(row.predicted_count) + "," + row.witness +
                  "\n";
        }
        write_text(opt.out, text);
        std::cout << "luzin scan: " << table.rows.size() << " predictors, "
                  << table.combination_count << " combinations, max predicted "
                  << table.max_predicted << "\n";
        return 0;
      };
    });
    }
  }

  // ---- gross ----
  auto* gross = app.add_subcommand("gross", "bilinear translations");
  {
    {
    auto* from = gross->add_subcommand("from-luzin", "fragment from words");
    auto fam = std::make_shared<std::string>();
    auto inj = std::make_shared<std::string>();
    auto style = std::make_shared<std::string>("canonical");
    auto n = std::make_shared<std::uint64_t>(0);
    from->add_option("--family", *fam)->required();
    from->add_option("--injections", *inj, "injections JSON (optional)");
    from->add_option("--style", *style, "canonical | perturbed");
    from->add_option("--n", *n)->required();
    from->callback([&, fam, inj, style, n] {
      body = [&, fam, inj, style, n]() {
        LuzinFamily family = luzin_family_from_json(read_json(*fam));
        CoherentInjections h;
        if (!inj->empty()) {
          h = injections_from_json(read_json(*inj));
        } else if (*style == "perturbed") {
          if (!opt.seed_set)
            throw DomainError(ErrorCode::InvalidArgument,
                              "--seed is mandatory for randomized scans");
          h = make_coherent_injections(*n, InjectionStyle::Perturbed,
                                       opt.seed);
        } else {
          h = make_coherent_injections(*n, InjectionStyle::Canonical);
        }
        BilinearFragment phi = luzin_to_gross(family.generators, h, *n);
        write_json(opt.out, fragment_to_json(phi));
        std::cout << "gross from-luzin: dimension " << phi.dimension() << "\n";
        return 0;
      };
    });

    }
    {
    auto* to = gross->add_subcommand("to-luzin", "column words from fragment");
    auto frag = std::make_shared<std::string>();
    auto alpha = std::make_shared<std::uint64_t>(0);
    auto split = std::make_shared<std::uint64_t>(0);
    to->add_option("--fragment", *frag)->required();
    to->add_option("--alpha", *alpha)->required();
    to->add_option("--split", *split)->required();
    to->callback([&, frag, alpha, split] {
      body = [&, frag, alpha, split]() {
        BilinearFragment phi = fragment_from_json(read_json(*frag));
        FieldWord f = gross_to_luzin(phi, *alpha, *split);
        write_json(opt.out, field_word_to_json(f));
        std::cout << "gross to-luzin: word of length " << f.size() << "\n";
        return 0;
      };
    });

    }
    {
    auto* scan = gross->add_subcommand("scan", "complement growth");
    auto frag = std::make_shared<std::string>();
    auto chain = std::make_shared<std::string>();
    scan->add_option("--fragment", *frag)->required();
    scan->add_option("--chain", *chain)->required();
    scan->callback([&, frag, chain] {
      body = [&, frag, chain]() {
        BilinearFragment phi = fragment_from_json(read_json(*frag));
        Json cj = read_json(*chain);
        std::vector<std::vector<FieldWord>> steps;
        for (const Json& step : cj.at("chain")) {
          std::vector<FieldWord> vectors;
          for (const Json& v : step) {
            FieldWord w;
            for (const Json& s : v)
              w.push_back(Scalar::parse(s.get<std::string>()));
            vectors.push_back(std::move(w));
          }
          steps.push_back(std::move(vectors));
        }
        std::vector<std::size_t> dims = complement_growth_scan(phi, steps);
        write_json(opt.out, Json{{"schema_version", kSchemaVersion},
                                 {"kind", "complement_dims"},
                                 {"dims", dims}});
        std::cout << "gross scan: " << dims.size() << " steps\n";
        return 0;
      };
    });
    }
  }

  // ---- poset ----
  auto* poset = app.add_subcommand("poset", "predictor-adding conditions");
  {
    {
    auto* order = poset->add_subcommand("check-order", "is c1 <= c2?");
    auto c1 = std::make_shared<std::string>();
    auto c2 = std::make_shared<std::string>();
    order->add_option("--c1", *c1)->required();
    order->add_option("--c2", *c2)->required();
    order->callback([&, c1, c2] {
      body = [&, c1, c2]() {
        PxCondition a = condition_from_json(read_json(*c1));
        PxCondition b = condition_from_json(read_json(*c2));
        const bool leq = px_leq(a, b);
        write_json(opt.out, Json{{"schema_version", kSchemaVersion},
                                 {"kind", "order_check"},
                                 {"leq", leq},
                                 {"height_c1", height(a)},
                                 {"height_c2", height(b)}});
        std::cout << "poset check-order: " << (leq ? "true" : "false") << "\n";
        return 0;
      };
    });

    }
    {
    auto* wit = poset->add_subcommand("witnesses", "softness witness set");
    auto p_path = std::make_shared<std::string>();
    auto q_path = std::make_shared<std::string>();
    auto m = std::make_shared<std::uint64_t>(0);
    wit->add_option("--p", *p_path)->required();
    wit->add_option("--q", *q_path)->required();
    wit->add_option("--height-bound", *m)->required();
    wit->callback([&, p_path, q_path, m] {
      body = [&, p_path, q_path, m]() {
        PxCondition p = condition_from_json(read_json(*p_path));
        PxCondition q = condition_from_json(read_json(*q_path));
        std::vector<PxCondition> ws = softness_witnesses(p, q, *m);
        Json arr = Json::array();
        for (const PxCondition& w : ws) arr.push_back(condition_to_json(w));
        write_json(opt.out, Json{{"schema_version", kSchemaVersion},
                                 {"kind", "witness_set"},
                                 {"witnesses", arr}});
        std::cout << "poset witnesses: " << ws.size() << " conditions\n";
        return 0;
      };
    });

    }
    {
    auto* gen = poset->add_subcommand("generic", "predictor from a chain");
    auto chain = std::make_shared<std::string>();
    gen->add_option("--chain", *chain)->required();
    gen->callback([&, chain] {
      body = [&, chain]() {
        Json cj = read_json(*chain);
        std::vector<PxCondition> conditions;
        for (const Json& c : cj.at("conditions"))
          conditions.push_back(condition_from_json(c));
        GenericExtraction g = generic_predictor(conditions);
        Json coverage = Json::array();
        for (const auto& cov : g.coverage)
          coverage.push_back(Json{{"chain_pos", cov.chain_pos},
                                  {"promise", cov.promise},
                                  {"predicted_at", cov.predicted_at}});
        write_json(opt.out,
                   Json{{"schema_version", kSchemaVersion},
                        {"kind", "generic_extraction"},
                        {"predictor", predictor_to_json(g.predictor)},
                        {"coverage", coverage}});
        std::cout << "poset generic: domain size " << g.predictor.domain.size()
                  << "\n";
        return 0;
      };
    });
    }
  }

  // ---- diagram ----
  auto* diagram = app.add_subcommand("diagram", "inequality diagram");
  {
    {
    auto* q = diagram->add_subcommand("query", "relation between two nodes");
    auto from = std::make_shared<std::string>();
    auto to = std::make_shared<std::string>();
    q->add_option("--from", *from)->required();
    q->add_option("--to", *to)->required();
    q->callback([&, from, to] {
      body = [&, from, to]() {
        Diagram d = load_builtin_diagram();
        QueryResult r = query_diagram(d, *from, *to);
        Json notes = Json::array();
        for (const DiagramNote& n : r.annotations)
          notes.push_back(Json{{"text", n.text}, {"citation", n.citation}});
        write_json(opt.out, Json{{"schema_version", kSchemaVersion},
                                 {"kind", "diagram_query"},
                                 {"outcome", query_outcome_name(r.outcome)},
                                 {"path", r.path},
                                 {"citations", r.citations},
                                 {"annotations", notes}});
        std::cout << "diagram query: " << query_outcome_name(r.outcome)
                  << "\n";
        return 0;
      };
    });

    }
    {
    auto* exp = diagram->add_subcommand("export", "DOT export");
    exp->callback([&] {
      body = [&]() {
        write_text(opt.out, diagram_to_dot(load_builtin_diagram()));
        std::cout << "diagram export: done\n";
        return 0;
      };
    });
    }
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (!body)
      throw DomainError(ErrorCode::InvalidArgument, "no subcommand selected");
    return body();
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
