#include "evp/json_io.hpp"

namespace evp {

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json space_to_json(const SpaceSpec& s) {
  Json bounds = Json::array();
  for (const Bound& b : s.bounds) {
    if (b)
      bounds.push_back(*b);
    else
      bounds.push_back("unbounded");
  }
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "space"},
              {"bounds", bounds}};
}

SpaceSpec space_from_json(const Json& j) {
  SpaceSpec s;
  for (const Json& b : j.at("bounds")) {
    if (b.is_string() && b.get<std::string>() == "unbounded")
      s.bounds.push_back(std::nullopt);
    else
      s.bounds.push_back(b.get<std::uint64_t>());
  }
  s.validate();
  return s;
}

Json word_to_json(const Word& w) {
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "word"},
              {"entries", w}};
}

Word word_from_json(const Json& j) {
  return j.at("entries").get<Word>();
}

Json field_word_to_json(const FieldWord& w) {
  Json entries = Json::array();
  for (const Scalar& s : w) entries.push_back(s.to_string());
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "field_word"},
              {"entries", entries}};
}

FieldWord field_word_from_json(const Json& j) {
  FieldWord w;
  for (const Json& e : j.at("entries"))
    w.push_back(Scalar::parse(e.get<std::string>()));
  return w;
}

namespace {

Json tables_to_json(
    const std::map<std::uint64_t, std::map<Word, std::uint64_t>>& tables) {
  Json out = Json::array();
  for (const auto& [index, table] : tables) {
    Json entries = Json::array();
    for (const auto& [word, value] : table)
      entries.push_back(Json{{"word", word}, {"value", value}});
    out.push_back(Json{{"index", index}, {"entries", entries}});
  }
  return out;
}

std::map<std::uint64_t, std::map<Word, std::uint64_t>> tables_from_json(
    const Json& j) {
  std::map<std::uint64_t, std::map<Word, std::uint64_t>> tables;
  for (const Json& t : j) {
    auto& table = tables[t.at("index").get<std::uint64_t>()];
    for (const Json& e : t.at("entries"))
      table[e.at("word").get<Word>()] = e.at("value").get<std::uint64_t>();
  }
  return tables;
}

}  // namespace

Json predictor_to_json(const Predictor& p) {
  Json backing;
  if (const auto* tb = std::get_if<TableBacking>(&p.backing)) {
    backing = Json{{"type", "table"}, {"tables", tables_to_json(tb->tables)}};
  } else {
    const auto& rb = std::get<RuleBacking>(p.backing);
    if (rb.name.empty())
      throw DomainError(ErrorCode::InvalidArgument,
                        "local rule predictors are not serializable");
    backing = Json{{"type", "rule"},
                   {"name", rb.name},
                   {"params", Json::parse(rb.params_json)}};
  }
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "predictor"},
              {"space", space_to_json(p.space)},
              {"domain", p.domain},
              {"backing", backing}};
}

Predictor predictor_from_json(const Json& j) {
  SpaceSpec space = space_from_json(j.at("space"));
  auto domain = j.at("domain").get<std::vector<std::uint64_t>>();
  const Json& backing = j.at("backing");
  if (backing.at("type") == "table")
    return make_table_predictor(space, domain,
                                tables_from_json(backing.at("tables")));
  const std::string name = backing.at("name").get<std::string>();
  const std::string params = backing.at("params").dump();
  return make_rule_predictor(space, domain, compile_rule(name, params, space),
                             name, params);
}

Json report_to_json(const PredictionReport& r) {
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "prediction_report"},
              {"checked", r.checked},
              {"hits", r.hits},
              {"misses", r.misses},
              {"verdict", verdict_name(r.verdict)}};
}

PredictionReport report_from_json(const Json& j) {
  return make_report(j.at("checked").get<std::vector<std::uint64_t>>(),
                     j.at("hits").get<std::vector<std::uint64_t>>(),
                     j.at("misses").get<std::vector<std::uint64_t>>());
}

Json de_predictor_to_json(const GeneralizedPredictorDE& p) {
  Json blocks = Json::array();
  for (std::size_t n = 0; n < p.block_count(); ++n) {
    const auto& rule = p.rules[n];
    Json jr;
    if (rule.kind == GeneralizedPredictorDE::BlockRule::Kind::CopyPosition) {
      jr = Json{{"type", "copy"}, {"position", rule.copy_pos}};
    } else {
      Json entries = Json::array();
      for (const auto& [word, value] : rule.table)
        entries.push_back(Json{{"word", word}, {"value", value}});
      jr = Json{{"type", "table"},
                {"entries", entries},
                {"fallback", rule.fallback}};
    }
    blocks.push_back(Json{{"k", p.ks[n]}, {"l", p.ls[n]}, {"rule", jr}});
  }
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "de_predictor"},
              {"blocks", blocks}};
}

GeneralizedPredictorDE de_predictor_from_json(const Json& j) {
  GeneralizedPredictorDE p;
  for (const Json& b : j.at("blocks")) {
    p.ks.push_back(b.at("k").get<std::uint64_t>());
    p.ls.push_back(b.at("l").get<std::uint64_t>());
    GeneralizedPredictorDE::BlockRule rule;
    const Json& jr = b.at("rule");
    if (jr.at("type") == "copy") {
      rule.kind = GeneralizedPredictorDE::BlockRule::Kind::CopyPosition;
      rule.copy_pos = jr.at("position").get<std::size_t>();
    } else {
      rule.kind = GeneralizedPredictorDE::BlockRule::Kind::Table;
      rule.fallback = jr.at("fallback").get<std::uint64_t>();
      for (const Json& e : jr.at("entries"))
        rule.table[e.at("word").get<Word>()] =
            e.at("value").get<std::uint64_t>();
    }
    p.rules.push_back(std::move(rule));
  }
  p.validate();
  return p;
}

Json set_predictor_to_json(const SetValuedPredictor& p) {
  Json blocks = Json::array();
  for (const auto& b : p.blocks) {
    Json rules = Json::array();
    for (std::uint64_t l : b.ls) {
      auto it = p.rules.find({b.k, l});
      if (it == p.rules.end()) continue;
      Json entries = Json::array();
      for (const auto& [word, guesses] : it->second.table)
        entries.push_back(Json{{"word", word}, {"guesses", guesses}});
      rules.push_back(Json{{"l", l},
                           {"entries", entries},
                           {"fallback", it->second.fallback}});
    }
    blocks.push_back(Json{{"k", b.k}, {"ls", b.ls}, {"rules", rules}});
  }
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "set_predictor"},
              {"blocks", blocks}};
}

SetValuedPredictor set_predictor_from_json(const Json& j) {
  SetValuedPredictor p;
  for (const Json& b : j.at("blocks")) {
    SetValuedPredictor::Block block;
    block.k = b.at("k").get<std::uint64_t>();
    block.ls = b.at("ls").get<std::vector<std::uint64_t>>();
    p.blocks.push_back(block);
    for (const Json& r : b.at("rules")) {
      SetValuedPredictor::SetRule rule;
      rule.fallback = r.at("fallback").get<std::vector<std::uint64_t>>();
      for (const Json& e : r.at("entries"))
        rule.table[e.at("word").get<Word>()] =
            e.at("guesses").get<std::vector<std::uint64_t>>();
      p.rules[{block.k, r.at("l").get<std::uint64_t>()}] = std::move(rule);
    }
  }
  p.validate();
  return p;
}

Json slalom_to_json(const Slalom& s) {
  Json entries = Json::array();
  for (const auto& [n, allowed] : s)
    entries.push_back(Json{{"index", n}, {"allowed", allowed}});
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "slalom"},
              {"entries", entries}};
}

Slalom slalom_from_json(const Json& j) {
  Slalom s;
  for (const Json& e : j.at("entries"))
    s[e.at("index").get<std::uint64_t>()] =
        e.at("allowed").get<std::vector<std::uint64_t>>();
  return s;
}

Json linear_form_to_json(const LinearForm& f) {
  Json coeffs = Json::array();
  for (const Scalar& c : f.coeffs) coeffs.push_back(c.to_string());
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "linear_form"},
              {"field", f.field.to_string()},
              {"coeffs", coeffs}};
}

LinearForm linear_form_from_json(const Json& j) {
  LinearForm f;
  f.field = FieldDescriptor::parse(j.at("field").get<std::string>());
  for (const Json& c : j.at("coeffs"))
    f.coeffs.push_back(Scalar::parse(c.get<std::string>()));
  return f;
}

Json linear_predictor_to_json(const LinearPredictor& p) {
  Json forms = Json::array();
  for (const auto& [index, form] : p.forms)
    forms.push_back(Json{{"index", index}, {"form", linear_form_to_json(form)}});
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "linear_predictor"},
              {"field", p.field.to_string()},
              {"domain", p.domain},
              {"forms", forms}};
}

LinearPredictor linear_predictor_from_json(const Json& j) {
  LinearPredictor p;
  p.field = FieldDescriptor::parse(j.at("field").get<std::string>());
  p.domain = j.at("domain").get<std::vector<std::uint64_t>>();
  for (const Json& f : j.at("forms"))
    p.forms[f.at("index").get<std::uint64_t>()] =
        linear_form_from_json(f.at("form"));
  p.validate();
  return p;
}

Json fragment_to_json(const BilinearFragment& f) {
  Json rows = Json::array();
  for (const auto& row : f.entries) {
    Json jr = Json::array();
    for (const Scalar& s : row) jr.push_back(s.to_string());
    rows.push_back(jr);
  }
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "bilinear_fragment"},
              {"field", f.field.to_string()},
              {"dimension", f.dimension()},
              {"rows", rows}};
}

BilinearFragment fragment_from_json(const Json& j) {
  BilinearFragment f;
  f.field = FieldDescriptor::parse(j.at("field").get<std::string>());
  for (const Json& row : j.at("rows")) {
    std::vector<Scalar> r;
    for (const Json& s : row) r.push_back(Scalar::parse(s.get<std::string>()));
    f.entries.push_back(std::move(r));
  }
  f.validate();
  return f;
}

Json injections_to_json(const CoherentInjections& h) {
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "coherent_injections"},
              {"maps", h.maps}};
}

CoherentInjections injections_from_json(const Json& j) {
  CoherentInjections h;
  h.maps = j.at("maps").get<std::vector<std::vector<std::uint64_t>>>();
  h.validate();
  return h;
}

Json block_system_to_json(const SlalomBlockSystem& s) {
  Json options = Json::array();
  for (const auto& block : s.options) {
    Json jb = Json::array();
    for (const Word& o : block) jb.push_back(o);
    options.push_back(jb);
  }
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "slalom_block_system"},
              {"space", space_to_json(s.spec)},
              {"block_count", s.block_count},
              {"options", options}};
}

SlalomBlockSystem block_system_from_json(const Json& j) {
  SlalomBlockSystem s;
  s.spec = space_from_json(j.at("space"));
  s.block_count = j.at("block_count").get<std::size_t>();
  for (const Json& block : j.at("options")) {
    std::vector<Word> words;
    for (const Json& o : block) words.push_back(o.get<Word>());
    s.options.push_back(std::move(words));
  }
  s.validate();
  return s;
}

Json field_block_system_to_json(const FieldSlalomBlockSystem& s) {
  Json options = Json::array();
  for (const auto& block : s.options) {
    Json jb = Json::array();
    for (const FieldWord& o : block) {
      Json jo = Json::array();
      for (const Scalar& v : o) jo.push_back(v.to_string());
      jb.push_back(jo);
    }
    options.push_back(jb);
  }
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "field_slalom_block_system"},
              {"field", s.field.to_string()},
              {"block_count", s.block_count},
              {"options", options}};
}

FieldSlalomBlockSystem field_block_system_from_json(const Json& j) {
  FieldSlalomBlockSystem s;
  s.field = FieldDescriptor::parse(j.at("field").get<std::string>());
  s.block_count = j.at("block_count").get<std::size_t>();
  for (const Json& block : j.at("options")) {
    std::vector<FieldWord> words;
    for (const Json& o : block) {
      FieldWord w;
      for (const Json& v : o) w.push_back(Scalar::parse(v.get<std::string>()));
      words.push_back(std::move(w));
    }
    s.options.push_back(std::move(words));
  }
  s.validate();
  return s;
}

Json condition_to_json(const PxCondition& c) {
  Json promises = Json::array();
  for (const Word& f : c.promises) promises.push_back(f);
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "px_condition"},
              {"space", space_to_json(c.space)},
              {"d", c.d},
              {"tables", tables_to_json(c.tables)},
              {"promises", promises}};
}

PxCondition condition_from_json(const Json& j) {
  PxCondition c;
  c.space = space_from_json(j.at("space"));
  c.d = j.at("d").get<std::vector<std::uint64_t>>();
  c.tables = tables_from_json(j.at("tables"));
  for (const Json& f : j.at("promises")) c.promises.push_back(f.get<Word>());
  c.normalize();
  c.validate();
  return c;
}

Json luzin_family_to_json(const LuzinFamily& f) {
  Json sources = Json::array();
  for (const Word& s : f.sources) sources.push_back(s);
  Json generators = Json::array();
  for (const FieldWord& g : f.generators) {
    Json jg = Json::array();
    for (const Scalar& v : g) jg.push_back(v.to_string());
    generators.push_back(jg);
  }
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "luzin_family"},
              {"field", f.field.to_string()},
              {"horizon", f.horizon},
              {"sources", sources},
              {"generators", generators}};
}

LuzinFamily luzin_family_from_json(const Json& j) {
  LuzinFamily f;
  f.field = FieldDescriptor::parse(j.at("field").get<std::string>());
  f.horizon = j.at("horizon").get<std::uint64_t>();
  for (const Json& s : j.at("sources")) f.sources.push_back(s.get<Word>());
  for (const Json& g : j.at("generators")) {
    FieldWord w;
    for (const Json& v : g) w.push_back(Scalar::parse(v.get<std::string>()));
    f.generators.push_back(std::move(w));
  }
  return f;
}

std::string clamp_extend_params(const Predictor& base, const Word& x) {
  return Json{{"base", predictor_to_json(base)}, {"bounds", x}}.dump();
}

std::string combine_params(const Predictor& pi2, const Predictor& pi_prime) {
  return Json{{"pi2", predictor_to_json(pi2)},
              {"pi_prime", predictor_to_json(pi_prime)}}
      .dump();
}

std::string slalom_params(const SlalomBlockSystem& s) {
  return Json{{"system", block_system_to_json(s)}}.dump();
}

// --- builtin serializable rules -------------------------------------------

namespace {

struct BuiltinRuleRegistrar {
  BuiltinRuleRegistrar() {
    register_rule("clamp_extend", [](const std::string& params,
                                     const SpaceSpec&) {
      Json j = Json::parse(params);
      Predictor base = predictor_from_json(j.at("base"));
      Word x = j.at("bounds").get<Word>();
      return CompiledRule([base, x](std::uint64_t index, const Word& prefix) {
        return evaluate_predictor(base, index, clamp_word(prefix, x));
      });
    });
    register_rule("combine", [](const std::string& params, const SpaceSpec&) {
      Json j = Json::parse(params);
      Predictor pi2 = predictor_from_json(j.at("pi2"));
      Predictor pi_prime = predictor_from_json(j.at("pi_prime"));
      Predictor combined = combine_predictors(pi2, pi_prime);
      CompiledRule fn = std::get<RuleBacking>(combined.backing).fn;
      return fn;
    });
    register_rule("slalom", [](const std::string& params, const SpaceSpec&) {
      Json j = Json::parse(params);
      SlalomBlockSystem s = block_system_from_json(j.at("system"));
      Predictor built = predictor_from_slalom(s);
      CompiledRule fn = std::get<RuleBacking>(built.backing).fn;
      return fn;
    });
    register_rule("zero", [](const std::string&, const SpaceSpec&) {
      return CompiledRule(
          [](std::uint64_t, const Word&) { return std::uint64_t{0}; });
    });
    register_rule("copy_coordinate", [](const std::string& params,
                                        const SpaceSpec&) {
      Json j = Json::parse(params);
      const std::uint64_t coord = j.at("coordinate").get<std::uint64_t>();
      return CompiledRule([coord](std::uint64_t, const Word& prefix) {
        if (coord >= prefix.size())
          throw DomainError(ErrorCode::LengthMismatch,
                            "coordinate outside the prefix");
        return prefix[coord];
      });
    });
  }
};

const BuiltinRuleRegistrar kRegistrar{};

}  // namespace

}  // namespace evp
