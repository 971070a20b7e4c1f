#pragma once

#include <string>

#include "evp/diagram.hpp"
#include "evp/generalized.hpp"
#include "evp/gross.hpp"
#include "evp/linear_predictor.hpp"
#include "evp/luzin.hpp"
#include "evp/poset.hpp"
#include "evp/predictor.hpp"
#include "evp/transforms.hpp"

#include "json.hpp"

namespace evp {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Field names are part of the wire format and documented in docs/formats.md;
// sets and tables serialize as sorted arrays so that serialize/deserialize
// round-trips are byte-stable.

Json space_to_json(const SpaceSpec& s);
SpaceSpec space_from_json(const Json& j);

Json word_to_json(const Word& w);
Word word_from_json(const Json& j);

Json field_word_to_json(const FieldWord& w);
FieldWord field_word_from_json(const Json& j);

Json predictor_to_json(const Predictor& p);
Predictor predictor_from_json(const Json& j);

Json report_to_json(const PredictionReport& r);
PredictionReport report_from_json(const Json& j);

Json de_predictor_to_json(const GeneralizedPredictorDE& p);
GeneralizedPredictorDE de_predictor_from_json(const Json& j);

Json set_predictor_to_json(const SetValuedPredictor& p);
SetValuedPredictor set_predictor_from_json(const Json& j);

Json slalom_to_json(const Slalom& s);
Slalom slalom_from_json(const Json& j);

Json linear_form_to_json(const LinearForm& f);
LinearForm linear_form_from_json(const Json& j);

Json linear_predictor_to_json(const LinearPredictor& p);
LinearPredictor linear_predictor_from_json(const Json& j);

Json fragment_to_json(const BilinearFragment& f);
BilinearFragment fragment_from_json(const Json& j);

Json injections_to_json(const CoherentInjections& h);
CoherentInjections injections_from_json(const Json& j);

Json block_system_to_json(const SlalomBlockSystem& s);
SlalomBlockSystem block_system_from_json(const Json& j);

Json field_block_system_to_json(const FieldSlalomBlockSystem& s);
FieldSlalomBlockSystem field_block_system_from_json(const Json& j);

Json condition_to_json(const PxCondition& c);
PxCondition condition_from_json(const Json& j);

Json luzin_family_to_json(const LuzinFamily& f);
LuzinFamily luzin_family_from_json(const Json& j);

// parameter blobs for the serializable rule catalog
std::string clamp_extend_params(const Predictor& base, const Word& x);
std::string combine_params(const Predictor& pi2, const Predictor& pi_prime);
std::string slalom_params(const SlalomBlockSystem& s);

/// Canonical text form: two-space indent, sorted keys, trailing newline.
std::string dump_canonical(const Json& j);

}  // namespace evp
