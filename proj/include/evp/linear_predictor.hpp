#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "evp/linalg.hpp"
#include "evp/report.hpp"

namespace evp {

/// A predictor whose every rule is a homogeneous linear functional over a
/// fixed field; the form at index m has arity m.
struct LinearPredictor {
  FieldDescriptor field;
  std::vector<std::uint64_t> domain;        // strictly increasing
  std::map<std::uint64_t, LinearForm> forms;

  void validate() const;
};

/// Hit at m iff the form at m applied to g restricted to m equals g(m).
PredictionReport check_prediction_linear(const LinearPredictor& p,
                                         const FieldWord& g,
                                         std::uint64_t grace);

}  // namespace evp
