// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UMV_LEARNING_AUGMENTED_HPP_
#define UMV_LEARNING_AUGMENTED_HPP_

#include <vector>

#include "umv/matroid.hpp"
#include "umv/online_adaptive.hpp"
#include "umv/uncertainty.hpp"

namespace umv {

/// Predicted weights, one per element, each inside its area.
struct WeightPrediction {
  Weights weights;
  ElementSet clamped;  // elements whose raw prediction lay outside the area
};

/// Moves v into the area: nearest piece, then its nearest closed endpoint,
/// else its other closed endpoint, else its midpoint.
Rational clamp_to_area(const UncertaintyArea& area, const Rational& v);
WeightPrediction make_weight_prediction(const std::vector<UncertaintyArea>& areas,
                                        const Weights& raw);

struct WeightPredictionResult {
  QuerySet q;
  ElementSet first_round;  // certificate computed from the predictions
  bool fell_back = false;  // had to query everything else
  ElementSet basis;        // an MWB verified by q
};

WeightPredictionResult run_weight_prediction(QueryEnvironment& env,
                                             const WeightPrediction& pred);

/// Greedy-by-id maximal independent subset of raw, extended greedily by id.
ElementSet sanitize_basis(const Matroid& m, const ElementSet& raw);

struct ErrorReport {
  long eta1 = 0;
  long eta2 = 0;
  std::size_t c_max = 0;
  /// Non-basis elements, keyed by the circuit they close.
  ElementSet correct_circuits;
  ElementSet incorrect_circuits;
  /// Basis elements lying on some correct circuit.
  ElementSet trusted;

  /// min{2(|Q*| + eta1) + eta2 * c_max, n}.
  long bound(std::size_t optimum, std::size_t n) const;
};

/// Fills everything except eta1. A circuit C_e is correct when w_e >= w_f
/// for every f in C_e - e and w_f <= w_g for every g outside span(B - f).
ErrorReport classify_prediction_circuits(const UncertainInstance& inst,
                                         const ElementSet& b_hat);
/// |Q'| - |Q*| under unit costs, where Q' is a minimum certificate of the
/// MWB chosen by the rule engine after contracting the trusted elements.
long compute_eta1(const UncertainInstance& inst, const ElementSet& b_hat);
ErrorReport error_report(const UncertainInstance& inst, const ElementSet& b_hat);

struct BasisPredictionResult {
  QuerySet q;
  ElementSet basis;      // the MWB that q verifies
  ElementSet fallback;   // non-basis elements whose whole circuit was queried
  std::vector<QueryBatch> batches;
};

/// Promise loop on b_hat; when a revealed circuit member outweighs the
/// non-basis element the whole circuit is queried instead.
BasisPredictionResult run_basis_prediction(QueryEnvironment& env,
                                           const ElementSet& b_hat);

}  // namespace umv

#endif  // UMV_LEARNING_AUGMENTED_HPP_
