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

#ifndef UMV_CERTIFICATE_CHECK_HPP_
#define UMV_CERTIFICATE_CHECK_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "umv/matroid.hpp"
#include "umv/uncertainty.hpp"

namespace umv {

/// A weight assignment consistent with Q under which `cheaper_basis`
/// (= B - e + f) weighs strictly less than B.
struct Witness {
  ElementId e;  // basis element
  ElementId f;  // replacement
  Weights assignment;
  ElementSet cheaper_basis;
};

struct Verdict {
  bool valid = false;
  std::optional<Witness> witness;
};

/// Pairs (e, f) with e in b and f outside span(b - e), f != e.
using CutPairs = std::vector<std::pair<ElementId, ElementId>>;
CutPairs cut_pairs(const MatroidView& m, const ElementSet& b);

/// Whether b is an MWB under the true weights.
bool is_mwb(const UncertainInstance& inst, const ElementSet& b);

Verdict verifies_cuts(const UncertainInstance& inst, const QuerySet& q,
                      const ElementSet& b);
Verdict verifies_circuits(const UncertainInstance& inst, const QuerySet& q,
                          const ElementSet& b);
Verdict verifies_cuts(const UncertainInstance& inst, const ElementSet& q,
                      const ElementSet& b);
Verdict verifies_circuits(const UncertainInstance& inst, const ElementSet& q,
                          const ElementSet& b);

/// Cut condition on precomputed pairs: upper[e] <= lower[f] for every pair.
bool cut_condition_holds(const CutPairs& pairs, const Weights& lower,
                         const Weights& upper);

/// A basis b of m with upper[e] <= lower[f] across every cut pair of b, if
/// one exists. `lower` and `upper` are per-element limits.
std::optional<ElementSet> find_verified_basis(const MatroidView& m,
                                              const Weights& lower,
                                              const Weights& upper);

/// find_verified_basis on the limits L_e(Q), U_e(Q).
std::optional<ElementSet> find_verified_basis(const UncertainInstance& inst,
                                              const ElementSet& queried);

enum class ExchangeKind { kUpper, kLower, kTrivial };

struct Rewrite {
  QuerySet q;
  ElementSet basis;
};

/// Certificate exchange. kUpper: e in b, e' outside, U_e = U_e' = w_e = w_e',
/// e on C_e'; gives (Q - e' + e, b - e + e'). kLower: e outside b, e' in b,
/// L_e = L_e' = w_e = w_e', e' on C_e; gives (Q - e' + e, b + e - e').
/// kTrivial: e in b, e' outside, w_e = w_e', b - e + e' independent, each of
/// e, e' trivial or queried; gives (Q, b - e + e').
Rewrite exchange_rewrite(const UncertainInstance& inst, const QuerySet& q,
                         const ElementSet& b, ElementId e, ElementId e_prime,
                         ExchangeKind kind);

}  // namespace umv

#endif  // UMV_CERTIFICATE_CHECK_HPP_
