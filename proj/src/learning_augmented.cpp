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

#include "umv/learning_augmented.hpp"

#include <algorithm>
#include <optional>

#include "umv/basis_selection.hpp"
#include "umv/certificate_check.hpp"
#include "umv/certificate_synthesis.hpp"
#include "umv/errors.hpp"

namespace umv {
namespace {

Rational distance(const IntervalPiece& p, const Rational& v) {
  if (v < p.lo) return p.lo - v;
  if (v > p.hi) return v - p.hi;
  return 0;
}

}  // namespace

Rational clamp_to_area(const UncertaintyArea& area, const Rational& v) {
  if (area.contains(v)) return v;
  const IntervalPiece* best = nullptr;
  Rational best_d;
  for (const auto& p : area.pieces()) {
    const Rational d = distance(p, v);
    if (best == nullptr || d < best_d) {
      best = &p;
      best_d = d;
    }
  }
  const IntervalPiece& p = *best;
  const bool low_nearer = v - p.lo <= p.hi - v;
  const bool low_ok = !p.lo_open;
  const bool high_ok = !p.hi_open;
  if (low_nearer ? low_ok : high_ok) return low_nearer ? p.lo : p.hi;
  if (low_nearer ? high_ok : low_ok) return low_nearer ? p.hi : p.lo;
  return midpoint(p.lo, p.hi);
}

WeightPrediction make_weight_prediction(const std::vector<UncertaintyArea>& areas,
                                        const Weights& raw) {
  if (raw.size() != areas.size()) {
    throw DomainError("prediction does not cover the ground set");
  }
  WeightPrediction out{Weights(raw.size()), ElementSet(raw.size())};
  for (std::size_t i = 0; i < raw.size(); ++i) {
    out.weights[i] = clamp_to_area(areas[i], raw[i]);
    if (out.weights[i] != raw[i]) {
      out.clamped.insert(ElementId(static_cast<std::uint32_t>(i)));
    }
  }
  return out;
}

WeightPredictionResult run_weight_prediction(QueryEnvironment& env,
                                             const WeightPrediction& pred) {
  if (pred.weights.size() != env.size()) {
    throw DomainError("prediction does not cover the ground set");
  }
  const Algorithm2Result planned = algorithm2(env.hypothetical(pred.weights));
  WeightPredictionResult out;
  out.first_round = planned.certificate.elements;
  env.query_all(out.first_round);

  const MatroidView m(env.matroid());
  auto solved = [&]() {
    Weights lower(env.size());
    Weights upper(env.size());
    for (std::size_t i = 0; i < env.size(); ++i) {
      const auto lim = env.limits(ElementId(static_cast<std::uint32_t>(i)));
      lower[i] = lim.lower;
      upper[i] = lim.upper;
    }
    return find_verified_basis(m, lower, upper);
  };
  auto basis = solved();
  if (!basis) {
    out.fell_back = true;
    env.query_all(ElementSet::full(env.size()));
    basis = solved();
    if (!basis) {
      throw InvariantFailure("fully revealed instance has no verified basis");
    }
  }
  out.basis = *basis;
  out.q = {env.queried(), env.spent()};
  return out;
}

ElementSet sanitize_basis(const Matroid& m, const ElementSet& raw) {
  const MatroidView view(m);
  if (raw.universe() != m.size()) {
    throw DomainError("predicted basis over a different ground set");
  }
  ElementSet b(m.size());
  for (const auto e : raw) {
    if (is_independent(view, b.with(e))) b.insert(e);
  }
  for (const auto e : ElementSet::full(m.size())) {
    if (!b.contains(e) && is_independent(view, b.with(e))) b.insert(e);
  }
  return b;
}

long ErrorReport::bound(std::size_t optimum, std::size_t n) const {
  const long value = 2 * (static_cast<long>(optimum) + eta1) +
                     eta2 * static_cast<long>(c_max);
  return std::min(value, static_cast<long>(n));
}

ErrorReport classify_prediction_circuits(const UncertainInstance& inst,
                                         const ElementSet& b_hat) {
  const MatroidView m(inst.matroid());
  if (b_hat.universe() != inst.size() || !is_basis(m, b_hat)) {
    throw ContractViolation("predicted set is not a basis");
  }
  const std::size_t n = inst.size();
  ErrorReport r;
  r.correct_circuits = ElementSet(n);
  r.incorrect_circuits = ElementSet(n);
  r.trusted = ElementSet(n);
  for (const auto e : b_hat.complement()) {
    const ElementSet circuit = fundamental_circuit(m, b_hat, e);
    r.c_max = std::max(r.c_max, circuit.size());
    bool correct = true;
    for (const auto f : circuit.without(e)) {
      if (inst.weight(e) < inst.weight(f)) {
        correct = false;
        break;
      }
      for (const auto g : cocircuit_complement(m, b_hat, f)) {
        if (inst.weight(f) > inst.weight(g)) {
          correct = false;
          break;
        }
      }
      if (!correct) break;
    }
    if (correct) {
      r.correct_circuits.insert(e);
      r.trusted |= circuit.without(e);
    } else {
      r.incorrect_circuits.insert(e);
    }
  }
  r.eta2 = static_cast<long>(r.incorrect_circuits.size());
  return r;
}

long compute_eta1(const UncertainInstance& inst, const ElementSet& b_hat) {
  const UncertainInstance unit = inst.with_unit_costs();
  const ErrorReport r = classify_prediction_circuits(unit, b_hat);
  const MinorState seed{ElementSet(inst.size()), r.trusted};
  const ElementSet b_star = run_algorithm1(unit, seed).basis;
  const auto with_trust = certify_given_basis(unit, b_star).query;
  const auto best = algorithm2(unit).certificate;
  const long eta1 = static_cast<long>(with_trust.elements.size()) -
                    static_cast<long>(best.elements.size());
  if (eta1 < 0) {
    throw InvariantFailure("certificate cheaper than the minimum certificate");
  }
  return eta1;
}

ErrorReport error_report(const UncertainInstance& inst,
                         const ElementSet& b_hat) {
  ErrorReport r = classify_prediction_circuits(inst, b_hat);
  r.eta1 = compute_eta1(inst, b_hat);
  return r;
}

BasisPredictionResult run_basis_prediction(QueryEnvironment& env,
                                           const ElementSet& b_hat) {
  const MatroidView m(env.matroid());
  if (b_hat.universe() != env.size() || !is_basis(m, b_hat)) {
    throw ContractViolation("predicted set is not a basis");
  }
  const std::size_t n = env.size();
  BasisPredictionResult out;
  out.fallback = ElementSet(n);
  ElementSet on_fallback(n);
  for (const auto e : b_hat.complement()) {
    const ElementSet circuit = fundamental_circuit(m, b_hat, e);
    QueryBatch batch{e, {}};
    auto record = [&](ElementId x) {
      if (env.is_known(x)) return;
      env.query(x);
      batch.queried.push_back(x);
    };
    auto blocked = [&]() {
      const Rational l_e = env.limits(e).lower;
      for (const auto f : circuit.without(e)) {
        if (env.limits(f).upper > l_e) return true;
      }
      return false;
    };
    while (blocked()) {
      const Rational l_e = env.limits(e).lower;
      std::optional<ElementId> pick;
      for (const auto g : circuit.without(e)) {
        if (env.is_known(g)) continue;
        const Rational& u = env.limits(g).upper;
        if (u <= l_e) continue;
        if (!pick || u > env.limits(*pick).upper) pick = g;
      }
      if (pick) record(*pick);
      record(e);
      const bool caught = std::any_of(
          circuit.begin(), circuit.end(), [&](ElementId f) {
            return env.is_known(f) && env.known(e) < env.known(f);
          });
      if (caught) {
        for (const auto f : circuit) record(f);
        out.fallback.insert(e);
        on_fallback |= circuit;
        break;
      }
    }
    if (!batch.queried.empty()) out.batches.push_back(std::move(batch));
  }

  // Delete non-basis elements that never fell back, contract basis elements
  // off every fallback circuit, and finish greedily on the fully revealed
  // minor.
  const ElementSet deleted = b_hat.complement() - out.fallback;
  const ElementSet contracted = b_hat - on_fallback;
  const MatroidView rest = minor(m, MinorState{deleted, contracted});
  Weights revealed(n);
  for (const auto x : rest.ground()) revealed[x.index()] = env.known(x);
  out.basis = contracted | greedy_mwb(rest, revealed);
  out.q = {env.queried(), env.spent()};
  if (!env.verifies(out.basis)) {
    throw InvariantFailure("realized basis is not verified by the queries");
  }
  return out;
}

}  // namespace umv
