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

#include "umv/online_adaptive.hpp"

#include "umv/basis_selection.hpp"
#include "umv/certificate_check.hpp"
#include "umv/certificate_synthesis.hpp"
#include "umv/errors.hpp"

namespace umv {

QueryEnvironment::QueryEnvironment(UncertainInstance inst)
    : inst_(std::move(inst)),
      queried_(inst_.size()),
      revealed_(inst_.size()) {}

Rational QueryEnvironment::query(ElementId e) {
  const Rational& w = inst_.weight(e);
  access_log_.push_back(e);
  if (!queried_.contains(e)) {
    queried_.insert(e);
    revealed_[e.index()] = w;
    spent_ += inst_.cost(e);
    query_order_.push_back(e);
  }
  return w;
}

void QueryEnvironment::query_all(const ElementSet& s) {
  for (const auto e : s) query(e);
}

const Rational& QueryEnvironment::revealed(ElementId e) const {
  if (e.index() >= revealed_.size() || !revealed_[e.index()]) {
    throw ContractViolation("weight of \"" + inst_.name(e) +
                            "\" has not been revealed");
  }
  return *revealed_[e.index()];
}

const Rational& QueryEnvironment::known(ElementId e) const {
  if (is_queried(e)) return revealed(e);
  if (inst_.area(e).is_trivial()) return inst_.lower(e);
  throw ContractViolation("weight of \"" + inst_.name(e) + "\" is not known");
}

Limits QueryEnvironment::limits(ElementId e) const {
  if (is_queried(e)) return {revealed(e), revealed(e)};
  return {inst_.lower(e), inst_.upper(e)};
}

UncertainInstance QueryEnvironment::hypothetical(Weights weights) const {
  return inst_.with_weights(std::move(weights));
}

bool QueryEnvironment::verifies(const ElementSet& b) const {
  return is_mwb(inst_, b) && verifies_cuts(inst_, queried_, b).valid;
}

OnlineResult run_promise(QueryEnvironment& env, const ElementSet& b) {
  const MatroidView m(env.matroid());
  if (b.universe() != env.size() || !is_basis(m, b)) {
    throw ContractViolation("promised set is not a basis");
  }
  OnlineTrace trace{{}, ElementSet(env.size())};
  for (const auto e : b.complement()) {
    const ElementSet circuit = fundamental_circuit(m, b, e);
    QueryBatch batch{e, {}};
    auto record = [&](ElementId x) {
      if (env.is_known(x)) return;
      env.query(x);
      batch.queried.push_back(x);
    };
    while (true) {
      const Rational l_e = env.limits(e).lower;
      std::optional<ElementId> blocking;
      for (const auto f : circuit.without(e)) {
        if (env.limits(f).upper > l_e) {
          blocking = f;
          break;
        }
      }
      if (!blocking) break;
      std::optional<ElementId> pick;
      for (const auto g : circuit.without(e)) {
        if (env.is_known(g)) continue;
        const Rational& u = env.limits(g).upper;
        if (u <= l_e) continue;
        if (!pick || u > env.limits(*pick).upper) pick = g;
      }
      const bool progress = pick.has_value() || !env.is_known(e);
      if (!progress) {
        const auto f = *blocking;
        throw PromiseViolation(
            e, f, env.known(e), env.known(f),
            "promise broken: \"" + env.name(e) + "\" (" +
                to_string(env.known(e)) + ") is lighter than \"" +
                env.name(f) + "\" (" + to_string(env.known(f)) +
                ") on its circuit");
      }
      if (pick) record(*pick);
      record(e);
    }
    if (!batch.queried.empty()) trace.batches.push_back(std::move(batch));
  }
  trace.queried = env.queried();
  QuerySet q{env.queried(), env.spent()};
  return {std::move(q), std::move(trace)};
}

CompetitiveRow competitive_report(const UncertainInstance& inst) {
  const UncertainInstance unit = inst.with_unit_costs();
  const ElementSet b = run_algorithm1(unit).basis;
  QueryEnvironment env(unit);
  const OnlineResult run = run_promise(env, b);
  if (!verifies_cuts(unit, run.q, b).valid) {
    throw InvariantFailure("online query set does not verify the basis");
  }
  const Algorithm2Result best = algorithm2(unit);
  CompetitiveRow row;
  row.queries = run.q.elements.size();
  row.optimum = best.certificate.elements.size();
  if (row.optimum == 0) {
    if (row.queries > 0) {
      throw InvariantFailure("online queried elements against an empty optimum");
    }
    row.ratio = 1;
  } else {
    row.ratio = Rational(row.queries, row.optimum);
    row.ratio.canonicalize();
  }
  if (row.ratio > 2) {
    throw InvariantFailure("online ratio " + to_string(row.ratio) +
                           " exceeds 2");
  }
  return row;
}

std::vector<CompetitiveRow> competitive_report(
    const std::vector<UncertainInstance>& runs) {
  std::vector<CompetitiveRow> rows;
  rows.reserve(runs.size());
  for (const auto& inst : runs) rows.push_back(competitive_report(inst));
  return rows;
}

}  // namespace umv
