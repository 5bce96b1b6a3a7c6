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

#ifndef UMV_ONLINE_ADAPTIVE_HPP_
#define UMV_ONLINE_ADAPTIVE_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "umv/certificate_check.hpp"
#include "umv/matroid.hpp"
#include "umv/uncertainty.hpp"

namespace umv {

/// Hides the weights of an instance. Areas, costs and the matroid are public;
/// a weight becomes known only through query(). Single owner, not shareable.
class QueryEnvironment {
 public:
  explicit QueryEnvironment(UncertainInstance inst);

  const Matroid& matroid() const { return inst_.matroid(); }
  std::size_t size() const { return inst_.size(); }
  const std::string& name(ElementId e) const { return inst_.name(e); }
  const UncertaintyArea& area(ElementId e) const { return inst_.area(e); }
  const Rational& cost(ElementId e) const { return inst_.cost(e); }

  /// Reveals w_e. Repeated queries are free and keep the first log entry.
  Rational query(ElementId e);
  void query_all(const ElementSet& s);

  bool is_queried(ElementId e) const { return queried_.contains(e); }
  const ElementSet& queried() const { return queried_; }
  /// Revealed weight; throws if e was never queried.
  const Rational& revealed(ElementId e) const;
  /// L_e(Q), U_e(Q) for the current query set.
  Limits limits(ElementId e) const;
  const Rational& spent() const { return spent_; }
  /// Every call to query(), in order, repeats included.
  const std::vector<ElementId>& access_log() const { return access_log_; }
  /// First-time queries in order.
  const std::vector<ElementId>& query_order() const { return query_order_; }
  /// Queried, or trivial so that its weight is public anyway.
  bool is_known(ElementId e) const {
    return is_queried(e) || inst_.area(e).is_trivial();
  }
  /// Weight of a known element; throws otherwise.
  const Rational& known(ElementId e) const;

  /// The public data of the instance with the given weights in place of the
  /// hidden ones (e.g. predictions).
  UncertainInstance hypothetical(Weights weights) const;

  /// Audit against the hidden weights: whether b is an MWB verified by the
  /// queries made so far. Reveals nothing to the caller's query state.
  bool verifies(const ElementSet& b) const;

 private:
  UncertainInstance inst_;
  ElementSet queried_;
  std::vector<std::optional<Rational>> revealed_;
  Rational spent_ = 0;
  std::vector<ElementId> access_log_;
  std::vector<ElementId> query_order_;
};

/// Raised when revealed weights show that the promised basis is not an MWB:
/// non-basis e is lighter than queried circuit member f.
class PromiseViolation : public std::runtime_error {
 public:
  PromiseViolation(ElementId e, ElementId f, Rational w_e, Rational w_f,
                   const std::string& what)
      : std::runtime_error(what), e(e), f(f), w_e(std::move(w_e)),
        w_f(std::move(w_f)) {}
  ElementId e;
  ElementId f;
  Rational w_e;
  Rational w_f;
};

struct QueryBatch {
  ElementId element;  // the non-basis element whose circuit was handled
  std::vector<ElementId> queried;
};

struct OnlineTrace {
  std::vector<QueryBatch> batches;
  ElementSet queried;
};

struct OnlineResult {
  QuerySet q;
  OnlineTrace trace;
};

/// Handles each non-basis element e in id order: while some f on C_e - e has
/// U_f(Q) > L_e(Q), query the unknown circuit member with the largest U(Q)
/// above L_e(Q) (ties by id), then e. Trivial elements are never queried.
OnlineResult run_promise(QueryEnvironment& env, const ElementSet& b);

struct CompetitiveRow {
  std::size_t queries = 0;
  std::size_t optimum = 0;
  Rational ratio;
};

/// Unit-cost run of run_promise on the basis from run_algorithm1, against
/// the minimum certificate size. Throws InvariantFailure if the ratio
/// exceeds 2 or the result does not verify the basis.
CompetitiveRow competitive_report(const UncertainInstance& inst);
std::vector<CompetitiveRow> competitive_report(
    const std::vector<UncertainInstance>& runs);

}  // namespace umv

#endif  // UMV_ONLINE_ADAPTIVE_HPP_
