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

#ifndef UMV_UNCERTAINTY_HPP_
#define UMV_UNCERTAINTY_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "umv/element_set.hpp"
#include "umv/matroid.hpp"
#include "umv/rational.hpp"

namespace umv {

struct IntervalPiece {
  Rational lo;
  Rational hi;
  bool lo_open = false;
  bool hi_open = false;

  static IntervalPiece point(const Rational& v) { return {v, v, false, false}; }
  bool is_point() const { return lo == hi; }
  bool contains(const Rational& v) const;
  friend bool operator==(const IntervalPiece&, const IntervalPiece&) = default;
};

/// "[1,4]", "(0,1]", "{3}" ...; a brace set may list several points.
std::string to_string(const IntervalPiece& piece);

/// A finite union of bounded intervals, kept sorted with touching pieces
/// merged.
class UncertaintyArea {
 public:
  UncertaintyArea() = default;
  explicit UncertaintyArea(std::vector<IntervalPiece> pieces);

  static UncertaintyArea point(const Rational& v);
  static UncertaintyArea closed(const Rational& lo, const Rational& hi);
  static UncertaintyArea open(const Rational& lo, const Rational& hi);
  /// Parses a list of piece strings; "{a,b}" expands to singletons.
  static UncertaintyArea parse(const std::vector<std::string>& pieces);

  const std::vector<IntervalPiece>& pieces() const { return pieces_; }
  const Rational& lower() const { return pieces_.front().lo; }
  const Rational& upper() const { return pieces_.back().hi; }
  bool is_trivial() const {
    return pieces_.size() == 1 && pieces_.front().is_point();
  }
  bool contains(const Rational& v) const;
  /// Canonical piece strings; runs of singletons are printed as one "{...}".
  std::vector<std::string> to_strings() const;

  friend bool operator==(const UncertaintyArea&, const UncertaintyArea&) = default;

 private:
  std::vector<IntervalPiece> pieces_;
};

bool contains(const UncertaintyArea& area, const Rational& v);

struct Limits {
  Rational lower;
  Rational upper;
};

class UncertainInstance;

struct QuerySet {
  ElementSet elements;
  Rational total_cost;
};

QuerySet make_query_set(const UncertainInstance& inst, const ElementSet& q);

/// A matroid whose element weights are hidden inside uncertainty areas, with
/// per-element query costs. Copies share the matroid.
class UncertainInstance {
 public:
  UncertainInstance(Matroid matroid, std::vector<std::string> names,
                    std::vector<UncertaintyArea> areas, Weights weights,
                    Weights costs);

  const Matroid& matroid() const { return *matroid_; }
  std::size_t size() const { return names_.size(); }

  const std::string& name(ElementId e) const;
  const std::vector<std::string>& names() const { return names_; }
  std::optional<ElementId> find(std::string_view name) const;
  ElementId id(std::string_view name) const;
  ElementSet set_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(const ElementSet& s) const;

  const UncertaintyArea& area(ElementId e) const;
  const Rational& lower(ElementId e) const { return area(e).lower(); }
  const Rational& upper(ElementId e) const { return area(e).upper(); }
  const Rational& weight(ElementId e) const;
  const Rational& cost(ElementId e) const;
  const std::vector<UncertaintyArea>& areas() const { return areas_; }
  const Weights& weights() const { return weights_; }
  const Weights& costs() const { return costs_; }

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet all() const { return ElementSet::full(size()); }

  /// Same matroid and areas, other hidden weights (validated).
  UncertainInstance with_weights(Weights weights) const;
  UncertainInstance with_costs(Weights costs) const;
  UncertainInstance with_unit_costs() const;
  /// Queried elements become trivial areas at their true weight.
  UncertainInstance reveal(const ElementSet& queried) const;

 private:
  UncertainInstance(std::shared_ptr<const Matroid> matroid,
                    std::vector<std::string> names,
                    std::vector<UncertaintyArea> areas, Weights weights,
                    Weights costs);
  void validate() const;
  void check(ElementId e) const;

  std::shared_ptr<const Matroid> matroid_;
  std::vector<std::string> names_;
  std::vector<UncertaintyArea> areas_;
  Weights weights_;
  Weights costs_;
};

const Rational& lower_limit(const UncertainInstance& inst, ElementId e);
const Rational& upper_limit(const UncertainInstance& inst, ElementId e);
bool is_trivial(const UncertainInstance& inst, ElementId e);
bool is_extreme_low(const UncertainInstance& inst, ElementId e);
bool is_extreme_high(const UncertainInstance& inst, ElementId e);

/// (w_e, w_e) when e is queried, (L_e, U_e) otherwise.
Limits limits_after(const UncertainInstance& inst, const ElementSet& queried,
                    ElementId e);
Limits limits_after(const UncertainInstance& inst, const QuerySet& q,
                    ElementId e);

}  // namespace umv

#endif  // UMV_UNCERTAINTY_HPP_
