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

#include "umv/uncertainty.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "umv/errors.hpp"

namespace umv {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

Rational parse_bound(std::string_view text, std::string_view piece) {
  std::string lowered(trim(text));
  for (auto& c : lowered) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (lowered.find("inf") != std::string::npos) {
    throw DomainError("unbounded interval \"" + std::string(piece) + "\"");
  }
  try {
    return parse_rational(trim(text));
  } catch (const std::invalid_argument&) {
    throw DomainError("bad interval bound \"" + std::string(trim(text)) +
                      "\" in \"" + std::string(piece) +
                      "\" (bounded exact rationals only)");
  }
}

void validate_piece(const IntervalPiece& p) {
  if (p.lo > p.hi) {
    throw DomainError("interval lower bound " + to_string(p.lo) +
                      " exceeds upper bound " + to_string(p.hi));
  }
  if (p.lo == p.hi && (p.lo_open || p.hi_open)) {
    throw DomainError("empty interval at " + to_string(p.lo));
  }
}

// Whether q (with q.lo >= p.lo) overlaps or touches p so that p ∪ q is one
// interval.
bool joins(const IntervalPiece& p, const IntervalPiece& q) {
  if (q.lo < p.hi) return true;
  return q.lo == p.hi && !(p.hi_open && q.lo_open);
}

std::vector<IntervalPiece> parse_piece(std::string_view raw) {
  const std::string_view s = trim(raw);
  if (s.size() < 2) throw DomainError("bad interval \"" + std::string(s) + "\"");
  const char open = s.front();
  const char close = s.back();
  const std::string_view body = s.substr(1, s.size() - 2);
  if (open == '{' && close == '}') {
    std::vector<IntervalPiece> out;
    std::size_t start = 0;
    while (start <= body.size()) {
      const auto comma = body.find(',', start);
      const auto end = comma == std::string_view::npos ? body.size() : comma;
      out.push_back(IntervalPiece::point(parse_bound(body.substr(start, end - start), s)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return out;
  }
  if ((open != '[' && open != '(') || (close != ']' && close != ')')) {
    throw DomainError("bad interval \"" + std::string(s) + "\"");
  }
  const auto comma = body.find(',');
  if (comma == std::string_view::npos ||
      body.find(',', comma + 1) != std::string_view::npos) {
    throw DomainError("interval \"" + std::string(s) + "\" needs two bounds");
  }
  IntervalPiece p{parse_bound(body.substr(0, comma), s),
                  parse_bound(body.substr(comma + 1), s), open == '(',
                  close == ')'};
  validate_piece(p);
  return {p};
}

std::string point_set(const std::vector<Rational>& points) {
  std::string out = "{";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(points[i]);
  }
  return out + "}";
}

}  // namespace

bool IntervalPiece::contains(const Rational& v) const {
  const bool above = lo_open ? v > lo : v >= lo;
  const bool below = hi_open ? v < hi : v <= hi;
  return above && below;
}

std::string to_string(const IntervalPiece& piece) {
  if (piece.is_point()) return "{" + to_string(piece.lo) + "}";
  return std::string(piece.lo_open ? "(" : "[") + to_string(piece.lo) + "," +
         to_string(piece.hi) + (piece.hi_open ? ")" : "]");
}

UncertaintyArea::UncertaintyArea(std::vector<IntervalPiece> pieces) {
  if (pieces.empty()) throw DomainError("uncertainty area has no pieces");
  for (const auto& p : pieces) validate_piece(p);
  std::sort(pieces.begin(), pieces.end(),
            [](const IntervalPiece& a, const IntervalPiece& b) {
              if (a.lo != b.lo) return a.lo < b.lo;
              return !a.lo_open && b.lo_open;
            });
  for (auto& p : pieces) {
    if (!pieces_.empty() && joins(pieces_.back(), p)) {
      auto& last = pieces_.back();
      if (p.hi > last.hi) {
        last.hi = p.hi;
        last.hi_open = p.hi_open;
      } else if (p.hi == last.hi) {
        last.hi_open = last.hi_open && p.hi_open;
      }
    } else {
      pieces_.push_back(std::move(p));
    }
  }
}

UncertaintyArea UncertaintyArea::point(const Rational& v) {
  return UncertaintyArea({IntervalPiece::point(v)});
}

UncertaintyArea UncertaintyArea::closed(const Rational& lo, const Rational& hi) {
  return UncertaintyArea({IntervalPiece{lo, hi, false, false}});
}

UncertaintyArea UncertaintyArea::open(const Rational& lo, const Rational& hi) {
  return UncertaintyArea({IntervalPiece{lo, hi, true, true}});
}

UncertaintyArea UncertaintyArea::parse(const std::vector<std::string>& pieces) {
  std::vector<IntervalPiece> all;
  for (const auto& text : pieces) {
    auto parsed = parse_piece(text);
    all.insert(all.end(), parsed.begin(), parsed.end());
  }
  return UncertaintyArea(std::move(all));
}

bool UncertaintyArea::contains(const Rational& v) const {
  return std::any_of(pieces_.begin(), pieces_.end(),
                     [&](const IntervalPiece& p) { return p.contains(v); });
}

std::vector<std::string> UncertaintyArea::to_strings() const {
  std::vector<std::string> out;
  std::vector<Rational> points;
  for (const auto& p : pieces_) {
    if (p.is_point()) {
      points.push_back(p.lo);
      continue;
    }
    if (!points.empty()) {
      out.push_back(point_set(points));
      points.clear();
    }
    out.push_back(to_string(p));
  }
  if (!points.empty()) out.push_back(point_set(points));
  return out;
}

bool contains(const UncertaintyArea& area, const Rational& v) {
  return area.contains(v);
}

QuerySet make_query_set(const UncertainInstance& inst, const ElementSet& q) {
  if (q.universe() != inst.size()) {
    throw DomainError("query set over a different ground set");
  }
  return {q, total_weight(q, inst.costs())};
}

UncertainInstance::UncertainInstance(Matroid matroid,
                                     std::vector<std::string> names,
                                     std::vector<UncertaintyArea> areas,
                                     Weights weights, Weights costs)
    : UncertainInstance(std::make_shared<const Matroid>(std::move(matroid)),
                        std::move(names), std::move(areas), std::move(weights),
                        std::move(costs)) {}

UncertainInstance::UncertainInstance(std::shared_ptr<const Matroid> matroid,
                                     std::vector<std::string> names,
                                     std::vector<UncertaintyArea> areas,
                                     Weights weights, Weights costs)
    : matroid_(std::move(matroid)),
      names_(std::move(names)),
      areas_(std::move(areas)),
      weights_(std::move(weights)),
      costs_(std::move(costs)) {
  validate();
}

void UncertainInstance::validate() const {
  const std::size_t n = matroid_->size();
  if (names_.size() != n || areas_.size() != n || weights_.size() != n ||
      costs_.size() != n) {
    throw DomainError("per-element data does not cover the ground set");
  }
  std::set<std::string_view> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (names_[i].empty()) throw DomainError("empty element id");
    if (!seen.insert(names_[i]).second) {
      throw DomainError("duplicate element id \"" + names_[i] + "\"");
    }
    if (!areas_[i].contains(weights_[i])) {
      throw DomainError("weight " + to_string(weights_[i]) +
                        " not contained in area of \"" + names_[i] + "\"");
    }
    if (costs_[i] < 0) {
      throw DomainError("negative cost for \"" + names_[i] + "\"");
    }
  }
}

void UncertainInstance::check(ElementId e) const {
  if (e.index() >= names_.size()) {
    throw DomainError("unknown element id " + std::to_string(e.value));
  }
}

const std::string& UncertainInstance::name(ElementId e) const {
  check(e);
  return names_[e.index()];
}

std::optional<ElementId> UncertainInstance::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return ElementId(static_cast<std::uint32_t>(i));
  }
  return std::nullopt;
}

ElementId UncertainInstance::id(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw DomainError("unknown element \"" + std::string(name) + "\"");
}

ElementSet UncertainInstance::set_of(const std::vector<std::string>& names) const {
  ElementSet s(size());
  for (const auto& n : names) s.insert(id(n));
  return s;
}

std::vector<std::string> UncertainInstance::names_of(const ElementSet& s) const {
  std::vector<std::string> out;
  for (const auto e : s) out.push_back(name(e));
  return out;
}

const UncertaintyArea& UncertainInstance::area(ElementId e) const {
  check(e);
  return areas_[e.index()];
}

const Rational& UncertainInstance::weight(ElementId e) const {
  check(e);
  return weights_[e.index()];
}

const Rational& UncertainInstance::cost(ElementId e) const {
  check(e);
  return costs_[e.index()];
}

UncertainInstance UncertainInstance::with_weights(Weights weights) const {
  return UncertainInstance(matroid_, names_, areas_, std::move(weights), costs_);
}

UncertainInstance UncertainInstance::with_costs(Weights costs) const {
  return UncertainInstance(matroid_, names_, areas_, weights_, std::move(costs));
}

UncertainInstance UncertainInstance::with_unit_costs() const {
  return with_costs(Weights(size(), Rational(1)));
}

UncertainInstance UncertainInstance::reveal(const ElementSet& queried) const {
  auto areas = areas_;
  for (const auto e : queried) {
    areas[e.index()] = UncertaintyArea::point(weights_[e.index()]);
  }
  return UncertainInstance(matroid_, names_, std::move(areas), weights_, costs_);
}

const Rational& lower_limit(const UncertainInstance& inst, ElementId e) {
  return inst.lower(e);
}

const Rational& upper_limit(const UncertainInstance& inst, ElementId e) {
  return inst.upper(e);
}

bool is_trivial(const UncertainInstance& inst, ElementId e) {
  return inst.area(e).is_trivial();
}

bool is_extreme_low(const UncertainInstance& inst, ElementId e) {
  return inst.weight(e) == inst.lower(e);
}

bool is_extreme_high(const UncertainInstance& inst, ElementId e) {
  return inst.weight(e) == inst.upper(e);
}

Limits limits_after(const UncertainInstance& inst, const ElementSet& queried,
                    ElementId e) {
  if (queried.contains(e)) return {inst.weight(e), inst.weight(e)};
  return {inst.lower(e), inst.upper(e)};
}

Limits limits_after(const UncertainInstance& inst, const QuerySet& q,
                    ElementId e) {
  return limits_after(inst, q.elements, e);
}

}  // namespace umv
