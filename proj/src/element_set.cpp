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

#include "umv/element_set.hpp"

#include "umv/errors.hpp"

namespace umv {
namespace {

void require_same_universe(const ElementSet& a, const ElementSet& b) {
  if (a.universe() != b.universe()) {
    throw DomainError("element sets over different ground sets (" +
                      std::to_string(a.universe()) + " vs " +
                      std::to_string(b.universe()) + ")");
  }
}

}  // namespace

ElementSet::ElementSet(std::size_t universe,
                       std::initializer_list<ElementId> ids)
    : bits_(universe) {
  for (const auto e : ids) {
    if (e.index() >= universe) throw DomainError("element id out of range");
    bits_.set(e.index());
  }
}

ElementSet::ElementSet(std::size_t universe, const std::vector<ElementId>& ids)
    : bits_(universe) {
  for (const auto e : ids) {
    if (e.index() >= universe) throw DomainError("element id out of range");
    bits_.set(e.index());
  }
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  s.bits_.set();
  return s;
}

ElementSet ElementSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw DomainError("mask universe exceeds 64 elements");
  ElementSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) {
    if ((mask >> i) & 1U) s.bits_.set(i);
  }
  return s;
}

ElementSet ElementSet::with(ElementId e) const {
  ElementSet s = *this;
  s.insert(e);
  return s;
}

ElementSet ElementSet::without(ElementId e) const {
  ElementSet s = *this;
  s.erase(e);
  return s;
}

ElementSet& ElementSet::operator|=(const ElementSet& o) {
  require_same_universe(*this, o);
  bits_ |= o.bits_;
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& o) {
  require_same_universe(*this, o);
  bits_ &= o.bits_;
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& o) {
  require_same_universe(*this, o);
  bits_ -= o.bits_;
  return *this;
}

ElementSet ElementSet::complement() const {
  ElementSet s = *this;
  s.bits_.flip();
  return s;
}

std::vector<ElementId> ElementSet::to_vector() const {
  return {begin(), end()};
}

std::uint64_t ElementSet::to_mask() const {
  if (universe() > 64) throw DomainError("mask universe exceeds 64 elements");
  std::uint64_t mask = 0;
  for (const auto e : *this) mask |= std::uint64_t{1} << e.index();
  return mask;
}

bool lexicographic_less(const ElementSet& a, const ElementSet& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

}  // namespace umv
