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

#ifndef UMV_ELEMENT_SET_HPP_
#define UMV_ELEMENT_SET_HPP_

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace umv {

/// Dense index of a ground-set element. The index order is the deterministic
/// tie-breaking order used by every selection loop.
struct ElementId {
  std::uint32_t value = 0;

  constexpr ElementId() = default;
  constexpr explicit ElementId(std::uint32_t v) : value(v) {}
  constexpr std::size_t index() const { return value; }

  friend constexpr auto operator<=>(ElementId, ElementId) = default;
};

/// Subset of a ground set {0, ..., universe-1}. Iteration is ascending.
class ElementSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = ElementId;
    using difference_type = std::ptrdiff_t;
    using pointer = const ElementId*;
    using reference = ElementId;

    const_iterator() = default;
    const_iterator(const Bits* bits, std::size_t pos) : bits_(bits), pos_(pos) {}

    ElementId operator*() const {
      return ElementId(static_cast<std::uint32_t>(pos_));
    }
    const_iterator& operator++() {
      pos_ = bits_->find_next(pos_);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const {
      return pos_ == other.pos_;
    }

   private:
    const Bits* bits_ = nullptr;
    std::size_t pos_ = Bits::npos;
  };

  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_(universe) {}
  ElementSet(std::size_t universe, std::initializer_list<ElementId> ids);
  ElementSet(std::size_t universe, const std::vector<ElementId>& ids);

  static ElementSet full(std::size_t universe);
  /// Bit i of `mask` selects element i; universe must be <= 64.
  static ElementSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(ElementId e) const {
    return e.index() < bits_.size() && bits_.test(e.index());
  }

  void insert(ElementId e) { bits_.set(e.index()); }
  void erase(ElementId e) { bits_.reset(e.index()); }

  ElementSet with(ElementId e) const;
  ElementSet without(ElementId e) const;

  bool is_subset_of(const ElementSet& other) const {
    return bits_.is_subset_of(other.bits_);
  }
  bool intersects(const ElementSet& other) const {
    return bits_.intersects(other.bits_);
  }

  ElementSet& operator|=(const ElementSet& o);
  ElementSet& operator&=(const ElementSet& o);
  ElementSet& operator-=(const ElementSet& o);
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }
  /// Complement within the universe.
  ElementSet complement() const;

  const_iterator begin() const { return {&bits_, bits_.find_first()}; }
  const_iterator end() const { return {&bits_, Bits::npos}; }

  std::vector<ElementId> to_vector() const;
  std::uint64_t to_mask() const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.bits_ == b.bits_;
  }
  /// Lexicographic over the ascending element lists.
  friend bool lexicographic_less(const ElementSet& a, const ElementSet& b);

  const Bits& bits() const { return bits_; }

 private:
  Bits bits_;
};

bool lexicographic_less(const ElementSet& a, const ElementSet& b);

}  // namespace umv

template <>
struct std::hash<umv::ElementId> {
  std::size_t operator()(umv::ElementId e) const noexcept {
    return std::hash<std::uint32_t>{}(e.value);
  }
};

#endif  // UMV_ELEMENT_SET_HPP_
