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

#ifndef UMV_MATROID_HPP_
#define UMV_MATROID_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "umv/element_set.hpp"
#include "umv/rational.hpp"

namespace umv {

enum class MatroidKind { kGraphic, kUniform, kPartition, kExplicit };

const char* to_string(MatroidKind kind);

/// Independence oracle over the ground set {0, ..., size()-1}. Immutable.
class Matroid {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  /// Element i is the edge `edges[i]`. Parallel edges and self-loops allowed.
  static Matroid graphic(std::size_t vertex_count, std::vector<Edge> edges);
  static Matroid uniform(std::size_t size, std::size_t rank_bound);
  /// Element i lies in block `block_of[i]`; block j admits `capacity[j]`.
  static Matroid partition(std::vector<std::size_t> block_of,
                           std::vector<std::size_t> capacity);
  /// Bases listed explicitly. Basis exchange is verified exhaustively when
  /// size <= 12; larger ground sets only get the equal-cardinality check.
  static Matroid from_bases(std::size_t size, std::vector<ElementSet> bases);

  std::size_t size() const { return size_; }
  MatroidKind kind() const { return kind_; }

  bool is_independent(const ElementSet& s) const;

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t rank_bound() const { return rank_bound_; }
  const std::vector<std::size_t>& block_of() const { return block_of_; }
  const std::vector<std::size_t>& capacity() const { return capacity_; }
  const std::vector<ElementSet>& bases() const { return bases_; }

 private:
  Matroid(MatroidKind kind, std::size_t size) : kind_(kind), size_(size) {}

  MatroidKind kind_;
  std::size_t size_;
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::size_t rank_bound_ = 0;
  std::vector<std::size_t> block_of_;
  std::vector<std::size_t> capacity_;
  std::vector<ElementSet> bases_;
};

struct MinorState {
  ElementSet deleted;
  ElementSet contracted;
};

/// The minor M / K \ D of a matroid. A set s of the view is independent iff
/// s + K is independent in the underlying matroid. A Matroid converts to the
/// trivial view; the matroid must outlive every view built on it.
class MatroidView {
 public:
  MatroidView(const Matroid& m);  // NOLINT(google-explicit-constructor)

  const Matroid& base() const { return *base_; }
  std::size_t universe() const { return base_->size(); }
  const ElementSet& ground() const { return ground_; }
  const ElementSet& deleted() const { return deleted_; }
  const ElementSet& contracted() const { return contracted_; }
  std::size_t full_rank() const { return full_rank_; }

  /// Deletes and contracts further elements of this view's ground set.
  MatroidView minor(const MinorState& st) const;

 private:
  MatroidView(const Matroid& m, ElementSet deleted, ElementSet contracted);

  const Matroid* base_;
  ElementSet deleted_;
  ElementSet contracted_;
  ElementSet ground_;
  std::size_t full_rank_ = 0;
};

bool is_independent(const MatroidView& m, const ElementSet& s);
std::size_t rank(const MatroidView& m, const ElementSet& s);
/// Greedy maximal independent subset of s, scanning in ElementId order.
ElementSet maximal_independent_subset(const MatroidView& m, const ElementSet& s);
ElementSet span(const MatroidView& m, const ElementSet& s);
bool is_basis(const MatroidView& m, const ElementSet& b);

/// The unique circuit in b + e. Requires b a basis and e a ground element
/// outside b.
ElementSet fundamental_circuit(const MatroidView& m, const ElementSet& b,
                               ElementId e);

/// ground \ span(b - e): the elements that can replace e in b. Contains e.
ElementSet cocircuit_complement(const MatroidView& m, const ElementSet& b,
                                ElementId e);

MatroidView minor(const MatroidView& m, const MinorState& st);

/// Per-element weights indexed by ElementId::index().
using Weights = std::vector<Rational>;

/// Greedy minimum-weight basis. Equal weights are processed by position in
/// `tie_order` when given (a permutation of the ground set), else by id.
ElementSet greedy_mwb(const MatroidView& m, const Weights& w,
                      const std::optional<std::vector<ElementId>>& tie_order =
                          std::nullopt);

Rational total_weight(const ElementSet& s, const Weights& w);

}  // namespace umv

#endif  // UMV_MATROID_HPP_
