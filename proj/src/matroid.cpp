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

#include "umv/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "umv/errors.hpp"

namespace umv {
namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // False when x and y were already joined.
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[x] = y;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

void require_universe(const ElementSet& s, std::size_t n, const char* what) {
  if (s.universe() != n) {
    throw DomainError(std::string(what) + ": set over " +
                      std::to_string(s.universe()) +
                      " elements used with a matroid on " + std::to_string(n));
  }
}

void require_ground(const MatroidView& m, const ElementSet& s) {
  require_universe(s, m.universe(), "matroid view");
  if (!s.is_subset_of(m.ground())) {
    throw DomainError("set contains elements outside the view's ground set");
  }
}

void require_element(const MatroidView& m, ElementId e) {
  if (e.index() >= m.universe() || !m.ground().contains(e)) {
    throw DomainError("element " + std::to_string(e.value) +
                      " is not in the ground set");
  }
}

void require_basis(const MatroidView& m, const ElementSet& b) {
  require_ground(m, b);
  if (!is_basis(m, b)) throw ContractViolation("set is not a basis");
}

void check_basis_exchange(std::size_t n, const std::vector<ElementSet>& bases) {
  std::set<std::uint64_t> known;
  for (const auto& b : bases) known.insert(b.to_mask());
  for (const auto& b1 : bases) {
    for (const auto& b2 : bases) {
      for (const auto x : b1 - b2) {
        bool found = false;
        for (const auto y : b2 - b1) {
          if (known.count(b1.without(x).with(y).to_mask()) != 0) {
            found = true;
            break;
          }
        }
        if (!found) {
          throw DomainError("explicit bases violate the exchange axiom (n=" +
                            std::to_string(n) + ")");
        }
      }
    }
  }
}

}  // namespace

const char* to_string(MatroidKind kind) {
  switch (kind) {
    case MatroidKind::kGraphic:
      return "graphic";
    case MatroidKind::kUniform:
      return "uniform";
    case MatroidKind::kPartition:
      return "partition";
    case MatroidKind::kExplicit:
      return "explicit";
  }
  return "unknown";
}

Matroid Matroid::graphic(std::size_t vertex_count, std::vector<Edge> edges) {
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw DomainError("edge endpoint outside vertex range");
    }
  }
  Matroid m(MatroidKind::kGraphic, edges.size());
  m.vertex_count_ = vertex_count;
  m.edges_ = std::move(edges);
  return m;
}

Matroid Matroid::uniform(std::size_t size, std::size_t rank_bound) {
  if (rank_bound > size) throw DomainError("uniform rank exceeds ground size");
  Matroid m(MatroidKind::kUniform, size);
  m.rank_bound_ = rank_bound;
  return m;
}

Matroid Matroid::partition(std::vector<std::size_t> block_of,
                           std::vector<std::size_t> capacity) {
  for (const auto b : block_of) {
    if (b >= capacity.size()) throw DomainError("element block out of range");
  }
  Matroid m(MatroidKind::kPartition, block_of.size());
  m.block_of_ = std::move(block_of);
  m.capacity_ = std::move(capacity);
  return m;
}

Matroid Matroid::from_bases(std::size_t size, std::vector<ElementSet> bases) {
  if (bases.empty()) throw DomainError("explicit matroid needs a basis");
  for (const auto& b : bases) {
    require_universe(b, size, "explicit basis");
    if (b.size() != bases.front().size()) {
      throw DomainError("explicit bases differ in cardinality");
    }
  }
  std::sort(bases.begin(), bases.end(), lexicographic_less);
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  if (size <= 12) check_basis_exchange(size, bases);
  Matroid m(MatroidKind::kExplicit, size);
  m.bases_ = std::move(bases);
  return m;
}

bool Matroid::is_independent(const ElementSet& s) const {
  require_universe(s, size_, "is_independent");
  switch (kind_) {
    case MatroidKind::kGraphic: {
      UnionFind uf(vertex_count_);
      for (const auto e : s) {
        const auto& [u, v] = edges_[e.index()];
        if (!uf.unite(u, v)) return false;
      }
      return true;
    }
    case MatroidKind::kUniform:
      return s.size() <= rank_bound_;
    case MatroidKind::kPartition: {
      std::vector<std::size_t> used(capacity_.size(), 0);
      for (const auto e : s) {
        const auto blk = block_of_[e.index()];
        if (++used[blk] > capacity_[blk]) return false;
      }
      return true;
    }
    case MatroidKind::kExplicit:
      return std::any_of(bases_.begin(), bases_.end(),
                         [&](const ElementSet& b) { return s.is_subset_of(b); });
  }
  return false;
}

MatroidView::MatroidView(const Matroid& m)
    : MatroidView(m, ElementSet(m.size()), ElementSet(m.size())) {}

MatroidView::MatroidView(const Matroid& m, ElementSet deleted,
                         ElementSet contracted)
    : base_(&m),
      deleted_(std::move(deleted)),
      contracted_(std::move(contracted)),
      ground_((deleted_ | contracted_).complement()) {
  full_rank_ = rank(*this, ground_);
}

MatroidView MatroidView::minor(const MinorState& st) const {
  require_ground(*this, st.deleted);
  require_ground(*this, st.contracted);
  if (st.deleted.intersects(st.contracted)) {
    throw ContractViolation("minor deletes and contracts the same element");
  }
  ElementSet d = deleted_ | st.deleted;
  ElementSet k = contracted_ | st.contracted;
  const Matroid& m = *base_;
  if (!m.is_independent(k)) {
    throw ContractViolation("contracted set is dependent");
  }
  const MatroidView whole(m);
  if (rank(whole, d.complement()) != whole.full_rank()) {
    throw ContractViolation("deleted set lowers the rank");
  }
  return MatroidView(m, std::move(d), std::move(k));
}

bool is_independent(const MatroidView& m, const ElementSet& s) {
  require_ground(m, s);
  return m.base().is_independent(s | m.contracted());
}

ElementSet maximal_independent_subset(const MatroidView& m,
                                      const ElementSet& s) {
  require_ground(m, s);
  ElementSet acc = m.contracted();
  ElementSet out(m.universe());
  for (const auto e : s) {
    acc.insert(e);
    if (m.base().is_independent(acc)) {
      out.insert(e);
    } else {
      acc.erase(e);
    }
  }
  return out;
}

std::size_t rank(const MatroidView& m, const ElementSet& s) {
  return maximal_independent_subset(m, s).size();
}

ElementSet span(const MatroidView& m, const ElementSet& s) {
  const ElementSet basis = maximal_independent_subset(m, s);
  const ElementSet with_k = basis | m.contracted();
  ElementSet out = s;
  for (const auto e : m.ground() - s) {
    if (!m.base().is_independent(with_k.with(e))) out.insert(e);
  }
  return out;
}

bool is_basis(const MatroidView& m, const ElementSet& b) {
  require_ground(m, b);
  return b.size() == m.full_rank() && is_independent(m, b);
}

ElementSet fundamental_circuit(const MatroidView& m, const ElementSet& b,
                               ElementId e) {
  require_element(m, e);
  require_basis(m, b);
  if (b.contains(e)) {
    throw ContractViolation("fundamental circuit of a basis element");
  }
  ElementSet circuit(m.universe(), {e});
  for (const auto f : b) {
    if (is_independent(m, b.without(f).with(e))) circuit.insert(f);
  }
  return circuit;
}

ElementSet cocircuit_complement(const MatroidView& m, const ElementSet& b,
                                ElementId e) {
  require_element(m, e);
  require_basis(m, b);
  if (!b.contains(e)) {
    throw ContractViolation("cocircuit complement of a non-basis element");
  }
  const ElementSet rest = b.without(e);
  ElementSet out(m.universe(), {e});
  for (const auto f : m.ground() - b) {
    if (is_independent(m, rest.with(f))) out.insert(f);
  }
  return out;
}

MatroidView minor(const MatroidView& m, const MinorState& st) {
  return m.minor(st);
}

ElementSet greedy_mwb(const MatroidView& m, const Weights& w,
                      const std::optional<std::vector<ElementId>>& tie_order) {
  if (w.size() != m.universe()) {
    throw DomainError("weight vector does not cover the ground set");
  }
  std::vector<std::size_t> position(m.universe());
  std::iota(position.begin(), position.end(), std::size_t{0});
  if (tie_order) {
    if (tie_order->size() != m.ground().size()) {
      throw DomainError("tie order is not a permutation of the ground set");
    }
    ElementSet seen(m.universe());
    for (std::size_t i = 0; i < tie_order->size(); ++i) {
      const auto e = (*tie_order)[i];
      require_element(m, e);
      if (seen.contains(e)) throw DomainError("tie order repeats an element");
      seen.insert(e);
      position[e.index()] = i;
    }
  }
  std::vector<ElementId> order = m.ground().to_vector();
  std::stable_sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    if (w[a.index()] != w[b.index()]) return w[a.index()] < w[b.index()];
    return position[a.index()] < position[b.index()];
  });
  ElementSet acc = m.contracted();
  ElementSet out(m.universe());
  for (const auto e : order) {
    acc.insert(e);
    if (m.base().is_independent(acc)) {
      out.insert(e);
    } else {
      acc.erase(e);
    }
  }
  return out;
}

Rational total_weight(const ElementSet& s, const Weights& w) {
  Rational sum = 0;
  for (const auto e : s) sum += w[e.index()];
  return sum;
}

}  // namespace umv
