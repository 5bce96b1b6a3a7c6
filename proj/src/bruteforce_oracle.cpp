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

#include "umv/bruteforce_oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "umv/certificate_check.hpp"
#include "umv/errors.hpp"

namespace umv {
namespace {

void guard(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw GuardExceeded(std::string(what) + ": " + std::to_string(n) +
                        " elements exceed the limit of " +
                        std::to_string(limit));
  }
}

ElementId id_at(std::size_t i) {
  return ElementId(static_cast<std::uint32_t>(i));
}

void limits_of(const UncertainInstance& inst, const ElementSet& q,
               Weights& lower, Weights& upper) {
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const auto lim = limits_after(inst, q, id_at(i));
    lower[i] = lim.lower;
    upper[i] = lim.upper;
  }
}

bool lighter_basis_exists(const MatroidView& m, const ElementSet& b,
                          const Weights& w) {
  return total_weight(greedy_mwb(m, w), w) < total_weight(b, w);
}

// Subsets in order of (cost, lexicographic); records every optimal pair.
OracleResult search(const UncertainInstance& inst,
                    const std::vector<ElementSet>& candidates,
                    std::size_t max_elements) {
  const std::size_t n = inst.size();
  guard(n, max_elements, "certificate enumeration");
  const MatroidView m(inst.matroid());
  std::vector<CutPairs> pairs;
  for (const auto& b : candidates) pairs.push_back(cut_pairs(m, b));
  OracleResult out;
  std::optional<Rational> best;
  Weights lower(n), upper(n);
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const ElementSet q = ElementSet::from_mask(n, mask);
    const Rational cost = total_weight(q, inst.costs());
    if (best && cost > *best) continue;
    limits_of(inst, q, lower, upper);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (!cut_condition_holds(pairs[i], lower, upper)) continue;
      if (!best || cost < *best) {
        best = cost;
        out.optimal.clear();
      }
      out.optimal.push_back({{q, cost}, candidates[i]});
    }
  }
  out.enumeration_size = static_cast<std::size_t>(count);
  if (!best) throw InvariantFailure("querying everything verifies no basis");
  out.min_cost = *best;
  std::sort(out.optimal.begin(), out.optimal.end(),
            [](const OptimalCertificate& a, const OptimalCertificate& b) {
              if (a.q.elements != b.q.elements) {
                return lexicographic_less(a.q.elements, b.q.elements);
              }
              return lexicographic_less(a.basis, b.basis);
            });
  return out;
}

}  // namespace

std::vector<ElementSet> all_bases(const Matroid& m, std::size_t max_elements) {
  const std::size_t n = m.size();
  guard(n, max_elements, "basis enumeration");
  const MatroidView view(m);
  const std::size_t r = view.full_rank();
  std::vector<ElementSet> out;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != r) continue;
    ElementSet s = ElementSet::from_mask(n, mask);
    if (m.is_independent(s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), lexicographic_less);
  return out;
}

std::vector<ElementSet> all_mwbs(const UncertainInstance& inst,
                                 std::size_t max_elements) {
  auto bases = all_bases(inst.matroid(), max_elements);
  Rational best;
  bool first = true;
  for (const auto& b : bases) {
    const Rational w = total_weight(b, inst.weights());
    if (first || w < best) best = w;
    first = false;
  }
  std::erase_if(bases, [&](const ElementSet& b) {
    return total_weight(b, inst.weights()) != best;
  });
  return bases;
}

OracleResult min_cost_certificate(const UncertainInstance& inst,
                                  std::size_t max_elements) {
  guard(inst.size(), max_elements, "certificate enumeration");
  return search(inst, all_mwbs(inst), max_elements);
}

OracleResult min_cert_for_basis(const UncertainInstance& inst,
                                const ElementSet& b, std::size_t max_elements) {
  if (!is_mwb(inst, b)) {
    throw ContractViolation("basis is not minimum-weight under the true weights");
  }
  return search(inst, {b}, max_elements);
}

std::vector<Rational> sample_points(const UncertaintyArea& area,
                                    const std::vector<Rational>& critical,
                                    std::size_t density) {
  std::vector<Rational> out;
  for (const auto& p : area.pieces()) {
    if (p.is_point()) {
      out.push_back(p.lo);
      continue;
    }
    std::vector<Rational> breaks{p.lo, p.hi};
    for (const auto& c : critical) {
      if (c > p.lo && c < p.hi) breaks.push_back(c);
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    if (!p.lo_open) out.push_back(p.lo);
    if (!p.hi_open) out.push_back(p.hi);
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
      if (i > 0) out.push_back(breaks[i]);
      const Rational step = (breaks[i + 1] - breaks[i]) / (density + 1);
      for (std::size_t k = 1; k <= density; ++k) {
        out.push_back(breaks[i] + step * static_cast<unsigned long>(k));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool verify_by_sampling(const UncertainInstance& inst, const ElementSet& q,
                        const ElementSet& b, std::size_t density,
                        std::size_t max_unqueried) {
  const MatroidView m(inst.matroid());
  if (b.universe() != inst.size() || !is_basis(m, b)) {
    throw ContractViolation("sampling check needs a basis");
  }
  const ElementSet free = q.complement();
  guard(free.size(), max_unqueried, "sampling check");
  std::vector<Rational> critical;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    critical.push_back(inst.lower(id_at(i)));
    critical.push_back(inst.upper(id_at(i)));
    critical.push_back(inst.weight(id_at(i)));
  }
  std::vector<std::vector<Rational>> values(inst.size());
  for (const auto e : free) {
    values[e.index()] = sample_points(inst.area(e), critical, density);
  }
  Weights w = inst.weights();
  if (lighter_basis_exists(m, b, w)) return false;
  const auto ids = free.to_vector();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto x = ids[i].index();
    for (const auto& vx : values[x]) {
      w[x] = vx;
      if (lighter_basis_exists(m, b, w)) return false;
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        const auto y = ids[j].index();
        for (const auto& vy : values[y]) {
          w[y] = vy;
          if (lighter_basis_exists(m, b, w)) return false;
        }
        w[y] = inst.weights()[y];
      }
    }
    w[x] = inst.weights()[x];
  }
  return true;
}

bool is_universal_certificate(const UncertainInstance& inst,
                              const ElementSet& q, std::size_t density) {
  const std::size_t n = inst.size();
  const MatroidView m(inst.matroid());
  const auto bases = all_bases(inst.matroid());
  std::vector<CutPairs> pairs;
  for (const auto& b : bases) pairs.push_back(cut_pairs(m, b));
  std::vector<Rational> critical;
  for (std::size_t i = 0; i < n; ++i) {
    critical.push_back(inst.lower(id_at(i)));
    critical.push_back(inst.upper(id_at(i)));
  }
  std::vector<std::vector<Rational>> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = sample_points(inst.area(id_at(i)), critical, density);
  }
  std::vector<std::size_t> digit(n, 0);
  Weights w(n), lower(n), upper(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) w[i] = values[i][digit[i]];
    Rational best;
    bool first = true;
    for (const auto& b : bases) {
      const Rational t = total_weight(b, w);
      if (first || t < best) best = t;
      first = false;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const bool known = q.contains(id_at(i));
      lower[i] = known ? w[i] : inst.lower(id_at(i));
      upper[i] = known ? w[i] : inst.upper(id_at(i));
    }
    bool verified = false;
    for (std::size_t k = 0; k < bases.size() && !verified; ++k) {
      verified = total_weight(bases[k], w) == best &&
                 cut_condition_holds(pairs[k], lower, upper);
    }
    if (!verified) return false;
    std::size_t i = 0;
    while (i < n && ++digit[i] == values[i].size()) digit[i++] = 0;
    if (i == n) return true;
  }
}

ElementSet lower_limit_basis(const UncertainInstance& inst,
                             const MatroidView& view) {
  for (const auto e : view.ground()) {
    if (is_extreme_low(inst, e) || is_extreme_high(inst, e)) {
      throw ContractViolation("\"" + inst.name(e) +
                              "\" sits at a limit of its area");
    }
  }
  Weights lower(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) lower[i] = inst.lower(id_at(i));
  return greedy_mwb(view, lower);
}

std::optional<ElementId> mandatory_element(const UncertainInstance& inst,
                                           const MatroidView& view,
                                           const ElementSet& b_lower) {
  auto outside = (view.ground() - b_lower).to_vector();
  std::stable_sort(outside.begin(), outside.end(), [&](ElementId a, ElementId b) {
    return inst.lower(a) < inst.lower(b);
  });
  for (const auto f : outside) {
    const ElementSet c = fundamental_circuit(view, b_lower, f).without(f);
    std::optional<ElementId> top;
    for (const auto e : c) {
      if (!top || inst.upper(e) > inst.upper(*top)) top = e;
    }
    if (top && inst.weight(f) < inst.upper(*top)) return top;
  }
  return std::nullopt;
}

UncertainInstance gap_instance(const Rational& rho, std::size_t n) {
  if (rho < 1 || n < 2) {
    throw DomainError("gap instance needs rho >= 1 and n >= 2");
  }
  std::vector<std::string> names;
  std::vector<UncertaintyArea> areas;
  Weights weights, costs;
  Rational rest = (rho - 1) / Rational(static_cast<unsigned long>(n - 1));
  rest.canonicalize();
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("e" + std::to_string(i + 1));
    if (i == 0) {
      areas.push_back(UncertaintyArea::closed(0, 2));
      weights.emplace_back(0);
      costs.emplace_back(1);
    } else {
      areas.push_back(UncertaintyArea::closed(1, 3));
      weights.emplace_back(2);
      costs.push_back(rest);
    }
  }
  // Ids follow name order, which differs from numeric order once n >= 10.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return names[a] < names[b]; });
  std::vector<std::string> n2;
  std::vector<UncertaintyArea> a2;
  Weights w2, c2;
  for (const auto i : order) {
    n2.push_back(names[i]);
    a2.push_back(areas[i]);
    w2.push_back(weights[i]);
    c2.push_back(costs[i]);
  }
  return UncertainInstance(Matroid::uniform(n, 1), std::move(n2), std::move(a2),
                           std::move(w2), std::move(c2));
}

}  // namespace umv
