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

#include "umv/certificate_check.hpp"

#include <algorithm>
#include <string>

#include "umv/errors.hpp"

namespace umv {
namespace {

void require_mwb(const UncertainInstance& inst, const ElementSet& b) {
  const MatroidView m(inst.matroid());
  if (b.universe() != inst.size() || !is_basis(m, b)) {
    throw ContractViolation("query check needs a basis");
  }
  if (!is_mwb(inst, b)) {
    throw ContractViolation("basis is not minimum-weight under the true weights");
  }
}

// A value of A_e that is at least U_e(Q) when that bound is attained, and
// strictly above `floor` otherwise.
Rational push_up(const UncertainInstance& inst, const ElementSet& q, ElementId e,
                 const Rational& floor) {
  if (q.contains(e)) return inst.weight(e);
  const auto& top = inst.area(e).pieces().back();
  if (!top.hi_open) return top.hi;
  return midpoint(std::max(top.lo, floor), top.hi);
}

// A value of A_f strictly below `ceiling` (> L_f(Q)), at L_f(Q) when attained.
Rational push_down(const UncertainInstance& inst, const ElementSet& q,
                   ElementId f, const Rational& ceiling) {
  if (q.contains(f)) return inst.weight(f);
  const auto& bottom = inst.area(f).pieces().front();
  if (!bottom.lo_open) return bottom.lo;
  return midpoint(bottom.lo, std::min(bottom.hi, ceiling));
}

Witness make_witness(const UncertainInstance& inst, const ElementSet& q,
                     const ElementSet& b, ElementId e, ElementId f) {
  const Rational low = limits_after(inst, q, f).lower;
  Weights w = inst.weights();
  w[e.index()] = push_up(inst, q, e, low);
  w[f.index()] = push_down(inst, q, f, w[e.index()]);
  if (!(w[f.index()] < w[e.index()]) ||
      !inst.area(e).contains(w[e.index()]) ||
      !inst.area(f).contains(w[f.index()])) {
    throw InvariantFailure("could not realize a counterexample for pair " +
                           inst.name(e) + "," + inst.name(f));
  }
  return {e, f, std::move(w), b.without(e).with(f)};
}

Verdict check_pairs(const UncertainInstance& inst, const ElementSet& q,
                    const ElementSet& b, const CutPairs& pairs) {
  for (const auto& [e, f] : pairs) {
    if (limits_after(inst, q, e).upper > limits_after(inst, q, f).lower) {
      return {false, make_witness(inst, q, b, e, f)};
    }
  }
  return {true, std::nullopt};
}

void require_queries(const UncertainInstance& inst, const ElementSet& q) {
  if (q.universe() != inst.size()) {
    throw DomainError("query set over a different ground set");
  }
}

}  // namespace

CutPairs cut_pairs(const MatroidView& m, const ElementSet& b) {
  CutPairs out;
  for (const auto e : b) {
    for (const auto f : cocircuit_complement(m, b, e).without(e)) {
      out.emplace_back(e, f);
    }
  }
  return out;
}

bool is_mwb(const UncertainInstance& inst, const ElementSet& b) {
  const MatroidView m(inst.matroid());
  if (b.universe() != inst.size() || !is_basis(m, b)) return false;
  const auto best = greedy_mwb(m, inst.weights());
  return total_weight(b, inst.weights()) == total_weight(best, inst.weights());
}

Verdict verifies_cuts(const UncertainInstance& inst, const ElementSet& q,
                      const ElementSet& b) {
  require_queries(inst, q);
  require_mwb(inst, b);
  return check_pairs(inst, q, b, cut_pairs(inst.matroid(), b));
}

Verdict verifies_circuits(const UncertainInstance& inst, const ElementSet& q,
                          const ElementSet& b) {
  require_queries(inst, q);
  require_mwb(inst, b);
  const MatroidView m(inst.matroid());
  CutPairs pairs;
  for (const auto f : m.ground() - b) {
    for (const auto e : fundamental_circuit(m, b, f).without(f)) {
      pairs.emplace_back(e, f);
    }
  }
  return check_pairs(inst, q, b, pairs);
}

Verdict verifies_cuts(const UncertainInstance& inst, const QuerySet& q,
                      const ElementSet& b) {
  return verifies_cuts(inst, q.elements, b);
}

Verdict verifies_circuits(const UncertainInstance& inst, const QuerySet& q,
                          const ElementSet& b) {
  return verifies_circuits(inst, q.elements, b);
}

bool cut_condition_holds(const CutPairs& pairs, const Weights& lower,
                         const Weights& upper) {
  return std::all_of(pairs.begin(), pairs.end(), [&](const auto& p) {
    return upper[p.first.index()] <= lower[p.second.index()];
  });
}

std::optional<ElementSet> find_verified_basis(const MatroidView& m,
                                              const Weights& lower,
                                              const Weights& upper) {
  if (lower.size() != m.universe() || upper.size() != m.universe()) {
    throw DomainError("limit vectors do not cover the ground set");
  }
  std::vector<ElementId> order = m.ground().to_vector();
  std::stable_sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    if (upper[a.index()] != upper[b.index()]) {
      return upper[a.index()] < upper[b.index()];
    }
    return lower[a.index()] < lower[b.index()];
  });
  const ElementSet b = greedy_mwb(m, upper, order);
  if (cut_condition_holds(cut_pairs(m, b), lower, upper)) return b;
  return std::nullopt;
}

std::optional<ElementSet> find_verified_basis(const UncertainInstance& inst,
                                              const ElementSet& queried) {
  require_queries(inst, queried);
  Weights lower(inst.size());
  Weights upper(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const auto lim =
        limits_after(inst, queried, ElementId(static_cast<std::uint32_t>(i)));
    lower[i] = lim.lower;
    upper[i] = lim.upper;
  }
  return find_verified_basis(inst.matroid(), lower, upper);
}

Rewrite exchange_rewrite(const UncertainInstance& inst, const QuerySet& q,
                         const ElementSet& b, ElementId e, ElementId e_prime,
                         ExchangeKind kind) {
  require_queries(inst, q.elements);
  require_mwb(inst, b);
  if (e == e_prime) throw ContractViolation("exchange of an element with itself");
  const MatroidView m(inst.matroid());
  const auto& w = inst.weights();
  ElementSet new_q = q.elements;
  ElementSet new_b = b;
  switch (kind) {
    case ExchangeKind::kUpper: {
      if (!b.contains(e) || b.contains(e_prime)) {
        throw ContractViolation("upper exchange needs e in b and e' outside");
      }
      const Rational& v = w[e.index()];
      if (inst.upper(e) != v || inst.upper(e_prime) != v ||
          w[e_prime.index()] != v) {
        throw ContractViolation("upper exchange needs U_e = U_e' = w_e = w_e'");
      }
      if (!fundamental_circuit(m, b, e_prime).contains(e)) {
        throw ContractViolation("upper exchange needs e on the circuit of e'");
      }
      new_q.erase(e_prime);
      new_q.insert(e);
      new_b = b.without(e).with(e_prime);
      break;
    }
    case ExchangeKind::kLower: {
      if (b.contains(e) || !b.contains(e_prime)) {
        throw ContractViolation("lower exchange needs e outside b and e' in b");
      }
      const Rational& v = w[e.index()];
      if (inst.lower(e) != v || inst.lower(e_prime) != v ||
          w[e_prime.index()] != v) {
        throw ContractViolation("lower exchange needs L_e = L_e' = w_e = w_e'");
      }
      if (!fundamental_circuit(m, b, e).contains(e_prime)) {
        throw ContractViolation("lower exchange needs e' on the circuit of e");
      }
      new_q.erase(e_prime);
      new_q.insert(e);
      new_b = b.with(e).without(e_prime);
      break;
    }
    case ExchangeKind::kTrivial: {
      if (!b.contains(e) || b.contains(e_prime)) {
        throw ContractViolation("trivial exchange needs e in b and e' outside");
      }
      if (w[e.index()] != w[e_prime.index()]) {
        throw ContractViolation("trivial exchange needs w_e = w_e'");
      }
      new_b = b.without(e).with(e_prime);
      if (!is_independent(m, new_b)) {
        throw ContractViolation("trivial exchange needs b - e + e' independent");
      }
      for (const auto g : {e, e_prime}) {
        if (!is_trivial(inst, g) && !q.elements.contains(g)) {
          throw ContractViolation("trivial exchange needs " + inst.name(g) +
                                  " trivial or queried");
        }
      }
      break;
    }
  }
  Rewrite out{make_query_set(inst, new_q), new_b};
  if (verifies_cuts(inst, q, b).valid && !verifies_cuts(inst, out.q, new_b).valid) {
    throw InvariantFailure("exchange broke a valid certificate");
  }
  return out;
}

}  // namespace umv
