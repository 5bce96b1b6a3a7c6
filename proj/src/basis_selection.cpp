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

#include "umv/basis_selection.hpp"

#include "umv/errors.hpp"

namespace umv {
namespace {

using Finder = std::optional<RuleApplication> (*)(const UncertainInstance&,
                                                  const MatroidView&);

// The element of `pool` with the largest cost among those accepted by
// `keep`; the smallest id wins ties.
template <typename Pred>
ElementId costliest(const UncertainInstance& inst, const ElementSet& pool,
                    Pred keep) {
  std::optional<ElementId> best;
  for (const auto g : pool) {
    if (!keep(g)) continue;
    if (!best || inst.cost(g) > inst.cost(*best)) best = g;
  }
  if (!best) throw InvariantFailure("empty candidate pool");
  return *best;
}

std::optional<RuleApplication> unique_max_delete(const UncertainInstance& inst,
                                                 const MatroidView& view) {
  const ElementSet b0 = greedy_mwb(view, inst.weights());
  for (const auto e : view.ground() - b0) {
    if (mwb_containing(inst, view, e)) continue;
    return RuleApplication{Rule::kUniqueMaxDelete,
                           ElementSet(view.universe(), {e}),
                           fundamental_circuit(view, b0, e), b0};
  }
  return std::nullopt;
}

std::optional<RuleApplication> unique_min_contract(const UncertainInstance& inst,
                                                   const MatroidView& view) {
  const ElementSet b0 = greedy_mwb(view, inst.weights());
  for (const auto e : b0) {
    if (mwb_avoiding(inst, view, e)) continue;
    return RuleApplication{Rule::kUniqueMinContract,
                           ElementSet(view.universe(), {e}),
                           cocircuit_complement(view, b0, e), b0};
  }
  return std::nullopt;
}

std::optional<RuleApplication> nontrivial_upper_contract(
    const UncertainInstance& inst, const MatroidView& view) {
  for (const auto e : view.ground()) {
    if (is_trivial(inst, e) || !is_extreme_high(inst, e)) continue;
    const auto b = mwb_containing(inst, view, e);
    if (!b) continue;
    const ElementSet cut = cocircuit_complement(view, *b, e);
    const Rational& v = inst.weight(e);
    // Every member of this pool is itself a valid choice for b - e + g.
    const ElementId g = costliest(inst, cut, [&](ElementId x) {
      return !is_trivial(inst, x) && inst.upper(x) == v;
    });
    return RuleApplication{Rule::kNonTrivialUpperContract,
                           ElementSet(view.universe(), {g}), cut,
                           b->without(e).with(g)};
  }
  return std::nullopt;
}

std::optional<RuleApplication> nontrivial_lower_delete(
    const UncertainInstance& inst, const MatroidView& view) {
  for (const auto e : view.ground()) {
    if (is_trivial(inst, e) || !is_extreme_low(inst, e)) continue;
    const auto b = mwb_avoiding(inst, view, e);
    if (!b) continue;
    const ElementSet circuit = fundamental_circuit(view, *b, e);
    const Rational& v = inst.weight(e);
    const ElementId g = costliest(inst, circuit, [&](ElementId x) {
      return !is_trivial(inst, x) && inst.lower(x) == v;
    });
    return RuleApplication{Rule::kNonTrivialLowerDelete,
                           ElementSet(view.universe(), {g}), circuit, *b};
  }
  return std::nullopt;
}

std::optional<RuleApplication> trivial_contract(const UncertainInstance& inst,
                                                const MatroidView& view) {
  for (const auto e : view.ground()) {
    if (!is_trivial(inst, e)) continue;
    const auto b = mwb_containing(inst, view, e);
    if (!b) continue;
    return RuleApplication{Rule::kTrivialContract,
                           ElementSet(view.universe(), {e}),
                           cocircuit_complement(view, *b, e), *b};
  }
  return std::nullopt;
}

std::optional<RuleApplication> trivial_delete(const UncertainInstance& inst,
                                              const MatroidView& view) {
  for (const auto e : view.ground()) {
    if (!is_trivial(inst, e)) continue;
    const auto b = mwb_avoiding(inst, view, e);
    if (!b) continue;
    return RuleApplication{Rule::kTrivialDelete,
                           ElementSet(view.universe(), {e}),
                           fundamental_circuit(view, *b, e), *b};
  }
  return std::nullopt;
}

constexpr Finder kEngineOrder[] = {
    unique_max_delete,   unique_min_contract, nontrivial_upper_contract,
    nontrivial_lower_delete, trivial_contract, trivial_delete,
};

void require_no_earlier_rule(const UncertainInstance& inst,
                             const MatroidView& view) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (kEngineOrder[i](inst, view)) {
      throw ContractViolation(
          "trivial-element rule queried while an earlier rule still fires");
    }
  }
}

MinorState step_state(const RuleApplication& step, std::size_t n) {
  MinorState st{ElementSet(n), ElementSet(n)};
  if (step.rule == Rule::kFinalMwbSplit) {
    st.contracted = step.elements;
    st.deleted = step.justification;
  } else if (is_contraction(step.rule)) {
    st.contracted = step.elements;
  } else {
    st.deleted = step.elements;
  }
  return st;
}

std::string join_names(const UncertainInstance& inst, const ElementSet& s) {
  std::string out;
  for (const auto e : s) {
    if (!out.empty()) out += ",";
    out += inst.name(e);
  }
  return out;
}

}  // namespace

const char* to_string(Rule rule) {
  switch (rule) {
    case Rule::kUniqueMaxDelete:
      return "UniqueMaxDelete";
    case Rule::kUniqueMinContract:
      return "UniqueMinContract";
    case Rule::kNonTrivialUpperContract:
      return "NonTrivialUpperContract";
    case Rule::kNonTrivialLowerDelete:
      return "NonTrivialLowerDelete";
    case Rule::kTrivialContract:
      return "TrivialContract";
    case Rule::kTrivialDelete:
      return "TrivialDelete";
    case Rule::kFinalMwbSplit:
      return "FinalMwbSplit";
  }
  return "Unknown";
}

bool is_contraction(Rule rule) {
  return rule == Rule::kUniqueMinContract ||
         rule == Rule::kNonTrivialUpperContract ||
         rule == Rule::kTrivialContract;
}

std::optional<ElementSet> mwb_containing(const UncertainInstance& inst,
                                         const MatroidView& view, ElementId e) {
  const ElementSet b0 = greedy_mwb(view, inst.weights());
  if (b0.contains(e)) return b0;
  for (const auto f : fundamental_circuit(view, b0, e).without(e)) {
    if (inst.weight(f) == inst.weight(e)) return b0.without(f).with(e);
  }
  return std::nullopt;
}

std::optional<ElementSet> mwb_avoiding(const UncertainInstance& inst,
                                       const MatroidView& view, ElementId e) {
  const ElementSet b0 = greedy_mwb(view, inst.weights());
  if (!b0.contains(e)) return b0;
  for (const auto f : cocircuit_complement(view, b0, e).without(e)) {
    if (inst.weight(f) == inst.weight(e)) return b0.without(e).with(f);
  }
  return std::nullopt;
}

std::optional<RuleApplication> find_unique_max_delete(
    const UncertainInstance& inst, const MatroidView& view) {
  return unique_max_delete(inst, view);
}

std::optional<RuleApplication> find_unique_min_contract(
    const UncertainInstance& inst, const MatroidView& view) {
  return unique_min_contract(inst, view);
}

std::optional<RuleApplication> find_nontrivial_upper_contract(
    const UncertainInstance& inst, const MatroidView& view) {
  return nontrivial_upper_contract(inst, view);
}

std::optional<RuleApplication> find_nontrivial_lower_delete(
    const UncertainInstance& inst, const MatroidView& view) {
  return nontrivial_lower_delete(inst, view);
}

std::optional<RuleApplication> find_trivial_contract(
    const UncertainInstance& inst, const MatroidView& view) {
  require_no_earlier_rule(inst, view);
  return trivial_contract(inst, view);
}

std::optional<RuleApplication> find_trivial_delete(
    const UncertainInstance& inst, const MatroidView& view) {
  require_no_earlier_rule(inst, view);
  return trivial_delete(inst, view);
}

SelectionResult run_algorithm1(const UncertainInstance& inst,
                               const std::optional<MinorState>& seed) {
  const std::size_t n = inst.size();
  SelectionTrace trace;
  trace.initial = seed.value_or(MinorState{ElementSet(n), ElementSet(n)});
  MatroidView view = MatroidView(inst.matroid()).minor(trace.initial);
  while (!view.ground().empty()) {
    std::optional<RuleApplication> hit;
    for (const auto finder : kEngineOrder) {
      hit = finder(inst, view);
      if (hit) break;
    }
    if (!hit) {
      for (const auto e : view.ground()) {
        if (is_extreme_low(inst, e) || is_extreme_high(inst, e)) {
          throw InvariantFailure("extreme element " + inst.name(e) +
                                 " survived every rule");
        }
      }
      const ElementSet b = greedy_mwb(view, inst.weights());
      hit = RuleApplication{Rule::kFinalMwbSplit, b, view.ground() - b, b};
    }
    view = view.minor(step_state(*hit, n));
    trace.steps.push_back(std::move(*hit));
  }
  trace.final_state = {view.deleted(), view.contracted()};
  return {view.contracted(), std::move(trace)};
}

MinorState replay(const UncertainInstance& inst, const SelectionTrace& trace) {
  MatroidView view = MatroidView(inst.matroid()).minor(trace.initial);
  for (const auto& step : trace.steps) {
    view = view.minor(step_state(step, inst.size()));
  }
  return {view.deleted(), view.contracted()};
}

std::vector<std::string> format_trace(const UncertainInstance& inst,
                                      const SelectionTrace& trace) {
  std::vector<std::string> lines;
  for (const auto& step : trace.steps) {
    lines.push_back(std::string("rule=") + to_string(step.rule) +
                    " element=" + join_names(inst, step.elements) +
                    " justification=" + join_names(inst, step.justification));
  }
  return lines;
}

}  // namespace umv
