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

#ifndef UMV_BASIS_SELECTION_HPP_
#define UMV_BASIS_SELECTION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "umv/matroid.hpp"
#include "umv/uncertainty.hpp"

namespace umv {

enum class Rule {
  kUniqueMaxDelete,
  kUniqueMinContract,
  kNonTrivialUpperContract,
  kNonTrivialLowerDelete,
  kTrivialContract,
  kTrivialDelete,
  kFinalMwbSplit,
};

const char* to_string(Rule rule);
bool is_contraction(Rule rule);

/// One rule firing. `justification` is the circuit (deletions) or the
/// cocircuit complement E(M') \ span(B - e) (contractions) it rests on;
/// `basis` is the basis of the view used to derive it. For the final split,
/// `elements` is the chosen MWB of the view and `justification` the rest.
struct RuleApplication {
  Rule rule;
  ElementSet elements;
  ElementSet justification;
  ElementSet basis;
};

struct SelectionTrace {
  std::vector<RuleApplication> steps;
  MinorState initial;
  MinorState final_state;
};

/// A greedy MWB of the view containing e, via at most one equal-weight
/// exchange; absent when e lies in no MWB.
std::optional<ElementSet> mwb_containing(const UncertainInstance& inst,
                                         const MatroidView& view, ElementId e);
/// Dual: a greedy MWB of the view avoiding e; absent when e is in every MWB.
std::optional<ElementSet> mwb_avoiding(const UncertainInstance& inst,
                                       const MatroidView& view, ElementId e);

std::optional<RuleApplication> find_unique_max_delete(
    const UncertainInstance& inst, const MatroidView& view);
std::optional<RuleApplication> find_unique_min_contract(
    const UncertainInstance& inst, const MatroidView& view);
std::optional<RuleApplication> find_nontrivial_upper_contract(
    const UncertainInstance& inst, const MatroidView& view);
std::optional<RuleApplication> find_nontrivial_lower_delete(
    const UncertainInstance& inst, const MatroidView& view);
/// Both throw ContractViolation while one of the four rules above still
/// fires on the view.
std::optional<RuleApplication> find_trivial_contract(
    const UncertainInstance& inst, const MatroidView& view);
std::optional<RuleApplication> find_trivial_delete(
    const UncertainInstance& inst, const MatroidView& view);

struct SelectionResult {
  ElementSet basis;
  SelectionTrace trace;
};

/// Applies the first firing rule until the view is empty, finishing with a
/// greedy split once no rule fires. `seed` pre-contracts/deletes elements.
SelectionResult run_algorithm1(const UncertainInstance& inst,
                               const std::optional<MinorState>& seed =
                                   std::nullopt);

/// Re-applies the recorded steps starting from the trace's initial state.
MinorState replay(const UncertainInstance& inst, const SelectionTrace& trace);

/// One line per step: "rule=<name> element=<ids> justification=<ids>".
std::vector<std::string> format_trace(const UncertainInstance& inst,
                                      const SelectionTrace& trace);

}  // namespace umv

#endif  // UMV_BASIS_SELECTION_HPP_
