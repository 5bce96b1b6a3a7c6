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

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "umv/certificate_check.hpp"
#include "umv/errors.hpp"

namespace umv {
namespace {

using testing::area;
using testing::fixture;
using testing::set;

UncertainInstance all_trivial_triangle(Rational a, Rational b, Rational c) {
  return UncertainInstance(
      Matroid::graphic(3, {{0, 1}, {1, 2}, {0, 2}}), {"e1", "e2", "e3"},
      {UncertaintyArea::point(a), UncertaintyArea::point(b),
       UncertaintyArea::point(c)},
      {a, b, c}, {1, 1, 1});
}

TEST(UniqueMaxDelete, FigureTwo) {
  const auto fig2 = fixture("fig2");
  const auto hit = find_unique_max_delete(fig2, fig2.matroid());
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(hit->elements, set(fig2, {"e4"}));
  EXPECT_EQ(hit->justification, set(fig2, {"e1", "e2", "e4", "e5"}));
}

TEST(UniqueMaxDelete, AbsentCases) {
  const auto closed = fixture("fig1_closed");
  EXPECT_FALSE(find_unique_max_delete(closed, closed.matroid()).has_value());
  const UncertainInstance single(Matroid::uniform(1, 1), {"x"}, {area({"[0,1]"})},
                                 {0}, {1});
  EXPECT_FALSE(find_unique_max_delete(single, single.matroid()).has_value());
}

TEST(UniqueMinContract, FigureTwoAfterDeletingE4) {
  const auto fig2 = fixture("fig2");
  const auto view = minor(fig2.matroid(), {set(fig2, {"e4"}), fig2.empty_set()});
  const auto hit = find_unique_min_contract(fig2, view);
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(hit->elements, set(fig2, {"e2"}));
}

TEST(UniqueMinContract, AbsentAndPath) {
  const UncertainInstance two(Matroid::uniform(2, 1), {"a", "b"},
                              {area({"[0,1]"}), area({"[0,1]"})}, {1, 1}, {1, 1});
  EXPECT_FALSE(find_unique_min_contract(two, two.matroid()).has_value());
  const UncertainInstance path(Matroid::graphic(3, {{0, 1}, {1, 2}}), {"a", "b"},
                               {area({"[0,5]"}), area({"[0,5]"})}, {1, 2}, {1, 1});
  const auto hit = find_unique_min_contract(path, path.matroid());
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(hit->elements, set(path, {"a"}));
}

TEST(NonTrivialUpperContract, CostlierParallelEdge) {
  const UncertainInstance inst(Matroid::graphic(2, {{0, 1}, {0, 1}}), {"a", "b"},
                               {area({"[0,2]"}), area({"[1,2]"})}, {2, 2}, {3, 1});
  const auto hit = find_nontrivial_upper_contract(inst, inst.matroid());
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(hit->elements, set(inst, {"a"}));
  const auto sel = run_algorithm1(inst);
  EXPECT_EQ(sel.basis, set(inst, {"a"}));
  EXPECT_EQ(sel.trace.steps.front().rule, Rule::kNonTrivialUpperContract);
}

TEST(NonTrivialUpperContract, AbsentWithoutExtremeHighElements) {
  const auto open = fixture("fig1_open");
  EXPECT_FALSE(find_nontrivial_upper_contract(open, open.matroid()).has_value());
}

TEST(NonTrivialLowerDelete, ClosedTriangle) {
  const auto closed = fixture("fig1_closed");
  const auto hit = find_nontrivial_lower_delete(closed, closed.matroid());
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(hit->elements, set(closed, {"e1"}));
  EXPECT_EQ(hit->justification, closed.all());
}

TEST(NonTrivialLowerDelete, SelfLoopAndAbsent) {
  const UncertainInstance loop(Matroid::graphic(2, {{0, 0}, {0, 1}}), {"x", "y"},
                               {area({"[1,3]"}), area({"[0,5]"})}, {1, 2}, {1, 1});
  const auto hit = find_nontrivial_lower_delete(loop, loop.matroid());
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(hit->elements, set(loop, {"x"}));
  EXPECT_EQ(hit->justification, set(loop, {"x"}));
  const auto open = fixture("fig1_open");
  EXPECT_FALSE(find_nontrivial_lower_delete(open, open.matroid()).has_value());
}

TEST(TrivialRules, EqualWeightTriangle) {
  const auto tri = all_trivial_triangle(1, 1, 1);
  const auto c = find_trivial_contract(tri, tri.matroid());
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->elements, set(tri, {"e1"}));
  const auto d = find_trivial_delete(tri, tri.matroid());
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->elements, set(tri, {"e1"}));
}

TEST(TrivialRules, HeavyTrivialElementIsDeleted) {
  const auto tri = all_trivial_triangle(3, 1, 1);
  EXPECT_THROW(find_trivial_delete(tri, tri.matroid()), ContractViolation);
  const auto sel = run_algorithm1(tri);
  EXPECT_EQ(sel.trace.steps.front().elements, set(tri, {"e1"}));
  EXPECT_FALSE(is_contraction(sel.trace.steps.front().rule));
  EXPECT_EQ(sel.basis, set(tri, {"e2", "e3"}));
}

TEST(TrivialRules, AbsentWithoutTrivialElements) {
  const auto open = fixture("fig1_open");
  EXPECT_FALSE(find_trivial_contract(open, open.matroid()).has_value());
  EXPECT_FALSE(find_trivial_delete(open, open.matroid()).has_value());
}

TEST(Algorithm1, FigureTwoPicksT) {
  const auto fig2 = fixture("fig2");
  const auto sel = run_algorithm1(fig2);
  EXPECT_EQ(sel.basis, set(fig2, {"e1", "e2", "e5"}));
  const std::vector<std::string> expected{
      "rule=UniqueMaxDelete element=e4 justification=e1,e2,e4,e5",
      "rule=UniqueMinContract element=e2 justification=e2",
      "rule=UniqueMinContract element=e5 justification=e5",
      "rule=NonTrivialUpperContract element=e1 justification=e1,e3",
      "rule=UniqueMaxDelete element=e3 justification=e3",
  };
  const auto lines = format_trace(fig2, sel.trace);
  ASSERT_EQ(lines.size(), expected.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    EXPECT_EQ(lines[i].substr(0, lines[i].find(" justification")),
              expected[i].substr(0, expected[i].find(" justification")));
  }
  EXPECT_EQ(replay(fig2, sel.trace).contracted, sel.basis);
}

TEST(Algorithm1, ClosedTriangleAndTrivialInstance) {
  const auto closed = fixture("fig1_closed");
  const auto sel = run_algorithm1(closed);
  EXPECT_TRUE(is_basis(closed.matroid(), sel.basis));
  EXPECT_EQ(min_cert_for_basis(closed, sel.basis).min_cost, 2);
  const auto tri = all_trivial_triangle(2, 1, 3);
  EXPECT_EQ(run_algorithm1(tri).basis, greedy_mwb(tri.matroid(), tri.weights()));
}

TEST(Algorithm1, SeedMustBeCompatible) {
  const auto fig2 = fixture("fig2");
  const auto seeded =
      run_algorithm1(fig2, MinorState{fig2.empty_set(), set(fig2, {"e2", "e3", "e5"})});
  EXPECT_EQ(seeded.basis, set(fig2, {"e2", "e3", "e5"}));
  EXPECT_THROW(run_algorithm1(fig2, MinorState{fig2.empty_set(), fig2.all()}),
               ContractViolation);
}

// Replays a prefix of the trace.
MinorState state_after(const UncertainInstance& inst, const SelectionTrace& t,
                       std::size_t steps) {
  SelectionTrace prefix = t;
  prefix.steps.resize(steps);
  return replay(inst, prefix);
}

class RandomSelection : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RandomSelection, EngineInvariants) {
  const auto inst = generate_small(GetParam(), 7);
  const auto sel = run_algorithm1(inst);
  const auto oracle = min_cost_certificate(inst);
  EXPECT_LE(sel.trace.steps.size(), inst.size() + 1);
  EXPECT_TRUE(is_mwb(inst, sel.basis));
  for (std::size_t i = 0; i < sel.trace.steps.size(); ++i) {
    const auto before = state_after(inst, sel.trace, i);
    const auto view = minor(inst.matroid(), before);
    const auto rule = sel.trace.steps[i].rule;
    if (rule == Rule::kTrivialContract || rule == Rule::kTrivialDelete ||
        rule == Rule::kFinalMwbSplit) {
      EXPECT_FALSE(find_unique_max_delete(inst, view).has_value());
      EXPECT_FALSE(find_unique_min_contract(inst, view).has_value());
      EXPECT_FALSE(find_nontrivial_upper_contract(inst, view).has_value());
      EXPECT_FALSE(find_nontrivial_lower_delete(inst, view).has_value());
    }
    if (rule == Rule::kFinalMwbSplit) {
      for (const auto e : view.ground()) {
        EXPECT_FALSE(is_extreme_low(inst, e) || is_extreme_high(inst, e));
      }
    }
    const auto after = state_after(inst, sel.trace, i + 1);
    bool compatible = false;
    for (const auto& opt : oracle.optimal) {
      compatible = compatible || (after.contracted.is_subset_of(opt.basis) &&
                                  !after.deleted.intersects(opt.basis));
    }
    EXPECT_TRUE(compatible) << "after step " << i;
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomSelection, ::testing::Range<std::uint64_t>(2000, 2150));

}  // namespace
}  // namespace umv
