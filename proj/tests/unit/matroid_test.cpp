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

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "umv/errors.hpp"

namespace umv {
namespace {

using testing::fixture;
using testing::set;

ElementId id(std::uint32_t v) { return ElementId(v); }

TEST(Independence, UniformRankOne) {
  const auto m = Matroid::uniform(2, 1);
  EXPECT_TRUE(m.is_independent(ElementSet(2, {id(0)})));
  EXPECT_FALSE(m.is_independent(ElementSet(2, {id(0), id(1)})));
}

TEST(Independence, TriangleOfFigureOne) {
  const auto inst = fixture("fig1_open");
  EXPECT_FALSE(inst.matroid().is_independent(set(inst, {"e1", "e2", "e3"})));
  EXPECT_TRUE(inst.matroid().is_independent(set(inst, {"e2", "e3"})));
}

TEST(Independence, ExplicitBases) {
  const auto m = Matroid::from_bases(2, {ElementSet(2, {id(0), id(1)})});
  EXPECT_TRUE(m.is_independent(ElementSet(2, {id(0)})));
  EXPECT_THROW(m.is_independent(ElementSet(3, {id(2)})), DomainError);
}

TEST(Independence, ExplicitRejectsNonMatroid) {
  // {0,1} and {2,3}: exchanging 0 for neither 2 nor 3 alone works.
  EXPECT_THROW(Matroid::from_bases(4, {ElementSet(4, {id(0), id(1)}),
                                       ElementSet(4, {id(2), id(3)})}),
               DomainError);
}

TEST(Independence, PartitionCapacities) {
  const auto m = Matroid::partition({0, 0, 1}, {1, 1});
  EXPECT_TRUE(m.is_independent(ElementSet(3, {id(0), id(2)})));
  EXPECT_FALSE(m.is_independent(ElementSet(3, {id(0), id(1)})));
}

TEST(Independence, SelfLoopIsDependent) {
  const auto m = Matroid::graphic(2, {{0, 0}, {0, 1}});
  EXPECT_FALSE(m.is_independent(ElementSet(2, {id(0)})));
  EXPECT_TRUE(m.is_independent(ElementSet(2, {id(1)})));
}

TEST(Rank, Examples) {
  const auto inst = fixture("fig1_open");
  const MatroidView m(inst.matroid());
  EXPECT_EQ(rank(m, inst.empty_set()), 0u);
  EXPECT_EQ(rank(m, inst.all()), 2u);
  const auto u = Matroid::uniform(5, 2);
  EXPECT_EQ(rank(u, ElementSet::full(5)), 2u);
}

TEST(Span, Examples) {
  const auto tri = fixture("fig1_open");
  EXPECT_EQ(span(tri.matroid(), tri.empty_set()), tri.empty_set());
  const auto fig2 = fixture("fig2");
  EXPECT_EQ(span(fig2.matroid(), set(fig2, {"e2", "e3"})),
            set(fig2, {"e2", "e3", "e4"}));
  EXPECT_EQ(span(fig2.matroid(), set(fig2, {"e1", "e2", "e5"})), fig2.all());
}

TEST(FundamentalCircuit, Examples) {
  const auto fig2 = fixture("fig2");
  const auto t = set(fig2, {"e1", "e2", "e5"});
  EXPECT_EQ(fundamental_circuit(fig2.matroid(), t, fig2.id("e3")),
            set(fig2, {"e1", "e3", "e5"}));
  EXPECT_EQ(fundamental_circuit(fig2.matroid(), t, fig2.id("e4")),
            set(fig2, {"e1", "e2", "e4", "e5"}));
  const auto tri = fixture("fig1_open");
  EXPECT_EQ(fundamental_circuit(tri.matroid(), set(tri, {"e2", "e3"}),
                                tri.id("e1")),
            tri.all());
}

TEST(CocircuitComplement, Examples) {
  const auto fig2 = fixture("fig2");
  const auto t = set(fig2, {"e1", "e2", "e5"});
  EXPECT_EQ(cocircuit_complement(fig2.matroid(), t, fig2.id("e2")),
            set(fig2, {"e2", "e4"}));
  const auto tri = fixture("fig1_open");
  EXPECT_EQ(cocircuit_complement(tri.matroid(), set(tri, {"e2", "e3"}),
                                 tri.id("e2")),
            set(tri, {"e1", "e2"}));
  const auto free = Matroid::uniform(3, 3);
  EXPECT_EQ(cocircuit_complement(free, ElementSet::full(3), id(1)),
            ElementSet(3, {id(1)}));
}

TEST(Minor, Examples) {
  const auto fig2 = fixture("fig2");
  const MatroidView whole(fig2.matroid());
  const MatroidView same = minor(whole, {fig2.empty_set(), fig2.empty_set()});
  EXPECT_EQ(rank(same, fig2.all()), rank(whole, fig2.all()));
  const MatroidView v =
      minor(whole, {set(fig2, {"e4"}), set(fig2, {"e2"})});
  EXPECT_TRUE(is_independent(v, set(fig2, {"e1", "e5"})));
  EXPECT_EQ(v.full_rank(), 2u);
  const MatroidView done =
      minor(whole, {fig2.empty_set(), set(fig2, {"e1", "e2", "e5"})});
  EXPECT_EQ(done.full_rank(), 0u);
  for (const auto e : done.ground()) {
    EXPECT_FALSE(is_independent(done, ElementSet(5, {e})));
  }
}

TEST(Minor, RejectsRankLoweringDeletion) {
  const auto tri = fixture("fig1_open");
  EXPECT_THROW(minor(tri.matroid(), {set(tri, {"e1", "e2"}), tri.empty_set()}),
               ContractViolation);
  EXPECT_THROW(minor(tri.matroid(), {tri.empty_set(), tri.all()}),
               ContractViolation);
}

TEST(Greedy, Examples) {
  const auto fig2 = fixture("fig2");
  const auto b = greedy_mwb(fig2.matroid(), fig2.weights());
  EXPECT_EQ(total_weight(b, fig2.weights()), 8);
  const auto u = Matroid::uniform(4, 2);
  EXPECT_EQ(greedy_mwb(u, Weights(4, Rational(1))), ElementSet(4, {id(0), id(1)}));
  const auto path = Matroid::graphic(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(greedy_mwb(path, {1, 2, 3}), ElementSet::full(3));
}

class RandomMatroids : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RandomMatroids, Properties) {
  const auto inst = generate_small(GetParam(), 8);
  const MatroidView m(inst.matroid());
  const std::size_t n = inst.size();
  Rng rng(GetParam() * 7 + 1);
  const auto bases = all_bases(inst.matroid());
  ASSERT_FALSE(bases.empty());

  // Augmentation.
  for (int trial = 0; trial < 20; ++trial) {
    const auto i = maximal_independent_subset(m, testing::random_subset(rng, n));
    const auto j = maximal_independent_subset(m, testing::random_subset(rng, n));
    if (i.size() >= j.size()) continue;
    bool found = false;
    for (const auto e : j - i) found = found || is_independent(m, i.with(e));
    EXPECT_TRUE(found);
  }

  // Circuit / cocircuit duality.
  for (const auto& b : bases) {
    for (const auto e : b.complement()) {
      const auto c = fundamental_circuit(m, b, e);
      for (const auto f : c & b) {
        EXPECT_TRUE(c.without(f).intersects(cocircuit_complement(m, b, f)));
      }
    }
  }

  // Span laws and minor composition.
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = testing::random_subset(rng, n);
    const auto t = s | testing::random_subset(rng, n);
    EXPECT_EQ(span(m, span(m, s)), span(m, s));
    EXPECT_TRUE(span(m, s).is_subset_of(span(m, t)));
    EXPECT_EQ(rank(m, span(m, s)), rank(m, s));

    const auto& b = testing::pick(rng, bases);
    const auto k1 = b & testing::random_subset(rng, n);
    const auto k2 = (b - k1) & testing::random_subset(rng, n);
    const auto d1 = b.complement() & testing::random_subset(rng, n);
    const auto d2 = (b.complement() - d1) & testing::random_subset(rng, n);
    const auto step = minor(minor(m, {d1, k1}), {d2, k2});
    const auto once = minor(m, {d1 | d2, k1 | k2});
    EXPECT_EQ(step.ground(), once.ground());
    const auto probe = testing::random_subset(rng, n) & once.ground();
    EXPECT_EQ(is_independent(step, probe), is_independent(once, probe));
  }

  // Greedy reaches the enumerated minimum.
  Rational best = total_weight(bases.front(), inst.weights());
  for (const auto& b : bases) best = std::min(best, total_weight(b, inst.weights()));
  EXPECT_EQ(total_weight(greedy_mwb(m, inst.weights()), inst.weights()), best);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomMatroids, ::testing::Range<std::uint64_t>(1, 61));

}  // namespace
}  // namespace umv
