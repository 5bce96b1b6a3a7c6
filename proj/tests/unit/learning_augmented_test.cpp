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

#include "umv/learning_augmented.hpp"

#include <algorithm>
#include <gtest/gtest.h>

#include "test_support.hpp"
#include "umv/basis_selection.hpp"
#include "umv/certificate_check.hpp"
#include "umv/certificate_synthesis.hpp"
#include "umv/errors.hpp"

namespace umv {
namespace {

using testing::area;
using testing::fixture;
using testing::set;

Rational q(const char* s) { return parse_rational(s); }

TEST(Clamp, NearestPieceAndClosedSide) {
  EXPECT_EQ(clamp_to_area(area({"[1,2]"}), 5), 2);
  EXPECT_EQ(clamp_to_area(area({"[1,2]"}), q("3/2")), q("3/2"));
  EXPECT_EQ(clamp_to_area(area({"(0,1]"}), -3), 1);
  EXPECT_EQ(clamp_to_area(area({"(0,1)"}), 0), q("1/2"));
  EXPECT_EQ(clamp_to_area(area({"{0,1}"}), q("2/5")), 0);
  EXPECT_EQ(clamp_to_area(area({"[0,1)", "[2,3]"}), q("9/5")), 2);
  EXPECT_EQ(clamp_to_area(area({"[0,1)", "[2,3]"}), q("6/5")), 0);
}

TEST(Clamp, FlagsClampedElements) {
  const auto fig2 = fixture("fig2");
  const auto p = make_weight_prediction(fig2.areas(), {0, 2, 4, 5, 2});
  EXPECT_EQ(p.clamped, set(fig2, {"e1"}));
  EXPECT_EQ(p.weights[0], 1);
}

TEST(WeightPrediction, PerfectPredictionOnFigureTwo) {
  const auto fig2 = fixture("fig2");
  QueryEnvironment env(fig2);
  const auto r = run_weight_prediction(env, make_weight_prediction(fig2.areas(), fig2.weights()));
  EXPECT_EQ(r.q.elements, set(fig2, {"e3", "e4"}));
  EXPECT_FALSE(r.fell_back);
  EXPECT_TRUE(verifies_cuts(fig2, r.q, r.basis).valid);
}

TEST(WeightPrediction, MisleadingPredictionStaysWithinN) {
  const auto fig2 = fixture("fig2");
  for (const auto& raw : std::vector<Weights>{{4, 2, 4, 5, 2}, {1, 3, 7, 1, 3}}) {
    QueryEnvironment env(fig2);
    const auto r = run_weight_prediction(env, make_weight_prediction(fig2.areas(), raw));
    EXPECT_LE(r.q.elements.size(), 5u);
    EXPECT_TRUE(verifies_cuts(fig2, r.q, r.basis).valid);
  }
}

TEST(WeightPrediction, AllTrivialInstanceQueriesNothing) {
  const UncertainInstance trivial(
      Matroid::uniform(3, 2), {"a", "b", "c"},
      {UncertaintyArea::point(1), UncertaintyArea::point(2), UncertaintyArea::point(3)},
      {1, 2, 3}, {1, 1, 1});
  QueryEnvironment env(trivial);
  const auto r = run_weight_prediction(env, make_weight_prediction(trivial.areas(), {9, 9, 9}));
  EXPECT_EQ(r.q.elements.size(), 0u);
}

TEST(Sanitize, Examples) {
  const auto tri = fixture("fig1_open");
  EXPECT_EQ(sanitize_basis(tri.matroid(), tri.all()), set(tri, {"e1", "e2"}));
  EXPECT_EQ(sanitize_basis(tri.matroid(), set(tri, {"e2", "e3"})), set(tri, {"e2", "e3"}));
  EXPECT_EQ(sanitize_basis(tri.matroid(), tri.empty_set()), set(tri, {"e1", "e2"}));
}

TEST(Classify, FigureTwo) {
  const auto fig2 = fixture("fig2");
  const auto r = classify_prediction_circuits(fig2, set(fig2, {"e2", "e3", "e5"}));
  EXPECT_EQ(r.eta2, 0);
  EXPECT_EQ(r.c_max, 3u);
  EXPECT_EQ(r.trusted, set(fig2, {"e2", "e3", "e5"}));
  const auto bad = classify_prediction_circuits(fig2, set(fig2, {"e1", "e3", "e4"}));
  EXPECT_GE(bad.eta2, 1);
  EXPECT_TRUE(bad.incorrect_circuits.contains(fig2.id("e2")));
  EXPECT_EQ(bad.eta2, static_cast<long>(bad.incorrect_circuits.size()));
}

TEST(Classify, UniqueMinimumBasisHasNoIncorrectCircuit) {
  const UncertainInstance inst(
      Matroid::graphic(3, {{0, 1}, {1, 2}, {0, 2}}), {"a", "b", "c"},
      {area({"[0,9]"}), area({"[0,9]"}), area({"[0,9]"})}, {1, 2, 3}, {1, 1, 1});
  EXPECT_EQ(classify_prediction_circuits(inst, set(inst, {"a", "b"})).eta2, 0);
}

TEST(Eta1, Examples) {
  const auto fig2 = fixture("fig2");
  EXPECT_EQ(compute_eta1(fig2, set(fig2, {"e2", "e3", "e5"})), 1);
  EXPECT_EQ(compute_eta1(fig2, run_algorithm1(fig2).basis), 0);
  const auto closed = fixture("fig1_closed");
  EXPECT_EQ(compute_eta1(closed, run_algorithm1(closed).basis), 0);
}

TEST(BasisPrediction, FigureTwo) {
  const auto fig2 = fixture("fig2");
  QueryEnvironment env(fig2);
  const auto t = run_basis_prediction(env, set(fig2, {"e1", "e2", "e5"}));
  EXPECT_EQ(t.q.elements.size(), 4u);
  EXPECT_EQ(t.basis, set(fig2, {"e1", "e2", "e5"}));

  QueryEnvironment env2(fig2);
  const auto t2 = run_basis_prediction(env2, set(fig2, {"e2", "e3", "e5"}));
  EXPECT_LE(t2.q.elements.size(), 5u);
  EXPECT_TRUE(verifies_cuts(fig2, t2.q, t2.basis).valid);

  QueryEnvironment env3(fig2);
  const auto wrong = run_basis_prediction(env3, set(fig2, {"e1", "e3", "e4"}));
  EXPECT_TRUE(wrong.fallback.contains(fig2.id("e2")));
  EXPECT_TRUE(verifies_cuts(fig2, wrong.q, wrong.basis).valid);
}

TEST(BasisPrediction, AllTrivialInstanceQueriesNothing) {
  const UncertainInstance trivial(
      Matroid::uniform(3, 2), {"a", "b", "c"},
      {UncertaintyArea::point(1), UncertaintyArea::point(2), UncertaintyArea::point(3)},
      {1, 2, 3}, {1, 1, 1});
  for (const auto& b : all_bases(trivial.matroid())) {
    QueryEnvironment env(trivial);
    EXPECT_EQ(run_basis_prediction(env, b).q.elements.size(), 0u);
  }
}

class RandomPredictions : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RandomPredictions, BoundsAndErrorMeasures) {
  const auto inst = generate_small(GetParam(), 7).with_unit_costs();
  const std::size_t n = inst.size();
  const std::size_t opt = algorithm2(inst).certificate.elements.size();
  Rng rng(GetParam() * 3 + 5);

  QueryEnvironment perfect(inst);
  const auto w = run_weight_prediction(perfect, make_weight_prediction(inst.areas(), inst.weights()));
  EXPECT_EQ(w.q.elements.size(), opt);

  Weights noise(n);
  for (std::size_t i = 0; i < n; ++i) noise[i] = Rational(static_cast<long>(rng.below(8)));
  QueryEnvironment noisy(inst);
  const auto wn = run_weight_prediction(noisy, make_weight_prediction(inst.areas(), noise));
  EXPECT_LE(wn.q.elements.size(), n);
  EXPECT_TRUE(verifies_cuts(inst, wn.q, wn.basis).valid);

  const auto engine = run_algorithm1(inst).basis;
  QueryEnvironment consistent(inst);
  EXPECT_LE(run_basis_prediction(consistent, engine).q.elements.size(), 2 * opt);
  EXPECT_EQ(compute_eta1(inst, engine), 0);

  for (int trial = 0; trial < 3; ++trial) {
    const auto b_hat = testing::corrupt(rng, inst, engine);
    QueryEnvironment env(inst);
    const auto r = run_basis_prediction(env, b_hat);
    EXPECT_TRUE(verifies_cuts(inst, r.q, r.basis).valid);
    const auto err = error_report(inst, b_hat);
    EXPECT_LE(static_cast<long>(r.q.elements.size()), err.bound(opt, n));
    ElementSet trusted;
    EXPECT_EQ(err.eta2, testing::brute_eta2(inst, b_hat, trusted));
    EXPECT_EQ(err.trusted, trusted);
    EXPECT_EQ(err.eta1, testing::brute_eta1(inst, trusted));
    EXPECT_GE(err.eta1, 0);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomPredictions, ::testing::Range<std::uint64_t>(5000, 5150));

}  // namespace
}  // namespace umv
