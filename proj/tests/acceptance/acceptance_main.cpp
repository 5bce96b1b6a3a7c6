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


// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "umv/basis_selection.hpp"
#include "umv/bruteforce_oracle.hpp"
#include "umv/certificate_check.hpp"
#include "umv/certificate_synthesis.hpp"
#include "umv/errors.hpp"
#include "umv/generator.hpp"
#include "umv/learning_augmented.hpp"
#include "umv/online_adaptive.hpp"

namespace umv {
namespace {

using testing::fixture;
using testing::set;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

using Seconds = std::chrono::duration<double>;

Rational cert_cost(const UncertainInstance& inst) {
  return algorithm2(inst).certificate.total_cost;
}

// 1. Minimum certificate costs on the three triangles.
void figure_one(Outcome& out) {
  const std::vector<std::pair<const char*, int>> cases{
      {"fig1_open", 3}, {"fig1_closed", 2}, {"fig1_mixed", 0}};
  for (const auto& [name, expected] : cases) {
    const auto inst = fixture(name);
    const auto oracle = min_cost_certificate(inst).min_cost;
    const auto certify = cert_cost(inst);
    out.require(oracle == expected, std::string(name) + " oracle " + to_string(oracle));
    out.require(certify == expected, std::string(name) + " certify " + to_string(certify));
    out.detail << name << "=" << to_string(certify) << " ";
  }
}

// 2. Two MWBs of the fig2 fixture with different verification costs.
void figure_two(Outcome& out) {
  const auto fig2 = fixture("fig2");
  const auto r = algorithm2(fig2);
  out.require(r.basis == set(fig2, {"e1", "e2", "e5"}), "basis of certify");
  out.require(r.certificate.total_cost == 2, "certify cost");
  const auto t_prime = certify_given_basis(fig2, set(fig2, {"e2", "e3", "e5"}));
  out.require(t_prime.query.total_cost == 3, "cost with basis e2,e3,e5");
  out.require(min_cost_certificate(fig2).min_cost == 2, "oracle cost");
  out.require(min_cert_for_basis(fig2, set(fig2, {"e2", "e3", "e5"})).min_cost == 3,
              "oracle cost for e2,e3,e5");
  out.detail << "T=" << to_string(r.certificate.total_cost)
             << " T'=" << to_string(t_prime.query.total_cost) << " ";
}

// 3. algorithm2 matches the brute-force minimum.
void master_property(Outcome& out) {
  const std::size_t count = 2000;
  std::size_t backends[3] = {0, 0, 0};
  for (std::uint64_t seed = 0; seed < count; ++seed) {
    const auto inst = generate_small(100000 + seed, 7);
    const auto r = algorithm2(inst);
    const auto best = min_cost_certificate(inst).min_cost;
    out.require(r.certificate.total_cost == best, "seed " + std::to_string(100000 + seed));
    out.require(verifies_cuts(inst, r.certificate, r.basis).valid,
                "unverified certificate, seed " + std::to_string(100000 + seed));
    const auto& base = inst.matroid();
    ++backends[base.kind() == MatroidKind::kGraphic    ? 0
               : base.kind() == MatroidKind::kUniform ? 1
                                                         : 2];
  }
  out.detail << count << " instances (graphic " << backends[0] << ", uniform "
             << backends[1] << ", partition " << backends[2] << ") ";
}

// 4. Three verification procedures agree.
void characterizations(Outcome& out) {
  std::size_t triples = 0, valid = 0;
  for (std::uint64_t seed = 0; triples < 1200; ++seed) {
    const auto inst = generate_small(200000 + seed, 7);
    Rng rng(seed);
    const auto mwbs = all_mwbs(inst);
    for (int t = 0; t < 3; ++t, ++triples) {
      const auto& b = testing::pick(rng, mwbs);
      const auto q = testing::random_subset(rng, inst.size());
      const bool cuts = verifies_cuts(inst, q, b).valid;
      const bool circuits = verifies_circuits(inst, q, b).valid;
      const bool sampled = verify_by_sampling(inst, q, b);
      out.require(cuts == circuits && cuts == sampled,
                  "seed " + std::to_string(200000 + seed));
      valid += cuts;
    }
  }
  out.detail << triples << " triples, " << valid << " valid ";
}

// 5. Vertex covers of the auxiliary graph are exactly the certificates.
void cover_equivalence(Outcome& out) {
  std::size_t triples = 0, covers = 0;
  for (std::uint64_t seed = 0; triples < 600; ++seed) {
    const auto inst = generate_small(300000 + seed, 7);
    Rng rng(seed);
    const auto mwbs = all_mwbs(inst);
    for (int t = 0; t < 3; ++t, ++triples) {
      const auto& b = testing::pick(rng, mwbs);
      const auto g = build_auxiliary_graph(inst, b);
      const auto s = testing::random_subset(rng, inst.size());
      const bool cover = is_vertex_cover(g, s);
      out.require(cover == verifies_cuts(inst, s, b).valid,
                  "seed " + std::to_string(300000 + seed));
      covers += cover;
    }
  }
  out.require(covers > 0 && covers < triples, "both directions exercised");
  out.detail << triples << " triples, " << covers << " covers ";
}

// 6. Promise algorithm queries at most twice the optimum.
void online_bound(Outcome& out) {
  std::size_t runs = 0;
  Rational worst = 0;
  for (std::uint64_t seed = 0; seed < 600; ++seed, ++runs) {
    const auto inst = generate_small(400000 + seed, 7);
    try {
      const auto row = competitive_report(inst);
      out.require(row.queries <= 2 * row.optimum, "seed " + std::to_string(400000 + seed));
      if (row.ratio > worst) worst = row.ratio;
    } catch (const InvariantFailure& e) {
      out.require(false, "seed " + std::to_string(400000 + seed) + ": " + e.what());
    }
  }
  const auto fig2 = competitive_report(fixture("fig2"));
  out.require(fig2.queries == 4 && fig2.optimum == 2, "fig2 not 4 vs 2");
  out.detail << runs << " runs, worst ratio " << to_string(worst) << ", fig2 "
             << fig2.queries << " vs " << fig2.optimum << " ";
}

// 7. Prediction-driven strategies.
void learning_augmented(Outcome& out) {
  std::size_t pairs = 0, instances = 0;
  long max_eta2 = 0;
  for (std::uint64_t seed = 0; pairs < 600; ++seed, ++instances) {
    const auto inst = generate_small(500000 + seed, 7).with_unit_costs();
    const std::string tag = "seed " + std::to_string(500000 + seed);
    const std::size_t n = inst.size();
    const std::size_t opt = min_cost_certificate(inst).min_cost.get_num().get_ui();
    Rng rng(seed);

    QueryEnvironment perfect(inst);
    const auto w = run_weight_prediction(
        perfect, make_weight_prediction(inst.areas(), inst.weights()));
    out.require(w.q.elements.size() == opt, tag + " perfect weights");

    Weights noise(n);
    for (auto& v : noise) v = Rational(static_cast<long>(rng.below(13)), 2);
    QueryEnvironment noisy(inst);
    const auto wn = run_weight_prediction(noisy, make_weight_prediction(inst.areas(), noise));
    out.require(wn.q.elements.size() <= n, tag + " noisy weights exceed n");

    const auto engine = run_algorithm1(inst).basis;
    for (int t = 0; t < 3; ++t, ++pairs) {
      const auto b_hat = testing::corrupt(rng, inst, engine);
      QueryEnvironment env(inst);
      const auto r = run_basis_prediction(env, b_hat);
      const auto err = error_report(inst, b_hat);
      out.require(static_cast<long>(r.q.elements.size()) <= err.bound(opt, n),
                  tag + " bound");
      ElementSet trusted;
      out.require(err.eta2 == testing::brute_eta2(inst, b_hat, trusted), tag + " eta2");
      out.require(err.trusted == trusted, tag + " trusted part");
      out.require(err.eta1 == testing::brute_eta1(inst, trusted), tag + " eta1");
      if (err.eta2 > max_eta2) max_eta2 = err.eta2;
    }
  }
  out.detail << instances << " instances, " << pairs << " corrupted predictions, max eta2 "
             << max_eta2 << " ";
}

// 8. Adaptive versus non-adaptive verification on the gap family.
void gap_family(Outcome& out) {
  for (const std::size_t n : {3, 5}) {
    for (const Rational rho : {Rational(2), Rational(4), Rational(static_cast<long>(n))}) {
      const auto g = gap_instance(rho, n);
      const std::string tag = "rho " + to_string(rho) + " n " + std::to_string(n);
      const auto adaptive = min_cost_certificate(g).min_cost;
      out.require(adaptive == g.cost(g.id("e1")) && adaptive == 1, tag + " adaptive");
      out.require(cert_cost(g) == adaptive, tag + " certify");
      out.require(is_universal_certificate(g, g.all()), tag + " E not universal");
      for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        out.require(!is_universal_certificate(g, ElementSet::from_mask(n, mask)),
                    tag + " proper subset universal");
      }
      const Rational ratio = total_weight(g.all(), g.costs()) / adaptive;
      out.require(ratio == rho, tag + " ratio " + to_string(ratio));
      out.detail << "(" << to_string(rho) << "," << n << ")=" << to_string(ratio) << " ";
    }
  }
}

// 9. Two-point areas with unit costs: every MWB costs the same to verify.
void two_point(Outcome& out) {
  const std::vector<std::string> profiles{"two_point:1:3,unit", "two_point:0:1,unit",
                                          "two_point:2:5,unit", "two_point:1/2:7/2,unit"};
  std::size_t count = 0, multi = 0;
  for (std::uint64_t seed = 0; count < 240; ++seed, ++count) {
    const auto inst = generate_random(600000 + seed, parse_profile(profiles[seed % 4]));
    const auto mwbs = all_mwbs(inst);
    const auto first = min_cert_for_basis(inst, mwbs.front()).min_cost;
    for (const auto& b : mwbs) {
      out.require(min_cert_for_basis(inst, b).min_cost == first,
                  "seed " + std::to_string(600000 + seed));
    }
    multi += mwbs.size() > 1;
  }
  out.detail << count << " instances, " << multi << " with several MWBs ";
}

// 10. Certificate exchanges keep certificates valid.
void exchange_rewrites(Outcome& out) {
  const ExchangeKind kinds[3] = {ExchangeKind::kUpper, ExchangeKind::kLower,
                                 ExchangeKind::kTrivial};
  std::size_t found[3] = {0, 0, 0};
  std::uint64_t seed = 0;
  for (; seed < 20000 && (found[0] < 150 || found[1] < 150 || found[2] < 150); ++seed) {
    Rng rng(700000 + seed);
    Profile p;
    p.backend = static_cast<Backend>(rng.below(3));
    p.elements = static_cast<std::size_t>(rng.between(2, 6));
    p.vertices = static_cast<std::size_t>(rng.between(2, 4));
    p.rank = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(p.elements)));
    p.blocks = static_cast<std::size_t>(rng.between(1, 3));
    p.span = 2;
    p.denominator = 1;
    const auto inst = generate_random(rng.below(1u << 30), p);
    std::vector<std::pair<QuerySet, ElementSet>> pairs;
    for (const auto& o : min_cost_certificate(inst).optimal) pairs.emplace_back(o.q, o.basis);
    for (const auto& b : all_mwbs(inst)) pairs.emplace_back(make_query_set(inst, inst.all()), b);
    for (const auto& [q, b] : pairs) {
      for (const auto e : inst.all()) {
        for (const auto e2 : inst.all()) {
          for (int k = 0; k < 3; ++k) {
            Rewrite r;
            try {
              r = exchange_rewrite(inst, q, b, e, e2, kinds[k]);
            } catch (const ContractViolation&) {
              continue;
            }
            ++found[k];
            out.require(is_mwb(inst, r.basis) && verifies_cuts(inst, r.q, r.basis).valid,
                        "seed " + std::to_string(700000 + seed));
          }
        }
      }
    }
  }
  out.require(found[0] >= 100 && found[1] >= 100 && found[2] >= 100,
              "too few configurations");
  out.detail << "upper " << found[0] << ", lower " << found[1] << ", trivial " << found[2]
             << " over " << seed << " instances ";
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0 when no time bound applies
  std::function<void(Outcome&)> run;
};

}  // namespace
}  // namespace umv

int main() {
  using namespace umv;
  const std::vector<Criterion> criteria{
      {1, "figure-one-triangles", 1, figure_one},
      {2, "figure-two-bases", 1, figure_two},
      {3, "algorithm2-matches-brute-force", 300, master_property},
      {4, "cut-circuit-sampling-agreement", 0, characterizations},
      {5, "vertex-cover-equivalence", 0, cover_equivalence},
      {6, "promise-two-competitive", 0, online_bound},
      {7, "prediction-bounds", 0, learning_augmented},
      {8, "gap-family-ratio", 0, gap_family},
      {9, "two-point-equal-costs", 0, two_point},
      {10, "exchange-rewrites", 0, exchange_rewrites},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = Seconds(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0) {
      out.require(secs < c.limit_seconds, "over time limit");
    }
    failures += !out.ok;
    std::cout << (out.ok ? "PASS " : "FAIL ") << c.id << " " << c.name << ": "
              << out.detail.str() << "[" << secs << " s]" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
