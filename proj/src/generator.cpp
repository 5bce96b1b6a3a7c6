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

#include "umv/generator.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <vector>

#include "umv/errors.hpp"

namespace umv {
namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::stringstream in{std::string(text)};
  std::string part;
  while (std::getline(in, part, sep)) out.push_back(part);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::size_t parse_count(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto v = std::stoul(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw DomainError("infeasible profile: bad count \"" + s + "\"");
  }
}

void check(const Profile& p) {
  auto fail = [](const std::string& why) {
    throw DomainError("infeasible profile: " + why);
  };
  if (p.elements == 0) fail("no elements");
  if (p.elements > 64) fail("more than 64 elements");
  if (p.backend == Backend::kGraphic && p.vertices < 2) fail("fewer than 2 vertices");
  if (p.backend == Backend::kUniform && p.rank > p.elements) {
    fail("rank exceeds ground-set size");
  }
  if (p.backend == Backend::kPartition && p.blocks == 0) fail("no blocks");
  if (p.span == 0 || p.denominator == 0) fail("empty value grid");
  const auto& m = p.mix;
  if (m.open + m.closed + m.two_point + m.union_of_pieces + m.trivial == 0) {
    fail("empty shape mix");
  }
  if (p.two_point && !(p.two_point->first < p.two_point->second)) {
    fail("two-point area needs L < U");
  }
}

class Builder {
 public:
  Builder(Rng& rng, const Profile& p) : rng_(rng), p_(p) {}

  Rational grid() {
    Rational v(static_cast<long>(rng_.below(p_.span * p_.denominator + 1)),
               static_cast<unsigned long>(p_.denominator));
    v.canonicalize();
    return v;
  }

  // Two distinct grid values, ascending.
  std::pair<Rational, Rational> span() {
    Rational a = grid();
    Rational b = grid();
    while (a == b) b = grid();
    if (b < a) std::swap(a, b);
    return {a, b};
  }

  UncertaintyArea area() {
    if (p_.two_point) {
      return UncertaintyArea({IntervalPiece::point(p_.two_point->first),
                              IntervalPiece::point(p_.two_point->second)});
    }
    const auto& m = p_.mix;
    const unsigned total =
        m.open + m.closed + m.two_point + m.union_of_pieces + m.trivial;
    unsigned roll = static_cast<unsigned>(rng_.below(total));
    if (roll < m.open) {
      const auto [a, b] = span();
      return UncertaintyArea::open(a, b);
    }
    roll -= m.open;
    if (roll < m.closed) {
      const auto [a, b] = span();
      return UncertaintyArea::closed(a, b);
    }
    roll -= m.closed;
    if (roll < m.two_point) {
      const auto [a, b] = span();
      return UncertaintyArea({IntervalPiece::point(a), IntervalPiece::point(b)});
    }
    roll -= m.two_point;
    if (roll < m.union_of_pieces) {
      Rational pts[4];
      for (auto& x : pts) x = grid();
      std::sort(std::begin(pts), std::end(pts));
      // Need lo1 < hi1 < lo2 < hi2; widen the grid draw until distinct.
      if (pts[0] == pts[1] || pts[1] == pts[2] || pts[2] == pts[3]) {
        const Rational base = pts[0];
        const Rational step(1, static_cast<unsigned long>(p_.denominator));
        for (int i = 1; i < 4; ++i) pts[i] = base + step * i;
      }
      return UncertaintyArea({
          IntervalPiece{pts[0], pts[1], rng_.chance(50), rng_.chance(50)},
          IntervalPiece{pts[2], pts[3], rng_.chance(50), rng_.chance(50)}});
    }
    return UncertaintyArea::point(grid());
  }

  // Quarter points of the pieces that lie in the area.
  Rational weight(const UncertaintyArea& a) {
    std::vector<Rational> options;
    for (const auto& piece : a.pieces()) {
      for (int k = 0; k <= 4; ++k) {
        Rational v = piece.lo + (piece.hi - piece.lo) * k / 4;
        v.canonicalize();
        if (a.contains(v) &&
            std::find(options.begin(), options.end(), v) == options.end()) {
          options.push_back(v);
        }
      }
    }
    return options[rng_.below(options.size())];
  }

 private:
  Rng& rng_;
  const Profile& p_;
};

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw ContractViolation("empty range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw ContractViolation("empty range");
  return lo + static_cast<std::int64_t>(
                  below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Profile parse_profile(std::string_view text) {
  auto options = split(text, ',');
  if (options.empty()) throw DomainError("infeasible profile: empty");
  const auto parts = split(options[0], ':');
  if (parts.size() != 3) {
    throw DomainError("infeasible profile \"" + std::string(text) +
                      "\": expected KIND:A:B");
  }
  Profile p;
  const auto& kind = parts[0];
  if (kind == "graphic") {
    p.backend = Backend::kGraphic;
    p.vertices = parse_count(parts[1]);
    p.elements = parse_count(parts[2]);
  } else if (kind == "uniform") {
    p.backend = Backend::kUniform;
    p.elements = parse_count(parts[1]);
    p.rank = parse_count(parts[2]);
  } else if (kind == "partition") {
    p.backend = Backend::kPartition;
    p.elements = parse_count(parts[1]);
    p.blocks = parse_count(parts[2]);
  } else if (kind == "two_point") {
    try {
      p.two_point = std::make_pair(parse_rational(parts[1]),
                                   parse_rational(parts[2]));
    } catch (const std::invalid_argument&) {
      throw DomainError("infeasible profile: bad two-point limits");
    }
  } else {
    throw DomainError("infeasible profile: unknown kind \"" + kind + "\"");
  }
  for (std::size_t i = 1; i < options.size(); ++i) {
    if (options[i] == "unit") {
      p.unit_costs = true;
    } else {
      throw DomainError("infeasible profile: unknown option \"" + options[i] +
                        "\"");
    }
  }
  check(p);
  return p;
}

UncertainInstance generate_random(std::uint64_t seed, const Profile& profile) {
  check(profile);
  Rng rng(seed);
  Profile p = profile;
  if (p.two_point && profile.backend == Backend::kGraphic &&
      profile.vertices == Profile{}.vertices &&
      profile.elements == Profile{}.elements) {
    // Bare two-point profile: backend and size come from the seed.
    p.backend = static_cast<Backend>(rng.below(3));
    p.elements = static_cast<std::size_t>(rng.between(2, 6));
    p.vertices = static_cast<std::size_t>(rng.between(2, 4));
    p.rank = static_cast<std::size_t>(rng.between(1, p.elements));
    p.blocks = static_cast<std::size_t>(rng.between(1, 3));
  }
  const std::size_t n = p.elements;
  Matroid m = [&] {
    switch (p.backend) {
      case Backend::kGraphic: {
        std::vector<Matroid::Edge> edges;
        for (std::size_t i = 0; i < n; ++i) {
          const auto u = rng.below(p.vertices);
          auto v = rng.below(p.vertices - 1);
          if (v >= u) ++v;
          edges.emplace_back(u, v);
        }
        return Matroid::graphic(p.vertices, std::move(edges));
      }
      case Backend::kUniform:
        return Matroid::uniform(n, p.rank);
      case Backend::kPartition: {
        std::vector<std::size_t> block_of(n);
        std::vector<std::size_t> members(p.blocks, 0);
        for (auto& b : block_of) ++members[b = rng.below(p.blocks)];
        std::vector<std::size_t> capacity(p.blocks);
        for (std::size_t j = 0; j < p.blocks; ++j) {
          capacity[j] = static_cast<std::size_t>(
              rng.between(0, static_cast<std::int64_t>(std::max<std::size_t>(
                                 members[j], 1))));
        }
        return Matroid::partition(std::move(block_of), std::move(capacity));
      }
    }
    throw ContractViolation("unknown backend");
  }();

  const std::size_t width = std::to_string(n).size();
  std::vector<std::string> names;
  std::vector<UncertaintyArea> areas;
  Weights weights, costs;
  Builder build(rng, p);
  for (std::size_t i = 0; i < n; ++i) {
    std::string digits = std::to_string(i + 1);
    names.push_back("e" + std::string(width - digits.size(), '0') + digits);
    areas.push_back(build.area());
    weights.push_back(build.weight(areas.back()));
    costs.emplace_back(p.unit_costs ? 1 : static_cast<long>(rng.between(1, 3)));
  }
  return UncertainInstance(std::move(m), std::move(names), std::move(areas),
                           std::move(weights), std::move(costs));
}

UncertainInstance generate_small(std::uint64_t seed, std::size_t max_elements,
                                 const ShapeMix& mix, bool unit_costs) {
  if (max_elements < 2) throw DomainError("infeasible profile: too small");
  Rng rng(seed);
  Profile p;
  p.mix = mix;
  p.unit_costs = unit_costs;
  p.backend = static_cast<Backend>(rng.below(3));
  p.elements = static_cast<std::size_t>(
      rng.between(2, static_cast<std::int64_t>(max_elements)));
  p.vertices = static_cast<std::size_t>(rng.between(2, 5));
  p.rank = static_cast<std::size_t>(
      rng.between(1, static_cast<std::int64_t>(p.elements)));
  p.blocks = static_cast<std::size_t>(rng.between(1, 3));
  return generate_random(rng.below(std::numeric_limits<std::uint64_t>::max()),
                         p);
}

}  // namespace umv
