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

#ifndef UMV_GENERATOR_HPP_
#define UMV_GENERATOR_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "umv/uncertainty.hpp"

namespace umv {

/// mt19937_64 with hand-written bounded draws so that a seed produces the
/// same instance on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  bool chance(std::uint64_t percent) { return below(100) < percent; }

 private:
  std::mt19937_64 engine_;
};

/// Relative frequencies of area shapes; need not sum to 100.
struct ShapeMix {
  unsigned open = 25;
  unsigned closed = 25;
  unsigned two_point = 15;
  unsigned union_of_pieces = 15;
  unsigned trivial = 20;
};

enum class Backend { kGraphic, kUniform, kPartition };

struct Profile {
  Backend backend = Backend::kGraphic;
  std::size_t vertices = 4;  // graphic
  std::size_t elements = 5;  // edges, or ground-set size
  std::size_t rank = 2;      // uniform
  std::size_t blocks = 2;    // partition
  ShapeMix mix;
  /// When set, every area is exactly {L, U}.
  std::optional<std::pair<Rational, Rational>> two_point;
  bool unit_costs = false;  // otherwise costs are drawn from {1, 2, 3}
  /// Endpoints are drawn from {0, 1/denominator, ..., span}.
  unsigned span = 6;
  unsigned denominator = 2;
};

/// "graphic:V:E", "uniform:N:K", "partition:N:B", "two_point:L:U" (the
/// backend is then drawn per seed with up to 6 elements), optionally
/// followed by ",unit". Throws DomainError for infeasible profiles.
Profile parse_profile(std::string_view text);

UncertainInstance generate_random(std::uint64_t seed, const Profile& profile);

/// A small instance (at most max_elements elements) with the backend, size
/// and costs drawn from the seed.
UncertainInstance generate_small(std::uint64_t seed, std::size_t max_elements,
                                 const ShapeMix& mix = {},
                                 bool unit_costs = false);

}  // namespace umv

#endif  // UMV_GENERATOR_HPP_
