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

#ifndef UMV_BRUTEFORCE_ORACLE_HPP_
#define UMV_BRUTEFORCE_ORACLE_HPP_

#include <optional>
#include <vector>

#include "umv/matroid.hpp"
#include "umv/uncertainty.hpp"

// Exhaustive reference computations for small instances.
namespace umv {

inline constexpr std::size_t kMaxBasisEnumeration = 16;
inline constexpr std::size_t kMaxCertificateEnumeration = 12;

struct OptimalCertificate {
  QuerySet q;
  ElementSet basis;
};

struct OracleResult {
  Rational min_cost;
  /// Every (Q, B) pair at the minimum cost, ordered by Q lexicographically,
  /// then B.
  std::vector<OptimalCertificate> optimal;
  std::size_t enumeration_size = 0;  // subsets examined
};

/// Every basis, in lexicographic order of the sets.
std::vector<ElementSet> all_bases(const Matroid& m,
                                  std::size_t max_elements = kMaxBasisEnumeration);
/// Bases of minimum total weight.
std::vector<ElementSet> all_mwbs(const UncertainInstance& inst,
                                 std::size_t max_elements = kMaxBasisEnumeration);

OracleResult min_cost_certificate(
    const UncertainInstance& inst,
    std::size_t max_elements = kMaxCertificateEnumeration);
OracleResult min_cert_for_basis(
    const UncertainInstance& inst, const ElementSet& b,
    std::size_t max_elements = kMaxCertificateEnumeration);

/// Candidate adversarial values of one area: closed endpoints, the given
/// critical values that fall inside the area, and `density` evenly spaced
/// points on every gap between consecutive such breakpoints in a piece.
std::vector<Rational> sample_points(const UncertaintyArea& area,
                                    const std::vector<Rational>& critical,
                                    std::size_t density);

/// Searches for a weight vector consistent with q under which some basis is
/// strictly lighter than b. Up to two unqueried elements move away from
/// their true weights at a time, each over sample_points(..., density).
bool verify_by_sampling(const UncertainInstance& inst, const ElementSet& q,
                        const ElementSet& b, std::size_t density = 3,
                        std::size_t max_unqueried = kMaxCertificateEnumeration);

/// Whether q is a certificate (for some MWB) under every weight vector in the
/// product of sample_points over all elements.
bool is_universal_certificate(const UncertainInstance& inst,
                              const ElementSet& q, std::size_t density = 1);

/// Greedy MWB under the lower limits, ties by id. Throws ContractViolation
/// if some element of the view has w_e = L_e or w_e = U_e.
ElementSet lower_limit_basis(const UncertainInstance& inst,
                             const MatroidView& view);
/// Scans non-basis elements by nondecreasing lower limit (ties by id) for
/// the first f whose circuit has a member with w_f < U; returns the member
/// of C - f with the largest upper limit (ties by id).
std::optional<ElementId> mandatory_element(const UncertainInstance& inst,
                                           const MatroidView& view,
                                           const ElementSet& b_lower);

/// Rank-1 uniform matroid on e1..en: e1 has area [0,2], weight 0, cost 1;
/// the others have area [1,3], weight 2, cost (rho-1)/(n-1).
UncertainInstance gap_instance(const Rational& rho, std::size_t n);

}  // namespace umv

#endif  // UMV_BRUTEFORCE_ORACLE_HPP_
