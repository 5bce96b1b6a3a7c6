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

#ifndef UMV_CERTIFICATE_SYNTHESIS_HPP_
#define UMV_CERTIFICATE_SYNTHESIS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "umv/basis_selection.hpp"
#include "umv/matroid.hpp"
#include "umv/uncertainty.hpp"

namespace umv {

/// How the fundamental circuit of a non-basis element constrains a
/// certificate. F = {f in C - e : U_f > L_e}, F_hat = {f in C - e : U_f > w_e}.
///   case 1: w_e >= U_f for all f, some w_f > L_e      -> e in Q
///   case 2: w_e >= U_f for all f, all w_f <= L_e      -> e in Q or F in Q
///   case 3: some U_f > w_e, some w_f > L_e            -> F_hat + e in Q
///   case 4: some U_f > w_e, all w_f <= L_e            -> F in Q or F_hat + e in Q
struct CircuitClassification {
  ElementId element;
  int case_id = 0;
  ElementSet circuit;
  ElementSet F;
  ElementSet F_hat;
};

CircuitClassification classify_circuit(const UncertainInstance& inst,
                                       const ElementSet& b, ElementId e);

/// Vertices are all elements; every non-loop edge joins `basis` to its
/// complement. Pairs are stored (u, v) with u <= v, sorted, without repeats.
struct AuxiliaryGraph {
  ElementSet basis;
  std::vector<std::pair<ElementId, ElementId>> edges;
  Weights vertex_weight;

  ElementSet loops() const;
};

AuxiliaryGraph build_auxiliary_graph(const UncertainInstance& inst,
                                     const ElementSet& b);

bool is_vertex_cover(const AuxiliaryGraph& g, const ElementSet& s);

struct VertexCover {
  ElementSet vertices;
  Rational cost;
  /// Max-flow value on the loop-free remainder; equals the cost of the
  /// non-forced part of the cover.
  Rational flow_value;
};

/// Loop vertices are forced; the bipartite rest is solved by max-flow.
VertexCover min_weight_vertex_cover(const AuxiliaryGraph& g);

struct Certificate {
  ElementSet basis;
  QuerySet query;
  AuxiliaryGraph graph;
};

/// Minimum-cost certificate for the given MWB b.
Certificate certify_given_basis(const UncertainInstance& inst,
                                const ElementSet& b);

struct Algorithm2Result {
  ElementSet basis;
  QuerySet certificate;
  SelectionTrace trace;
  AuxiliaryGraph graph;
};

/// Basis from run_algorithm1, then the cheapest certificate for it.
Algorithm2Result algorithm2(const UncertainInstance& inst);

/// "u v" per edge, loops as "u u".
std::vector<std::string> format_auxiliary_graph(const UncertainInstance& inst,
                                                const AuxiliaryGraph& g);

}  // namespace umv

#endif  // UMV_CERTIFICATE_SYNTHESIS_HPP_
