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

#ifndef UMV_INSTANCE_IO_HPP_
#define UMV_INSTANCE_IO_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "umv/errors.hpp"
#include "umv/uncertainty.hpp"

namespace umv {

/// Malformed or invalid instance text. The message starts with the JSON
/// path of the offending field.
class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Optional per-element predictions shipped alongside an instance.
struct Predictions {
  std::optional<Weights> weights;
  std::optional<std::vector<std::string>> basis;
};

/// An instance document. Elements are reindexed so that ids follow the
/// lexicographic order of their names.
struct InstanceFile {
  UncertainInstance instance;
  /// Graphic matroids only: vertex labels in index order.
  std::vector<std::string> vertex_names;
  Predictions predictions;
};

/// Schema (rationals as strings "p", "p/q" or "0.25", or JSON integers):
///   {"matroid": {"kind": "graphic", "vertices": ["A", ...]}
///             | {"kind": "uniform", "rank": k}
///             | {"kind": "partition", "capacities": [c0, c1, ...]}
///             | {"kind": "explicit", "bases": [["e1", "e2"], ...]},
///    "elements": [{"id": "e1", "area": ["[1,4]", "(0,1)", "{0,1}"],
///                  "weight": "4", "cost": "1",
///                  "edge": ["A", "B"]       (graphic)
///                  "block": 0}, ...],       (partition)
///    "predictions": {"weights": {"e1": "3", ...}, "basis": ["e1", ...]}}
InstanceFile parse_instance(std::string_view text);
InstanceFile load_instance(const std::string& path);

/// Canonical text; parse_instance(emit_instance(f)) reproduces f exactly.
std::string emit_instance(const InstanceFile& file);
/// Emits with vertex labels "v0", "v1", ... for graphic matroids.
std::string emit_instance(const UncertainInstance& inst);

InstanceFile wrap(UncertainInstance inst);

/// Splits "e1,e2" into names; an empty string gives no names.
std::vector<std::string> split_names(std::string_view list);

}  // namespace umv

#endif  // UMV_INSTANCE_IO_HPP_
