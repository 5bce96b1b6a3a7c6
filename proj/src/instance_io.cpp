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

#include "umv/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace umv {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ParseError(path + ": " + msg);
}

const Json& field(const Json& obj, const std::string& key,
                  const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing field");
  return *it;
}

std::string text_of(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

Rational rational_of(const Json& j, const std::string& path) {
  if (j.is_number_float()) {
    fail(path, "floating-point number is not an exact rational; quote it, "
               "e.g. \"1/10\"");
  }
  std::string raw;
  if (j.is_number_integer()) {
    raw = j.dump();
  } else if (j.is_string()) {
    raw = j.get<std::string>();
  } else {
    fail(path, "expected a rational");
  }
  try {
    return parse_rational(raw);
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

std::size_t count_of(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned()) fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    fail("$", e.what());
  }
}

struct RawElement {
  std::string id;
  UncertaintyArea area;
  Rational weight;
  Rational cost;
  Json extra;
  std::string path;
};

std::string join_path(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

}  // namespace

std::vector<std::string> split_names(std::string_view list) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < list.size()) {
    auto comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    std::string name(list.substr(start, comma - start));
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    if (!name.empty()) out.push_back(name);
    start = comma + 1;
  }
  return out;
}

InstanceFile parse_instance(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) fail("$", "expected an object");
  const Json& mj = field(doc, "matroid", "$");
  const std::string kind = text_of(field(mj, "kind", "matroid"), "matroid.kind");
  if (kind != "graphic" && kind != "uniform" && kind != "partition" &&
      kind != "explicit") {
    fail("matroid.kind", "unknown matroid kind \"" + kind + "\"");
  }

  const Json& ej = field(doc, "elements", "$");
  if (!ej.is_array()) fail("elements", "expected an array");
  std::vector<RawElement> raw;
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < ej.size(); ++i) {
    const std::string path = join_path("elements", i);
    const Json& x = ej[i];
    RawElement r;
    r.path = path;
    r.id = text_of(field(x, "id", path), path + ".id");
    if (r.id.empty()) fail(path + ".id", "empty element id");
    if (r.id.find(',') != std::string::npos) {
      fail(path + ".id", "element id may not contain ','");
    }
    if (!seen.emplace(r.id, i).second) {
      fail(path + ".id", "duplicate element id \"" + r.id + "\"");
    }
    const Json& aj = field(x, "area", path);
    std::vector<std::string> pieces;
    if (aj.is_string()) {
      pieces.push_back(aj.get<std::string>());
    } else if (aj.is_array()) {
      for (std::size_t k = 0; k < aj.size(); ++k) {
        pieces.push_back(text_of(aj[k], join_path(path + ".area", k)));
      }
    } else {
      fail(path + ".area", "expected a list of intervals");
    }
    try {
      r.area = UncertaintyArea::parse(pieces);
    } catch (const DomainError& e) {
      fail(path + ".area", e.what());
    }
    r.weight = rational_of(field(x, "weight", path), path + ".weight");
    r.cost = rational_of(field(x, "cost", path), path + ".cost");
    if (r.cost < 0) fail(path + ".cost", "negative query cost");
    if (!r.area.contains(r.weight)) {
      fail(path + ".weight", "weight " + to_string(r.weight) +
                                 " not contained in area");
    }
    r.extra = x;
    raw.push_back(std::move(r));
  }
  std::sort(raw.begin(), raw.end(),
            [](const RawElement& a, const RawElement& b) { return a.id < b.id; });
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < raw.size(); ++i) index[raw[i].id] = i;
  const std::size_t n = raw.size();

  auto element_named = [&](const Json& j, const std::string& path) {
    const std::string name = text_of(j, path);
    const auto it = index.find(name);
    if (it == index.end()) fail(path, "unknown element \"" + name + "\"");
    return ElementId(static_cast<std::uint32_t>(it->second));
  };

  std::vector<std::string> vertex_names;
  std::optional<Matroid> matroid;
  try {
    if (kind == "graphic") {
      const Json& vj = field(mj, "vertices", "matroid");
      std::map<std::string, std::size_t> vindex;
      if (vj.is_number_unsigned()) {
        for (std::size_t v = 0; v < vj.get<std::size_t>(); ++v) {
          vertex_names.push_back(std::to_string(v));
        }
      } else if (vj.is_array()) {
        for (std::size_t v = 0; v < vj.size(); ++v) {
          vertex_names.push_back(text_of(vj[v], join_path("matroid.vertices", v)));
        }
      } else {
        fail("matroid.vertices", "expected a vertex list or count");
      }
      for (std::size_t v = 0; v < vertex_names.size(); ++v) {
        if (!vindex.emplace(vertex_names[v], v).second) {
          fail(join_path("matroid.vertices", v), "duplicate vertex");
        }
      }
      std::vector<Matroid::Edge> edges;
      for (const auto& r : raw) {
        const Json& edge = field(r.extra, "edge", r.path);
        if (!edge.is_array() || edge.size() != 2) {
          fail(r.path + ".edge", "expected [u, v]");
        }
        std::size_t ends[2];
        for (std::size_t k = 0; k < 2; ++k) {
          const std::string p = join_path(r.path + ".edge", k);
          const std::string label =
              edge[k].is_number_unsigned() ? edge[k].dump() : text_of(edge[k], p);
          const auto it = vindex.find(label);
          if (it == vindex.end()) fail(p, "unknown vertex \"" + label + "\"");
          ends[k] = it->second;
        }
        edges.emplace_back(ends[0], ends[1]);
      }
      matroid = Matroid::graphic(vertex_names.size(), std::move(edges));
    } else if (kind == "uniform") {
      const std::size_t k = count_of(field(mj, "rank", "matroid"), "matroid.rank");
      if (k > n) fail("matroid.rank", "rank exceeds number of elements");
      matroid = Matroid::uniform(n, k);
    } else if (kind == "partition") {
      const Json& cj = field(mj, "capacities", "matroid");
      if (!cj.is_array()) fail("matroid.capacities", "expected an array");
      std::vector<std::size_t> caps;
      for (std::size_t k = 0; k < cj.size(); ++k) {
        caps.push_back(count_of(cj[k], join_path("matroid.capacities", k)));
      }
      std::vector<std::size_t> blocks;
      for (const auto& r : raw) {
        const std::size_t blk =
            count_of(field(r.extra, "block", r.path), r.path + ".block");
        if (blk >= caps.size()) fail(r.path + ".block", "block out of range");
        blocks.push_back(blk);
      }
      matroid = Matroid::partition(std::move(blocks), std::move(caps));
    } else {
      const Json& bj = field(mj, "bases", "matroid");
      if (!bj.is_array()) fail("matroid.bases", "expected an array");
      std::vector<ElementSet> bases;
      for (std::size_t k = 0; k < bj.size(); ++k) {
        const std::string p = join_path("matroid.bases", k);
        if (!bj[k].is_array()) fail(p, "expected a list of element ids");
        ElementSet b(n);
        for (std::size_t t = 0; t < bj[k].size(); ++t) {
          b.insert(element_named(bj[k][t], join_path(p, t)));
        }
        bases.push_back(std::move(b));
      }
      matroid = Matroid::from_bases(n, std::move(bases));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const DomainError& e) {
    fail("matroid", e.what());
  }

  std::vector<std::string> names;
  std::vector<UncertaintyArea> areas;
  Weights weights;
  Weights costs;
  for (auto& r : raw) {
    names.push_back(r.id);
    areas.push_back(r.area);
    weights.push_back(r.weight);
    costs.push_back(r.cost);
  }
  InstanceFile out{UncertainInstance(std::move(*matroid), std::move(names),
                                     std::move(areas), std::move(weights),
                                     std::move(costs)),
                   std::move(vertex_names),
                   {}};

  if (const auto it = doc.find("predictions"); it != doc.end()) {
    const Json& pj = *it;
    if (!pj.is_object()) fail("predictions", "expected an object");
    if (const auto wj = pj.find("weights"); wj != pj.end()) {
      if (!wj->is_object()) fail("predictions.weights", "expected an object");
      Weights pw(n);
      std::vector<bool> given(n, false);
      for (const auto& [name, value] : wj->items()) {
        const std::string p = "predictions.weights." + name;
        const auto e = element_named(Json(name), p);
        pw[e.index()] = rational_of(value, p);
        given[e.index()] = true;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (!given[i]) {
          fail("predictions.weights", "missing prediction for \"" +
                                          out.instance.names()[i] + "\"");
        }
      }
      out.predictions.weights = std::move(pw);
    }
    if (const auto bj = pj.find("basis"); bj != pj.end()) {
      if (!bj->is_array()) fail("predictions.basis", "expected an array");
      std::vector<std::string> basis;
      for (std::size_t k = 0; k < bj->size(); ++k) {
        const std::string p = join_path("predictions.basis", k);
        basis.push_back(out.instance.name(element_named((*bj)[k], p)));
      }
      std::sort(basis.begin(), basis.end());
      basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
      out.predictions.basis = std::move(basis);
    }
  }
  return out;
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

InstanceFile wrap(UncertainInstance inst) {
  std::vector<std::string> vertices;
  if (inst.matroid().kind() == MatroidKind::kGraphic) {
    for (std::size_t v = 0; v < inst.matroid().vertex_count(); ++v) {
      vertices.push_back("v" + std::to_string(v));
    }
  }
  return {std::move(inst), std::move(vertices), {}};
}

std::string emit_instance(const UncertainInstance& inst) {
  return emit_instance(wrap(inst));
}

std::string emit_instance(const InstanceFile& file) {
  const UncertainInstance& inst = file.instance;
  const Matroid& m = inst.matroid();
  OrderedJson doc;
  OrderedJson mj;
  mj["kind"] = to_string(m.kind());
  switch (m.kind()) {
    case MatroidKind::kGraphic:
      mj["vertices"] = file.vertex_names;
      break;
    case MatroidKind::kUniform:
      mj["rank"] = m.rank_bound();
      break;
    case MatroidKind::kPartition:
      mj["capacities"] = m.capacity();
      break;
    case MatroidKind::kExplicit: {
      OrderedJson bases = OrderedJson::array();
      for (const auto& b : m.bases()) bases.push_back(inst.names_of(b));
      mj["bases"] = std::move(bases);
      break;
    }
  }
  doc["matroid"] = std::move(mj);
  OrderedJson elements = OrderedJson::array();
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const ElementId e(static_cast<std::uint32_t>(i));
    OrderedJson x;
    x["id"] = inst.name(e);
    x["area"] = inst.area(e).to_strings();
    x["weight"] = to_string(inst.weight(e));
    x["cost"] = to_string(inst.cost(e));
    if (m.kind() == MatroidKind::kGraphic) {
      const auto& [u, v] = m.edges()[i];
      x["edge"] = {file.vertex_names.at(u), file.vertex_names.at(v)};
    } else if (m.kind() == MatroidKind::kPartition) {
      x["block"] = m.block_of()[i];
    }
    elements.push_back(std::move(x));
  }
  doc["elements"] = std::move(elements);
  const Predictions& p = file.predictions;
  if (p.weights || p.basis) {
    OrderedJson pj;
    if (p.weights) {
      OrderedJson wj = OrderedJson::object();
      for (std::size_t i = 0; i < inst.size(); ++i) {
        wj[inst.names()[i]] = to_string((*p.weights)[i]);
      }
      pj["weights"] = std::move(wj);
    }
    if (p.basis) pj["basis"] = *p.basis;
    doc["predictions"] = std::move(pj);
  }
  return doc.dump(2) + "\n";
}

}  // namespace umv
