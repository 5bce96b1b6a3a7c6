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

#include "umv/certificate_synthesis.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "umv/certificate_check.hpp"
#include "umv/errors.hpp"

namespace umv {
namespace {

// Residual network over nodes 0 = source, 1..n = elements, n+1 = sink.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : adj_(nodes) {}

  void add_arc(std::size_t from, std::size_t to, const Rational& cap) {
    adj_[from].push_back(arcs_.size());
    arcs_.push_back({to, cap});
    adj_[to].push_back(arcs_.size());
    arcs_.push_back({from, Rational(0)});
  }

  Rational max_flow(std::size_t s, std::size_t t) {
    Rational total = 0;
    while (true) {
      std::vector<std::size_t> via(adj_.size(), kNone);
      std::deque<std::size_t> queue{s};
      std::vector<bool> seen(adj_.size(), false);
      seen[s] = true;
      while (!queue.empty() && !seen[t]) {
        const auto u = queue.front();
        queue.pop_front();
        for (const auto a : adj_[u]) {
          const auto v = arcs_[a].to;
          if (seen[v] || arcs_[a].cap <= 0) continue;
          seen[v] = true;
          via[v] = a;
          queue.push_back(v);
        }
      }
      if (!seen[t]) return total;
      Rational push = -1;
      for (auto v = t; v != s; v = arcs_[via[v] ^ 1].to) {
        if (push < 0 || arcs_[via[v]].cap < push) push = arcs_[via[v]].cap;
      }
      for (auto v = t; v != s; v = arcs_[via[v] ^ 1].to) {
        arcs_[via[v]].cap -= push;
        arcs_[via[v] ^ 1].cap += push;
      }
      total += push;
    }
  }

  std::vector<bool> reachable(std::size_t s) const {
    std::vector<bool> seen(adj_.size(), false);
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (const auto a : adj_[u]) {
        const auto v = arcs_[a].to;
        if (seen[v] || arcs_[a].cap <= 0) continue;
        seen[v] = true;
        queue.push_back(v);
      }
    }
    return seen;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  struct Arc {
    std::size_t to;
    Rational cap;
  };
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Arc> arcs_;
};

void require_mwb(const UncertainInstance& inst, const ElementSet& b) {
  if (!is_mwb(inst, b)) {
    throw ContractViolation("basis is not minimum-weight under the true weights");
  }
}

void verify_or_die(const UncertainInstance& inst, const ElementSet& q,
                   const ElementSet& b) {
  if (!verifies_cuts(inst, q, b).valid) {
    throw InvariantFailure("synthesized query set does not verify its basis");
  }
}

}  // namespace

CircuitClassification classify_circuit(const UncertainInstance& inst,
                                       const ElementSet& b, ElementId e) {
  if (b.contains(e)) {
    throw ContractViolation("classify_circuit needs a non-basis element");
  }
  const MatroidView m(inst.matroid());
  CircuitClassification out;
  out.element = e;
  out.circuit = fundamental_circuit(m, b, e);
  out.F = ElementSet(inst.size());
  out.F_hat = ElementSet(inst.size());
  const Rational& w_e = inst.weight(e);
  const Rational& l_e = inst.lower(e);
  bool all_below = true;    // w_e >= U_f for every f
  bool some_heavier = false;  // some w_f > L_e
  for (const auto f : out.circuit.without(e)) {
    if (inst.upper(f) > l_e) out.F.insert(f);
    if (inst.upper(f) > w_e) {
      out.F_hat.insert(f);
      all_below = false;
    }
    if (inst.weight(f) > l_e) some_heavier = true;
  }
  if (all_below) {
    out.case_id = some_heavier ? 1 : 2;
  } else {
    out.case_id = some_heavier ? 3 : 4;
  }
  return out;
}

ElementSet AuxiliaryGraph::loops() const {
  ElementSet out(basis.universe());
  for (const auto& [u, v] : edges) {
    if (u == v) out.insert(u);
  }
  return out;
}

AuxiliaryGraph build_auxiliary_graph(const UncertainInstance& inst,
                                     const ElementSet& b) {
  require_mwb(inst, b);
  AuxiliaryGraph g{b, {}, inst.costs()};
  auto add = [&](ElementId u, ElementId v) {
    g.edges.emplace_back(std::min(u, v), std::max(u, v));
  };
  for (const auto e : b.complement()) {
    const auto cls = classify_circuit(inst, b, e);
    switch (cls.case_id) {
      case 1:
        add(e, e);
        break;
      case 2:
        for (const auto f : cls.F) add(e, f);
        break;
      case 3:
        for (const auto f : cls.F_hat.with(e)) add(f, f);
        break;
      default:
        for (const auto f : cls.F - cls.F_hat) add(e, f);
        for (const auto f : cls.F_hat) add(f, f);
        break;
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

bool is_vertex_cover(const AuxiliaryGraph& g, const ElementSet& s) {
  return std::all_of(g.edges.begin(), g.edges.end(), [&](const auto& edge) {
    return s.contains(edge.first) || s.contains(edge.second);
  });
}

VertexCover min_weight_vertex_cover(const AuxiliaryGraph& g) {
  const std::size_t n = g.basis.universe();
  if (g.vertex_weight.size() != n) {
    throw DomainError("vertex weights do not cover the graph");
  }
  const ElementSet forced = g.loops();
  const std::size_t source = 0;
  const std::size_t sink = n + 1;
  FlowNetwork net(n + 2);
  Rational unbounded = 1;
  for (const auto& c : g.vertex_weight) unbounded += c;
  ElementSet touched(n);
  for (const auto& [u, v] : g.edges) {
    if (u == v || forced.contains(u) || forced.contains(v)) continue;
    if (g.basis.contains(u) == g.basis.contains(v)) {
      throw ContractViolation("auxiliary edge inside one side of the bipartition");
    }
    const auto left = g.basis.contains(u) ? u : v;
    const auto right = g.basis.contains(u) ? v : u;
    touched.insert(left);
    touched.insert(right);
    net.add_arc(left.index() + 1, right.index() + 1, unbounded);
  }
  for (const auto x : touched) {
    if (g.basis.contains(x)) {
      net.add_arc(source, x.index() + 1, g.vertex_weight[x.index()]);
    } else {
      net.add_arc(x.index() + 1, sink, g.vertex_weight[x.index()]);
    }
  }
  VertexCover out{forced, 0, net.max_flow(source, sink)};
  const auto side = net.reachable(source);
  for (const auto x : touched) {
    const bool reached = side[x.index() + 1];
    if (g.basis.contains(x) ? !reached : reached) out.vertices.insert(x);
  }
  out.cost = total_weight(out.vertices, g.vertex_weight);
  if (!is_vertex_cover(g, out.vertices) ||
      out.cost != total_weight(forced, g.vertex_weight) + out.flow_value) {
    throw InvariantFailure("min-cut does not yield a cover of max-flow weight");
  }
  return out;
}

Certificate certify_given_basis(const UncertainInstance& inst,
                                const ElementSet& b) {
  AuxiliaryGraph g = build_auxiliary_graph(inst, b);
  const VertexCover cover = min_weight_vertex_cover(g);
  verify_or_die(inst, cover.vertices, b);
  return {b, make_query_set(inst, cover.vertices), std::move(g)};
}

Algorithm2Result algorithm2(const UncertainInstance& inst) {
  SelectionResult sel = run_algorithm1(inst);
  Certificate cert = certify_given_basis(inst, sel.basis);
  return {std::move(sel.basis), std::move(cert.query), std::move(sel.trace),
          std::move(cert.graph)};
}

std::vector<std::string> format_auxiliary_graph(const UncertainInstance& inst,
                                                const AuxiliaryGraph& g) {
  std::vector<std::string> lines;
  for (const auto& [u, v] : g.edges) {
    lines.push_back(inst.name(u) + " " + inst.name(v));
  }
  return lines;
}

}  // namespace umv
