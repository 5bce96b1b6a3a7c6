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

// umv: verification of minimum-weight bases under explorable uncertainty.
// Every subcommand prints one JSON record per line on stdout.
// Exit status: 0 success, 1 invalid input, 2 internal invariant failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "umv/basis_selection.hpp"
#include "umv/bruteforce_oracle.hpp"
#include "umv/certificate_check.hpp"
#include "umv/certificate_synthesis.hpp"
#include "umv/errors.hpp"
#include "umv/generator.hpp"
#include "umv/instance_io.hpp"
#include "umv/learning_augmented.hpp"
#include "umv/online_adaptive.hpp"

namespace {

using nlohmann::ordered_json;
using umv::ElementSet;
using umv::UncertainInstance;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kInvariant = 2;

void emit(const ordered_json& record) { std::cout << record.dump() << "\n"; }

ordered_json names(const UncertainInstance& inst, const ElementSet& s) {
  return inst.names_of(s);
}

ElementSet parse_set(const UncertainInstance& inst, const std::string& list) {
  return inst.set_of(umv::split_names(list));
}

ordered_json witness_json(const UncertainInstance& inst,
                          const umv::Witness& w) {
  ordered_json assignment = ordered_json::object();
  for (std::size_t i = 0; i < inst.size(); ++i) {
    assignment[inst.names()[i]] = umv::to_string(w.assignment[i]);
  }
  return {{"e", inst.name(w.e)},
          {"f", inst.name(w.f)},
          {"assignment", assignment},
          {"cheaper_basis", names(inst, w.cheaper_basis)}};
}

struct CertifyArgs {
  std::string file;
  std::string basis;
  bool trace = false;
  bool dump_aux = false;
  bool check = false;
  std::size_t max_elements = umv::kMaxCertificateEnumeration;
};

int run_certify(const CertifyArgs& a) {
  const auto inst = umv::load_instance(a.file).instance;
  ElementSet basis(inst.size());
  umv::QuerySet cert;
  umv::AuxiliaryGraph graph;
  std::optional<umv::SelectionTrace> trace;
  if (!a.basis.empty()) {
    basis = parse_set(inst, a.basis);
    auto c = umv::certify_given_basis(inst, basis);
    cert = std::move(c.query);
    graph = std::move(c.graph);
  } else {
    auto r = umv::algorithm2(inst);
    basis = std::move(r.basis);
    cert = std::move(r.certificate);
    graph = std::move(r.graph);
    trace = std::move(r.trace);
  }
  if (a.trace && trace) {
    for (const auto& step : trace->steps) {
      emit({{"record", "trace"},
            {"rule", umv::to_string(step.rule)},
            {"elements", names(inst, step.elements)},
            {"justification", names(inst, step.justification)}});
    }
  }
  if (a.dump_aux) {
    for (const auto& [u, v] : graph.edges) {
      emit({{"record", "aux_edge"}, {"u", inst.name(u)}, {"v", inst.name(v)}});
    }
  }
  emit({{"record", "certificate"},
        {"basis", names(inst, basis)},
        {"certificate", names(inst, cert.elements)},
        {"cost", umv::to_string(cert.total_cost)}});
  if (a.check) {
    if (inst.size() > a.max_elements) {
      emit({{"record", "check"}, {"skipped", true}});
      return kOk;
    }
    const auto oracle = a.basis.empty()
                            ? umv::min_cost_certificate(inst, a.max_elements)
                            : umv::min_cert_for_basis(inst, basis, a.max_elements);
    const bool ok = oracle.min_cost == cert.total_cost;
    emit({{"record", "check"},
          {"ok", ok},
          {"oracle_cost", umv::to_string(oracle.min_cost)}});
    if (!ok) return kInvariant;
  }
  return kOk;
}

int run_verify(const std::string& file, const std::string& basis_list,
               const std::string& query_list) {
  const auto inst = umv::load_instance(file).instance;
  const ElementSet b = parse_set(inst, basis_list);
  const ElementSet q = parse_set(inst, query_list);
  if (!umv::is_basis(inst.matroid(), b)) {
    throw umv::DomainError("--basis is not a basis of the matroid");
  }
  ordered_json rec{{"record", "verify"},
                   {"basis", names(inst, b)},
                   {"query", names(inst, q)},
                   {"cost", umv::to_string(umv::total_weight(q, inst.costs()))}};
  if (!umv::is_mwb(inst, b)) {
    rec["valid"] = false;
    rec["reason"] = "basis is not minimum-weight under the true weights";
    emit(rec);
    return kOk;
  }
  const auto cuts = umv::verifies_cuts(inst, q, b);
  const auto circuits = umv::verifies_circuits(inst, q, b);
  if (cuts.valid != circuits.valid) {
    throw umv::InvariantFailure("cut and circuit checks disagree");
  }
  rec["valid"] = cuts.valid;
  if (cuts.witness) rec["witness"] = witness_json(inst, *cuts.witness);
  emit(rec);
  return kOk;
}

int run_online(const std::string& file, const std::string& basis_list) {
  const auto unit = umv::load_instance(file).instance.with_unit_costs();
  const ElementSet b = basis_list.empty() ? umv::run_algorithm1(unit).basis
                                          : parse_set(unit, basis_list);
  umv::QueryEnvironment env(unit);
  umv::OnlineResult run;
  try {
    run = umv::run_promise(env, b);
  } catch (const umv::PromiseViolation& v) {
    emit({{"record", "promise_violation"},
          {"e", unit.name(v.e)},
          {"f", unit.name(v.f)},
          {"w_e", umv::to_string(v.w_e)},
          {"w_f", umv::to_string(v.w_f)}});
    return kInvalid;
  }
  for (const auto& batch : run.trace.batches) {
    std::vector<std::string> q;
    for (const auto e : batch.queried) q.push_back(unit.name(e));
    emit({{"record", "batch"}, {"element", unit.name(batch.element)}, {"queried", q}});
  }
  const std::size_t opt = umv::algorithm2(unit).certificate.elements.size();
  const std::size_t got = run.q.elements.size();
  umv::Rational ratio = opt == 0 ? umv::Rational(got == 0 ? 1 : 0)
                                 : umv::Rational(got, opt);
  ratio.canonicalize();
  emit({{"record", "online"},
        {"basis", names(unit, b)},
        {"queried", names(unit, run.q.elements)},
        {"queries", got},
        {"optimum", opt},
        {"ratio", opt == 0 && got > 0 ? "inf" : umv::to_string(ratio)}});
  const bool bounded = got <= 2 * opt;
  return bounded || !umv::is_mwb(unit, b) ? kOk : kInvariant;
}

umv::Weights read_weight_prediction(const std::string& path,
                                    const UncertainInstance& inst) {
  std::ifstream in(path);
  if (!in) throw umv::ParseError(path + ": cannot open");
  std::stringstream text;
  text << in.rdbuf();
  ordered_json doc;
  try {
    doc = ordered_json::parse(text.str());
  } catch (const ordered_json::parse_error& e) {
    throw umv::ParseError(path + ": " + e.what());
  }
  if (doc.contains("weights")) doc = doc["weights"];
  if (!doc.is_object()) throw umv::ParseError(path + ": expected an object");
  umv::Weights out(inst.size());
  std::vector<bool> seen(inst.size(), false);
  for (const auto& [key, value] : doc.items()) {
    const auto e = inst.find(key);
    if (!e) throw umv::ParseError(path + ": unknown element \"" + key + "\"");
    std::string s = value.is_string() ? value.get<std::string>()
                    : value.is_number_integer() ? value.dump()
                                                : "";
    try {
      out[e->index()] = umv::parse_rational(s);
    } catch (const std::invalid_argument&) {
      throw umv::ParseError(path + "." + key + ": bad rational");
    }
    seen[e->index()] = true;
  }
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (!seen[i]) {
      throw umv::ParseError(path + ": missing prediction for \"" +
                            inst.names()[i] + "\"");
    }
  }
  return out;
}

int run_augment(const std::string& file, const std::string& weight_file,
                const std::optional<std::string>& basis_list) {
  const auto doc = umv::load_instance(file);
  const auto unit = doc.instance.with_unit_costs();
  const std::size_t n = unit.size();
  const std::size_t opt = umv::algorithm2(unit).certificate.elements.size();
  umv::QueryEnvironment env(unit);
  std::optional<umv::Weights> raw;
  if (!weight_file.empty()) {
    raw = read_weight_prediction(weight_file, unit);
  } else if (!basis_list && doc.predictions.weights) {
    raw = doc.predictions.weights;
  }
  if (raw) {
    const auto pred = umv::make_weight_prediction(unit.areas(), *raw);
    const auto r = umv::run_weight_prediction(env, pred);
    const std::size_t got = r.q.elements.size();
    emit({{"record", "augment"},
          {"mode", "weights"},
          {"clamped", names(unit, pred.clamped)},
          {"queried", names(unit, r.q.elements)},
          {"queries", got},
          {"optimum", opt},
          {"n", n},
          {"fell_back", r.fell_back},
          {"basis", names(unit, r.basis)},
          {"within_bound", got <= n}});
    return got <= n ? kOk : kInvariant;
  }
  std::optional<ElementSet> raw_basis;
  if (basis_list) {
    raw_basis = parse_set(unit, *basis_list);
  } else if (doc.predictions.basis) {
    raw_basis = unit.set_of(*doc.predictions.basis);
  } else {
    throw umv::DomainError("no prediction given");
  }
  const ElementSet b_hat = umv::sanitize_basis(unit.matroid(), *raw_basis);
  const auto r = umv::run_basis_prediction(env, b_hat);
  const auto err = umv::error_report(unit, b_hat);
  const std::size_t got = r.q.elements.size();
  const long bound = err.bound(opt, n);
  const bool within = static_cast<long>(got) <= bound;
  emit({{"record", "augment"},
        {"mode", "basis"},
        {"predicted", names(unit, *raw_basis)},
        {"sanitized", names(unit, b_hat)},
        {"queried", names(unit, r.q.elements)},
        {"queries", got},
        {"optimum", opt},
        {"n", n},
        {"eta1", err.eta1},
        {"eta2", err.eta2},
        {"c_max", err.c_max},
        {"correct_circuits", names(unit, err.correct_circuits)},
        {"incorrect_circuits", names(unit, err.incorrect_circuits)},
        {"fallback", names(unit, r.fallback)},
        {"basis", names(unit, r.basis)},
        {"bound", bound},
        {"within_bound", within}});
  return within ? kOk : kInvariant;
}

int run_oracle(const std::string& file, std::size_t max_elements) {
  const auto inst = umv::load_instance(file).instance;
  const auto r = umv::min_cost_certificate(inst, max_elements);
  emit({{"record", "oracle"},
        {"min_cost", umv::to_string(r.min_cost)},
        {"optimal_count", r.optimal.size()},
        {"enumerated", r.enumeration_size}});
  for (const auto& o : r.optimal) {
    emit({{"record", "optimal"},
          {"query", names(inst, o.q.elements)},
          {"basis", names(inst, o.basis)}});
  }
  return kOk;
}

int run_gen(std::optional<std::uint64_t> seed, const std::string& profile,
            const std::vector<std::string>& gap) {
  if (!gap.empty()) {
    umv::Rational rho;
    std::size_t n = 0;
    try {
      rho = umv::parse_rational(gap[0]);
      n = std::stoul(gap[1]);
    } catch (const std::exception&) {
      throw umv::DomainError("--gap expects RHO N");
    }
    std::cout << umv::emit_instance(umv::gap_instance(rho, n));
    return kOk;
  }
  if (!seed) throw umv::DomainError("gen needs --seed or --gap");
  std::cout << umv::emit_instance(
      umv::generate_random(*seed, umv::parse_profile(profile)));
  return kOk;
}

void report_error(const char* kind, const std::exception& e) {
  ordered_json rec{{"record", "error"}, {"kind", kind}, {"message", e.what()}};
  std::cerr << rec.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-weight basis verification under explorable uncertainty"};
  app.require_subcommand(1);

  CertifyArgs certify;
  auto* c = app.add_subcommand("certify", "basis, minimum-cost certificate and cost");
  c->add_option("file", certify.file)->required();
  c->add_option("--basis", certify.basis, "certify this MWB instead, e.g. e1,e2");
  c->add_flag("--trace", certify.trace, "print the rule applications");
  c->add_flag("--dump-aux", certify.dump_aux, "print the auxiliary graph");
  c->add_flag("--check", certify.check, "compare with the brute-force oracle");
  c->add_option("--max-elements", certify.max_elements, "oracle size guard");

  std::string file, basis, query, weight_file;
  std::optional<std::string> predict_basis;
  auto* v = app.add_subcommand("verify", "check that a query set verifies a basis");
  v->add_option("file", file)->required();
  v->add_option("--basis", basis)->required();
  v->add_option("--query", query)->required();

  auto* o = app.add_subcommand("online", "promise algorithm with unit costs");
  o->add_option("file", file)->required();
  o->add_option("--basis", basis, "promised MWB (default: rule engine)");

  auto* a = app.add_subcommand("augment", "prediction-driven query strategies");
  a->add_option("file", file)->required();
  auto* pw = a->add_option("--predict-weights", weight_file,
                           "JSON object of predicted weights");
  auto* pb = a->add_option("--predict-basis", predict_basis, "e.g. e1,e2");
  pw->excludes(pb);

  std::size_t max_elements = umv::kMaxCertificateEnumeration;
  auto* r = app.add_subcommand("oracle", "exhaustive minimum-cost certificates");
  r->add_option("file", file)->required();
  r->add_option("--max-elements", max_elements);

  std::optional<std::uint64_t> seed;
  std::string profile = "graphic:4:5";
  std::vector<std::string> gap;
  auto* g = app.add_subcommand("gen", "write a random or gap instance");
  g->add_option("--seed", seed);
  g->add_option("--profile", profile,
                "graphic:V:E | uniform:N:K | partition:N:B | two_point:L:U"
                ", optionally followed by ,unit");
  g->add_option("--gap", gap, "RHO N")->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (c->parsed()) return run_certify(certify);
    if (v->parsed()) return run_verify(file, basis, query);
    if (o->parsed()) return run_online(file, basis);
    if (a->parsed()) return run_augment(file, weight_file, predict_basis);
    if (r->parsed()) return run_oracle(file, max_elements);
    if (g->parsed()) return run_gen(seed, profile, gap);
  } catch (const umv::InvariantFailure& e) {
    report_error("invariant", e);
    return kInvariant;
  } catch (const umv::GuardExceeded& e) {
    report_error("guard", e);
    return kInvalid;
  } catch (const umv::ContractViolation& e) {
    report_error("contract", e);
    return kInvalid;
  } catch (const umv::PromiseViolation& e) {
    report_error("promise", e);
    return kInvalid;
  } catch (const std::domain_error& e) {
    report_error("input", e);
    return kInvalid;
  } catch (const std::exception& e) {
    report_error("internal", e);
    return kInvariant;
  }
  return kInvalid;
}
