// SPDX-License-Identifier: Apache-2.0
#pragma once

// JSON encodings. Formulas and sequents are written in the ASCII concrete
// syntax; truth values by name ("0", "1/3", "n", "b", "2/3", "1").

#include <string>
#include <vector>

#include <json.hpp>

#include "sixlogic/outcome.hpp"
#include "sixlogic/proof_tree.hpp"
#include "sixlogic/rule_algebra.hpp"
#include "sixlogic/schematic_rule.hpp"
#include "sixlogic/sf_calculus.hpp"
#include "sixlogic/syntax.hpp"
#include "sixlogic/two_calculus.hpp"

namespace six {

using Json = nlohmann::ordered_json;

namespace detail {

inline const std::string& json_string(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_string())
    throw InvalidArgument(std::string("expected string field '") + key + "'");
  return j.at(key).get_ref<const std::string&>();
}

inline Value value_from_json(const Json& j, const FiniteMatrix& m) {
  if (!j.is_string()) throw InvalidArgument("truth value must be a string");
  auto v = m.value_named(j.get<std::string>());
  if (!v) throw InvalidArgument("unknown truth value '" + j.get<std::string>() + "'");
  return *v;
}

}  // namespace detail

inline Json to_json(const SignedRule& r, const FiniteMatrix& m = m6()) {
  Json inputs = Json::array();
  for (Value v : r.inputs) inputs.push_back(m.name(v));
  return {{"connective", std::string(connective_name(r.connective))}, {"inputs", inputs}, {"output", m.name(r.output)}};
}

inline SignedRule signed_rule_from_json(const Json& j, const FiniteMatrix& m = m6()) {
  SignedRule r{connective_from_name(detail::json_string(j, "connective")), {}, 0};
  if (!j.contains("inputs") || !j.at("inputs").is_array()) throw InvalidArgument("expected array field 'inputs'");
  for (const auto& v : j.at("inputs")) r.inputs.push_back(detail::value_from_json(v, m));
  if (r.inputs.size() != static_cast<std::size_t>(arity(r.connective)))
    throw InvalidArgument("input count does not match the connective's arity");
  r.output = detail::value_from_json(j.at("output"), m);
  return r;
}

inline Json to_json(const SchematicRule& r) {
  Json premises = Json::array();
  for (const auto& p : r.premises) premises.push_back(to_string(p));
  return {{"name", r.name}, {"premises", premises}, {"conclusion", to_string(r.conclusion)}};
}

inline SchematicRule schematic_rule_from_json(const Json& j) {
  const ParseOptions opts{.metavariables = true};
  SchematicRule r;
  if (j.contains("name")) r.name = detail::json_string(j, "name");
  if (!j.contains("premises") || !j.at("premises").is_array()) throw InvalidArgument("expected array field 'premises'");
  for (const auto& p : j.at("premises")) {
    if (!p.is_string()) throw InvalidArgument("premise must be a string");
    r.premises.insert(parse_sequent(p.get<std::string>(), opts));
  }
  r.conclusion = parse_sequent(detail::json_string(j, "conclusion"), opts);
  return r;
}

inline Json to_json(const WitnessTable& w, const FiniteMatrix& m = m6()) {
  Json out = Json::array();
  for (std::size_t i = 0; i < w.size(); ++i) {
    Json a = Json::array(), b = Json::array();
    for (const auto& f : w[i].alphas) a.push_back(to_string(f));
    for (const auto& f : w[i].betas) b.push_back(to_string(f));
    out.push_back({{"value", m.name(static_cast<Value>(i))}, {"alphas", a}, {"betas", b}});
  }
  return out;
}

inline Json to_json(const ProofTree& t) {
  Json j = {{"sequent", to_string(t.sequent)}, {"rule", std::string(rule_id(t.rule))}};
  if (t.principal) j["principal"] = to_string(*t.principal);
  Json kids = Json::array();
  for (const auto& c : t.children) kids.push_back(to_json(c));
  j["children"] = kids;
  return j;
}

inline ProofTree proof_from_json(const Json& j) {
  ProofTree t;
  t.sequent = parse_sequent(detail::json_string(j, "sequent"));
  t.rule = rule_tag_from_id(detail::json_string(j, "rule"));
  if (j.contains("principal") && !j.at("principal").is_null()) t.principal = parse_formula(detail::json_string(j, "principal"));
  if (j.contains("children")) {
    if (!j.at("children").is_array()) throw InvalidArgument("'children' must be an array");
    for (const auto& c : j.at("children")) t.children.push_back(proof_from_json(c));
  }
  return t;
}

inline Json to_json(const SFDerivation& d, const FiniteMatrix& m = m6()) {
  static constexpr const char* steps[] = {"axiom", "weakening", "rule"};
  Json j = {{"nsequent", to_string(d.conclusion)}, {"step", steps[static_cast<int>(d.step)]}};
  if (d.rule) j["rule"] = to_json(*d.rule, m);
  if (!d.principal.empty()) {
    Json p = Json::array();
    for (const auto& f : d.principal) p.push_back(to_string(f));
    j["principal"] = p;
  }
  Json kids = Json::array();
  for (const auto& c : d.children) kids.push_back(to_json(c, m));
  j["children"] = kids;
  return j;
}

inline SFDerivation sf_derivation_from_json(const Json& j, const FiniteMatrix& m = m6()) {
  SFDerivation d;
  d.conclusion = parse_nsequent(detail::json_string(j, "nsequent"));
  const std::string& step = detail::json_string(j, "step");
  if (step == "axiom") d.step = SFDerivation::Step::Axiom;
  else if (step == "weakening") d.step = SFDerivation::Step::Weakening;
  else if (step == "rule") d.step = SFDerivation::Step::Rule;
  else throw InvalidArgument("unknown derivation step '" + step + "'");
  if (j.contains("rule")) d.rule = signed_rule_from_json(j.at("rule"), m);
  if (j.contains("principal"))
    for (const auto& f : j.at("principal")) d.principal.push_back(parse_formula(f.get<std::string>()));
  if (j.contains("children"))
    for (const auto& c : j.at("children")) d.children.push_back(sf_derivation_from_json(c, m));
  return d;
}

inline Json to_json(const Assignment& a, const FiniteMatrix& m = m6()) {
  Json j = Json::object();
  for (const auto& [k, v] : a) j[k] = m.name(v);
  return j;
}

inline Json to_json(const DecisionOutcome& o, const Sequent& s) {
  Json j = {{"sequent", to_string(s)}, {"engine", o.engine}, {"verdict", std::string(verdict_name(o.verdict))}};
  if (o.witness) j["witness"] = to_json(*o.witness);
  if (o.counterassignment) j["counterassignment"] = to_json(*o.counterassignment);
  j["stats"] = {{"iterations", o.stats.iterations}, {"states", o.stats.states}};
  if (!o.details.empty()) j["details"] = o.details;
  return j;
}

inline Json to_json(const ReplayStep& s) {
  return {{"step", s.step}, {"inputs", s.inputs}, {"principle", s.principle}, {"output", to_json(s.output)}};
}

}  // namespace six
