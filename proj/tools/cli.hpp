// SPDX-License-Identifier: Apache-2.0
#pragma once

// Command-line front end. Exit codes: 0 yes/valid/provable, 1 no, 2 usage or
// parse error, 3 resource cap exceeded, 4 engines disagree.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sixlogic/json_io.hpp"
#include "sixlogic/sixlogic.hpp"

namespace six::cli {

enum Exit : int { kYes = 0, kNo = 1, kUsage = 2, kResource = 3, kDisagreement = 4 };

namespace detail {

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json = false;

  void emit(const Json& j) const { out << j.dump(2) << "\n"; }
};

inline Assignment parse_assignment(const std::string& text) {
  Assignment a;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(' ') == std::string::npos) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidArgument("assignment item '" + item + "' lacks '='");
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(' '));
      s.erase(s.find_last_not_of(' ') + 1);
      return s;
    };
    const std::string var = trim(item.substr(0, eq));
    const std::string val = trim(item.substr(eq + 1));
    if (!is_object_variable_name(var)) throw InvalidArgument("bad variable name '" + var + "'");
    auto v = parse_truth_value(val);
    if (!v) throw InvalidArgument("unknown truth value '" + val + "'");
    a[var] = index_of(*v);
  }
  return a;
}

inline std::string assignment_text(const Assignment& a) {
  std::string s;
  for (const auto& [k, v] : a) s += (s.empty() ? "" : ", ") + k + "=" + m6().name(v);
  return s;
}

inline void write_file(const std::string& path, const Json& j) {
  std::ofstream f(path);
  if (!f) throw InvalidArgument("cannot write '" + path + "'");
  f << j.dump(2) << "\n";
}

inline Json read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidArgument("cannot read '" + path + "'");
  try {
    return Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline std::string unary_table(const std::string& which, Json& j) {
  const FiniteMatrix& m = m6();
  const Formula p = Formula::var("p");
  Formula f = p;
  if (which == "neg") f = Formula::neg(p);
  else if (which == "nabla") f = Formula::nabla(p);
  else if (which == "circ") f = circ(p);
  else if (which == "bullet") f = bullet(p);
  else throw InvalidArgument("unknown table '" + which + "'");
  std::string text = "p      " + to_string(f) + "\n";
  j = Json::array();
  for (Value x = 0; x < m.size(); ++x) {
    const Value y = eval(f, {{"p", x}}, m);
    std::string left = m.name(x);
    left.resize(7, ' ');
    text += left + m.name(y) + "\n";
    j.push_back({{"input", m.name(x)}, {"output", m.name(y)}});
  }
  return text;
}

inline std::string binary_table(const std::string& which, Json& j) {
  const FiniteMatrix& m = m6();
  const Connective c = which == "and" ? Connective::And : Connective::Or;
  std::string text = std::string(which == "and" ? "&" : "|") + "    ";
  for (Value y = 0; y < m.size(); ++y) {
    std::string h = m.name(y);
    h.resize(5, ' ');
    text += h;
  }
  text += "\n";
  j = Json::array();
  for (Value x = 0; x < m.size(); ++x) {
    std::string row = m.name(x);
    row.resize(5, ' ');
    Json jr = Json::array();
    for (Value y = 0; y < m.size(); ++y) {
      std::string cell = m.name(m.apply(c, x, y));
      jr.push_back(cell);
      cell.resize(5, ' ');
      row += cell;
    }
    text += row + "\n";
    j.push_back({{"left", m.name(x)}, {"row", jr}});
  }
  return text;
}

inline int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Provable: return kYes;
    case Verdict::NotProvable: return kNo;
    case Verdict::ResourceExceeded: return kResource;
  }
  return kUsage;
}

}  // namespace detail

/// Runs one invocation; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Six: six-valued logic workbench", "sixlogic"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string formula_text, sequent_text, assign_text, path, kind, which, out_path, matrix_name = "m6";
  std::string engine_text = "cross", mode = "degree";
  std::size_t var_cap = 8, gsub_cap = 40, literal_cap = 8;
  bool allow_cut = false, literal_gsub = false;

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a formula under an assignment");
  eval_cmd->add_option("formula", formula_text)->required();
  eval_cmd->add_option("--assign", assign_text, "e.g. p=b,q=n");

  auto* valid_cmd = app.add_subcommand("valid", "Semantic validity of a sequent");
  valid_cmd->add_option("sequent", sequent_text)->required();
  valid_cmd->add_option("--var-cap", var_cap)->check(CLI::PositiveNumber);

  auto* entails_cmd = app.add_subcommand("entails", "Consequence 'premises |- conclusion'");
  entails_cmd->add_option("query", sequent_text)->required();
  entails_cmd->add_option("--mode", mode)->check(CLI::IsMember({"degree", "matrix"}));
  entails_cmd->add_option("--var-cap", var_cap)->check(CLI::PositiveNumber);

  auto* theorem_cmd = app.add_subcommand("theorem", "Does the formula take value 1 everywhere");
  theorem_cmd->add_option("formula", formula_text)->required();
  theorem_cmd->add_option("--var-cap", var_cap)->check(CLI::PositiveNumber);

  auto add_engine_caps = [&](CLI::App* c) {
    c->add_option("--gsub-cap", gsub_cap, "Saturation cap on generalized subformulas")->check(CLI::Range(1, 64));
    c->add_option("--literal-cap", literal_cap, "Cap for the level-by-level saturation")->check(CLI::Range(1, 12));
    c->add_option("--var-cap", var_cap, "Cap for the semantic engine")->check(CLI::PositiveNumber);
    c->add_flag("--literal-gsub", literal_gsub, "Generalized subformulas without the disjunction clauses");
  };
  auto* decide_cmd = app.add_subcommand("decide", "Decide GSix provability");
  decide_cmd->add_option("sequent", sequent_text)->required();
  decide_cmd->add_option("--engine", engine_text)
      ->check(CLI::IsMember({"saturation", "saturation-literal", "backward", "semantic", "cross"}));
  add_engine_caps(decide_cmd);

  auto* prove_cmd = app.add_subcommand("prove", "Write a GSix proof certificate");
  prove_cmd->add_option("sequent", sequent_text)->required();
  prove_cmd->add_option("--out", out_path, "Certificate path");
  std::string prove_engine = "backward";
  prove_cmd->add_option("--engine", prove_engine)
      ->check(CLI::IsMember({"backward", "saturation", "saturation-literal"}));
  add_engine_caps(prove_cmd);

  auto* check_cmd = app.add_subcommand("check-proof", "Check a proof certificate");
  check_cmd->add_option("file", path)->required();
  check_cmd->add_flag("--allow-cut", allow_cut);

  auto* gen_cmd = app.add_subcommand("gen", "Generate the signed calculus or its two-sided translation");
  gen_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"sf", "two"}));
  gen_cmd->add_option("--matrix", matrix_name)->check(CLI::IsMember({"m6", "bool"}));
  gen_cmd->add_option("--out", out_path);

  auto* gsub_cmd = app.add_subcommand("gsub", "Generalized subformulas of a sequent");
  gsub_cmd->add_option("sequent", sequent_text)->required();
  gsub_cmd->add_flag("--literal-gsub", literal_gsub);

  auto* stream_cmd = app.add_subcommand("streamline", "Replay a recorded streamlining script");
  std::string replay;
  stream_cmd->add_option("--replay", replay)->required()->check(CLI::IsMember({"table1"}));

  auto* table_cmd = app.add_subcommand("table", "Print an operation table of the six-valued matrix");
  table_cmd->add_option("which", which)->required()->check(CLI::IsMember({"neg", "nabla", "circ", "bullet", "and", "or"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kYes;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const detail::Context ctx{out, err, format == "json"};
  DecideOptions dopt;
  dopt.var_cap = var_cap;
  dopt.saturation.max_gsub = gsub_cap;
  dopt.saturation.max_literal_gsub = literal_cap;
  dopt.saturation.gsub.disjunction_clauses = !literal_gsub;

  try {
    if (*eval_cmd) {
      const Formula f = parse_formula(formula_text);
      const Assignment a = detail::parse_assignment(assign_text);
      const Value v = eval(f, a, m6());
      if (ctx.json) ctx.emit({{"formula", to_string(f)}, {"assignment", to_json(a)}, {"value", m6().name(v)},
                              {"designated", m6().designated(v)}});
      else out << m6().name(v) << "\n";
      return kYes;
    }
    if (*valid_cmd) {
      const Sequent s = parse_sequent(sequent_text);
      const auto cex = sequent_counterexample(s, m6(), {var_cap});
      if (ctx.json) {
        Json j = {{"sequent", to_string(s)}, {"valid", !cex}};
        if (cex) j["counterassignment"] = to_json(*cex);
        ctx.emit(j);
      } else {
        out << (cex ? "invalid; counterexample: " + detail::assignment_text(*cex) : std::string("valid")) << "\n";
      }
      return cex ? kNo : kYes;
    }
    if (*entails_cmd) {
      std::string q = sequent_text;
      std::size_t at = q.find("|-"), len = 2;
      if (at == std::string::npos) {
        at = q.find("⊢");
        len = std::string("⊢").size();
      }
      if (at == std::string::npos) throw ParseError("expected '|-' between premises and conclusion", q.size());
      const FormulaSet premises = parse_formula_list(q.substr(0, at));
      const Formula conclusion = parse_formula(q.substr(at + len));
      const std::vector<Formula> prem(premises.begin(), premises.end());
      const bool yes = mode == "degree" ? degree_entails(prem, conclusion, {var_cap})
                                        : matrix_entails(prem, conclusion, m6(), {var_cap});
      if (ctx.json) ctx.emit({{"premises", to_string(premises)}, {"conclusion", to_string(conclusion)},
                              {"mode", mode}, {"entails", yes}});
      else out << (yes ? "entails" : "does not entail") << "\n";
      return yes ? kYes : kNo;
    }
    if (*theorem_cmd) {
      const Formula f = parse_formula(formula_text);
      const bool yes = is_theorem(f, {var_cap});
      if (ctx.json) ctx.emit({{"formula", to_string(f)}, {"theorem", yes}});
      else out << (yes ? "theorem" : "not a theorem") << "\n";
      return yes ? kYes : kNo;
    }
    if (*decide_cmd) {
      const Sequent s = parse_sequent(sequent_text);
      const Engine e = engine_from_name(engine_text);
      DecisionOutcome o;
      try {
        o = decide(s, e, dopt);
      } catch (const EngineDisagreement& d) {
        if (ctx.json) {
          Json j = {{"sequent", to_string(s)}, {"engine", "cross"}, {"verdict", "disagreement"}, {"details", d.what()}};
          Json per = Json::array();
          for (const auto& x : d.outcomes()) per.push_back(to_json(x, s));
          j["engines"] = per;
          ctx.emit(j);
        } else {
          out << "engine disagreement: " << d.what() << "\n";
        }
        return kDisagreement;
      }
      if (e == Engine::Cross && !o.details.empty() && !o.exceeded()) err << "warning: skipped " << o.details << "\n";
      if (ctx.json) {
        ctx.emit(to_json(o, s));
      } else {
        out << verdict_name(o.verdict) << "\n";
        if (o.counterassignment) out << "counterexample: " << detail::assignment_text(*o.counterassignment) << "\n";
        if (o.exceeded()) out << o.details << "\n";
      }
      return detail::verdict_exit(o.verdict);
    }
    if (*prove_cmd) {
      const Sequent s = parse_sequent(sequent_text);
      const DecisionOutcome o = decide(s, engine_from_name(prove_engine), dopt);
      if (o.witness) {
        const Json proof = to_json(*o.witness);
        if (!out_path.empty()) detail::write_file(out_path, proof);
        if (ctx.json) ctx.emit(to_json(o, s));
        else if (out_path.empty()) out << proof.dump(2) << "\n";
        else out << "provable; " << o.witness->node_count() << " nodes written to " << out_path << "\n";
      } else if (ctx.json) {
        ctx.emit(to_json(o, s));
      } else {
        out << verdict_name(o.verdict) << "\n";
      }
      return detail::verdict_exit(o.verdict);
    }
    if (*check_cmd) {
      const ProofTree t = proof_from_json(detail::read_file(path));
      const CheckResult r = check_proof(t, ProofCheckOptions{allow_cut});
      if (ctx.json) {
        Json j = {{"sequent", to_string(t.sequent)}, {"ok", r.ok}};
        if (!r.ok) j["path"] = r.path, j["message"] = r.message;
        ctx.emit(j);
      } else if (r) {
        out << "ok: " << to_string(t.sequent) << " (" << t.node_count() << " nodes)\n";
      } else {
        std::string p;
        for (auto i : r.path) p += "/" + std::to_string(i);
        out << "rejected at " << (p.empty() ? "/" : p) << ": " << r.message << "\n";
      }
      return r ? kYes : kNo;
    }
    if (*gen_cmd) {
      const FiniteMatrix& m = matrix_name == "m6" ? m6() : boolean_matrix();
      Json j;
      std::string summary;
      if (kind == "sf") {
        const auto rules = generate_sf(m);
        j = Json::array();
        for (const auto& r : rules) j.push_back(to_json(r, m));
        summary = std::to_string(rules.size()) + " logic rules";
      } else {
        if (matrix_name != "m6") throw InvalidArgument("translation needs a witness table; only m6 ships one");
        const auto rules = translate_calculus(generate_sf(m), six_witnesses(), m);
        std::map<std::string, std::size_t> per;
        j = Json::array();
        for (const auto& r : rules) {
          per[r.name.substr(1, r.name.find('_') - 1)]++;
          j.push_back(to_json(r));
        }
        summary = std::to_string(rules.size()) + " logic rules (";
        bool first = true;
        for (const char* c : {"neg", "nabla", "or", "and"}) {
          summary += std::string(first ? "" : ", ") + c + " " + std::to_string(per[c]);
          first = false;
        }
        summary += ")";
      }
      if (!out_path.empty()) detail::write_file(out_path, j);
      if (ctx.json) ctx.emit({{"kind", kind}, {"matrix", matrix_name}, {"count", j.size()}, {"rules", j}});
      else out << summary << "\n";
      return kYes;
    }
    if (*gsub_cmd) {
      const Sequent s = parse_sequent(sequent_text);
      const FormulaSet g = gsub_sequent(s, dopt.saturation.gsub);
      if (ctx.json) {
        Json arr = Json::array();
        for (const auto& f : g) arr.push_back(to_string(f));
        ctx.emit({{"sequent", to_string(s)}, {"count", g.size()}, {"gsub", arr}});
      } else {
        for (const auto& f : g) out << to_string(f) << "\n";
      }
      return kYes;
    }
    if (*stream_cmd) {
      const ReplayResult r = replay_table1_trace();
      if (ctx.json) {
        Json steps = Json::array();
        for (const auto& s : r.trace) steps.push_back(to_json(s));
        ctx.emit({{"replay", replay}, {"steps", steps}, {"result", to_json(r.final_rule)}});
      } else {
        for (const auto& s : r.trace) {
          out << "(" << s.step << ") " << s.inputs[0] << ", " << s.inputs[1] << "  [" << s.principle << "]\n    "
              << to_string(s.output) << "\n";
        }
        out << "result: " << to_string(r.final_rule) << "\n";
      }
      return kYes;
    }
    if (*table_cmd) {
      Json j;
      const std::string text = (which == "and" || which == "or") ? detail::binary_table(which, j)
                                                                 : detail::unary_table(which, j);
      if (ctx.json) ctx.emit({{"table", which}, {"rows", j}});
      else out << text;
      return kYes;
    }
  } catch (const EngineDisagreement& e) {
    err << "error: " << e.what() << "\n";
    return kDisagreement;
  } catch (const ResourceError& e) {
    err << "resource exceeded: " << e.what() << "\n";
    return kResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace six::cli
