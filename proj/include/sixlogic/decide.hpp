// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sixlogic/backward.hpp"
#include "sixlogic/error.hpp"
#include "sixlogic/outcome.hpp"
#include "sixlogic/saturation.hpp"
#include "sixlogic/semantics.hpp"

namespace six {

enum class Engine { Saturation, SaturationLiteral, Backward, Semantic, Cross };

inline std::string_view engine_name(Engine e) {
  switch (e) {
    case Engine::Saturation: return "saturation";
    case Engine::SaturationLiteral: return "saturation-literal";
    case Engine::Backward: return "backward";
    case Engine::Semantic: return "semantic";
    case Engine::Cross: return "cross";
  }
  return "";
}

inline Engine engine_from_name(std::string_view s) {
  for (Engine e : {Engine::Saturation, Engine::SaturationLiteral, Engine::Backward, Engine::Semantic, Engine::Cross})
    if (engine_name(e) == s) return e;
  throw InvalidArgument("unknown engine '" + std::string(s) + "'");
}

struct DecideOptions {
  SaturationLimits saturation;
  BackwardLimits backward;
  std::size_t var_cap = 8;
};

/// Engines in cross mode returned different definite verdicts, or a proof
/// witness failed to check.
class EngineDisagreement : public Error {
 public:
  EngineDisagreement(Sequent s, std::vector<DecisionOutcome> outcomes, const std::string& why)
      : Error(describe(s, outcomes, why)), sequent_(std::move(s)), outcomes_(std::move(outcomes)) {}

  const Sequent& sequent() const noexcept { return sequent_; }
  const std::vector<DecisionOutcome>& outcomes() const noexcept { return outcomes_; }

 private:
  static std::string describe(const Sequent& s, const std::vector<DecisionOutcome>& os, const std::string& why) {
    std::string out = why + " on " + to_string(s) + ":";
    for (const auto& o : os) out += " " + o.engine + "=" + std::string(verdict_name(o.verdict));
    return out;
  }

  Sequent sequent_;
  std::vector<DecisionOutcome> outcomes_;
};

inline DecisionOutcome decide_semantic(const Sequent& s, std::size_t var_cap = 8) {
  DecisionOutcome out;
  out.engine = "semantic";
  try {
    std::size_t visited = 0;
    std::optional<Assignment> cex;
    for_each_assignment(
        variables(s), m6(),
        [&](const Assignment& a) {
          ++visited;
          if (satisfies(a, s, m6())) return true;
          cex = a;
          return false;
        },
        OracleLimits{var_cap});
    out.verdict = cex ? Verdict::NotProvable : Verdict::Provable;
    out.counterassignment = std::move(cex);
    out.stats = {visited, visited};
  } catch (const ResourceError& e) {
    out.verdict = Verdict::ResourceExceeded;
    out.details = e.what();
  }
  return out;
}

/// Runs every engine that fits its caps and requires a unanimous verdict.
inline DecisionOutcome decide_cross(const Sequent& s, const DecideOptions& opt = {}) {
  std::vector<DecisionOutcome> all = {decide_semantic(s, opt.var_cap), decide_backward(s, opt.backward),
                                      decide_saturation(s, opt.saturation),
                                      decide_saturation_literal(s, opt.saturation)};
  DecisionOutcome result;
  result.engine = "cross";
  const DecisionOutcome* first = nullptr;
  std::string skipped;
  for (const auto& o : all) {
    if (o.exceeded()) {
      skipped += (skipped.empty() ? "" : "; ") + o.engine + ": " + o.details;
      continue;
    }
    if (first && o.verdict != first->verdict) throw EngineDisagreement(s, all, "engines disagree");
    if (!first) first = &o;
    if (o.witness) {
      if (auto c = check_proof(*o.witness); !c) throw EngineDisagreement(s, all, o.engine + " proof rejected: " + c.message);
      if (o.witness->sequent != s) throw EngineDisagreement(s, all, o.engine + " proved a different sequent");
      if (!within_gsub(*o.witness, opt.saturation.gsub))
        throw EngineDisagreement(s, all, o.engine + " proof leaves the generalized subformulas");
    }
  }
  if (!first) return DecisionOutcome::resource_exceeded("cross", skipped);
  result.verdict = first->verdict;
  result.details = skipped;
  for (const auto& o : all) {
    if (!result.witness && o.witness) result.witness = o.witness;
    if (!result.counterassignment && o.counterassignment) result.counterassignment = o.counterassignment;
    result.stats.iterations += o.stats.iterations;
    result.stats.states += o.stats.states;
  }
  return result;
}

inline DecisionOutcome decide(const Sequent& s, Engine engine, const DecideOptions& opt = {}) {
  switch (engine) {
    case Engine::Saturation: return decide_saturation(s, opt.saturation);
    case Engine::SaturationLiteral: return decide_saturation_literal(s, opt.saturation);
    case Engine::Backward: return decide_backward(s, opt.backward);
    case Engine::Semantic: return decide_semantic(s, opt.var_cap);
    case Engine::Cross: return decide_cross(s, opt);
  }
  throw InvalidArgument("unknown engine");
}

}  // namespace six
