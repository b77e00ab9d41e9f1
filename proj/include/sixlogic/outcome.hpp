// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "sixlogic/matrix.hpp"
#include "sixlogic/proof_tree.hpp"

namespace six {

enum class Verdict { Provable, NotProvable, ResourceExceeded };

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Provable: return "provable";
    case Verdict::NotProvable: return "not-provable";
    case Verdict::ResourceExceeded: return "resource-exceeded";
  }
  return "";
}

struct SearchStats {
  std::size_t iterations = 0;
  std::size_t states = 0;
};

struct DecisionOutcome {
  Verdict verdict = Verdict::ResourceExceeded;
  std::string engine;
  std::optional<ProofTree> witness;
  std::optional<Assignment> counterassignment;
  std::string details;
  SearchStats stats;

  bool provable() const noexcept { return verdict == Verdict::Provable; }
  bool not_provable() const noexcept { return verdict == Verdict::NotProvable; }
  bool exceeded() const noexcept { return verdict == Verdict::ResourceExceeded; }

  static DecisionOutcome resource_exceeded(std::string engine, std::string details, SearchStats stats = {}) {
    DecisionOutcome o;
    o.verdict = Verdict::ResourceExceeded;
    o.engine = std::move(engine);
    o.details = std::move(details);
    o.stats = stats;
    return o;
  }
};

}  // namespace six
