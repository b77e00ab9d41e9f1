// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "sixlogic/error.hpp"
#include "sixlogic/formula.hpp"
#include "sixlogic/truth_value.hpp"
#include "sixlogic/sequent.hpp"
#include "sixlogic/syntax.hpp"
#include "sixlogic/matrix.hpp"
#include "sixlogic/semantics.hpp"
#include "sixlogic/sf_calculus.hpp"
#include "sixlogic/schematic_rule.hpp"
#include "sixlogic/two_calculus.hpp"
#include "sixlogic/rule_algebra.hpp"
#include "sixlogic/gsix_rules.hpp"
#include "sixlogic/gsub.hpp"
#include "sixlogic/proof_tree.hpp"
#include "sixlogic/outcome.hpp"
#include "sixlogic/backward.hpp"
#include "sixlogic/saturation.hpp"
#include "sixlogic/decide.hpp"
