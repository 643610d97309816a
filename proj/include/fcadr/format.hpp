#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fcadr/context.hpp"
#include "fcadr/lattice.hpp"
#include "fcadr/reduction.hpp"
#include "fcadr/rules.hpp"

namespace fcadr {

/// Labels run together without separators, "∅" for the empty set:
/// {3,5} → "35", {d1,d2} → "d1d2".
std::string set_text(const FormalContext& ctx, const ObjectSet& objects);
std::string set_text(const FormalContext& ctx, const AttributeSet& attributes);

/// "(35,ce)"
std::string concept_text(const FormalContext& ctx, const Concept& c);

/// "(35,ce)->(235,d1d2)"
std::string rule_text(const FormalDecisionContext& fdc, const DecisionRule& rule);

/// One concept per line in lattice order, then one "child < parent" line
/// per cover.
std::string lattice_text(const FormalContext& ctx, const ConceptLattice& lattice);
std::string lattice_dot(const FormalContext& ctx, const ConceptLattice& lattice);
nlohmann::json lattice_json(const FormalContext& ctx, const ConceptLattice& lattice);

std::string rules_text(const FormalDecisionContext& fdc, const std::vector<DecisionRule>& rules);
nlohmann::json rules_json(const FormalDecisionContext& fdc, const std::vector<DecisionRule>& rules, bool necessary);

/// Discernibility matrix as a grid: a row per premise-family concept, a
/// column per concept of the lattice, a cell filled only where the column
/// concept is covered by the row concept.
std::string matrix_text(const FormalContext& conditional, const DiscernibilityMatrix& matrix);

/// CNF as "a ∧ c ∧ f ∧ (b ∨ d)"; "⊤" without clauses.
std::string cnf_text(const FormalContext& conditional, const std::vector<AttributeSet>& clauses);

std::string reduction_text(const FormalContext& conditional, const ReductionResult& result);
nlohmann::json reduction_json(const FormalContext& conditional, const ReductionResult& result);

std::string check_text(const CanonicityReport& report);
nlohmann::json check_json(const CanonicityReport& report);

}  // namespace fcadr
