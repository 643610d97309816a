#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "fcadr/context.hpp"
#include "fcadr/lattice.hpp"

namespace fcadr {

enum class RuleType {
  /// Object-oriented conditional concept → formal decision concept.
  I,
  /// Object-oriented conditional concept → property-oriented decision concept.
  II,
};

std::string_view to_string(RuleType type);

/// premise → conclusion with premise.extent ⊆ conclusion.extent. The
/// premise lives in the conditional context, the conclusion in the decision
/// context.
struct DecisionRule {
  Concept premise;
  Concept conclusion;
  RuleType type = RuleType::I;

  friend bool operator==(const DecisionRule&, const DecisionRule&) = default;
};

/// Sort key of every rule list: premise extent, then conclusion extent, both
/// in canonical set order.
bool rule_less(const DecisionRule& a, const DecisionRule& b);

struct RuleSetOptions {
  /// Admit rules whose premise extent is ∅ or whose conclusion extent is U.
  bool include_trivial = false;
};

/// premise.extent ≠ ∅ and conclusion.extent ≠ U.
bool is_nontrivial(const DecisionRule& rule);

/// Every rule of the given type: all pairs of an object-oriented concept of
/// the conditional context and a formal (I) or property-oriented (II)
/// concept of the decision context whose extents are nested.
std::vector<DecisionRule> all_rules(const FormalDecisionContext& fdc, RuleType type, RuleSetOptions opts = {});

/// `r1 ⇒ r2`: premise₂ ⊆ premise₁ ⊆ conclusion₁ ⊆ conclusion₂ (on extents).
/// Throws InvalidArgument when the rule types differ.
bool rule_implies(const DecisionRule& r1, const DecisionRule& r2);

/// Equivalence relations on extent families used to derive necessary rules.
enum class ExtentRelation {
  R1,  ///< on ExtL_O(conditional), equal O↑ in the decision context
  R2,  ///< on ExtL(decision), equal O□ in the conditional context
  S1,  ///< on ExtL_O(conditional), equal O◇ in the decision context
  S2,  ///< on ExtL_P(decision), equal O□ in the conditional context
};

std::string_view to_string(ExtentRelation relation);

struct EquivalenceClass {
  /// The image shared by every member: a decision attribute set for R1/S1,
  /// a conditional attribute set for R2/S2.
  AttributeSet image;
  /// Members in canonical order.
  std::vector<ObjectSet> members;
};

struct ExtentPartition {
  ExtentRelation relation;
  /// Ordered by their least member.
  std::vector<EquivalenceClass> classes;
};

ExtentPartition partition_extents(const FormalDecisionContext& fdc, ExtentRelation relation);

enum class Acquisition {
  alg1,        ///< I-rules from R1 classes of the conditional object-oriented lattice
  alg2,        ///< I-rules from R2 classes of the decision concept lattice
  s1,          ///< II-rules from S1 classes of the conditional object-oriented lattice
  s2,          ///< II-rules from S2 classes of the decision property-oriented lattice
  complement,  ///< II-rules as mapped I-rules of the complement decision context
  bruteforce,  ///< minimal elements of the full rule set under ⇒
};

std::string_view to_string(Acquisition algorithm);

/// Which rule type an algorithm produces; bruteforce serves both.
bool produces(Acquisition algorithm, RuleType type);

/// Work done by one acquisition run. Lattice sizes are 0 when the algorithm
/// never enumerated that lattice; the derived counts are concepts computed
/// one at a time from the other side.
struct AcquisitionStats {
  std::size_t conditional_lattice_size = 0;
  std::size_t decision_lattice_size = 0;
  std::size_t derived_premises = 0;
  std::size_t derived_conclusions = 0;
};

struct AcquisitionResult {
  std::vector<DecisionRule> rules;
  AcquisitionStats stats;
};

/// Necessary (non-redundant) rules by the chosen algorithm. All algorithms
/// for a rule type return the same sorted, duplicate-free list.
AcquisitionResult acquire_necessary_rules(const FormalDecisionContext& fdc, RuleType type, Acquisition algorithm,
                                          RuleSetOptions opts = {});

/// Default choice: for I-rules, alg2 when |N| ≤ |M| and alg1 otherwise;
/// for II-rules, s1.
Acquisition default_acquisition(const FormalDecisionContext& fdc, RuleType type);

std::vector<DecisionRule> necessary_I_rules_alg1(const FormalDecisionContext& fdc, RuleSetOptions opts = {});
std::vector<DecisionRule> necessary_I_rules_alg2(const FormalDecisionContext& fdc, RuleSetOptions opts = {});
std::vector<DecisionRule> necessary_II_rules_s1(const FormalDecisionContext& fdc, RuleSetOptions opts = {});
std::vector<DecisionRule> necessary_II_rules_s2(const FormalDecisionContext& fdc, RuleSetOptions opts = {});
std::vector<DecisionRule> necessary_II_rules_via_complement(const FormalDecisionContext& fdc,
                                                            RuleSetOptions opts = {});

/// Enumerates all rules and keeps those implied by no other rule.
/// Quadratic in the number of rules; meant for small contexts and as a
/// reference for the faster algorithms.
std::vector<DecisionRule> necessary_rules_bruteforce(const FormalDecisionContext& fdc, RuleType type,
                                                     RuleSetOptions opts = {});

/// Minimal elements of `rules` under ⇒.
std::vector<DecisionRule> minimal_rules(const std::vector<DecisionRule>& rules);

}  // namespace fcadr
