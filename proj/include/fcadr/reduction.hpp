#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fcadr/context.hpp"
#include "fcadr/lattice.hpp"
#include "fcadr/rules.hpp"

namespace fcadr {

/// Largest number of distinct attributes minimal_dnf will expand over.
inline constexpr std::size_t kMaxDnfVariables = 24;

/// {Y□◇ | Y ∈ ExtL(decision)}, computed in the conditional context: the
/// premise extents of the necessary I-rules, trivial ones included.
struct PremiseExtentFamily {
  std::vector<ObjectSet> extents;  ///< canonical order, no duplicates

  bool contains(const ObjectSet& extent) const;
};

PremiseExtentFamily premise_extent_family(const FormalDecisionContext& fdc);

/// E preserves the I-rules: Y□E◇E = Y□M◇M for every extent Y of the
/// decision concept lattice. E must be a non-empty subset of M.
bool is_I_consistent(const FormalDecisionContext& fdc, const AttributeSet& kept);

/// E preserves the II-rules; decided as I-consistency of the complement
/// decision context.
bool is_II_consistent(const FormalDecisionContext& fdc, const AttributeSet& kept);

/// I-consistency in its lattice form: for every object-oriented extent O of
/// the conditional context and every decision extent Y ⊇ O there is an
/// object-oriented extent O' of the subcontext with O ⊆ O' ⊆ Y.
bool is_I_consistent_by_intermediates(const FormalDecisionContext& fdc, const AttributeSet& kept);

/// Consistency straight from rule implication: every rule of the full
/// context is implied by some rule of the subcontext. Builds both rule sets,
/// so only for small contexts.
///
/// Trivial rules are included by default. The trivial rules with conclusion
/// U are what make this agree with is_I_consistent on every context; with
/// them filtered out, attributes that only serve to keep every object
/// covered look removable.
bool is_consistent_by_rules(const FormalDecisionContext& fdc, const AttributeSet& kept, RuleType type,
                            RuleSetOptions opts = {.include_trivial = true});

/// Discernibility matrix over the object-oriented lattice of the conditional
/// context. An entry exists for a covering pair lower ≺ upper whose upper
/// extent is in the premise extent family, and holds the symmetric
/// difference of the two intents.
class DiscernibilityMatrix {
 public:
  struct Entry {
    std::size_t upper;
    std::size_t lower;
    AttributeSet attributes;
  };

  DiscernibilityMatrix(ConceptLattice lattice, PremiseExtentFamily family);

  const ConceptLattice& lattice() const { return lattice_; }
  const PremiseExtentFamily& premise_family() const { return family_; }

  /// Non-empty entries, sorted by (upper, lower).
  const std::vector<Entry>& entries() const { return entries_; }

  /// D(i, j), symmetric; empty when the pair is not discerned.
  AttributeSet entry(std::size_t i, std::size_t j) const;

  /// Lattice indices of the concepts whose extent is in the premise family.
  std::vector<std::size_t> premise_rows() const;

  /// E meets every non-empty entry.
  bool hit_by(const AttributeSet& kept) const;

 private:
  ConceptLattice lattice_;
  PremiseExtentFamily family_;
  std::vector<Entry> entries_;
};

DiscernibilityMatrix discernibility_matrix(const FormalDecisionContext& fdc);

/// Deduplicates and drops every clause that is a superset of another.
std::vector<AttributeSet> absorb(std::vector<AttributeSet> clauses);

/// CNF clauses of the discernibility function, absorbed, canonical order.
std::vector<AttributeSet> discernibility_function(const DiscernibilityMatrix& matrix);

/// All minimal hitting sets of the clause family, i.e. the prime terms of the
/// minimal DNF of the CNF. No clauses yields the single empty set. Throws
/// InvalidArgument on an empty clause (unsatisfiable) and LimitExceeded when
/// more than kMaxDnfVariables attributes occur in the clauses.
std::vector<AttributeSet> minimal_dnf(std::span<const AttributeSet> clauses, std::size_t attribute_count);

struct ReductionResult {
  std::vector<AttributeSet> reductions;
  /// Intersection of all reductions.
  AttributeSet core;
  std::vector<AttributeSet> clauses;

  /// No clause constrains E, so no conditional attribute is needed.
  bool unconstrained() const { return clauses.empty(); }
};

/// All I-reductions: discernibility matrix → absorbed CNF → minimal DNF.
ReductionResult i_reductions(const FormalDecisionContext& fdc);

/// All II-reductions, as I-reductions of the complement decision context.
ReductionResult ii_reductions(const FormalDecisionContext& fdc);

}  // namespace fcadr
