#include "fcadr/reduction.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "fcadr/error.hpp"
#include "fcadr/operators.hpp"

namespace fcadr {

namespace {

void require_subset(const FormalDecisionContext& fdc, const AttributeSet& kept) {
  if (kept.universe() != fdc.conditional().attribute_count())
    throw InvalidArgument("attribute subset is not over the conditional attributes");
  if (kept.empty()) throw InvalidArgument("consistency is defined for non-empty attribute subsets");
}

void sort_canonical(std::vector<AttributeSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) { return canonical_less(a, b); });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

/// Keeps the inclusion-minimal sets, canonical order.
std::vector<AttributeSet> minimal_sets(std::vector<AttributeSet> sets) {
  sort_canonical(sets);
  std::vector<AttributeSet> kept;
  for (auto& s : sets)
    if (std::none_of(kept.begin(), kept.end(), [&](const AttributeSet& k) { return k.is_subset_of(s); }))
      kept.push_back(std::move(s));
  return kept;
}

}  // namespace

bool PremiseExtentFamily::contains(const ObjectSet& extent) const {
  return std::find(extents.begin(), extents.end(), extent) != extents.end();
}

PremiseExtentFamily premise_extent_family(const FormalDecisionContext& fdc) {
  const auto& cond = fdc.conditional();
  PremiseExtentFamily family;
  for (const auto& c : enumerate_concepts(fdc.decision(), ConceptKind::formal))
    family.extents.push_back(diamond(cond, box(cond, c.extent)));
  std::sort(family.extents.begin(), family.extents.end(),
            [](const auto& a, const auto& b) { return canonical_less(a, b); });
  family.extents.erase(std::unique(family.extents.begin(), family.extents.end()), family.extents.end());
  return family;
}

bool is_I_consistent(const FormalDecisionContext& fdc, const AttributeSet& kept) {
  require_subset(fdc, kept);
  const auto& cond = fdc.conditional();
  // Y□E = Y□M ∩ E and C◇E = C◇M, so the subcontext is never materialized.
  for (const auto& c : enumerate_concepts(fdc.decision(), ConceptKind::formal)) {
    AttributeSet inner = box(cond, c.extent);
    if (diamond(cond, inner & kept) != diamond(cond, inner)) return false;
  }
  return true;
}

bool is_II_consistent(const FormalDecisionContext& fdc, const AttributeSet& kept) {
  return is_I_consistent(complement_decision(fdc), kept);
}

bool is_I_consistent_by_intermediates(const FormalDecisionContext& fdc, const AttributeSet& kept) {
  require_subset(fdc, kept);
  auto sub_extents = build_lattice(fdc.conditional().restricted(kept), ConceptKind::object_oriented).extents();
  auto premises = enumerate_concepts(fdc.conditional(), ConceptKind::object_oriented);
  auto conclusions = enumerate_concepts(fdc.decision(), ConceptKind::formal);
  for (const auto& p : premises)
    for (const auto& c : conclusions) {
      if (!p.extent.is_subset_of(c.extent)) continue;
      bool bridged = std::any_of(sub_extents.begin(), sub_extents.end(), [&](const ObjectSet& o) {
        return p.extent.is_subset_of(o) && o.is_subset_of(c.extent);
      });
      if (!bridged) return false;
    }
  return true;
}

bool is_consistent_by_rules(const FormalDecisionContext& fdc, const AttributeSet& kept, RuleType type,
                            RuleSetOptions opts) {
  require_subset(fdc, kept);
  auto full = all_rules(fdc, type, opts);
  auto reduced = all_rules(restrict_conditional(fdc, kept), type, opts);
  // Premises of the two rule sets live in different contexts; implication
  // only compares extents.
  return std::all_of(full.begin(), full.end(), [&](const DecisionRule& target) {
    return std::any_of(reduced.begin(), reduced.end(), [&](const DecisionRule& r) {
      return target.premise.extent.is_subset_of(r.premise.extent) && r.premise.extent.is_subset_of(r.conclusion.extent) &&
             r.conclusion.extent.is_subset_of(target.conclusion.extent);
    });
  });
}

DiscernibilityMatrix::DiscernibilityMatrix(ConceptLattice lattice, PremiseExtentFamily family)
    : lattice_(std::move(lattice)), family_(std::move(family)) {
  for (std::size_t upper = 0; upper < lattice_.size(); ++upper) {
    if (!family_.contains(lattice_[upper].extent)) continue;
    for (std::size_t lower : lattice_.children(upper)) {
      AttributeSet diff = lattice_[upper].intent ^ lattice_[lower].intent;
      if (!diff.empty()) entries_.push_back({upper, lower, std::move(diff)});
    }
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return std::tie(a.upper, a.lower) < std::tie(b.upper, b.lower); });
}

AttributeSet DiscernibilityMatrix::entry(std::size_t i, std::size_t j) const {
  for (const auto& e : entries_)
    if ((e.upper == i && e.lower == j) || (e.upper == j && e.lower == i)) return e.attributes;
  return AttributeSet(lattice_[0].intent.universe());
}

std::vector<std::size_t> DiscernibilityMatrix::premise_rows() const {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < lattice_.size(); ++i)
    if (family_.contains(lattice_[i].extent)) rows.push_back(i);
  return rows;
}

bool DiscernibilityMatrix::hit_by(const AttributeSet& kept) const {
  return std::all_of(entries_.begin(), entries_.end(), [&](const Entry& e) { return e.attributes.intersects(kept); });
}

DiscernibilityMatrix discernibility_matrix(const FormalDecisionContext& fdc) {
  return DiscernibilityMatrix(build_lattice(fdc.conditional(), ConceptKind::object_oriented),
                              premise_extent_family(fdc));
}

std::vector<AttributeSet> absorb(std::vector<AttributeSet> clauses) { return minimal_sets(std::move(clauses)); }

std::vector<AttributeSet> discernibility_function(const DiscernibilityMatrix& matrix) {
  std::vector<AttributeSet> clauses;
  for (const auto& e : matrix.entries()) clauses.push_back(e.attributes);
  return absorb(std::move(clauses));
}

std::vector<AttributeSet> minimal_dnf(std::span<const AttributeSet> clauses, std::size_t attribute_count) {
  AttributeSet variables(attribute_count);
  for (const auto& c : clauses) {
    if (c.universe() != attribute_count) throw InvalidArgument("clause is over a different attribute universe");
    if (c.empty()) throw InvalidArgument("unsatisfiable: the discernibility function has an empty clause");
    variables |= c;
  }
  if (variables.count() > kMaxDnfVariables)
    throw LimitExceeded("minimal DNF over " + std::to_string(variables.count()) + " attributes exceeds the limit of " +
                        std::to_string(kMaxDnfVariables));

  // Berge expansion: keep the minimal transversals of the clauses seen so
  // far, extending each one that misses the next clause by every literal of
  // that clause.
  auto todo = absorb(std::vector<AttributeSet>(clauses.begin(), clauses.end()));
  std::vector<AttributeSet> transversals{AttributeSet(attribute_count)};
  for (const auto& clause : todo) {
    std::vector<AttributeSet> next;
    for (const auto& t : transversals) {
      if (t.intersects(clause)) {
        next.push_back(t);
        continue;
      }
      clause.for_each([&](std::size_t a) { next.push_back(t.with(a)); });
    }
    transversals = minimal_sets(std::move(next));
  }
  return transversals;
}

ReductionResult i_reductions(const FormalDecisionContext& fdc) {
  ReductionResult result;
  result.clauses = discernibility_function(discernibility_matrix(fdc));
  result.reductions = minimal_dnf(result.clauses, fdc.conditional().attribute_count());
  result.core = result.reductions.front();
  for (const auto& r : result.reductions) result.core &= r;
  return result;
}

ReductionResult ii_reductions(const FormalDecisionContext& fdc) { return i_reductions(complement_decision(fdc)); }

}  // namespace fcadr
