#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fcadr/context.hpp"
#include "fcadr/index_set.hpp"

namespace fcadr {

enum class ConceptKind {
  formal,             ///< O↑ = C, C↓ = O
  object_oriented,    ///< O□ = C, C◇ = O
  property_oriented,  ///< O◇ = C, C□ = O
};

std::string_view to_string(ConceptKind kind);

struct Concept {
  ObjectSet extent;
  AttributeSet intent;
  ConceptKind kind = ConceptKind::formal;

  friend bool operator==(const Concept&, const Concept&) = default;
};

/// Extent order, the order of every lattice kind.
inline bool concept_leq(const Concept& a, const Concept& b) { return a.extent.is_subset_of(b.extent); }

/// Checks the defining fixpoint equations of `c.kind`.
bool is_concept(const FormalContext& ctx, const Concept& c);

/// The concept of the given kind generated by an arbitrary object set:
/// formal (O↑↓, O↑), object-oriented (O□◇, O□), property-oriented (O◇□, O◇).
Concept concept_of_extent(const FormalContext& ctx, ConceptKind kind, const ObjectSet& objects);

/// Attribute-side counterpart: formal (C↓, C↓↑), object-oriented (C◇, C◇□),
/// property-oriented (C□, C□◇).
Concept concept_of_intent(const FormalContext& ctx, ConceptKind kind, const AttributeSet& attributes);

/// Binary infimum and supremum in the lattice of `a.kind`.
Concept meet(const FormalContext& ctx, const Concept& a, const Concept& b);
Concept join(const FormalContext& ctx, const Concept& a, const Concept& b);

/// How a lattice is enumerated. Both routes return identical results and are
/// cross-checked in the test suite.
enum class EnumerationRoute {
  /// Close-by-One over the kind's own closure operator: C ↦ C↓↑ (formal),
  /// C ↦ C◇□ (object-oriented), O ↦ O◇□ (property-oriented).
  direct,
  /// Through a lattice of the complemented context (U, M, ¬I):
  /// L(I) ≅ L_P(¬I) and L_P(I) ≅ L(¬I) via (O, C) ↦ (O, M − C), and
  /// (X, A) ∈ L_O(I) ⟺ (U − X, A) ∈ L(¬I).
  via_complement,
};

/// All concepts of one kind, in canonical extent order.
std::vector<Concept> enumerate_concepts(const FormalContext& ctx, ConceptKind kind,
                                        EnumerationRoute route = EnumerationRoute::direct);

/// A complete concept lattice with its Hasse diagram.
class ConceptLattice {
 public:
  using Cover = std::pair<std::size_t, std::size_t>;  ///< (child, parent)

  ConceptLattice(ConceptKind kind, std::vector<Concept> concepts);

  ConceptKind kind() const { return kind_; }
  std::size_t size() const { return concepts_.size(); }
  const std::vector<Concept>& concepts() const { return concepts_; }
  const Concept& operator[](std::size_t i) const { return concepts_[i]; }

  /// Transitive reduction of the extent order, sorted by (child, parent).
  const std::vector<Cover>& covers() const { return covers_; }
  const std::vector<std::size_t>& children(std::size_t i) const { return children_[i]; }
  const std::vector<std::size_t>& parents(std::size_t i) const { return parents_[i]; }

  /// True iff concept `child` is a direct sub-concept of `parent`.
  bool covers(std::size_t child, std::size_t parent) const;

  std::size_t bottom() const { return 0; }
  std::size_t top() const { return concepts_.size() - 1; }

  std::optional<std::size_t> index_of(const ObjectSet& extent) const;

  std::vector<ObjectSet> extents() const;

 private:
  ConceptKind kind_;
  std::vector<Concept> concepts_;
  std::vector<Cover> covers_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::vector<std::size_t>> parents_;
  std::unordered_map<ObjectSet, std::size_t, IndexSetHash> by_extent_;
};

ConceptLattice build_lattice(const FormalContext& ctx, ConceptKind kind,
                             EnumerationRoute route = EnumerationRoute::direct);

inline const std::vector<ConceptLattice::Cover>& cover_relation(const ConceptLattice& lattice) {
  return lattice.covers();
}

inline std::vector<ObjectSet> extents(const ConceptLattice& lattice) { return lattice.extents(); }

}  // namespace fcadr
