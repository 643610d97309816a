#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fcadr/index_set.hpp"

namespace fcadr {

/// A formal context (U, M, I): ordered object labels, ordered attribute
/// labels and a boolean incidence relation. Immutable after construction.
///
/// Rows (x↑ for every object) and columns (a↓ for every attribute) are kept
/// side by side since every derivation operator walks one or the other.
class FormalContext {
 public:
  /// Throws InvalidArgument if a label list is empty, holds duplicates, or
  /// the matrix shape does not match the labels.
  FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                const std::vector<std::vector<bool>>& incidence);

  /// Same validation, with each row given as the attribute set of the object.
  FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                std::vector<AttributeSet> rows);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t attribute_count() const { return attributes_.size(); }

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& attributes() const { return attributes_; }

  bool incidence(std::size_t object, std::size_t attribute) const { return rows_[object].contains(attribute); }

  /// x↑, the attributes of one object.
  const AttributeSet& row(std::size_t object) const { return rows_[object]; }
  /// a↓, the objects having one attribute.
  const ObjectSet& column(std::size_t attribute) const { return columns_[attribute]; }

  ObjectSet no_objects() const { return ObjectSet(object_count()); }
  ObjectSet all_objects() const { return ObjectSet::full(object_count()); }
  AttributeSet no_attributes() const { return AttributeSet(attribute_count()); }
  AttributeSet all_attributes() const { return AttributeSet::full(attribute_count()); }

  std::optional<std::size_t> object_index(std::string_view label) const;
  std::optional<std::size_t> attribute_index(std::string_view label) const;

  /// Label lookups; unknown labels raise InvalidArgument.
  ObjectSet object_set(std::span<const std::string> labels) const;
  ObjectSet object_set(std::initializer_list<std::string_view> labels) const;
  AttributeSet attribute_set(std::span<const std::string> labels) const;
  AttributeSet attribute_set(std::initializer_list<std::string_view> labels) const;

  std::vector<std::string> labels_of(const ObjectSet& set) const;
  std::vector<std::string> labels_of(const AttributeSet& set) const;

  /// The context (U, M, ¬I) with every incidence cell flipped.
  FormalContext complemented() const;

  /// The context (U, E, I ∩ (U × E)), attribute order preserved.
  FormalContext restricted(const AttributeSet& kept) const;

  std::size_t incidence_count() const;

  friend bool operator==(const FormalContext& a, const FormalContext& b) {
    return a.objects_ == b.objects_ && a.attributes_ == b.attributes_ && a.rows_ == b.rows_;
  }

 private:
  void validate_labels() const;
  void build_columns();

  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<AttributeSet> rows_;
  std::vector<ObjectSet> columns_;
};

/// A formal decision context (U, M, I, N, J): a conditional context and a
/// decision context over the same ordered objects, with disjoint attribute
/// labels.
class FormalDecisionContext {
 public:
  FormalDecisionContext(FormalContext conditional, FormalContext decision);

  const FormalContext& conditional() const { return conditional_; }
  const FormalContext& decision() const { return decision_; }
  const std::vector<std::string>& universe() const { return conditional_.objects(); }
  std::size_t object_count() const { return conditional_.object_count(); }

  friend bool operator==(const FormalDecisionContext&, const FormalDecisionContext&) = default;

 private:
  FormalContext conditional_;
  FormalContext decision_;
};

/// Splits one table into conditional and decision parts. The decision labels
/// must name existing attributes and leave at least one conditional attribute.
FormalDecisionContext split_decision_context(const FormalContext& table, std::span<const std::string> decision_labels);

/// (U, M, I, N, ¬J).
FormalDecisionContext complement_decision(const FormalDecisionContext& fdc);

/// The subcontext (U, E, I_E, N, J). E must be a non-empty set over M.
FormalDecisionContext restrict_conditional(const FormalDecisionContext& fdc, const AttributeSet& kept);

enum class CanonicityViolation { empty_row, full_row, empty_column, full_column };

std::string_view to_string(CanonicityViolation v);

struct CanonicityReport {
  std::vector<std::pair<CanonicityViolation, std::string>> violations;

  bool canonical() const { return violations.empty(); }
};

/// Lists every object row and attribute column that is empty or full. Rows
/// are reported before columns, each in label order.
CanonicityReport check_canonical(const FormalContext& ctx);

/// Random decision context. Every cell is an independent Bernoulli(density)
/// draw from a SplitMix64 counter stream keyed by `seed`: cell k (conditional
/// cells row-major first, then decision cells) is true iff the top 53 bits of
/// splitmix64(seed, k), scaled to [0, 1), fall below `density`. Output is
/// identical on every platform. Objects are labelled 1..n, conditional
/// attributes c1..cm, decision attributes d1..dn.
FormalDecisionContext random_fdc(std::size_t n_objects, std::size_t n_conditional, std::size_t n_decision,
                                 double density, std::uint64_t seed);

}  // namespace fcadr
