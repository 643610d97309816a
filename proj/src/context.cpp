#include "fcadr/context.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "fcadr/error.hpp"

namespace fcadr {

namespace {

void require_unique(const std::vector<std::string>& labels, std::string_view what) {
  if (labels.empty()) throw InvalidArgument(std::string(what) + " list is empty");
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw InvalidArgument("duplicate " + std::string(what) + " label '" + l + "'");
}

template <class Set>
Set lookup(std::span<const std::string> labels, std::size_t universe,
           const std::function<std::optional<std::size_t>(std::string_view)>& index, std::string_view what) {
  Set s(universe);
  for (const auto& l : labels) {
    auto i = index(l);
    if (!i) throw InvalidArgument("unknown " + std::string(what) + " '" + l + "'");
    s.insert(*i);
  }
  return s;
}

std::optional<std::size_t> find_label(const std::vector<std::string>& labels, std::string_view label) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                             const std::vector<std::vector<bool>>& incidence)
    : objects_(std::move(objects)), attributes_(std::move(attributes)) {
  validate_labels();
  if (incidence.size() != objects_.size())
    throw InvalidArgument("incidence has " + std::to_string(incidence.size()) + " rows for " +
                          std::to_string(objects_.size()) + " objects");
  rows_.reserve(objects_.size());
  for (std::size_t x = 0; x < incidence.size(); ++x) {
    if (incidence[x].size() != attributes_.size())
      throw InvalidArgument("incidence row " + std::to_string(x) + " has " + std::to_string(incidence[x].size()) +
                            " cells for " + std::to_string(attributes_.size()) + " attributes");
    AttributeSet row(attributes_.size());
    for (std::size_t a = 0; a < incidence[x].size(); ++a)
      if (incidence[x][a]) row.insert(a);
    rows_.push_back(std::move(row));
  }
  build_columns();
}

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                             std::vector<AttributeSet> rows)
    : objects_(std::move(objects)), attributes_(std::move(attributes)), rows_(std::move(rows)) {
  validate_labels();
  if (rows_.size() != objects_.size())
    throw InvalidArgument("incidence has " + std::to_string(rows_.size()) + " rows for " +
                          std::to_string(objects_.size()) + " objects");
  for (const auto& r : rows_)
    if (r.universe() != attributes_.size()) throw InvalidArgument("incidence row universe does not match attributes");
  build_columns();
}

void FormalContext::validate_labels() const {
  require_unique(objects_, "object");
  require_unique(attributes_, "attribute");
}

void FormalContext::build_columns() {
  columns_.assign(attributes_.size(), ObjectSet(objects_.size()));
  for (std::size_t x = 0; x < rows_.size(); ++x) rows_[x].for_each([&](std::size_t a) { columns_[a].insert(x); });
}

std::optional<std::size_t> FormalContext::object_index(std::string_view label) const {
  return find_label(objects_, label);
}

std::optional<std::size_t> FormalContext::attribute_index(std::string_view label) const {
  return find_label(attributes_, label);
}

ObjectSet FormalContext::object_set(std::span<const std::string> labels) const {
  return lookup<ObjectSet>(
      labels, object_count(), [this](std::string_view l) { return object_index(l); }, "object");
}

ObjectSet FormalContext::object_set(std::initializer_list<std::string_view> labels) const {
  std::vector<std::string> owned(labels.begin(), labels.end());
  return object_set(std::span<const std::string>(owned));
}

AttributeSet FormalContext::attribute_set(std::span<const std::string> labels) const {
  return lookup<AttributeSet>(
      labels, attribute_count(), [this](std::string_view l) { return attribute_index(l); }, "attribute");
}

AttributeSet FormalContext::attribute_set(std::initializer_list<std::string_view> labels) const {
  std::vector<std::string> owned(labels.begin(), labels.end());
  return attribute_set(std::span<const std::string>(owned));
}

std::vector<std::string> FormalContext::labels_of(const ObjectSet& set) const {
  std::vector<std::string> out;
  set.for_each([&](std::size_t i) { out.push_back(objects_[i]); });
  return out;
}

std::vector<std::string> FormalContext::labels_of(const AttributeSet& set) const {
  std::vector<std::string> out;
  set.for_each([&](std::size_t i) { out.push_back(attributes_[i]); });
  return out;
}

FormalContext FormalContext::complemented() const {
  std::vector<AttributeSet> rows;
  rows.reserve(rows_.size());
  for (const auto& r : rows_) rows.push_back(r.complement());
  return FormalContext(objects_, attributes_, std::move(rows));
}

FormalContext FormalContext::restricted(const AttributeSet& kept) const {
  if (kept.universe() != attribute_count()) throw InvalidArgument("attribute subset is over a different universe");
  if (kept.empty()) throw InvalidArgument("cannot restrict a context to an empty attribute set");
  auto index = kept.members();
  std::vector<std::string> labels;
  labels.reserve(index.size());
  for (auto a : index) labels.push_back(attributes_[a]);
  std::vector<AttributeSet> rows;
  rows.reserve(rows_.size());
  for (const auto& r : rows_) {
    AttributeSet row(index.size());
    for (std::size_t k = 0; k < index.size(); ++k)
      if (r.contains(index[k])) row.insert(k);
    rows.push_back(std::move(row));
  }
  return FormalContext(objects_, std::move(labels), std::move(rows));
}

std::size_t FormalContext::incidence_count() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.count();
  return n;
}

FormalDecisionContext::FormalDecisionContext(FormalContext conditional, FormalContext decision)
    : conditional_(std::move(conditional)), decision_(std::move(decision)) {
  if (conditional_.objects() != decision_.objects())
    throw InvalidArgument("conditional and decision contexts must share the same ordered objects");
  for (const auto& n : decision_.attributes())
    if (conditional_.attribute_index(n))
      throw InvalidArgument("attribute '" + n + "' is both conditional and decision");
}

FormalDecisionContext split_decision_context(const FormalContext& table, std::span<const std::string> decision_labels) {
  if (decision_labels.empty()) throw InvalidArgument("no decision attributes given");
  AttributeSet decision = table.attribute_set(decision_labels);
  if (decision.is_full()) throw InvalidArgument("every attribute is a decision attribute; no conditional attributes left");
  AttributeSet conditional = decision.complement();
  return FormalDecisionContext(table.restricted(conditional), table.restricted(decision));
}

FormalDecisionContext complement_decision(const FormalDecisionContext& fdc) {
  return FormalDecisionContext(fdc.conditional(), fdc.decision().complemented());
}

FormalDecisionContext restrict_conditional(const FormalDecisionContext& fdc, const AttributeSet& kept) {
  return FormalDecisionContext(fdc.conditional().restricted(kept), fdc.decision());
}

std::string_view to_string(CanonicityViolation v) {
  switch (v) {
    case CanonicityViolation::empty_row: return "empty-row";
    case CanonicityViolation::full_row: return "full-row";
    case CanonicityViolation::empty_column: return "empty-column";
    case CanonicityViolation::full_column: return "full-column";
  }
  return "?";
}

CanonicityReport check_canonical(const FormalContext& ctx) {
  CanonicityReport report;
  for (std::size_t x = 0; x < ctx.object_count(); ++x) {
    if (ctx.row(x).empty()) report.violations.emplace_back(CanonicityViolation::empty_row, ctx.objects()[x]);
    if (ctx.row(x).is_full()) report.violations.emplace_back(CanonicityViolation::full_row, ctx.objects()[x]);
  }
  for (std::size_t a = 0; a < ctx.attribute_count(); ++a) {
    if (ctx.column(a).empty()) report.violations.emplace_back(CanonicityViolation::empty_column, ctx.attributes()[a]);
    if (ctx.column(a).is_full()) report.violations.emplace_back(CanonicityViolation::full_column, ctx.attributes()[a]);
  }
  return report;
}

namespace {

std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + (counter + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<std::string> numbered(std::string_view prefix, std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::string(prefix) + std::to_string(i));
  return out;
}

}  // namespace

FormalDecisionContext random_fdc(std::size_t n_objects, std::size_t n_conditional, std::size_t n_decision,
                                 double density, std::uint64_t seed) {
  if (n_objects == 0 || n_conditional == 0 || n_decision == 0)
    throw InvalidArgument("random context sizes must be at least 1");
  if (!(density > 0.0 && density < 1.0)) throw InvalidArgument("density must lie strictly between 0 and 1");

  std::uint64_t counter = 0;
  auto draw_rows = [&](std::size_t width) {
    std::vector<AttributeSet> rows;
    rows.reserve(n_objects);
    for (std::size_t x = 0; x < n_objects; ++x) {
      AttributeSet row(width);
      for (std::size_t a = 0; a < width; ++a) {
        double u = static_cast<double>(splitmix64(seed, counter++) >> 11) * 0x1.0p-53;
        if (u < density) row.insert(a);
      }
      rows.push_back(std::move(row));
    }
    return rows;
  };
  auto cond_rows = draw_rows(n_conditional);
  auto dec_rows = draw_rows(n_decision);
  auto objects = numbered("", n_objects);
  return FormalDecisionContext(FormalContext(objects, numbered("c", n_conditional), std::move(cond_rows)),
                               FormalContext(objects, numbered("d", n_decision), std::move(dec_rows)));
}

}  // namespace fcadr
