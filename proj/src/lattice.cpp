#include "fcadr/lattice.hpp"

#include <algorithm>

#include "fcadr/error.hpp"
#include "fcadr/operators.hpp"

namespace fcadr {

std::string_view to_string(ConceptKind kind) {
  switch (kind) {
    case ConceptKind::formal: return "formal";
    case ConceptKind::object_oriented: return "object";
    case ConceptKind::property_oriented: return "property";
  }
  return "?";
}

bool is_concept(const FormalContext& ctx, const Concept& c) {
  switch (c.kind) {
    case ConceptKind::formal: return up(ctx, c.extent) == c.intent && down(ctx, c.intent) == c.extent;
    case ConceptKind::object_oriented: return box(ctx, c.extent) == c.intent && diamond(ctx, c.intent) == c.extent;
    case ConceptKind::property_oriented: return diamond(ctx, c.extent) == c.intent && box(ctx, c.intent) == c.extent;
  }
  return false;
}

Concept concept_of_extent(const FormalContext& ctx, ConceptKind kind, const ObjectSet& objects) {
  switch (kind) {
    case ConceptKind::formal: {
      auto intent = up(ctx, objects);
      return {down(ctx, intent), std::move(intent), kind};
    }
    case ConceptKind::object_oriented: {
      auto intent = box(ctx, objects);
      return {diamond(ctx, intent), std::move(intent), kind};
    }
    case ConceptKind::property_oriented: {
      auto intent = diamond(ctx, objects);
      return {box(ctx, intent), std::move(intent), kind};
    }
  }
  throw InvalidArgument("unknown concept kind");
}

Concept concept_of_intent(const FormalContext& ctx, ConceptKind kind, const AttributeSet& attributes) {
  switch (kind) {
    case ConceptKind::formal: {
      auto extent = down(ctx, attributes);
      auto intent = up(ctx, extent);
      return {std::move(extent), std::move(intent), kind};
    }
    case ConceptKind::object_oriented: {
      auto extent = diamond(ctx, attributes);
      auto intent = box(ctx, extent);
      return {std::move(extent), std::move(intent), kind};
    }
    case ConceptKind::property_oriented: {
      auto extent = box(ctx, attributes);
      auto intent = diamond(ctx, extent);
      return {std::move(extent), std::move(intent), kind};
    }
  }
  throw InvalidArgument("unknown concept kind");
}

Concept meet(const FormalContext& ctx, const Concept& a, const Concept& b) {
  if (a.kind != b.kind) throw InvalidArgument("meet of concepts of different kinds");
  switch (a.kind) {
    case ConceptKind::formal: return {a.extent & b.extent, up(ctx, down(ctx, a.intent | b.intent)), a.kind};
    case ConceptKind::object_oriented: return {diamond(ctx, box(ctx, a.extent & b.extent)), a.intent & b.intent, a.kind};
    case ConceptKind::property_oriented: return {a.extent & b.extent, diamond(ctx, box(ctx, a.intent & b.intent)), a.kind};
  }
  throw InvalidArgument("unknown concept kind");
}

Concept join(const FormalContext& ctx, const Concept& a, const Concept& b) {
  if (a.kind != b.kind) throw InvalidArgument("join of concepts of different kinds");
  switch (a.kind) {
    case ConceptKind::formal: return {down(ctx, up(ctx, a.extent | b.extent)), a.intent & b.intent, a.kind};
    case ConceptKind::object_oriented: return {a.extent | b.extent, box(ctx, diamond(ctx, a.intent | b.intent)), a.kind};
    case ConceptKind::property_oriented: return {box(ctx, diamond(ctx, a.extent | b.extent)), a.intent | b.intent, a.kind};
  }
  throw InvalidArgument("unknown concept kind");
}

namespace {

/// Close-by-One: visits every fixpoint of an extensive, monotone, idempotent
/// operator on subsets of {0, ..., n-1} exactly once. A candidate B ∪ {j}
/// is expanded only if its closure adds no element below j.
template <class Set, class Close, class Visit>
class CloseByOne {
 public:
  CloseByOne(std::size_t n, const Close& close, const Visit& visit) : n_(n), close_(close), visit_(visit) {}

  void run() { descend(close_(Set(n_)), 0); }

 private:
  void descend(const Set& closed, std::size_t from) {
    visit_(closed);
    for (std::size_t j = from; j < n_; ++j) {
      if (closed.contains(j)) continue;
      Set next = close_(closed.with(j));
      if (next.agrees_below(closed, j)) descend(next, j + 1);
    }
  }

  std::size_t n_;
  const Close& close_;
  const Visit& visit_;
};

template <class Set, class Close, class Visit>
void close_by_one(std::size_t n, const Close& close, const Visit& visit) {
  CloseByOne<Set, Close, Visit>(n, close, visit).run();
}

std::vector<Concept> enumerate_direct(const FormalContext& ctx, ConceptKind kind) {
  std::vector<Concept> out;
  switch (kind) {
    case ConceptKind::formal: {
      auto close = [&](const AttributeSet& c) { return up(ctx, down(ctx, c)); };
      auto visit = [&](const AttributeSet& c) { out.push_back({down(ctx, c), c, kind}); };
      close_by_one<AttributeSet>(ctx.attribute_count(), close, visit);
      break;
    }
    case ConceptKind::object_oriented: {
      auto close = [&](const AttributeSet& c) { return box(ctx, diamond(ctx, c)); };
      auto visit = [&](const AttributeSet& c) { out.push_back({diamond(ctx, c), c, kind}); };
      close_by_one<AttributeSet>(ctx.attribute_count(), close, visit);
      break;
    }
    case ConceptKind::property_oriented: {
      auto close = [&](const ObjectSet& o) { return box(ctx, diamond(ctx, o)); };
      auto visit = [&](const ObjectSet& o) { out.push_back({o, diamond(ctx, o), kind}); };
      close_by_one<ObjectSet>(ctx.object_count(), close, visit);
      break;
    }
  }
  return out;
}

std::vector<Concept> enumerate_via_complement(const FormalContext& ctx, ConceptKind kind) {
  FormalContext negated = ctx.complemented();
  std::vector<Concept> out;
  switch (kind) {
    case ConceptKind::formal:
      for (auto& c : enumerate_direct(negated, ConceptKind::property_oriented))
        out.push_back({std::move(c.extent), c.intent.complement(), kind});
      break;
    case ConceptKind::property_oriented:
      for (auto& c : enumerate_direct(negated, ConceptKind::formal))
        out.push_back({std::move(c.extent), c.intent.complement(), kind});
      break;
    case ConceptKind::object_oriented:
      for (auto& c : enumerate_direct(negated, ConceptKind::formal))
        out.push_back({c.extent.complement(), std::move(c.intent), kind});
      break;
  }
  return out;
}

}  // namespace

std::vector<Concept> enumerate_concepts(const FormalContext& ctx, ConceptKind kind, EnumerationRoute route) {
  auto out = route == EnumerationRoute::direct ? enumerate_direct(ctx, kind) : enumerate_via_complement(ctx, kind);
  std::sort(out.begin(), out.end(),
            [](const Concept& a, const Concept& b) { return canonical_less(a.extent, b.extent); });
  return out;
}

ConceptLattice::ConceptLattice(ConceptKind kind, std::vector<Concept> concepts)
    : kind_(kind), concepts_(std::move(concepts)) {
  if (concepts_.empty()) throw InvalidArgument("a lattice has at least one concept");
  std::sort(concepts_.begin(), concepts_.end(),
            [](const Concept& a, const Concept& b) { return canonical_less(a.extent, b.extent); });
  const std::size_t n = concepts_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (concepts_[i].kind != kind_) throw InvalidArgument("lattice holds a concept of another kind");
    if (!by_extent_.emplace(concepts_[i].extent, i).second) throw InvalidArgument("duplicate concept extent");
  }

  children_.assign(n, {});
  parents_.assign(n, {});
  // Concepts are sorted by extent size, so every strict superset of concept i
  // sits after it, and a superset is a cover iff no cover found so far lies
  // below it.
  for (std::size_t i = 0; i < n; ++i) {
    const auto& low = concepts_[i].extent;
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& high = concepts_[j].extent;
      if (!low.is_subset_of(high)) continue;
      bool direct = std::none_of(parents_[i].begin(), parents_[i].end(),
                                 [&](std::size_t k) { return concepts_[k].extent.is_subset_of(high); });
      if (direct) {
        parents_[i].push_back(j);
        children_[j].push_back(i);
        covers_.emplace_back(i, j);
      }
    }
  }
}

bool ConceptLattice::covers(std::size_t child, std::size_t parent) const {
  const auto& p = parents_[child];
  return std::find(p.begin(), p.end(), parent) != p.end();
}

std::optional<std::size_t> ConceptLattice::index_of(const ObjectSet& extent) const {
  auto it = by_extent_.find(extent);
  if (it == by_extent_.end()) return std::nullopt;
  return it->second;
}

std::vector<ObjectSet> ConceptLattice::extents() const {
  std::vector<ObjectSet> out;
  out.reserve(concepts_.size());
  for (const auto& c : concepts_) out.push_back(c.extent);
  return out;
}

ConceptLattice build_lattice(const FormalContext& ctx, ConceptKind kind, EnumerationRoute route) {
  return ConceptLattice(kind, enumerate_concepts(ctx, kind, route));
}

}  // namespace fcadr
