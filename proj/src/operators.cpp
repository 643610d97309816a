#include "fcadr/operators.hpp"

#include <cassert>

namespace fcadr {

AttributeSet up(const FormalContext& ctx, const ObjectSet& objects) {
  assert(objects.universe() == ctx.object_count());
  AttributeSet out = ctx.all_attributes();
  objects.for_each([&](std::size_t x) { out &= ctx.row(x); });
  return out;
}

ObjectSet down(const FormalContext& ctx, const AttributeSet& attributes) {
  assert(attributes.universe() == ctx.attribute_count());
  ObjectSet out = ctx.all_objects();
  attributes.for_each([&](std::size_t a) { out &= ctx.column(a); });
  return out;
}

AttributeSet diamond(const FormalContext& ctx, const ObjectSet& objects) {
  assert(objects.universe() == ctx.object_count());
  AttributeSet out = ctx.no_attributes();
  objects.for_each([&](std::size_t x) { out |= ctx.row(x); });
  return out;
}

ObjectSet diamond(const FormalContext& ctx, const AttributeSet& attributes) {
  assert(attributes.universe() == ctx.attribute_count());
  ObjectSet out = ctx.no_objects();
  attributes.for_each([&](std::size_t a) { out |= ctx.column(a); });
  return out;
}

AttributeSet box(const FormalContext& ctx, const ObjectSet& objects) {
  assert(objects.universe() == ctx.object_count());
  AttributeSet out = ctx.no_attributes();
  for (std::size_t a = 0; a < ctx.attribute_count(); ++a)
    if (ctx.column(a).is_subset_of(objects)) out.insert(a);
  return out;
}

ObjectSet box(const FormalContext& ctx, const AttributeSet& attributes) {
  assert(attributes.universe() == ctx.attribute_count());
  ObjectSet out = ctx.no_objects();
  for (std::size_t x = 0; x < ctx.object_count(); ++x)
    if (ctx.row(x).is_subset_of(attributes)) out.insert(x);
  return out;
}

}  // namespace fcadr
