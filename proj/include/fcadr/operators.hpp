#pragma once

#include "fcadr/context.hpp"
#include "fcadr/index_set.hpp"

// Derivation operators of a formal context. The direction of each operator
// is selected by the argument type: object sets map to attribute sets and
// vice versa. Operators for a subscripted context (conditional, decision,
// restricted) are obtained by passing that context.

namespace fcadr {

/// O↑ = {a | every object of O has a}. up(∅) = M.
AttributeSet up(const FormalContext& ctx, const ObjectSet& objects);

/// C↓ = {x | x has every attribute of C}. down(∅) = U.
ObjectSet down(const FormalContext& ctx, const AttributeSet& attributes);

/// O◇ = {a | a↓ ∩ O ≠ ∅}.
AttributeSet diamond(const FormalContext& ctx, const ObjectSet& objects);

/// C◇ = {x | x↑ ∩ C ≠ ∅}.
ObjectSet diamond(const FormalContext& ctx, const AttributeSet& attributes);

/// O□ = {a | a↓ ⊆ O}.
AttributeSet box(const FormalContext& ctx, const ObjectSet& objects);

/// C□ = {x | x↑ ⊆ C}.
ObjectSet box(const FormalContext& ctx, const AttributeSet& attributes);

}  // namespace fcadr
