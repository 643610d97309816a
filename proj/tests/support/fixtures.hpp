#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fcadr/context.hpp"
#include "fcadr/index_set.hpp"

namespace fixtures {

/// The worked example: objects 1..5, conditional a..f, decision d1..d3.
inline fcadr::FormalDecisionContext table1() {
  using fcadr::FormalContext;
  std::vector<std::string> u{"1", "2", "3", "4", "5"};
  FormalContext cond(u, {"a", "b", "c", "d", "e", "f"},
                     {{1, 0, 0, 0, 0, 0},
                      {0, 1, 0, 1, 0, 0},
                      {1, 0, 1, 0, 1, 0},
                      {0, 1, 0, 1, 0, 1},
                      {1, 1, 1, 0, 0, 0}});
  FormalContext dec(u, {"d1", "d2", "d3"},
                    {{1, 0, 0},
                     {1, 1, 0},
                     {1, 1, 0},
                     {0, 1, 1},
                     {1, 1, 0}});
  return {cond, dec};
}

/// Splits separator-free set notation ("235", "d1d2", "∅") by greedy
/// longest label match.
inline std::vector<std::string> tokens(const std::vector<std::string>& labels, std::string_view text) {
  std::vector<std::string> out;
  if (text == "∅" || text == "U") return out;
  while (!text.empty()) {
    std::string best;
    for (const auto& l : labels)
      if (text.substr(0, l.size()) == l && l.size() > best.size()) best = l;
    if (best.empty()) throw std::invalid_argument("no label matches " + std::string(text));
    out.push_back(best);
    text.remove_prefix(best.size());
  }
  return out;
}

/// "U" names the full object set.
inline fcadr::ObjectSet objs(const fcadr::FormalContext& ctx, std::string_view text) {
  if (text == "U") return ctx.all_objects();
  return ctx.object_set(tokens(ctx.objects(), text));
}

inline fcadr::AttributeSet attrs(const fcadr::FormalContext& ctx, std::string_view text) {
  return ctx.attribute_set(tokens(ctx.attributes(), text));
}

}  // namespace fixtures
