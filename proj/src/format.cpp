#include "fcadr/format.hpp"

#include <algorithm>
#include <sstream>

namespace fcadr {

namespace {

std::string joined(const std::vector<std::string>& labels) {
  if (labels.empty()) return "∅";
  std::string out;
  for (const auto& l : labels) out += l;
  return out;
}

nlohmann::json concept_json(const FormalContext& ctx, const Concept& c) {
  return {{"extent", ctx.labels_of(c.extent)}, {"intent", ctx.labels_of(c.intent)}};
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string set_text(const FormalContext& ctx, const ObjectSet& objects) { return joined(ctx.labels_of(objects)); }

std::string set_text(const FormalContext& ctx, const AttributeSet& attributes) {
  return joined(ctx.labels_of(attributes));
}

std::string concept_text(const FormalContext& ctx, const Concept& c) {
  return "(" + set_text(ctx, c.extent) + "," + set_text(ctx, c.intent) + ")";
}

std::string rule_text(const FormalDecisionContext& fdc, const DecisionRule& rule) {
  return concept_text(fdc.conditional(), rule.premise) + "->" + concept_text(fdc.decision(), rule.conclusion);
}

std::string lattice_text(const FormalContext& ctx, const ConceptLattice& lattice) {
  std::ostringstream out;
  for (std::size_t i = 0; i < lattice.size(); ++i) out << i << ' ' << concept_text(ctx, lattice[i]) << '\n';
  for (const auto& [child, parent] : lattice.covers()) out << child << " < " << parent << '\n';
  return out.str();
}

std::string lattice_dot(const FormalContext& ctx, const ConceptLattice& lattice) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lattice.size(); ++i)
    out << "  c" << i << " [label=\""
        << dot_escape(set_text(ctx, lattice[i].extent) + "|" + set_text(ctx, lattice[i].intent)) << "\"];\n";
  for (const auto& [child, parent] : lattice.covers()) out << "  c" << child << " -> c" << parent << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json lattice_json(const FormalContext& ctx, const ConceptLattice& lattice) {
  nlohmann::json concepts = nlohmann::json::array();
  for (const auto& c : lattice.concepts()) concepts.push_back(concept_json(ctx, c));
  nlohmann::json covers = nlohmann::json::array();
  for (const auto& [child, parent] : lattice.covers()) covers.push_back({child, parent});
  return {{"kind", std::string(to_string(lattice.kind()))}, {"concepts", concepts}, {"covers", covers}};
}

std::string rules_text(const FormalDecisionContext& fdc, const std::vector<DecisionRule>& rules) {
  std::string out;
  for (const auto& r : rules) out += rule_text(fdc, r) + "\n";
  return out;
}

nlohmann::json rules_json(const FormalDecisionContext& fdc, const std::vector<DecisionRule>& rules, bool necessary) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rules)
    out.push_back({{"type", std::string(to_string(r.type))},
                   {"premise", concept_json(fdc.conditional(), r.premise)},
                   {"conclusion", concept_json(fdc.decision(), r.conclusion)},
                   {"necessary", necessary}});
  return out;
}

std::string matrix_text(const FormalContext& conditional, const DiscernibilityMatrix& matrix) {
  const auto& lattice = matrix.lattice();
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{""};
  for (const auto& c : lattice.concepts()) header.push_back(set_text(conditional, c.extent));
  grid.push_back(header);
  for (std::size_t row : matrix.premise_rows()) {
    std::vector<std::string> line{set_text(conditional, lattice[row].extent)};
    for (std::size_t col = 0; col < lattice.size(); ++col) {
      auto cell = matrix.entry(row, col);
      line.push_back(lattice.covers(col, row) && !cell.empty() ? set_text(conditional, cell) : "");
    }
    grid.push_back(std::move(line));
  }

  // Column widths count code points so "∅" lines up with ASCII labels.
  auto width = [](const std::string& s) {
    std::size_t n = 0;
    for (unsigned char ch : s) n += (ch & 0xC0) != 0x80;
    return n;
  };
  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& line : grid)
    for (std::size_t j = 0; j < line.size(); ++j) widths[j] = std::max(widths[j], width(line[j]));

  std::string out;
  for (const auto& line : grid) {
    std::string text;
    for (std::size_t j = 0; j < line.size(); ++j) {
      if (j) text += " | ";
      text += line[j] + std::string(widths[j] - width(line[j]), ' ');
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out += text + "\n";
  }
  return out;
}

std::string cnf_text(const FormalContext& conditional, const std::vector<AttributeSet>& clauses) {
  if (clauses.empty()) return "⊤";
  std::string out;
  for (const auto& clause : clauses) {
    if (!out.empty()) out += " ∧ ";
    auto labels = conditional.labels_of(clause);
    std::string disj;
    for (const auto& l : labels) disj += (disj.empty() ? "" : " ∨ ") + l;
    out += labels.size() > 1 ? "(" + disj + ")" : disj;
  }
  return out;
}

std::string reduction_text(const FormalContext& conditional, const ReductionResult& result) {
  std::string out = "function: " + cnf_text(conditional, result.clauses) + "\nreductions:\n";
  for (const auto& r : result.reductions) out += "  " + set_text(conditional, r) + "\n";
  out += "core: " + set_text(conditional, result.core) + "\n";
  return out;
}

nlohmann::json reduction_json(const FormalContext& conditional, const ReductionResult& result) {
  nlohmann::json reductions = nlohmann::json::array();
  for (const auto& r : result.reductions) reductions.push_back(conditional.labels_of(r));
  nlohmann::json clauses = nlohmann::json::array();
  for (const auto& c : result.clauses) clauses.push_back(conditional.labels_of(c));
  return {{"reductions", reductions}, {"core", conditional.labels_of(result.core)}, {"clauses", clauses}};
}

std::string check_text(const CanonicityReport& report) {
  if (report.canonical()) return "canonical\n";
  std::string out = "not canonical\n";
  for (const auto& [kind, label] : report.violations) out += "  " + std::string(to_string(kind)) + " " + label + "\n";
  return out;
}

nlohmann::json check_json(const CanonicityReport& report) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& [kind, label] : report.violations)
    violations.push_back({{"kind", std::string(to_string(kind))}, {"label", label}});
  return {{"canonical", report.canonical()}, {"violations", violations}};
}

}  // namespace fcadr
