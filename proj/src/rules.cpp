#include "fcadr/rules.hpp"

#include <algorithm>
#include <unordered_map>

#include "fcadr/error.hpp"
#include "fcadr/operators.hpp"

namespace fcadr {

std::string_view to_string(RuleType type) { return type == RuleType::I ? "I" : "II"; }

std::string_view to_string(ExtentRelation relation) {
  switch (relation) {
    case ExtentRelation::R1: return "R1";
    case ExtentRelation::R2: return "R2";
    case ExtentRelation::S1: return "S1";
    case ExtentRelation::S2: return "S2";
  }
  return "?";
}

std::string_view to_string(Acquisition algorithm) {
  switch (algorithm) {
    case Acquisition::alg1: return "alg1";
    case Acquisition::alg2: return "alg2";
    case Acquisition::s1: return "s1";
    case Acquisition::s2: return "s2";
    case Acquisition::complement: return "complement";
    case Acquisition::bruteforce: return "bruteforce";
  }
  return "?";
}

bool produces(Acquisition algorithm, RuleType type) {
  switch (algorithm) {
    case Acquisition::alg1:
    case Acquisition::alg2: return type == RuleType::I;
    case Acquisition::s1:
    case Acquisition::s2:
    case Acquisition::complement: return type == RuleType::II;
    case Acquisition::bruteforce: return true;
  }
  return false;
}

bool rule_less(const DecisionRule& a, const DecisionRule& b) {
  if (a.premise.extent != b.premise.extent) return canonical_less(a.premise.extent, b.premise.extent);
  return canonical_less(a.conclusion.extent, b.conclusion.extent);
}

bool is_nontrivial(const DecisionRule& rule) {
  return !rule.premise.extent.empty() && !rule.conclusion.extent.is_full();
}

bool rule_implies(const DecisionRule& r1, const DecisionRule& r2) {
  if (r1.type != r2.type) throw InvalidArgument("rule implication between rules of different types");
  return r2.premise.extent.is_subset_of(r1.premise.extent) && r1.premise.extent.is_subset_of(r1.conclusion.extent) &&
         r1.conclusion.extent.is_subset_of(r2.conclusion.extent);
}

namespace {

ConceptKind conclusion_kind(RuleType type) {
  return type == RuleType::I ? ConceptKind::formal : ConceptKind::property_oriented;
}

std::vector<DecisionRule> finish(std::vector<DecisionRule> rules, RuleSetOptions opts) {
  if (!opts.include_trivial) std::erase_if(rules, [](const DecisionRule& r) { return !is_nontrivial(r); });
  std::sort(rules.begin(), rules.end(), rule_less);
  rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
  return rules;
}

template <class Key>
struct Grouping {
  std::vector<EquivalenceClass> classes;
  std::unordered_map<Key, std::size_t, IndexSetHash> index;

  void add(const Key& key, const ObjectSet& member) {
    auto [it, fresh] = index.emplace(key, classes.size());
    if (fresh) classes.push_back({key, {}});
    classes[it->second].members.push_back(member);
  }
};

/// Groups extents (already in canonical order) by a derived image.
template <class ImageFn>
std::vector<EquivalenceClass> group_by(const std::vector<Concept>& concepts, ImageFn image) {
  Grouping<AttributeSet> g;
  for (const auto& c : concepts) g.add(image(c.extent), c.extent);
  return std::move(g.classes);
}

ObjectSet class_union(const EquivalenceClass& cls) {
  ObjectSet out = cls.members.front();
  for (const auto& m : cls.members) out |= m;
  return out;
}

ObjectSet class_intersection(const EquivalenceClass& cls) {
  ObjectSet out = cls.members.front();
  for (const auto& m : cls.members) out &= m;
  return out;
}

AcquisitionResult run_alg1(const FormalDecisionContext& fdc, RuleSetOptions opts) {
  const auto& cond = fdc.conditional();
  const auto& dec = fdc.decision();
  AcquisitionResult result;
  auto premises = enumerate_concepts(cond, ConceptKind::object_oriented);
  result.stats.conditional_lattice_size = premises.size();
  auto classes = group_by(premises, [&](const ObjectSet& o) { return up(dec, o); });
  result.stats.derived_conclusions = classes.size();
  for (const auto& cls : classes) {
    ObjectSet largest = class_union(cls);
    result.rules.push_back({{largest, box(cond, largest), ConceptKind::object_oriented},
                            {down(dec, cls.image), cls.image, ConceptKind::formal},
                            RuleType::I});
  }
  result.rules = finish(std::move(result.rules), opts);
  return result;
}

AcquisitionResult run_alg2(const FormalDecisionContext& fdc, RuleSetOptions opts) {
  const auto& cond = fdc.conditional();
  const auto& dec = fdc.decision();
  AcquisitionResult result;
  auto conclusions = enumerate_concepts(dec, ConceptKind::formal);
  result.stats.decision_lattice_size = conclusions.size();
  auto classes = group_by(conclusions, [&](const ObjectSet& y) { return box(cond, y); });
  result.stats.derived_premises = classes.size();
  for (const auto& cls : classes) {
    ObjectSet least = class_intersection(cls);
    result.rules.push_back({{diamond(cond, cls.image), cls.image, ConceptKind::object_oriented},
                            {least, up(dec, least), ConceptKind::formal},
                            RuleType::I});
  }
  result.rules = finish(std::move(result.rules), opts);
  return result;
}

AcquisitionResult run_s1(const FormalDecisionContext& fdc, RuleSetOptions opts) {
  const auto& cond = fdc.conditional();
  const auto& dec = fdc.decision();
  AcquisitionResult result;
  auto premises = enumerate_concepts(cond, ConceptKind::object_oriented);
  result.stats.conditional_lattice_size = premises.size();
  auto classes = group_by(premises, [&](const ObjectSet& o) { return diamond(dec, o); });
  result.stats.derived_conclusions = classes.size();
  for (const auto& cls : classes) {
    ObjectSet largest = class_union(cls);
    result.rules.push_back({{largest, box(cond, largest), ConceptKind::object_oriented},
                            {box(dec, cls.image), cls.image, ConceptKind::property_oriented},
                            RuleType::II});
  }
  result.rules = finish(std::move(result.rules), opts);
  return result;
}

AcquisitionResult run_s2(const FormalDecisionContext& fdc, RuleSetOptions opts) {
  const auto& cond = fdc.conditional();
  const auto& dec = fdc.decision();
  AcquisitionResult result;
  auto conclusions = enumerate_concepts(dec, ConceptKind::property_oriented);
  result.stats.decision_lattice_size = conclusions.size();
  auto classes = group_by(conclusions, [&](const ObjectSet& y) { return box(cond, y); });
  result.stats.derived_premises = classes.size();
  for (const auto& cls : classes) {
    ObjectSet least = class_intersection(cls);
    result.rules.push_back({{diamond(cond, cls.image), cls.image, ConceptKind::object_oriented},
                            {least, diamond(dec, least), ConceptKind::property_oriented},
                            RuleType::II});
  }
  result.rules = finish(std::move(result.rules), opts);
  return result;
}

AcquisitionResult run_complement(const FormalDecisionContext& fdc, RuleSetOptions opts) {
  // Extents are shared by both sides of the isomorphism, so the trivial-rule
  // filter can run on the complement's I-rules.
  AcquisitionResult result = run_alg2(complement_decision(fdc), opts);
  for (auto& r : result.rules) {
    r.conclusion.intent = r.conclusion.intent.complement();
    r.conclusion.kind = ConceptKind::property_oriented;
    r.type = RuleType::II;
  }
  std::sort(result.rules.begin(), result.rules.end(), rule_less);
  return result;
}

AcquisitionResult run_bruteforce(const FormalDecisionContext& fdc, RuleType type, RuleSetOptions opts) {
  AcquisitionResult result;
  result.rules = necessary_rules_bruteforce(fdc, type, opts);
  result.stats.conditional_lattice_size = enumerate_concepts(fdc.conditional(), ConceptKind::object_oriented).size();
  result.stats.decision_lattice_size = enumerate_concepts(fdc.decision(), conclusion_kind(type)).size();
  return result;
}

}  // namespace

std::vector<DecisionRule> all_rules(const FormalDecisionContext& fdc, RuleType type, RuleSetOptions opts) {
  auto premises = enumerate_concepts(fdc.conditional(), ConceptKind::object_oriented);
  auto conclusions = enumerate_concepts(fdc.decision(), conclusion_kind(type));
  std::vector<DecisionRule> rules;
  for (const auto& p : premises)
    for (const auto& c : conclusions)
      if (p.extent.is_subset_of(c.extent)) rules.push_back({p, c, type});
  return finish(std::move(rules), opts);
}

ExtentPartition partition_extents(const FormalDecisionContext& fdc, ExtentRelation relation) {
  const auto& cond = fdc.conditional();
  const auto& dec = fdc.decision();
  ExtentPartition out{relation, {}};
  switch (relation) {
    case ExtentRelation::R1:
      out.classes = group_by(enumerate_concepts(cond, ConceptKind::object_oriented),
                             [&](const ObjectSet& o) { return up(dec, o); });
      break;
    case ExtentRelation::R2:
      out.classes =
          group_by(enumerate_concepts(dec, ConceptKind::formal), [&](const ObjectSet& y) { return box(cond, y); });
      break;
    case ExtentRelation::S1:
      out.classes = group_by(enumerate_concepts(cond, ConceptKind::object_oriented),
                             [&](const ObjectSet& o) { return diamond(dec, o); });
      break;
    case ExtentRelation::S2:
      out.classes = group_by(enumerate_concepts(dec, ConceptKind::property_oriented),
                             [&](const ObjectSet& y) { return box(cond, y); });
      break;
  }
  return out;
}

AcquisitionResult acquire_necessary_rules(const FormalDecisionContext& fdc, RuleType type, Acquisition algorithm,
                                          RuleSetOptions opts) {
  if (!produces(algorithm, type))
    throw InvalidArgument("algorithm " + std::string(to_string(algorithm)) + " does not produce type " +
                          std::string(to_string(type)) + " rules");
  switch (algorithm) {
    case Acquisition::alg1: return run_alg1(fdc, opts);
    case Acquisition::alg2: return run_alg2(fdc, opts);
    case Acquisition::s1: return run_s1(fdc, opts);
    case Acquisition::s2: return run_s2(fdc, opts);
    case Acquisition::complement: return run_complement(fdc, opts);
    case Acquisition::bruteforce: return run_bruteforce(fdc, type, opts);
  }
  throw InvalidArgument("unknown acquisition algorithm");
}

Acquisition default_acquisition(const FormalDecisionContext& fdc, RuleType type) {
  if (type == RuleType::II) return Acquisition::s1;
  return fdc.decision().attribute_count() <= fdc.conditional().attribute_count() ? Acquisition::alg2
                                                                                 : Acquisition::alg1;
}

std::vector<DecisionRule> necessary_I_rules_alg1(const FormalDecisionContext& fdc, RuleSetOptions opts) {
  return run_alg1(fdc, opts).rules;
}

std::vector<DecisionRule> necessary_I_rules_alg2(const FormalDecisionContext& fdc, RuleSetOptions opts) {
  return run_alg2(fdc, opts).rules;
}

std::vector<DecisionRule> necessary_II_rules_s1(const FormalDecisionContext& fdc, RuleSetOptions opts) {
  return run_s1(fdc, opts).rules;
}

std::vector<DecisionRule> necessary_II_rules_s2(const FormalDecisionContext& fdc, RuleSetOptions opts) {
  return run_s2(fdc, opts).rules;
}

std::vector<DecisionRule> necessary_II_rules_via_complement(const FormalDecisionContext& fdc, RuleSetOptions opts) {
  return run_complement(fdc, opts).rules;
}

std::vector<DecisionRule> minimal_rules(const std::vector<DecisionRule>& rules) {
  std::vector<DecisionRule> out;
  for (const auto& r : rules) {
    bool redundant = std::any_of(rules.begin(), rules.end(),
                                 [&](const DecisionRule& other) { return other != r && rule_implies(other, r); });
    if (!redundant) out.push_back(r);
  }
  return out;
}

std::vector<DecisionRule> necessary_rules_bruteforce(const FormalDecisionContext& fdc, RuleType type,
                                                     RuleSetOptions opts) {
  return minimal_rules(all_rules(fdc, type, opts));
}

}  // namespace fcadr
