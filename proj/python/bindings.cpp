#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "fcadr/cli.hpp"
#include "fcadr/context_io.hpp"
#include "fcadr/error.hpp"
#include "fcadr/format.hpp"

namespace py = pybind11;
using namespace fcadr;

namespace {

using Labels = std::vector<std::string>;

ContextFormat context_format(const std::string& name) {
  if (name == "csv") return ContextFormat::csv;
  if (name == "cxt" || name == "burmeister") return ContextFormat::burmeister;
  throw InvalidArgument("unknown format '" + name + "' (csv, cxt)");
}

RuleType rule_type(const std::string& name) {
  if (name == "I") return RuleType::I;
  if (name == "II") return RuleType::II;
  throw InvalidArgument("rule type must be 'I' or 'II'");
}

ConceptKind concept_kind(const std::string& name) {
  if (name == "formal") return ConceptKind::formal;
  if (name == "object") return ConceptKind::object_oriented;
  if (name == "property") return ConceptKind::property_oriented;
  throw InvalidArgument("kind must be 'formal', 'object' or 'property'");
}

Acquisition acquisition(const std::string& name) {
  for (auto a : {Acquisition::alg1, Acquisition::alg2, Acquisition::s1, Acquisition::s2, Acquisition::complement,
                 Acquisition::bruteforce})
    if (to_string(a) == name) return a;
  throw InvalidArgument("unknown algorithm '" + name + "'");
}

py::tuple concept_tuple(const FormalContext& ctx, const Concept& c) {
  return py::make_tuple(ctx.labels_of(c.extent), ctx.labels_of(c.intent));
}

py::dict rule_dict(const FormalDecisionContext& fdc, const DecisionRule& r) {
  py::dict d;
  d["type"] = std::string(to_string(r.type));
  d["premise"] = concept_tuple(fdc.conditional(), r.premise);
  d["conclusion"] = concept_tuple(fdc.decision(), r.conclusion);
  d["text"] = rule_text(fdc, r);
  return d;
}

py::list rule_list(const FormalDecisionContext& fdc, const std::vector<DecisionRule>& rules) {
  py::list out;
  for (const auto& r : rules) out.append(rule_dict(fdc, r));
  return out;
}

std::vector<Labels> label_lists(const FormalContext& ctx, const std::vector<AttributeSet>& sets) {
  std::vector<Labels> out;
  for (const auto& s : sets) out.push_back(ctx.labels_of(s));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Decision rules and attribute reduction on formal decision contexts";

  // Translators are tried newest first, so the base class goes in first.
  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::object value_bases = py::make_tuple(error, py::handle(PyExc_ValueError));
  py::register_exception<ParseError>(m, "ParseError", value_bases);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", value_bases);
  py::register_exception<LimitExceeded>(m, "LimitExceeded", error);

  py::class_<FormalContext>(m, "FormalContext")
      .def(py::init<Labels, Labels, const std::vector<std::vector<bool>>&>(), py::arg("objects"),
           py::arg("attributes"), py::arg("incidence"))
      .def_property_readonly("objects", &FormalContext::objects)
      .def_property_readonly("attributes", &FormalContext::attributes)
      .def("incidence", &FormalContext::incidence, py::arg("object"), py::arg("attribute"))
      .def("to_text", [](const FormalContext& c, const std::string& format) {
        return serialize_context(c, context_format(format));
      }, py::arg("format") = "csv")
      .def("__eq__", [](const FormalContext& a, const FormalContext& b) { return a == b; })
      .def("__repr__", [](const FormalContext& c) {
        std::ostringstream s;
        s << "<FormalContext " << c.object_count() << " objects x " << c.attribute_count() << " attributes>";
        return s.str();
      });

  py::class_<FormalDecisionContext>(m, "FormalDecisionContext")
      .def(py::init<FormalContext, FormalContext>(), py::arg("conditional"), py::arg("decision"))
      .def_property_readonly("conditional", &FormalDecisionContext::conditional)
      .def_property_readonly("decision", &FormalDecisionContext::decision)
      .def("complement", &complement_decision)
      .def("restrict", [](const FormalDecisionContext& fdc, const Labels& kept) {
        return restrict_conditional(fdc, fdc.conditional().attribute_set(kept));
      }, py::arg("kept"))
      .def("__eq__", [](const FormalDecisionContext& a, const FormalDecisionContext& b) { return a == b; });

  m.def("parse_context", [](const std::string& text, const std::string& format) {
    return parse_context(text, context_format(format));
  }, py::arg("text"), py::arg("format") = "csv");
  m.def("load_context", &load_context, py::arg("path"));
  m.def("split", [](const FormalContext& table, const Labels& decision) {
    return split_decision_context(table, decision);
  }, py::arg("table"), py::arg("decision"));
  m.def("random_fdc", &random_fdc, py::arg("objects"), py::arg("conditional"), py::arg("decision"),
        py::arg("density"), py::arg("seed"));

  m.def("check_canonical", [](const FormalContext& ctx) {
    py::list out;
    for (const auto& [kind, label] : check_canonical(ctx).violations)
      out.append(py::make_tuple(std::string(to_string(kind)), label));
    return out;
  }, py::arg("context"), "List of (violation, label); empty for a canonical context.");

  m.def("concepts", [](const FormalContext& ctx, const std::string& kind) {
    auto lattice = build_lattice(ctx, concept_kind(kind));
    py::list concepts;
    for (const auto& c : lattice.concepts()) concepts.append(concept_tuple(ctx, c));
    py::dict out;
    out["concepts"] = concepts;
    out["covers"] = lattice.covers();
    return out;
  }, py::arg("context"), py::arg("kind") = "formal");

  m.def("all_rules", [](const FormalDecisionContext& fdc, const std::string& type, bool include_trivial) {
    return rule_list(fdc, all_rules(fdc, rule_type(type), {include_trivial}));
  }, py::arg("fdc"), py::arg("type") = "I", py::arg("include_trivial") = false);

  m.def("necessary_rules", [](const FormalDecisionContext& fdc, const std::string& type, const std::string& algorithm,
                              bool include_trivial) {
    RuleType t = rule_type(type);
    Acquisition alg = algorithm == "auto" ? default_acquisition(fdc, t) : acquisition(algorithm);
    return rule_list(fdc, acquire_necessary_rules(fdc, t, alg, {include_trivial}).rules);
  }, py::arg("fdc"), py::arg("type") = "I", py::arg("algorithm") = "auto", py::arg("include_trivial") = false);

  m.def("is_consistent", [](const FormalDecisionContext& fdc, const Labels& kept, const std::string& type) {
    auto e = fdc.conditional().attribute_set(kept);
    return rule_type(type) == RuleType::I ? is_I_consistent(fdc, e) : is_II_consistent(fdc, e);
  }, py::arg("fdc"), py::arg("kept"), py::arg("type") = "I");

  m.def("reductions", [](const FormalDecisionContext& fdc, const std::string& type) {
    auto r = rule_type(type) == RuleType::I ? i_reductions(fdc) : ii_reductions(fdc);
    const auto& c = fdc.conditional();
    py::dict out;
    out["reductions"] = label_lists(c, r.reductions);
    out["core"] = c.labels_of(r.core);
    out["clauses"] = label_lists(c, r.clauses);
    return out;
  }, py::arg("fdc"), py::arg("type") = "I");

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs one fcadr command; returns (exit code, stdout, stderr).");
}
