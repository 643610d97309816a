#include "fcadr/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "fcadr/context_io.hpp"
#include "fcadr/error.hpp"
#include "fcadr/format.hpp"

namespace fcadr::cli {

namespace {

/// Raised for option combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised by bench when algorithms disagree.
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bruteforce enumerates every rule pairwise; beyond this many objects the
/// rule set gets too large to compare quadratically.
constexpr std::size_t kBruteforceMaxObjects = 12;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep))
    if (!part.empty()) parts.push_back(part);
  return parts;
}

struct Options {
  std::string input;
  std::string decision;
  std::string type = "I";
  bool necessary = false;
  bool include_trivial = false;
  std::string kind = "formal";
  std::string part;
  std::string format = "text";
  std::string algorithm = "auto";

  std::string sizes;
  double density = 0.3;
  std::string seeds = "1";
  std::string algorithms = "alg1,alg2";
};

RuleType rule_type(const std::string& s) { return s == "II" ? RuleType::II : RuleType::I; }

ConceptKind concept_kind(const std::string& s) {
  if (s == "object") return ConceptKind::object_oriented;
  if (s == "property") return ConceptKind::property_oriented;
  return ConceptKind::formal;
}

Acquisition acquisition(const std::string& s) {
  if (s == "alg1") return Acquisition::alg1;
  if (s == "alg2") return Acquisition::alg2;
  if (s == "s1") return Acquisition::s1;
  if (s == "s2") return Acquisition::s2;
  if (s == "complement") return Acquisition::complement;
  if (s == "bruteforce") return Acquisition::bruteforce;
  throw UsageError("unknown algorithm: " + s);
}

FormalDecisionContext load_decision_context(const Options& o) {
  auto labels = split(o.decision, ',');
  if (labels.empty()) throw UsageError("--decision needs at least one label");
  return split_decision_context(load_context(o.input), labels);
}

/// The context a lattice or check command works on.
FormalContext selected_part(const Options& o) {
  if (o.decision.empty()) {
    if (!o.part.empty()) throw UsageError("--part needs --decision");
    return load_context(o.input);
  }
  auto fdc = load_decision_context(o);
  if (o.part.empty() || o.part == "conditional") return fdc.conditional();
  if (o.part == "decision") return fdc.decision();
  return complement_decision(fdc).decision();
}

void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

int cmd_lattice(const Options& o, std::ostream& out) {
  auto ctx = selected_part(o);
  auto lattice = build_lattice(ctx, concept_kind(o.kind));
  if (o.format == "json")
    emit(out, lattice_json(ctx, lattice));
  else if (o.format == "dot")
    out << lattice_dot(ctx, lattice);
  else
    out << lattice_text(ctx, lattice);
  return ok;
}

int cmd_rules(const Options& o, std::ostream& out) {
  if (o.format == "dot") throw UsageError("rules support --format text|json");
  if (!o.necessary && o.algorithm != "auto") throw UsageError("--algorithm needs --necessary");
  auto fdc = load_decision_context(o);
  RuleType type = rule_type(o.type);
  RuleSetOptions opts{o.include_trivial};
  std::vector<DecisionRule> rules;
  if (o.necessary) {
    Acquisition alg = o.algorithm == "auto" ? default_acquisition(fdc, type) : acquisition(o.algorithm);
    if (!produces(alg, type))
      throw UsageError(std::string(to_string(alg)) + " does not produce " + std::string(to_string(type)) + "-rules");
    rules = acquire_necessary_rules(fdc, type, alg, opts).rules;
  } else {
    rules = all_rules(fdc, type, opts);
  }
  if (o.format == "json")
    emit(out, rules_json(fdc, rules, o.necessary));
  else
    out << rules_text(fdc, rules);
  return ok;
}

int cmd_reduce(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.format == "dot") throw UsageError("reduce supports --format text|json");
  auto fdc = load_decision_context(o);
  bool type_I = rule_type(o.type) == RuleType::I;
  auto result = type_I ? i_reductions(fdc) : ii_reductions(fdc);
  if (result.unconstrained())
    err << "warning: the discernibility function has no clauses; no conditional attribute is needed\n";
  if (o.format == "json") {
    emit(out, reduction_json(fdc.conditional(), result));
    return ok;
  }
  out << matrix_text(fdc.conditional(), discernibility_matrix(type_I ? fdc : complement_decision(fdc))) << '\n';
  out << reduction_text(fdc.conditional(), result);
  return ok;
}

int cmd_check(const Options& o, std::ostream& out) {
  if (o.format == "dot") throw UsageError("check supports --format text|json");
  auto report = check_canonical(selected_part(o));
  if (o.format == "json")
    emit(out, check_json(report));
  else
    out << check_text(report);
  return ok;
}

struct Size {
  std::size_t u, m, n;
};

std::vector<Size> parse_sizes(const std::string& text) {
  std::vector<Size> sizes;
  for (const auto& item : split(text, ',')) {
    auto dims = split(item, 'x');
    if (dims.size() != 3) throw UsageError("size must be UxMxN: " + item);
    try {
      std::size_t pos = 0;
      std::vector<std::size_t> v;
      for (const auto& d : dims) {
        v.push_back(std::stoul(d, &pos));
        if (pos != d.size() || v.back() == 0) throw std::invalid_argument(d);
      }
      sizes.push_back({v[0], v[1], v[2]});
    } catch (const std::exception&) {
      throw UsageError("size must be UxMxN with positive integers: " + item);
    }
  }
  if (sizes.empty()) throw UsageError("--sizes is empty");
  return sizes;
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  try {
    for (const auto& item : split(text, ',')) {
      auto dots = item.find("..");
      if (dots == std::string::npos) {
        seeds.push_back(std::stoull(item));
        continue;
      }
      auto lo = std::stoull(item.substr(0, dots));
      auto hi = std::stoull(item.substr(dots + 2));
      if (hi < lo) throw UsageError("empty seed range: " + item);
      for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
    }
  } catch (const std::logic_error&) {
    throw UsageError("seeds must be integers or ranges a..b: " + text);
  }
  if (seeds.empty()) throw UsageError("--seeds is empty");
  return seeds;
}

int cmd_bench(const Options& o, std::ostream& out) {
  auto sizes = parse_sizes(o.sizes);
  auto seeds = parse_seeds(o.seeds);
  RuleType type = rule_type(o.type);
  std::vector<Acquisition> algs;
  for (const auto& name : split(o.algorithms, ',')) {
    Acquisition a = acquisition(name);
    if (!produces(a, type))
      throw UsageError(name + " does not produce " + std::string(to_string(type)) + "-rules");
    algs.push_back(a);
  }
  if (algs.empty()) throw UsageError("--algorithms is empty");
  if (std::find(algs.begin(), algs.end(), Acquisition::bruteforce) != algs.end())
    for (const auto& s : sizes)
      if (s.u > kBruteforceMaxObjects)
        throw UsageError("bruteforce is limited to " + std::to_string(kBruteforceMaxObjects) + " objects");

  struct Row {
    Size size;
    std::uint64_t seed;
    Acquisition alg;
    double ms;
    AcquisitionResult result;
  };
  std::vector<Row> rows;
  for (const auto& size : sizes)
    for (auto seed : seeds) {
      auto fdc = random_fdc(size.u, size.m, size.n, o.density, seed);
      std::size_t first = rows.size();
      for (auto alg : algs) {
        auto start = std::chrono::steady_clock::now();
        auto result = acquire_necessary_rules(fdc, type, alg, {o.include_trivial});
        std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
        rows.push_back({size, seed, alg, elapsed.count(), std::move(result)});
      }
      for (std::size_t i = first + 1; i < rows.size(); ++i)
        if (rows[i].result.rules != rows[first].result.rules)
          throw VerificationError(std::string(to_string(rows[i].alg)) + " and " +
                                  std::string(to_string(rows[first].alg)) + " disagree on " +
                                  std::to_string(size.u) + "x" + std::to_string(size.m) + "x" +
                                  std::to_string(size.n) + " seed " + std::to_string(seed));
    }

  out << "size_u,size_m,size_n,density,seed,algorithm,wall_ms,n_Lo,n_Ln,n_rules\n";
  for (const auto& r : rows)
    out << r.size.u << ',' << r.size.m << ',' << r.size.n << ',' << o.density << ',' << r.seed << ','
        << to_string(r.alg) << ',' << std::fixed << std::setprecision(3) << r.ms << std::defaultfloat << ','
        << r.result.stats.conditional_lattice_size << ',' << r.result.stats.decision_lattice_size << ','
        << r.result.rules.size() << '\n';
  return ok;
}

void add_input(CLI::App* cmd, Options& o) {
  cmd->add_option("input", o.input, "Context file (.csv or Burmeister .cxt)")->required();
}

void add_decision(CLI::App* cmd, Options& o, bool required) {
  auto* opt = cmd->add_option("--decision", o.decision, "Comma-separated decision attribute labels");
  if (required) opt->required();
}

void add_format(CLI::App* cmd, Options& o, std::vector<std::string> allowed) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
}

void add_part(CLI::App* cmd, Options& o) {
  cmd->add_option("--part", o.part, "Which context of the decision table")
      ->check(CLI::IsMember({"conditional", "decision", "complement-decision"}));
}

void add_type(CLI::App* cmd, Options& o) {
  cmd->add_option("--type", o.type, "Rule type")->check(CLI::IsMember({"I", "II"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decision rules and attribute reduction on formal decision contexts", "fcadr"};
  app.require_subcommand(1);
  Options o;

  auto* lattice = app.add_subcommand("lattice", "Enumerate a concept lattice");
  add_input(lattice, o);
  add_decision(lattice, o, false);
  add_part(lattice, o);
  lattice->add_option("--kind", o.kind, "Concept kind")->check(CLI::IsMember({"formal", "object", "property"}));
  add_format(lattice, o, {"text", "json", "dot"});

  auto* rules = app.add_subcommand("rules", "List decision rules");
  add_input(rules, o);
  add_decision(rules, o, true);
  add_type(rules, o);
  rules->add_flag("--necessary", o.necessary, "Only the necessary rules");
  rules->add_flag("--include-trivial", o.include_trivial, "Keep rules with empty premise or full conclusion");
  rules->add_option("--algorithm", o.algorithm, "Acquisition algorithm for --necessary")
      ->check(CLI::IsMember({"auto", "alg1", "alg2", "s1", "s2", "complement", "bruteforce"}));
  add_format(rules, o, {"text", "json", "dot"});

  auto* reduce = app.add_subcommand("reduce", "Compute all attribute reductions");
  add_input(reduce, o);
  add_decision(reduce, o, true);
  add_type(reduce, o);
  add_format(reduce, o, {"text", "json", "dot"});

  auto* check = app.add_subcommand("check", "Report empty or full rows and columns");
  add_input(check, o);
  add_decision(check, o, false);
  add_part(check, o);
  add_format(check, o, {"text", "json", "dot"});

  auto* bench = app.add_subcommand("bench", "Time acquisition algorithms on random contexts");
  bench->add_option("--sizes", o.sizes, "Comma-separated UxMxN list")->required();
  bench->add_option("--density", o.density, "Incidence density")->check(CLI::Range(0.0, 1.0));
  bench->add_option("--seeds", o.seeds, "Seeds: list and/or ranges a..b");
  bench->add_option("--algorithms", o.algorithms, "Comma-separated algorithms to compare");
  add_type(bench, o);
  bench->add_flag("--include-trivial", o.include_trivial, "Keep trivial rules");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (lattice->parsed()) return cmd_lattice(o, out);
    if (rules->parsed()) return cmd_rules(o, out);
    if (reduce->parsed()) return cmd_reduce(o, out, err);
    if (check->parsed()) return cmd_check(o, out);
    return cmd_bench(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return usage_error;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << '\n';
    return verification_failed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return data_error;
  }
}

}  // namespace fcadr::cli
