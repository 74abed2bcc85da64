#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "relcat/axioms.hpp"
#include "relcat/document.hpp"
#include "relcat/enumerate.hpp"
#include "relcat/examples.hpp"
#include "relcat/suite.hpp"

namespace {

using nlohmann::json;
using namespace relcat;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInvalid = 2;
constexpr int kSizeGuard = 3;

json witness_json(const Witness& w) {
  return {{"axiom", w.axiom}, {"elements", w.elements}, {"description", w.description}};
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::parse_error:
    case ErrorKind::invalid_argument:
      return kInvalid;
    case ErrorKind::size_limit_exceeded:
    case ErrorKind::carrier_too_large:
      return kSizeGuard;
    default:
      return kFail;
  }
}

struct AxiomResult {
  std::string axiom;
  bool holds = false;
  std::optional<Witness> witness;
};

const std::vector<std::string> kBasicAxioms{"weak-functionality", "functionality", "totality",
                                            "associativity",      "coherence",     "unit-cover"};

std::vector<std::string> class_axioms(StructureClass c) {
  switch (c) {
    case StructureClass::any: return {};
    case StructureClass::relational_semigroup: return {"associativity"};
    case StructureClass::relational_monoid: return {"associativity", "unit-cover"};
    case StructureClass::coherent_relational_monoid:
      return {"associativity", "unit-cover", "coherence"};
    case StructureClass::partial_semigroup: return {"associativity", "weak-functionality"};
    case StructureClass::partial_monoid:
      return {"associativity", "weak-functionality", "unit-cover"};
    case StructureClass::object_free_category:
      return {"associativity", "weak-functionality", "unit-cover", "coherence"};
    case StructureClass::semigroup: return {"associativity", "functionality"};
    case StructureClass::monoid: return {"associativity", "functionality", "unit-cover"};
  }
  return {};
}

std::vector<AxiomResult> kind_laws(const StructureDocument& doc) {
  LawReport laws;
  std::string prefix;
  switch (doc.kind()) {
    case DocumentKind::ternary: return {};
    case DocumentKind::partial_algebra:
      laws = verify_ahs_laws(std::get<PartialAlgebra>(doc.payload));
      prefix = "algebraic:";
      break;
    case DocumentKind::lr:
      laws = check_lr_reduced_laws(std::get<LrStructure>(doc.payload));
      prefix = "lr:";
      break;
    case DocumentKind::category:
      laws = check_category_axioms(std::get<SmallCategory>(doc.payload));
      prefix = "category:";
      break;
    case DocumentKind::categorical_semigroup:
      laws = check_categorical_semigroup(std::get<CategoricalSemigroup>(doc.payload));
      prefix = "categorical-semigroup:";
      break;
  }
  std::vector<AxiomResult> out;
  for (const auto& r : laws.results) out.push_back({prefix + r.law, r.holds(), r.counterexample});
  return out;
}

std::vector<std::string> available_axioms(const StructureDocument& doc) {
  std::vector<std::string> names = kBasicAxioms;
  for (StructureClass c : all_structure_classes()) names.emplace_back(to_string(c));
  for (const auto& r : kind_laws(doc)) names.push_back(r.axiom);
  return names;
}

AxiomResult run_axiom(const StructureDocument& doc, const Classification& c,
                      const std::vector<AxiomResult>& laws, const std::string& name) {
  for (const auto& r : laws) {
    if (r.axiom == name) return r;
  }
  if (auto cls = parse_structure_class(name)) {
    AxiomResult r{name, c.is(*cls), std::nullopt};
    for (const auto& a : class_axioms(*cls)) {
      if (!r.holds && !r.witness && c.failure(a) != nullptr) r.witness = *c.failure(a);
    }
    return r;
  }
  if (std::find(kBasicAxioms.begin(), kBasicAxioms.end(), name) == kBasicAxioms.end()) {
    std::string known;
    for (const auto& a : available_axioms(doc)) known += " " + a;
    throw Error(ErrorKind::invalid_argument, "unknown axiom '" + name + "'; known:" + known);
  }
  const Witness* w = c.failure(name);
  return {name, w == nullptr, w ? std::optional<Witness>(*w) : std::nullopt};
}

int cmd_check(const std::string& file, std::vector<std::string> axioms, bool as_json) {
  const StructureDocument doc = load_file(file);
  const Classification c = classify(relation_of(doc));
  const auto laws = kind_laws(doc);
  if (axioms.empty()) {
    axioms = kBasicAxioms;
    for (const auto& l : laws) axioms.push_back(l.axiom);
  }
  std::vector<AxiomResult> results;
  for (const auto& a : axioms) results.push_back(run_axiom(doc, c, laws, a));
  bool passed = true;
  for (const auto& r : results) passed = passed && r.holds;

  if (as_json) {
    json j{{"file", file}, {"kind", std::string(to_string(doc.kind()))}, {"passed", passed}};
    j["results"] = json::array();
    for (const auto& r : results) {
      json entry{{"axiom", r.axiom}, {"holds", r.holds}};
      if (r.witness) entry["witness"] = witness_json(*r.witness);
      j["results"].push_back(entry);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.holds ? "PASS " : "FAIL ") << r.axiom;
      if (r.witness) std::cout << "  " << r.witness->description;
      std::cout << "\n";
    }
  }
  return passed ? kPass : kFail;
}

int cmd_classify(const std::string& file, bool as_json) {
  const StructureDocument doc = load_file(file);
  const Classification c = classify(relation_of(doc));
  if (as_json) {
    json j{{"file", file},
           {"kind", std::string(to_string(doc.kind()))},
           {"size", doc.size()},
           {"weakly-functional", c.weakly_functional},
           {"functional", c.functional},
           {"total", c.total},
           {"associative", c.rel_associative},
           {"coherent", c.coherent},
           {"unit-cover", c.unit_cover},
           {"left-units", to_set(c.unit_sets.left)},
           {"right-units", to_set(c.unit_sets.right)}};
    json classes = json::array();
    for (StructureClass cls : all_structure_classes()) {
      if (c.is(cls)) classes.push_back(std::string(to_string(cls)));
    }
    j["classes"] = classes;
    j["failures"] = json::array();
    for (const auto& w : c.failures) j["failures"].push_back(witness_json(w));
    std::cout << j.dump(2) << "\n";
    return kPass;
  }
  std::cout << "kind " << to_string(doc.kind()) << ", " << doc.size() << " elements\n";
  for (StructureClass cls : all_structure_classes()) {
    std::cout << (c.is(cls) ? "  yes " : "  no  ") << to_string(cls) << "\n";
  }
  std::cout << "units";
  for (Element e : to_set(c.unit_sets.all())) std::cout << " " << e;
  std::cout << "\n";
  for (const auto& w : c.failures) std::cout << "fails " << w.axiom << ": " << w.description << "\n";
  return kPass;
}

int cmd_convert(const std::string& file, const std::string& target, bool round_trip, bool pretty) {
  const StructureDocument doc = load_file(file);
  const auto to = parse_document_kind(target);
  if (!to) throw Error(ErrorKind::invalid_argument, "unknown kind '" + target + "'");
  StructureDocument out;
  out.payload = convert(doc.payload, *to);
  out.name = doc.name;
  if (out.size() == doc.size()) out.labels = doc.labels;
  std::cout << emit(out, pretty) << "\n";
  if (!round_trip) return kPass;
  const DocumentPayload back = convert(out.payload, doc.kind());
  const bool identity = back == doc.payload;
  std::cerr << "round trip " << to_string(doc.kind()) << " -> " << target << " -> "
            << to_string(doc.kind()) << ": " << (identity ? "identity" : "differs") << "\n";
  if (!identity) {
    StructureDocument diff;
    diff.payload = back;
    std::cerr << "got " << emit(diff) << "\n";
  }
  return identity ? kPass : kFail;
}

int cmd_enumerate(std::size_t size, const std::string& cls, const std::vector<std::string>& require,
                  bool emit_documents, const std::string& strategy, bool as_json) {
  EnumerationSpec spec;
  spec.size = size;
  const auto c = parse_structure_class(cls);
  if (!c) throw Error(ErrorKind::invalid_argument, "unknown class '" + cls + "'");
  spec.target_class = *c;
  spec.require = require;
  spec.mode = emit_documents ? EnumerationMode::canonical_list : EnumerationMode::count;
  if (strategy == "functional") spec.strategy = Strategy::functional;
  else if (strategy == "relational") spec.strategy = Strategy::relational;
  else if (strategy != "auto") throw Error(ErrorKind::invalid_argument, "unknown strategy '" + strategy + "'");

  const EnumerationResult result = enumerate(spec);
  if (!emit_documents) {
    if (as_json) {
      std::cout << json{{"size", size}, {"class", cls}, {"require", require}, {"count", result.count}}.dump()
                << "\n";
    } else {
      std::cout << result.count << "\n";
    }
    return kPass;
  }
  std::size_t i = 0;
  for (const auto& f : result.forms) {
    StructureDocument doc;
    doc.payload = f.structure;
    doc.name = cls + "-" + std::to_string(size) + "-" + std::to_string(i++);
    std::cout << emit(doc) << "\n";
  }
  return kPass;
}

StructureDocument example_document(const NamedExample& e) {
  StructureDocument doc;
  std::visit([&](const auto& p) { doc.payload = p; }, e.payload);
  doc.name = e.name;
  doc.labels = e.labels;
  doc.expected = e.expected;
  return doc;
}

int cmd_examples(const std::string& name, bool emit_document, bool as_json) {
  if (!name.empty()) {
    const NamedExample& e = find_example(name);
    if (emit_document) {
      std::cout << emit(example_document(e)) << "\n";
      return kPass;
    }
  }
  bool all_match = true;
  json list = json::array();
  for (const auto& e : named_examples()) {
    if (!name.empty() && e.name != name) continue;
    const auto bad = expectation_mismatches(e);
    all_match = all_match && bad.empty();
    if (emit_document) {
      std::cout << emit(example_document(e)) << "\n";
    } else if (as_json) {
      list.push_back({{"name", e.name},
                      {"description", e.description},
                      {"size", ternary_form(e.payload).size()},
                      {"matches", bad.empty()},
                      {"mismatches", bad}});
    } else {
      std::cout << (bad.empty() ? "ok   " : "BAD  ") << e.name << "  " << e.description << "\n";
      for (const auto& b : bad) std::cout << "     expected " << b << "\n";
    }
  }
  if (as_json && !emit_document) std::cout << list.dump(2) << "\n";
  return all_match ? kPass : kFail;
}

int cmd_paper_suite(bool quick, bool as_json, const std::vector<std::string>& only) {
  const SuiteReport report =
      run_paper_suite(quick ? SuiteOptions::quick() : SuiteOptions{}, only);
  if (as_json) {
    json j{{"passed", report.passed()}, {"lines", json::array()}};
    for (const auto& l : report.lines) {
      j["lines"].push_back({{"id", l.id},
                            {"claim", l.claim},
                            {"passed", l.passed},
                            {"informational", l.informational},
                            {"seconds", l.seconds},
                            {"detail", l.detail}});
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& l : report.lines) {
      const char* verdict = l.informational ? "INFO" : (l.passed ? "PASS" : "FAIL");
      std::printf("%s  %-44s %8.3fs  %s\n", verdict, l.id.c_str(), l.seconds, l.detail.c_str());
    }
    std::cout << (report.passed() ? "all lines pass" : "some lines FAIL") << "\n";
  }
  return report.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relational monoids, object-free categories and their conversions"};
  app.require_subcommand(1);

  std::string file;
  std::vector<std::string> axioms;
  bool as_json = false;
  auto* check = app.add_subcommand("check", "Check axioms of a structure document");
  check->add_option("file", file, "Structure document")->required();
  check->add_option("--axiom", axioms, "Axiom, class or kind law to check (default: all axioms)");
  check->add_flag("--json", as_json, "JSON report");

  auto* classify_cmd = app.add_subcommand("classify", "Classify a structure document");
  classify_cmd->add_option("file", file, "Structure document")->required();
  classify_cmd->add_flag("--json", as_json, "JSON report");

  std::string target;
  bool round_trip = false;
  bool pretty = false;
  auto* convert_cmd = app.add_subcommand("convert", "Convert a document to another kind");
  convert_cmd->add_option("file", file, "Structure document")->required();
  convert_cmd->add_option("--to", target, "Target kind")->required();
  convert_cmd->add_flag("--round-trip", round_trip, "Convert back and compare");
  convert_cmd->add_flag("--pretty", pretty, "Indented output");

  std::size_t size = 0;
  std::string cls = "any";
  std::vector<std::string> require;
  bool count = false;
  bool emit_documents = false;
  std::string strategy = "auto";
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate structures up to isomorphism");
  enumerate_cmd->add_option("--size", size, "Carrier size")->required();
  enumerate_cmd->add_option("--class", cls, "Target class");
  enumerate_cmd->add_option("--require", require, "Extra requirement, optionally prefixed by not-");
  auto* count_flag = enumerate_cmd->add_flag("--count", count, "Print the number of classes");
  enumerate_cmd->add_flag("--emit", emit_documents, "Print one document per class")->excludes(count_flag);
  enumerate_cmd->add_option("--strategy", strategy, "auto, functional or relational");
  enumerate_cmd->add_flag("--json", as_json, "JSON report");

  std::string name;
  bool emit_example = false;
  auto* examples_cmd = app.add_subcommand("examples", "List or emit the named examples");
  examples_cmd->add_option("--name", name, "Example name");
  examples_cmd->add_flag("--emit", emit_example, "Print documents");
  examples_cmd->add_flag("--json", as_json, "JSON report");

  bool quick = false;
  std::vector<std::string> only;
  auto* suite_cmd = app.add_subcommand("paper-suite", "Run every acceptance check");
  suite_cmd->add_flag("--quick", quick, "Smaller sweep bounds");
  suite_cmd->add_flag("--json", as_json, "JSON report");
  suite_cmd->add_option("--only", only, "Criterion ids, or lemma / example")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*check) return cmd_check(file, axioms, as_json);
    if (*classify_cmd) return cmd_classify(file, as_json);
    if (*convert_cmd) return cmd_convert(file, target, round_trip, pretty);
    if (*enumerate_cmd) return cmd_enumerate(size, cls, require, emit_documents, strategy, as_json);
    if (*examples_cmd) return cmd_examples(name, emit_example, as_json);
    if (*suite_cmd) return cmd_paper_suite(quick, as_json, only);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    if (e.witness()) {
      std::cerr << "witness " << e.witness()->axiom << ": " << e.witness()->description << "\n";
    }
    return exit_code(e);
  }
  return kInvalid;
}
