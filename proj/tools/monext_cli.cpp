// Command-line front end: every operation takes JSON documents in and
// prints a JSON report (or a pretty rendering) with a deterministic field
// order. Exit codes: 0 success, 1 domain error, 2 parse error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "monext/json_io.hpp"

namespace {

using namespace monext;

struct Options {
  std::vector<std::string> inputs;
  std::string mode = "strict";
  std::vector<std::string> generators;  // "h:index" pairs
  int max_size = 4;
  bool pretty = false;
};

[[noreturn]] void fail_domain(const std::string& msg) {
  throw Error(ErrorCode::InvariantViolation, msg);
}

Document load(const Options& opt, std::size_t i) {
  if (i >= opt.inputs.size())
    throw Error(ErrorCode::ParseError,
                "expected at least " + std::to_string(i + 1) + " --input");
  return parse_document_file(opt.inputs[i]);
}

template <typename T>
T expect(Document doc, const std::string& want) {
  if (auto* v = std::get_if<T>(&doc.value)) return std::move(*v);
  throw Error(ErrorCode::ParseError,
              "expected a " + want + " document, got " + doc.kind());
}

std::optional<std::vector<Elt>> generator_choice(const Options& opt,
                                                 const FiniteMonoid& h,
                                                 const ExtensionDiagram& d) {
  if (opt.generators.empty()) return std::nullopt;
  auto cls = classify(d);
  if (!cls.generators)
    fail_domain("diagram has no weak generators to override");
  std::vector<Elt> gens = *cls.generators;
  for (const auto& spec : opt.generators) {
    auto colon = spec.find(':');
    int hv = -1, uv = -1;
    try {
      if (colon == std::string::npos) throw std::invalid_argument(spec);
      hv = std::stoi(spec.substr(0, colon));
      uv = std::stoi(spec.substr(colon + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "--generator wants h:index");
    }
    if (hv < 0 || hv >= h.size())
      throw Error(ErrorCode::ParseError, "--generator h out of range");
    gens[hv] = uv;
  }
  return gens;
}

Json classification_report(const ExtensionDiagram& d) {
  Json j;
  j["command"] = "classify";
  j["ok"] = true;
  j["classification"] = extension_class_to_json(classify(d));
  return j;
}

Json run_validate(const Options& opt) {
  Document doc = load(opt, 0);
  Json j;
  j["command"] = "validate";
  j["ok"] = true;
  j["kind"] = doc.kind();
  if (auto* m = std::get_if<FiniteMonoid>(&doc.value)) {
    j["size"] = m->size();
    j["identity"] = m->identity();
    j["commutative"] = is_commutative(*m);
    j["group"] = is_group(*m);
    j["units"] = units(*m);
  }
  return j;
}

Json run_classify(const Options& opt) {
  return classification_report(
      expect<ExtensionDiagram>(load(opt, 0), "extension"));
}

Json run_semidirect(const Options& opt) {
  auto action = expect<Action>(load(opt, 0), "action");
  auto d = semidirect(action);
  Json j;
  j["command"] = "semidirect";
  j["ok"] = true;
  j["extension"] = extension_to_json(d);
  j["classification"] = extension_class_to_json(classify(d));
  return j;
}

Json run_crossed(const Options& opt) {
  auto fs = expect<FactorSystem>(load(opt, 0), "factor_system");
  auto d = crossed_product(fs);
  Json j;
  j["command"] = "crossed";
  j["ok"] = true;
  j["extension"] = extension_to_json(d);
  j["classification"] = extension_class_to_json(classify(d));
  return j;
}

Json run_relaxed_semidirect(const Options& opt) {
  auto ra = expect<RelaxedAction>(load(opt, 0), "relaxed_action");
  auto d = relaxed_semidirect(ra.rel, ra.alpha);
  Json j;
  j["command"] = "relaxed-semidirect";
  j["ok"] = true;
  j["extension"] = extension_to_json(d);
  j["classification"] = extension_class_to_json(classify(d));
  return j;
}

Json run_relaxed_crossed(const Options& opt) {
  auto fs = expect<WSFactorSystem>(load(opt, 0), "ws_factor_system");
  auto d = relaxed_crossed_product(fs);
  Json j;
  j["command"] = "relaxed-crossed";
  j["ok"] = true;
  j["extension"] = extension_to_json(d);
  j["classification"] = extension_class_to_json(classify(d));
  return j;
}

Json run_extract(const Options& opt) {
  auto d = expect<ExtensionDiagram>(load(opt, 0), "extension");
  auto gens = generator_choice(opt, d.H, d);
  Json j;
  j["command"] = "extract";
  j["ok"] = true;
  j["mode"] = opt.mode;
  if (opt.mode == "strict") {
    if (d.s && !gens) {
      j["result"] = action_to_json(extract_action(d));
    } else {
      j["result"] = factor_system_to_json(extract_factor_system(d, gens));
    }
  } else {
    if (d.s && !gens) {
      auto ra = extract_relaxed_action(d);
      j["result"] = relaxed_action_to_json(ra);
    } else {
      j["result"] =
          ws_factor_system_to_json(extract_ws_factor_system(d, gens));
    }
  }
  return j;
}

Json cohomology_report(const CohomologyResult& res, const char* command) {
  Json j;
  j["command"] = command;
  j["ok"] = true;
  j["cocycle_count"] = res.cocycle_count;
  j["coboundary_count"] = res.coboundary_count;
  j["h2_order"] = res.h2_order;
  j["identity_class"] = res.identity_class;
  Json classes = Json::array();
  for (const auto& chi : res.h2_classes) classes.push_back(chi);
  j["h2_classes"] = classes;
  j["group_table"] = res.group_table;
  return j;
}

Json run_h2(const Options& opt) {
  Document doc = load(opt, 0);
  if (opt.mode == "strict")
    return cohomology_report(h2(expect<Action>(std::move(doc), "action")),
                             "h2");
  return cohomology_report(
      h2(expect<RelaxedAction>(std::move(doc), "relaxed_action")), "h2");
}

Json run_baer_sum(const Options& opt) {
  auto d1 = expect<ExtensionDiagram>(load(opt, 0), "extension");
  auto d2 = expect<ExtensionDiagram>(load(opt, 1), "extension");
  auto sum = baer_sum(d1, d2);
  Json j;
  j["command"] = "baer-sum";
  j["ok"] = true;
  j["extension"] = extension_to_json(sum);
  j["classification"] = extension_class_to_json(classify(sum));
  return j;
}

Json run_iso(const Options& opt) {
  Document a = load(opt, 0);
  Document b = load(opt, 1);
  Json j;
  j["command"] = "iso";
  j["ok"] = true;
  if (auto* ma = std::get_if<FiniteMonoid>(&a.value)) {
    auto mb = expect<FiniteMonoid>(std::move(b), "monoid");
    auto iso = find_isomorphism(*ma, mb);
    j["isomorphic"] = iso.has_value();
    if (iso) j["map"] = iso->map;
  } else {
    auto da = expect<ExtensionDiagram>(std::move(a), "extension");
    auto db = expect<ExtensionDiagram>(std::move(b), "extension");
    bool split = da.s.has_value() && db.s.has_value();
    auto iso = find_extension_isomorphism(da, db, split);
    j["split"] = split;
    j["isomorphic"] = iso.has_value();
    if (iso) j["map"] = iso->map;
  }
  return j;
}

Json run_enumerate(const Options& opt) {
  Json j;
  j["command"] = "enumerate";
  j["ok"] = true;
  if (opt.inputs.empty()) {
    const auto& cat = enumerate_monoids(opt.max_size);
    j["order"] = cat.order;
    j["count"] = cat.monoids.size();
    Json tables = Json::array();
    for (const auto& m : cat.monoids) tables.push_back(monoid_to_json(m));
    j["monoids"] = tables;
    return j;
  }
  auto n = expect<FiniteMonoid>(load(opt, 0), "monoid");
  auto h = expect<FiniteMonoid>(load(opt, 1), "monoid");
  CensusMode mode =
      opt.mode == "relaxed" ? CensusMode::WsCarrier : CensusMode::All;
  auto census = enumerate_extensions(n, h, mode, opt.max_size);
  j["mode"] = opt.mode == "relaxed" ? "ws_carrier" : "catalog";
  j["entries"] = census.entries.size();
  j["classes"] = census.class_count;
  Json reps = Json::array();
  for (int rep : census.class_reps) {
    Json entry;
    entry["extension"] = extension_to_json(census.entries[rep].diagram);
    entry["classification"] =
        extension_class_to_json(census.entries[rep].cls);
    reps.push_back(std::move(entry));
  }
  j["class_representatives"] = reps;
  return j;
}

Json run_census_check(const Options& opt) {
  auto n = expect<FiniteMonoid>(load(opt, 0), "monoid");
  auto h = expect<FiniteMonoid>(load(opt, 1), "monoid");
  auto report = census_check(n, h);
  Json j;
  j["command"] = "census-check";
  j["ok"] = report.ok();
  j["actions"] = report.action_count;
  j["schreier_split_classes"] = report.schreier_split_classes;
  j["relaxed_actions"] = report.relaxed_action_count;
  j["ws_split_classes"] = report.ws_split_classes;
  j["ws_factor_system_classes"] = report.ws_factor_system_classes;
  j["ws_classes"] = report.ws_classes;
  j["checked_cohomology"] = report.checked_cohomology;
  Json lines = Json::array();
  for (const auto& line : report.cohomology) {
    Json l;
    l["label"] = line.label;
    l["h2_order"] = line.h2_order;
    l["census_classes"] = line.census_classes;
    lines.push_back(std::move(l));
  }
  j["cohomology"] = lines;
  j["failures"] = report.failures;
  if (!report.ok()) fail_domain("census check failed");
  return j;
}

Json run_glue(const Options& opt) {
  auto n = expect<FiniteMonoid>(load(opt, 0), "monoid");
  auto h = expect<FiniteMonoid>(load(opt, 1), "monoid");
  auto f = expect<MonoidHom>(load(opt, 2), "hom");
  if (!(f.domain == h) || !(f.codomain == n))
    fail_domain("the glueing map must be a hom from H to N");
  auto d = artin_glueing(h, n, f.map);
  Json j;
  j["command"] = "glue";
  j["ok"] = true;
  j["extension"] = extension_to_json(d);
  j["classification"] = extension_class_to_json(classify(d));
  return j;
}

void print_pretty(const Json& j, int indent = 0) {
  std::string pad(indent, ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      std::cout << pad << key << ":\n";
      print_pretty(value, indent + 2);
    } else {
      std::cout << pad << key << ": " << value.dump() << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite monoid extensions toolkit"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--input", opt.inputs,
                 "input document path (repeatable; order: kernel, total, "
                 "quotient / map as the command needs)");
  app.add_option("--mode", opt.mode, "strict|relaxed")
      ->check(CLI::IsMember({"strict", "relaxed"}));
  app.add_option("--generator", opt.generators,
                 "override the generator for fiber h as h:index (repeatable)");
  app.add_option("--max-size", opt.max_size,
                 "catalog order / census size cap");
  app.add_flag("--pretty", opt.pretty, "human-readable report");

  struct Command {
    const char* name;
    const char* help;
    Json (*run)(const Options&);
  };
  const std::vector<Command> commands = {
      {"validate", "validate a document and report basic facts", run_validate},
      {"classify", "classification flags of an extension", run_classify},
      {"semidirect", "semidirect product of an action", run_semidirect},
      {"crossed", "crossed product of a factor system", run_crossed},
      {"relaxed-semidirect", "relaxed semidirect product",
       run_relaxed_semidirect},
      {"relaxed-crossed", "relaxed crossed product", run_relaxed_crossed},
      {"extract", "extract (relaxed) action or factor system", run_extract},
      {"h2", "second cohomology of a (relaxed) action", run_h2},
      {"baer-sum", "Baer sum of two special extensions", run_baer_sum},
      {"iso", "isomorphism search between two documents", run_iso},
      {"enumerate", "monoid catalog or extension census", run_enumerate},
      {"census-check", "characterisation counts for a pair (N, H)",
       run_census_check},
      {"glue", "Artin glueing of a meet-preserving map", run_glue},
  };
  for (const auto& c : commands)
    app.add_subcommand(c.name, c.help)->fallthrough();

  CLI11_PARSE(app, argc, argv);

  const Command* chosen = nullptr;
  for (const auto& c : commands)
    if (app.got_subcommand(c.name)) chosen = &c;

  try {
    Json report = chosen->run(opt);
    if (opt.pretty)
      print_pretty(report);
    else
      std::cout << report.dump(2) << "\n";
    return 0;
  } catch (const Error& err) {
    Json j;
    j["command"] = chosen->name;
    j["ok"] = false;
    j["error"] = err.what();
    if (opt.pretty)
      print_pretty(j);
    else
      std::cout << j.dump(2) << "\n";
    return err.code() == ErrorCode::ParseError ? 2 : 1;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return 1;
  }
}
