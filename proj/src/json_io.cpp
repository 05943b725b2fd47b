#include "monext/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace monext {

namespace {

namespace fs = std::filesystem;

[[noreturn]] void parse_fail(const std::string& where, const std::string& msg) {
  throw Error(ErrorCode::ParseError, where + ": " + msg);
}

int require_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) parse_fail(where, "expected an integer");
  return j.get<int>();
}

std::vector<Elt> require_index_vector(const Json& j, const std::string& where,
                                      int upper) {
  if (!j.is_array()) parse_fail(where, "expected an array");
  std::vector<Elt> out;
  for (const auto& v : j) {
    int x = require_int(v, where);
    if (x < 0 || x >= upper)
      parse_fail(where, "index " + std::to_string(x) + " out of range");
    out.push_back(x);
  }
  return out;
}

// A flat table given as an array of rows.
std::vector<Elt> require_table(const Json& j, const std::string& where,
                               int rows, int cols, int upper) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    parse_fail(where, "expected " + std::to_string(rows) + " rows");
  std::vector<Elt> out;
  for (const auto& row : j) {
    auto r = require_index_vector(row, where, upper);
    if (static_cast<int>(r.size()) != cols)
      parse_fail(where, "expected rows of length " + std::to_string(cols));
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

Json table_to_json(const std::vector<Elt>& flat, int rows, int cols) {
  Json out = Json::array();
  for (int i = 0; i < rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < cols; ++j) row.push_back(flat[i * cols + j]);
    out.push_back(std::move(row));
  }
  return out;
}

FiniteMonoid parse_monoid_value(const Json& j, const std::string& base_dir,
                                const std::string& where);

FiniteMonoid parse_monoid_object(const Json& j, const std::string& where) {
  if (!j.is_object()) parse_fail(where, "expected a monoid object");
  if (!j.contains("size") || !j.contains("identity") || !j.contains("table"))
    parse_fail(where, "monoid needs size, identity and table");
  int size = require_int(j["size"], where + ".size");
  if (size <= 0) parse_fail(where + ".size", "must be positive");
  int identity = require_int(j["identity"], where + ".identity");
  if (identity < 0 || identity >= size)
    parse_fail(where + ".identity", "index out of range");
  auto table = require_table(j["table"], where + ".table", size, size, size);
  std::vector<std::string> names;
  if (j.contains("names")) {
    if (!j["names"].is_array() || static_cast<int>(j["names"].size()) != size)
      parse_fail(where + ".names", "expected one name per element");
    for (const auto& v : j["names"]) {
      if (!v.is_string()) parse_fail(where + ".names", "expected strings");
      names.push_back(v.get<std::string>());
    }
  }
  return validate_monoid(size, identity, std::move(table), std::move(names));
}

FiniteMonoid parse_monoid_value(const Json& j, const std::string& base_dir,
                                const std::string& where) {
  if (j.is_string()) {
    fs::path p(j.get<std::string>());
    if (p.is_relative()) p = fs::path(base_dir) / p;
    std::ifstream in(p);
    if (!in) parse_fail(where, "cannot read " + p.string());
    std::stringstream buf;
    buf << in.rdbuf();
    Document doc = parse_document(buf.str(), p.parent_path().string());
    if (auto* m = std::get_if<FiniteMonoid>(&doc.value)) return *m;
    parse_fail(where, p.string() + " is not a monoid document");
  }
  return parse_monoid_object(j, where);
}

MonoidHom parse_hom_parts(const Json& j, const std::string& base_dir) {
  if (!j.contains("domain") || !j.contains("codomain") || !j.contains("map"))
    parse_fail("hom", "needs domain, codomain and map");
  FiniteMonoid dom = parse_monoid_value(j["domain"], base_dir, "hom.domain");
  FiniteMonoid cod = parse_monoid_value(j["codomain"], base_dir,
                                        "hom.codomain");
  auto map = require_index_vector(j["map"], "hom.map", cod.size());
  if (static_cast<int>(map.size()) != dom.size())
    parse_fail("hom.map", "length differs from the domain size");
  MonoidHom f{std::move(dom), std::move(cod), std::move(map)};
  if (auto r = check_hom(f); !r)
    throw Error(ErrorCode::NotAHom, r.detail);
  return f;
}

ExtensionDiagram parse_extension_parts(const Json& j,
                                       const std::string& base_dir) {
  for (const char* field : {"n", "g", "h", "k", "e"})
    if (!j.contains(field))
      parse_fail("extension", std::string("missing field ") + field);
  FiniteMonoid n = parse_monoid_value(j["n"], base_dir, "extension.n");
  FiniteMonoid g = parse_monoid_value(j["g"], base_dir, "extension.g");
  FiniteMonoid h = parse_monoid_value(j["h"], base_dir, "extension.h");
  auto kmap = require_index_vector(j["k"], "extension.k", g.size());
  if (static_cast<int>(kmap.size()) != n.size())
    parse_fail("extension.k", "length differs from |N|");
  auto emap = require_index_vector(j["e"], "extension.e", h.size());
  if (static_cast<int>(emap.size()) != g.size())
    parse_fail("extension.e", "length differs from |G|");
  ExtensionDiagram d{n, g, h, MonoidHom{n, g, std::move(kmap)},
                     MonoidHom{g, h, std::move(emap)}, std::nullopt};
  if (j.contains("s") && !j["s"].is_null()) {
    auto smap = require_index_vector(j["s"], "extension.s", g.size());
    if (static_cast<int>(smap.size()) != h.size())
      parse_fail("extension.s", "length differs from |H|");
    d.s = MonoidHom{h, g, std::move(smap)};
  }
  if (auto r = check_extension(d); !r)
    throw Error(ErrorCode::NotAnExtension, r.detail);
  return d;
}

std::pair<FiniteMonoid, FiniteMonoid> parse_hn(const Json& j,
                                               const std::string& base_dir,
                                               const char* kind) {
  if (!j.contains("h") || !j.contains("n"))
    parse_fail(kind, "needs h and n");
  FiniteMonoid h = parse_monoid_value(j["h"], base_dir,
                                      std::string(kind) + ".h");
  FiniteMonoid n = parse_monoid_value(j["n"], base_dir,
                                      std::string(kind) + ".n");
  return {std::move(h), std::move(n)};
}

Relaxation parse_relaxation(const Json& j, const FiniteMonoid& h,
                            const FiniteMonoid& n, const char* kind) {
  if (!j.contains("rel")) parse_fail(kind, "missing field rel");
  auto cls = require_table(j["rel"], std::string(kind) + ".rel", h.size(),
                           n.size(), n.size());
  return Relaxation(h, n, std::vector<int>(cls.begin(), cls.end()));
}

}  // namespace

const char* Document::kind() const {
  struct Visitor {
    const char* operator()(const FiniteMonoid&) const { return "monoid"; }
    const char* operator()(const MonoidHom&) const { return "hom"; }
    const char* operator()(const ExtensionDiagram&) const {
      return "extension";
    }
    const char* operator()(const Action&) const { return "action"; }
    const char* operator()(const RelaxedAction&) const {
      return "relaxed_action";
    }
    const char* operator()(const FactorSystem&) const {
      return "factor_system";
    }
    const char* operator()(const WSFactorSystem&) const {
      return "ws_factor_system";
    }
  };
  return std::visit(Visitor{}, value);
}

Document parse_document(const std::string& text, const std::string& base_dir) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw Error(ErrorCode::ParseError, "malformed JSON");
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw Error(ErrorCode::ParseError, "document needs a kind field");
  std::string kind = j["kind"].get<std::string>();

  if (kind == "monoid") return Document{parse_monoid_object(j, "monoid")};
  if (kind == "hom") return Document{parse_hom_parts(j, base_dir)};
  if (kind == "extension")
    return Document{parse_extension_parts(j, base_dir)};
  if (kind == "action") {
    auto [h, n] = parse_hn(j, base_dir, "action");
    if (!j.contains("alpha")) parse_fail("action", "missing field alpha");
    auto alpha =
        require_table(j["alpha"], "action.alpha", h.size(), n.size(), n.size());
    if (auto r = check_action(h, n, alpha); !r)
      throw Error(ErrorCode::ActionInvalid, r.detail);
    return Document{Action{std::move(h), std::move(n), std::move(alpha)}};
  }
  if (kind == "relaxed_action") {
    auto [h, n] = parse_hn(j, base_dir, "relaxed_action");
    Relaxation rel = parse_relaxation(j, h, n, "relaxed_action");
    if (!j.contains("alpha"))
      parse_fail("relaxed_action", "missing field alpha");
    auto alpha = require_table(j["alpha"], "relaxed_action.alpha", h.size(),
                               n.size(), n.size());
    if (auto r = check_relaxation(rel); !r)
      throw Error(ErrorCode::InvalidRelaxedAction, r.detail);
    if (auto r = check_compatible_action(rel, alpha); !r)
      throw Error(ErrorCode::InvalidRelaxedAction, r.detail);
    return Document{RelaxedAction{std::move(rel), std::move(alpha)}};
  }
  if (kind == "factor_system") {
    auto [h, n] = parse_hn(j, base_dir, "factor_system");
    if (!j.contains("alpha") || !j.contains("chi"))
      parse_fail("factor_system", "needs alpha and chi");
    auto alpha = require_table(j["alpha"], "factor_system.alpha", h.size(),
                               n.size(), n.size());
    auto chi = require_table(j["chi"], "factor_system.chi", h.size(), h.size(),
                             n.size());
    FactorSystem fs{std::move(h), std::move(n), std::move(alpha),
                    std::move(chi)};
    if (auto r = check_factor_system(fs); !r)
      throw Error(ErrorCode::FactorSystemInvalid, r.detail);
    return Document{std::move(fs)};
  }
  if (kind == "ws_factor_system") {
    auto [h, n] = parse_hn(j, base_dir, "ws_factor_system");
    Relaxation rel = parse_relaxation(j, h, n, "ws_factor_system");
    if (!j.contains("alpha") || !j.contains("chi"))
      parse_fail("ws_factor_system", "needs alpha and chi");
    auto alpha = require_table(j["alpha"], "ws_factor_system.alpha", h.size(),
                               n.size(), n.size());
    auto chi = require_table(j["chi"], "ws_factor_system.chi", h.size(),
                             h.size(), n.size());
    WSFactorSystem fs{std::move(rel), std::move(alpha), std::move(chi)};
    if (auto r = check_ws_factor_system(fs); !r)
      throw Error(ErrorCode::InvalidWSFactorSystem, r.detail);
    return Document{std::move(fs)};
  }
  throw Error(ErrorCode::ParseError, "unknown kind: " + kind);
}

Document parse_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str(), fs::path(path).parent_path().string());
}

namespace {

Json monoid_body(const FiniteMonoid& m) {
  Json j;
  j["size"] = m.size();
  j["identity"] = m.identity();
  j["table"] = table_to_json(m.table(), m.size(), m.size());
  if (!m.names().empty()) j["names"] = m.names();
  return j;
}

}  // namespace

Json monoid_to_json(const FiniteMonoid& m) {
  Json j;
  j["kind"] = "monoid";
  j.update(monoid_body(m));
  return j;
}

Json hom_to_json(const MonoidHom& f) {
  Json j;
  j["kind"] = "hom";
  j["domain"] = monoid_body(f.domain);
  j["codomain"] = monoid_body(f.codomain);
  j["map"] = f.map;
  return j;
}

Json extension_to_json(const ExtensionDiagram& d) {
  Json j;
  j["kind"] = "extension";
  j["n"] = monoid_body(d.N);
  j["g"] = monoid_body(d.G);
  j["h"] = monoid_body(d.H);
  j["k"] = d.k.map;
  j["e"] = d.e.map;
  if (d.s) j["s"] = d.s->map;
  return j;
}

Json action_to_json(const Action& a) {
  Json j;
  j["kind"] = "action";
  j["h"] = monoid_body(a.H);
  j["n"] = monoid_body(a.N);
  j["alpha"] = table_to_json(a.alpha, a.H.size(), a.N.size());
  return j;
}

Json relaxed_action_to_json(const RelaxedAction& ra) {
  Json j;
  j["kind"] = "relaxed_action";
  j["h"] = monoid_body(ra.rel.H());
  j["n"] = monoid_body(ra.rel.N());
  j["rel"] = table_to_json(
      std::vector<Elt>(ra.rel.table().begin(), ra.rel.table().end()),
      ra.rel.H().size(), ra.rel.N().size());
  j["alpha"] = table_to_json(ra.alpha, ra.rel.H().size(), ra.rel.N().size());
  return j;
}

Json factor_system_to_json(const FactorSystem& fs) {
  Json j;
  j["kind"] = "factor_system";
  j["h"] = monoid_body(fs.H);
  j["n"] = monoid_body(fs.N);
  j["alpha"] = table_to_json(fs.alpha, fs.H.size(), fs.N.size());
  j["chi"] = table_to_json(fs.chi, fs.H.size(), fs.H.size());
  return j;
}

Json ws_factor_system_to_json(const WSFactorSystem& fs) {
  const auto& h = fs.rel.H();
  const auto& n = fs.rel.N();
  Json j;
  j["kind"] = "ws_factor_system";
  j["h"] = monoid_body(h);
  j["n"] = monoid_body(n);
  j["rel"] = table_to_json(
      std::vector<Elt>(fs.rel.table().begin(), fs.rel.table().end()), h.size(),
      n.size());
  j["alpha"] = table_to_json(fs.alpha, h.size(), n.size());
  j["chi"] = table_to_json(fs.chi, h.size(), h.size());
  return j;
}

Json extension_class_to_json(const ExtensionClass& cls) {
  Json j;
  j["is_extension"] = cls.is_extension;
  j["schreier"] = cls.is_schreier;
  j["weakly_schreier"] = cls.is_weakly_schreier;
  j["special_schreier"] = cls.is_special_schreier;
  j["special_weakly_schreier"] = cls.is_special_weakly_schreier;
  if (cls.is_leech_normal == Flag::NotApplicable)
    j["leech_normal"] = "not_applicable";
  else
    j["leech_normal"] = cls.is_leech_normal == Flag::Yes;
  if (cls.generators) j["generators"] = *cls.generators;
  if (cls.is_schreier_split) j["schreier_split"] = *cls.is_schreier_split;
  if (cls.is_weakly_schreier_split)
    j["weakly_schreier_split"] = *cls.is_weakly_schreier_split;
  return j;
}

std::string serialize_document(const Document& doc) {
  struct Visitor {
    Json operator()(const FiniteMonoid& m) const { return monoid_to_json(m); }
    Json operator()(const MonoidHom& f) const { return hom_to_json(f); }
    Json operator()(const ExtensionDiagram& d) const {
      return extension_to_json(d);
    }
    Json operator()(const Action& a) const { return action_to_json(a); }
    Json operator()(const RelaxedAction& ra) const {
      return relaxed_action_to_json(ra);
    }
    Json operator()(const FactorSystem& fs) const {
      return factor_system_to_json(fs);
    }
    Json operator()(const WSFactorSystem& fs) const {
      return ws_factor_system_to_json(fs);
    }
  };
  return std::visit(Visitor{}, doc.value).dump(2) + "\n";
}

}  // namespace monext
