#ifndef MONEXT_JSON_IO_HPP_
#define MONEXT_JSON_IO_HPP_

#include <string>
#include <variant>

#include <json.hpp>

#include "monext/cohomology.hpp"
#include "monext/oracle.hpp"

namespace monext {

using Json = nlohmann::ordered_json;

/// A parsed document: one of the serializable domain objects. Parsing
/// validates shapes and index ranges (ParseError) and then the target
/// module's invariants (domain errors such as NotAssociative or
/// NotAnExtension).
struct Document {
  std::variant<FiniteMonoid, MonoidHom, ExtensionDiagram, Action,
               RelaxedAction, FactorSystem, WSFactorSystem>
      value;

  const char* kind() const;
};

/// Monoid references inside a document may be inline objects or file paths
/// resolved relative to base_dir.
Document parse_document(const std::string& text, const std::string& base_dir);
Document parse_document_file(const std::string& path);

std::string serialize_document(const Document& doc);

// Per-kind JSON builders, also used for CLI reports. Monoids are always
// inlined on output.
Json monoid_to_json(const FiniteMonoid& m);
Json hom_to_json(const MonoidHom& f);
Json extension_to_json(const ExtensionDiagram& d);
Json action_to_json(const Action& a);
Json relaxed_action_to_json(const RelaxedAction& ra);
Json factor_system_to_json(const FactorSystem& fs);
Json ws_factor_system_to_json(const WSFactorSystem& fs);
Json extension_class_to_json(const ExtensionClass& cls);

}  // namespace monext

#endif  // MONEXT_JSON_IO_HPP_
