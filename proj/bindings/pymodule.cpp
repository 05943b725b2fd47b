#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monext/cohomology.hpp"
#include "monext/json_io.hpp"
#include "monext/oracle.hpp"

namespace py = pybind11;
using namespace monext;

namespace {

py::object flag_to_py(Flag f) {
  if (f == Flag::NotApplicable) return py::none();
  return py::bool_(f == Flag::Yes);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite monoid extensions toolkit";

  py::register_exception<Error>(m, "MonextError");

  py::class_<FiniteMonoid>(m, "FiniteMonoid")
      .def(py::init<int, Elt, std::vector<Elt>, std::vector<std::string>>(),
           py::arg("size"), py::arg("identity"), py::arg("table"),
           py::arg("names") = std::vector<std::string>{})
      .def_property_readonly("size", &FiniteMonoid::size)
      .def_property_readonly("identity", &FiniteMonoid::identity)
      .def_property_readonly("table", &FiniteMonoid::table)
      .def_property_readonly("names", &FiniteMonoid::names)
      .def("mul", &FiniteMonoid::mul)
      .def("name_of", &FiniteMonoid::name_of)
      .def("__eq__",
           [](const FiniteMonoid& a, const FiniteMonoid& b) { return a == b; })
      .def("__len__", &FiniteMonoid::size)
      .def("__repr__", [](const FiniteMonoid& mo) {
        return "<FiniteMonoid size=" + std::to_string(mo.size()) + ">";
      });

  py::class_<MonoidHom>(m, "MonoidHom")
      .def(py::init<FiniteMonoid, FiniteMonoid, std::vector<Elt>>(),
           py::arg("domain"), py::arg("codomain"), py::arg("map"))
      .def_readonly("domain", &MonoidHom::domain)
      .def_readonly("codomain", &MonoidHom::codomain)
      .def_readonly("map", &MonoidHom::map)
      .def("__call__", &MonoidHom::operator());

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("ok", &CheckResult::ok)
      .def_readonly("detail", &CheckResult::detail)
      .def("__bool__", [](const CheckResult& r) { return r.ok; })
      .def("__repr__", [](const CheckResult& r) {
        return r.ok ? std::string("<CheckResult ok>")
                    : "<CheckResult fail: " + r.detail + ">";
      });

  py::class_<ExtensionDiagram>(m, "ExtensionDiagram")
      .def(py::init([](FiniteMonoid n, FiniteMonoid g, FiniteMonoid h,
                       MonoidHom k, MonoidHom e,
                       std::optional<MonoidHom> s) {
             return ExtensionDiagram{std::move(n), std::move(g), std::move(h),
                                     std::move(k), std::move(e),
                                     std::move(s)};
           }),
           py::arg("n"), py::arg("g"), py::arg("h"), py::arg("k"),
           py::arg("e"), py::arg("s") = std::nullopt)
      .def_readonly("n", &ExtensionDiagram::N)
      .def_readonly("g", &ExtensionDiagram::G)
      .def_readonly("h", &ExtensionDiagram::H)
      .def_readonly("k", &ExtensionDiagram::k)
      .def_readonly("e", &ExtensionDiagram::e)
      .def_readonly("s", &ExtensionDiagram::s);

  py::class_<ExtensionClass>(m, "ExtensionClass")
      .def_readonly("is_extension", &ExtensionClass::is_extension)
      .def_readonly("is_schreier", &ExtensionClass::is_schreier)
      .def_readonly("is_weakly_schreier", &ExtensionClass::is_weakly_schreier)
      .def_readonly("is_special_schreier",
                    &ExtensionClass::is_special_schreier)
      .def_readonly("is_special_weakly_schreier",
                    &ExtensionClass::is_special_weakly_schreier)
      .def_property_readonly(
          "is_leech_normal",
          [](const ExtensionClass& c) { return flag_to_py(c.is_leech_normal); })
      .def_readonly("generators", &ExtensionClass::generators)
      .def_readonly("is_schreier_split", &ExtensionClass::is_schreier_split)
      .def_readonly("is_weakly_schreier_split",
                    &ExtensionClass::is_weakly_schreier_split);

  py::class_<Action>(m, "Action")
      .def(py::init<FiniteMonoid, FiniteMonoid, std::vector<Elt>>(),
           py::arg("h"), py::arg("n"), py::arg("alpha"))
      .def_readonly("h", &Action::H)
      .def_readonly("n", &Action::N)
      .def_readonly("alpha", &Action::alpha)
      .def("act", &Action::act);

  py::class_<FactorSystem>(m, "FactorSystem")
      .def(py::init<FiniteMonoid, FiniteMonoid, std::vector<Elt>,
                    std::vector<Elt>>(),
           py::arg("h"), py::arg("n"), py::arg("alpha"), py::arg("chi"))
      .def_readonly("h", &FactorSystem::H)
      .def_readonly("n", &FactorSystem::N)
      .def_readonly("alpha", &FactorSystem::alpha)
      .def_readonly("chi", &FactorSystem::chi);

  py::class_<GammaWitness>(m, "GammaWitness")
      .def_readonly("gamma", &GammaWitness::gamma)
      .def_readonly("invertible", &GammaWitness::invertible);

  py::class_<Relaxation>(m, "Relaxation")
      .def(py::init<FiniteMonoid, FiniteMonoid, std::vector<int>>(),
           py::arg("h"), py::arg("n"), py::arg("cls"))
      .def_static("equality", &Relaxation::equality)
      .def_property_readonly("h", &Relaxation::H)
      .def_property_readonly("n", &Relaxation::N)
      .def("related", &Relaxation::related)
      .def("class_id", &Relaxation::class_id)
      .def("class_count", &Relaxation::class_count)
      .def("class_rep", &Relaxation::class_rep)
      .def_property_readonly("table", &Relaxation::table)
      .def("__eq__",
           [](const Relaxation& a, const Relaxation& b) { return a == b; });

  py::class_<RelaxedAction>(m, "RelaxedAction")
      .def(py::init<Relaxation, std::vector<Elt>>(), py::arg("rel"),
           py::arg("alpha"))
      .def_readonly("rel", &RelaxedAction::rel)
      .def_readonly("alpha", &RelaxedAction::alpha);

  py::class_<WSFactorSystem>(m, "WSFactorSystem")
      .def(py::init<Relaxation, std::vector<Elt>, std::vector<Elt>>(),
           py::arg("rel"), py::arg("alpha"), py::arg("chi"))
      .def_readonly("rel", &WSFactorSystem::rel)
      .def_readonly("alpha", &WSFactorSystem::alpha)
      .def_readonly("chi", &WSFactorSystem::chi);

  py::class_<CocycleSet>(m, "CocycleSet")
      .def_readonly("relaxed", &CocycleSet::relaxed)
      .def_readonly("cocycles", &CocycleSet::cocycles);

  py::class_<CohomologyResult>(m, "CohomologyResult")
      .def_readonly("cocycle_count", &CohomologyResult::cocycle_count)
      .def_readonly("coboundary_count", &CohomologyResult::coboundary_count)
      .def_readonly("h2_order", &CohomologyResult::h2_order)
      .def_readonly("identity_class", &CohomologyResult::identity_class)
      .def_readonly("h2_classes", &CohomologyResult::h2_classes)
      .def_readonly("group_table", &CohomologyResult::group_table)
      .def("group", &CohomologyResult::group);

  py::class_<MonoidCatalog>(m, "MonoidCatalog")
      .def_readonly("order", &MonoidCatalog::order)
      .def_readonly("monoids", &MonoidCatalog::monoids);

  py::enum_<CensusMode>(m, "CensusMode")
      .value("ALL", CensusMode::All)
      .value("SPLIT", CensusMode::Split)
      .value("WS_CARRIER", CensusMode::WsCarrier)
      .value("WS_SPLIT_CARRIER", CensusMode::WsSplitCarrier);

  py::class_<CensusEntry>(m, "CensusEntry")
      .def_readonly("diagram", &CensusEntry::diagram)
      .def_readonly("cls", &CensusEntry::cls)
      .def_readonly("iso_class", &CensusEntry::iso_class);

  py::class_<ExtensionCensus>(m, "ExtensionCensus")
      .def_readonly("entries", &ExtensionCensus::entries)
      .def_readonly("class_count", &ExtensionCensus::class_count)
      .def_readonly("class_reps", &ExtensionCensus::class_reps)
      .def("class_of", &ExtensionCensus::class_of);

  py::class_<CensusReport::CohomLine>(m, "CensusCohomLine")
      .def_readonly("label", &CensusReport::CohomLine::label)
      .def_readonly("h2_order", &CensusReport::CohomLine::h2_order)
      .def_readonly("census_classes",
                    &CensusReport::CohomLine::census_classes);

  py::class_<CensusReport>(m, "CensusReport")
      .def_readonly("action_count", &CensusReport::action_count)
      .def_readonly("schreier_split_classes",
                    &CensusReport::schreier_split_classes)
      .def_readonly("relaxed_action_count",
                    &CensusReport::relaxed_action_count)
      .def_readonly("ws_split_classes", &CensusReport::ws_split_classes)
      .def_readonly("ws_factor_system_classes",
                    &CensusReport::ws_factor_system_classes)
      .def_readonly("ws_classes", &CensusReport::ws_classes)
      .def_readonly("checked_cohomology", &CensusReport::checked_cohomology)
      .def_readonly("cohomology", &CensusReport::cohomology)
      .def_readonly("failures", &CensusReport::failures)
      .def("ok", &CensusReport::ok);

  // Core operations.
  m.def("validate_monoid", &validate_monoid, py::arg("size"),
        py::arg("identity"), py::arg("table"),
        py::arg("names") = std::vector<std::string>{});
  m.def("is_commutative", &is_commutative);
  m.def("units", &units);
  m.def("is_group", &is_group);
  m.def("check_hom", &check_hom);
  m.def("congruence_generated",
        [](const FiniteMonoid& mo, const std::vector<std::pair<Elt, Elt>>& p) {
          auto c = congruence_generated(mo, p);
          return py::make_tuple(c.class_of, c.class_count);
        });
  m.def("quotient",
        [](const FiniteMonoid& mo, const std::vector<std::pair<Elt, Elt>>& p) {
          return quotient(mo, congruence_generated(mo, p));
        });
  m.def("direct_product", &direct_product);
  m.def("find_isomorphism", &find_isomorphism);

  m.def("trivial_monoid", &monoids::trivial);
  m.def("cyclic", &monoids::cyclic);
  m.def("chain", &monoids::chain);
  m.def("with_zero", &monoids::with_zero);
  m.def("cyclic_with_zero", &monoids::cyclic_with_zero);

  // Extensions.
  m.def("kernel", &kernel);
  m.def("check_extension", &check_extension);
  m.def("classify", &classify);
  m.def("generator_candidates", &generator_candidates);
  m.def("right_normaliser", &right_normaliser);
  m.def("artin_glueing", &artin_glueing);
  m.def("find_extension_isomorphism", &find_extension_isomorphism,
        py::arg("d1"), py::arg("d2"), py::arg("match_splitting") = false);

  // Strict characterizations.
  m.def("check_action", &check_action);
  m.def("semidirect", &semidirect);
  m.def("extract_action", &extract_action);
  m.def("check_factor_system", &check_factor_system);
  m.def("crossed_product", &crossed_product);
  m.def("extract_factor_system", &extract_factor_system, py::arg("d"),
        py::arg("generator_choice") = std::nullopt);
  m.def("factor_systems_equivalent", &factor_systems_equivalent,
        py::arg("fs1"), py::arg("fs2"), py::arg("require_invertible") = false);

  // Relaxed characterizations.
  m.def("check_relaxation", &check_relaxation);
  m.def("check_compatible_action", &check_compatible_action);
  m.def("relaxed_actions_equal", &relaxed_actions_equal);
  m.def("relaxed_semidirect", &relaxed_semidirect);
  m.def("extract_relaxed_action", &extract_relaxed_action);
  m.def("check_ws_factor_system", &check_ws_factor_system);
  m.def("relaxed_crossed_product", &relaxed_crossed_product);
  m.def("extract_ws_factor_system", &extract_ws_factor_system, py::arg("d"),
        py::arg("generator_choice") = std::nullopt);
  m.def("ws_factor_systems_equivalent", &ws_factor_systems_equivalent);

  // Cohomology.
  m.def("cocycles",
        py::overload_cast<const Action&>(&cocycles));
  m.def("cocycles",
        py::overload_cast<const RelaxedAction&>(&cocycles));
  m.def("inner_factor_sets",
        py::overload_cast<const Action&>(&inner_factor_sets));
  m.def("inner_factor_sets",
        py::overload_cast<const RelaxedAction&>(&inner_factor_sets));
  m.def("h2", py::overload_cast<const Action&>(&h2));
  m.def("h2", py::overload_cast<const RelaxedAction&>(&h2));
  m.def("baer_sum", &baer_sum);

  // Oracle.
  m.def("enumerate_monoids",
        [](int n) { return enumerate_monoids(n); },
        py::return_value_policy::copy);
  m.def("all_actions", &all_actions);
  m.def("all_relaxations", &all_relaxations);
  m.def("all_relaxed_actions", &all_relaxed_actions);
  m.def("all_ws_factor_systems", &all_ws_factor_systems);
  m.def("enumerate_extensions", &enumerate_extensions, py::arg("n"),
        py::arg("h"), py::arg("mode") = CensusMode::All,
        py::arg("max_total_size") = 4);
  m.def("enumerate_ws_split_extensions", &enumerate_ws_split_extensions);
  m.def("enumerate_ws_extensions", &enumerate_ws_extensions);
  m.def("census_check", &census_check);

  // Documents: parse (validating) and return the normalized serialized
  // form; monoid references by path resolve relative to the file.
  m.def("parse_document_text", [](const std::string& text) {
    Document doc = parse_document(text, ".");
    return py::str(serialize_document(doc));
  });
  m.def("parse_document_file", [](const std::string& path) {
    return py::str(serialize_document(parse_document_file(path)));
  });
}
