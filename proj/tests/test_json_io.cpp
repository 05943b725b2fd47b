#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "monext/json_io.hpp"
#include "support.hpp"

using namespace monext;
using namespace monext::testing;

TEST_SUITE_BEGIN("json_io");

TEST_CASE("monoid documents") {
  auto doc = parse_document(
      R"({"kind":"monoid","size":2,"identity":0,"table":[[0,1],[1,1]]})", ".");
  auto* m = std::get_if<FiniteMonoid>(&doc.value);
  REQUIRE(m != nullptr);
  CHECK(find_isomorphism(*m, monoids::chain(2)).has_value());

  CHECK_THROWS_WITH_AS(
      parse_document(
          R"({"kind":"monoid","size":2,"identity":0,"table":[[0,1],[1,5]]})",
          "."),
      doctest::Contains("ParseError"), Error);
  CHECK_THROWS_AS(parse_document("{not json", "."), Error);
  // Well-formed shape, broken algebra: a domain error, not a parse error.
  bool domain_error = false;
  try {
    parse_document(
        R"({"kind":"monoid","size":2,"identity":1,"table":[[0,1],[1,0]]})",
        ".");
  } catch (const Error& err) {
    domain_error = err.code() == ErrorCode::BadIdentity;
  }
  CHECK(domain_error);
}

TEST_CASE("round trips") {
  std::vector<Document> docs;
  docs.push_back(Document{monoids::cyclic_with_zero(2)});
  docs.push_back(Document{w3_diagram()});
  docs.push_back(Document{zero_action()});
  docs.push_back(Document{w3_relaxed_action()});
  docs.push_back(Document{
      FactorSystem{monoids::cyclic(2), monoids::cyclic(2),
                   trivial_action(monoids::cyclic(2), monoids::cyclic(2))
                       .alpha,
                   {0, 0, 0, 1}}});
  auto w3fs = extract_ws_factor_system(w3_diagram());
  docs.push_back(Document{w3fs});
  docs.push_back(Document{w3_diagram().k});

  for (const auto& doc : docs) {
    std::string text = serialize_document(doc);
    Document back = parse_document(text, ".");
    CHECK(std::string(back.kind()) == doc.kind());
    CHECK(serialize_document(back) == text);
  }
}

TEST_CASE("extension documents validate") {
  // Broken k (not injective into the right fiber) must be rejected.
  Json j;
  j["kind"] = "extension";
  j["n"] = monoid_to_json(monoids::cyclic(2));
  j["g"] = monoid_to_json(monoids::cyclic_with_zero(2));
  j["h"] = monoid_to_json(monoids::chain(2));
  j["k"] = std::vector<int>{0, 0};
  j["e"] = std::vector<int>{0, 0, 1};
  bool rejected = false;
  try {
    parse_document(j.dump(), ".");
  } catch (const Error& err) {
    rejected = err.code() == ErrorCode::NotAnExtension;
  }
  CHECK(rejected);
}

TEST_CASE("documents may reference monoids by path") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "monext_json_test";
  fs::create_directories(dir);
  {
    Document z2{monoids::cyclic(2)};
    std::ofstream out(dir / "z2.json");
    out << serialize_document(z2);
  }
  Json j;
  j["kind"] = "hom";
  j["domain"] = "z2.json";
  j["codomain"] = "z2.json";
  j["map"] = std::vector<int>{0, 1};
  auto doc = parse_document(j.dump(), dir.string());
  auto* f = std::get_if<MonoidHom>(&doc.value);
  REQUIRE(f != nullptr);
  CHECK(f->domain.size() == 2);
}

TEST_SUITE_END();
