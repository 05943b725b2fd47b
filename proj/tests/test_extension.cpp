#include <doctest.h>

#include "monext/extension.hpp"
#include "monext/oracle.hpp"
#include "monext/strict.hpp"
#include "support.hpp"

using namespace monext;
using namespace monext::testing;

namespace {

ExtensionDiagram product_diagram() {
  FiniteMonoid n = monoids::cyclic(2);
  FiniteMonoid h = monoids::chain(2);
  return semidirect(trivial_action(h, n));
}

}  // namespace

TEST_SUITE_BEGIN("extension");

TEST_CASE("kernel") {
  auto d = product_diagram();
  auto [ker, incl] = kernel(d.e);
  CHECK(find_isomorphism(ker, monoids::cyclic(2)).has_value());

  auto w3 = w3_diagram();
  auto [kw, iw] = kernel(w3.e);
  CHECK(find_isomorphism(kw, monoids::cyclic(2)).has_value());
  CHECK(iw.map == std::vector<Elt>{0, 1});

  auto z2 = monoids::cyclic(2);
  auto [kt, it] = kernel(identity_hom(z2));
  CHECK(kt.size() == 1);
}

TEST_CASE("check_extension") {
  CHECK(check_extension(product_diagram()).ok);
  CHECK(check_extension(w3_diagram()).ok);

  // Constant-top e is not surjective onto the cokernel.
  auto d = product_diagram();
  ExtensionDiagram bad = d;
  bad.e.map.assign(d.G.size(), d.H.identity());
  bad.s = std::nullopt;
  CHECK_FALSE(check_extension(bad).ok);
}

TEST_CASE("classify the direct product") {
  auto cls = classify(product_diagram());
  CHECK(cls.is_schreier);
  CHECK(cls.is_special_schreier);
  CHECK(cls.is_leech_normal == Flag::Yes);
  CHECK(cls.is_schreier_split.value());
}

TEST_CASE("classify the absorbing-element diagram") {
  auto cls = classify(w3_diagram());
  CHECK(cls.is_weakly_schreier);
  CHECK_FALSE(cls.is_schreier);
  CHECK(cls.is_special_weakly_schreier);
  CHECK_FALSE(cls.is_special_schreier);
  CHECK(cls.is_leech_normal == Flag::Yes);
  CHECK(cls.is_weakly_schreier_split.value());
  CHECK_FALSE(cls.is_schreier_split.value());
  REQUIRE(cls.generators.has_value());
  CHECK((*cls.generators)[1] == 2);  // the absorbing element
}

TEST_CASE("classify the zero-action product") {
  auto cls = classify(semidirect(zero_action()));
  CHECK(cls.is_schreier_split.value());
  CHECK(cls.is_special_schreier);
  CHECK(cls.is_leech_normal == Flag::No);
}

TEST_CASE("classification implications across a census") {
  for (int on = 1; on <= 3; ++on) {
    for (const auto& n : enumerate_monoids(on).monoids) {
      for (int oh = 1; oh <= 3; ++oh)
      for (const auto& h : enumerate_monoids(oh).monoids) {
        auto census = enumerate_extensions(n, h, CensusMode::All, 4);
        for (const auto& entry : census.entries) {
          const auto& c = entry.cls;
          if (c.is_schreier) CHECK(c.is_weakly_schreier);
          if (c.is_special_schreier) {
            CHECK(c.is_schreier);
            CHECK(c.is_special_weakly_schreier);
          }
          if (c.is_special_weakly_schreier) CHECK(c.is_weakly_schreier);
          if (c.generators) {
            // Chosen weak generators really generate their fibers.
            for (Elt fh = 0; fh < entry.diagram.H.size(); ++fh) {
              Elt u = (*c.generators)[fh];
              CHECK(entry.diagram.e.map[u] == fh);
              for (Elt g = 0; g < entry.diagram.G.size(); ++g) {
                if (entry.diagram.e.map[g] != fh) continue;
                bool covered = false;
                for (Elt m = 0; m < entry.diagram.N.size(); ++m)
                  covered = covered ||
                            entry.diagram.G.mul(entry.diagram.k.map[m], u) == g;
                CHECK(covered);
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("right_normaliser") {
  auto z2x2 = direct_product(monoids::cyclic(2), monoids::chain(2));
  auto all = right_normaliser(z2x2, {0, 1, 2, 3});
  CHECK(all.size() == 4);

  auto w3 = monoids::cyclic_with_zero(2);
  CHECK(right_normaliser(w3, {0, 1}) == std::vector<Elt>{0, 1, 2});

  auto d = semidirect(zero_action());
  auto norm = right_normaliser(d.G, d.k.map);
  for (Elt h = 0; h < d.H.size(); ++h) {
    Elt sh = d.s->map[h];
    CHECK(std::find(norm.begin(), norm.end(), sh) != norm.end());
  }
}

TEST_CASE("artin_glueing of the identity map") {
  auto two = monoids::chain(2);
  auto d = artin_glueing(two, two, {0, 1});
  CHECK(d.G.size() == 3);
  CHECK(find_isomorphism(d.G, monoids::chain(3)).has_value());
  auto cls = classify(d);
  CHECK(cls.is_weakly_schreier_split.value());
  CHECK_FALSE(cls.is_schreier_split.value());
}

TEST_CASE("artin_glueing of the constant-top map") {
  auto two = monoids::chain(2);
  auto d = artin_glueing(two, two, {0, 0});
  CHECK(d.G.size() == 4);
  CHECK(find_isomorphism(d.G, direct_product(two, two)).has_value());
}

TEST_CASE("artin_glueing into a longer chain") {
  auto two = monoids::chain(2);
  auto three = monoids::chain(3);
  auto d = artin_glueing(two, three, {0, 1});
  CHECK(d.G.size() == 5);
  CHECK(classify(d).is_weakly_schreier_split.value());
}

TEST_CASE("artin_glueing rejects bad inputs") {
  auto z2 = monoids::cyclic(2);
  auto two = monoids::chain(2);
  CHECK_THROWS_AS(artin_glueing(z2, two, {0, 1}), Error);
  // Meets not preserved: bottom of the 3-chain maps up.
  CHECK_THROWS_AS(artin_glueing(monoids::chain(3), two, {0, 1, 0}), Error);
}

TEST_CASE("glueings are weakly Schreier split") {
  auto two = monoids::chain(2);
  auto three = monoids::chain(3);
  std::vector<std::pair<FiniteMonoid, FiniteMonoid>> pairs = {
      {two, two}, {two, three}, {three, two}, {three, three}};
  for (const auto& [h, n] : pairs)
    for (const auto& f : all_homs(h, n))
      CHECK(classify(artin_glueing(h, n, f.map))
                .is_weakly_schreier_split.value());
}

TEST_SUITE_END();
