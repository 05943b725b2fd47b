#include <doctest.h>

#include "monext/cohomology.hpp"
#include "monext/oracle.hpp"
#include "support.hpp"

using namespace monext;
using namespace monext::testing;

TEST_SUITE_BEGIN("cohomology");

TEST_CASE("cocycles") {
  auto z2 = monoids::cyclic(2);

  auto one = cocycles(trivial_action(monoids::trivial(), z2));
  CHECK(one.cocycles.size() == 1);

  auto strict = cocycles(trivial_action(z2, z2));
  CHECK(strict.cocycles.size() == 2);

  auto relaxed = cocycles(w3_relaxed_action());
  CHECK(relaxed.cocycles.size() == 1);

  CHECK_THROWS_AS(cocycles(trivial_action(z2, monoids::chain(2))), Error);
}

TEST_CASE("inner factor sets") {
  auto z2 = monoids::cyclic(2);
  auto z3 = monoids::cyclic(3);

  auto b2 = inner_factor_sets(trivial_action(z2, z2));
  CHECK(b2.cocycles.size() == 1);  // 2 t(sigma) = 0 always

  auto b3 = inner_factor_sets(trivial_action(z2, z3));
  CHECK(b3.cocycles.size() == 3);  // 2 t(sigma) covers Z3
}

TEST_CASE("h2 orders") {
  auto z2 = monoids::cyclic(2);
  auto z3 = monoids::cyclic(3);

  auto trivial_h = h2(trivial_action(monoids::trivial(), z2));
  CHECK(trivial_h.h2_order == 1);

  auto r22 = h2(trivial_action(z2, z2));
  CHECK(r22.cocycle_count == 2);
  CHECK(r22.coboundary_count == 1);
  CHECK(r22.h2_order == 2);
  CHECK(find_isomorphism(r22.group(), z2).has_value());

  auto r23 = h2(trivial_action(z2, z3));
  CHECK(r23.cocycle_count == 3);
  CHECK(r23.coboundary_count == 3);
  CHECK(r23.h2_order == 1);

  auto w3 = h2(w3_relaxed_action());
  CHECK(w3.h2_order == 1);
}

TEST_CASE("h2 classes rebuild the named extensions") {
  auto z2 = monoids::cyclic(2);
  auto res = h2(trivial_action(z2, z2));
  REQUIRE(res.h2_order == 2);
  std::vector<bool> seen_klein_z4(2, false);
  for (const auto& chi : res.h2_classes) {
    auto d = crossed_product(FactorSystem{z2, z2,
                                          trivial_action(z2, z2).alpha, chi});
    if (find_isomorphism(d.G, monoids::cyclic(4)).has_value())
      seen_klein_z4[0] = true;
    if (find_isomorphism(d.G, direct_product(z2, z2)).has_value())
      seen_klein_z4[1] = true;
  }
  CHECK(seen_klein_z4[0]);
  CHECK(seen_klein_z4[1]);
}

TEST_CASE("cocycle sets form abelian groups, inner sets subgroups") {
  auto z2 = monoids::cyclic(2);
  auto z3 = monoids::cyclic(3);
  std::vector<Action> settings = {trivial_action(z2, z2),
                                  trivial_action(z2, z3),
                                  inversion_action()};
  for (const auto& a : settings) {
    auto zs = cocycles(a).cocycles;
    auto bs = inner_factor_sets(a).cocycles;
    auto inv = [&](Elt x) {
      for (Elt y = 0; y < a.N.size(); ++y)
        if (a.N.mul(x, y) == a.N.identity()) return y;
      return -1;
    };
    auto find = [&](const std::vector<Elt>& t) {
      return std::find(zs.begin(), zs.end(), t) != zs.end();
    };
    for (const auto& x : zs) {
      std::vector<Elt> xinv(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) xinv[i] = inv(x[i]);
      CHECK(find(xinv));
      for (const auto& y : zs) {
        std::vector<Elt> prod(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
          prod[i] = a.N.mul(x[i], y[i]);
        CHECK(find(prod));
      }
    }
    for (const auto& x : bs)
      for (const auto& y : bs) {
        std::vector<Elt> prod(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
          prod[i] = a.N.mul(x[i], y[i]);
        CHECK((std::find(bs.begin(), bs.end(), prod) != bs.end()));
      }
  }
}

TEST_CASE("strict action extraction is splitting independent") {
  for (const auto& d : {z4_extension(), klein_extension()}) {
    std::vector<std::vector<Elt>> alphas;
    for (const auto& sec : all_sections(d.e)) {
      std::vector<Elt> alpha(d.H.size() * d.N.size(), -1);
      for (Elt h = 0; h < d.H.size(); ++h)
        for (Elt n = 0; n < d.N.size(); ++n) {
          Elt target = d.G.mul(sec[h], d.k.map[n]);
          for (Elt m = 0; m < d.N.size(); ++m)
            if (d.G.mul(d.k.map[m], sec[h]) == target) {
              alpha[h * d.N.size() + n] = m;
              break;
            }
        }
      alphas.push_back(std::move(alpha));
    }
    REQUIRE(alphas.size() > 1);
    for (const auto& a : alphas) CHECK(a == alphas.front());
  }
}

TEST_CASE("relaxed data extraction is splitting independent") {
  auto w3 = w3_diagram();
  auto base = extract_ws_factor_system(w3);
  for (const auto& sec : all_sections(w3.e)) {
    auto fs = extract_ws_factor_system(w3, sec);
    CHECK(fs.rel == base.rel);
    CHECK(relaxed_actions_equal(RelaxedAction{fs.rel, fs.alpha},
                                RelaxedAction{base.rel, base.alpha}));
  }
  // All sections of the identity glueing, which has a two-element bottom
  // fiber; only weak generators qualify as extraction choices.
  auto glue = artin_glueing(monoids::chain(2), monoids::chain(2), {0, 1});
  auto gbase = extract_ws_factor_system(glue);
  int swept = 0;
  for (const auto& sec : all_sections(glue.e)) {
    bool generator_choice = true;
    for (Elt h = 0; h < glue.H.size(); ++h) {
      auto cands = generator_candidates(glue, h, false);
      generator_choice =
          generator_choice &&
          std::find(cands.begin(), cands.end(), sec[h]) != cands.end();
    }
    if (!generator_choice) continue;
    ++swept;
    auto fs = extract_ws_factor_system(glue, sec);
    CHECK(fs.rel == gbase.rel);
    CHECK(relaxed_actions_equal(RelaxedAction{fs.rel, fs.alpha},
                                RelaxedAction{gbase.rel, gbase.alpha}));
  }
  CHECK(swept >= 1);
}

TEST_CASE("identity away from index zero") {
  // Imported tables may put the identity anywhere; the trivial factor set
  // then no longer sorts first, so the identity class must be tracked.
  FiniteMonoid z2r = validate_monoid(2, 1, {1, 0, 0, 1});
  std::vector<Elt> alpha = {0, 1, 0, 1};
  auto res = h2(Action{z2r, z2r, alpha});
  CHECK(res.h2_order == 2);
  CHECK(res.identity_class == 1);
  CHECK(is_group(res.group()));

  auto d = semidirect(Action{z2r, z2r, alpha});
  CHECK(extract_action(d).alpha == alpha);
  CHECK(census_check(z2r, z2r).ok());
}

TEST_CASE("baer_sum identities") {
  auto z2 = monoids::cyclic(2);
  auto z4 = z4_extension();
  auto klein = klein_extension();

  // Klein is the identity class for the trivial action.
  auto sum_id = baer_sum(z4, klein);
  CHECK(find_extension_isomorphism(sum_id, z4, false).has_value());

  // Z4 + Z4 = Klein.
  auto sum = baer_sum(z4, z4);
  CHECK(find_extension_isomorphism(sum, klein, false).has_value());

  // The relaxed case: the absorbing diagram is its own class group.
  auto w3 = w3_diagram();
  auto wsum = baer_sum(w3, w3);
  CHECK(find_extension_isomorphism(wsum, w3, false).has_value());
}

TEST_CASE("baer_sum laws on the strict Z2 classes") {
  auto z4 = z4_extension();
  auto klein = klein_extension();
  std::vector<ExtensionDiagram> classes = {klein, z4};

  // Commutativity and associativity on representatives.
  for (const auto& a : classes)
    for (const auto& b : classes) {
      auto ab = baer_sum(a, b);
      auto ba = baer_sum(b, a);
      CHECK(find_extension_isomorphism(ab, ba, false).has_value());
      for (const auto& c : classes) {
        auto left = baer_sum(baer_sum(a, b), c);
        auto right = baer_sum(a, baer_sum(b, c));
        CHECK(find_extension_isomorphism(left, right, false).has_value());
      }
    }

  // Inverses: summing Z4 with itself returns the identity class.
  CHECK(find_extension_isomorphism(baer_sum(z4, z4), klein, false)
            .has_value());
}

TEST_CASE("baer_sum rejects mismatched inputs") {
  auto z4 = z4_extension();
  auto zero = semidirect(zero_action());
  // Different quotients: not even the same H.
  CHECK_THROWS_AS(baer_sum(z4, w3_diagram()), Error);
  // Non-group kernel.
  auto glue = artin_glueing(monoids::chain(2), monoids::chain(2), {0, 1});
  CHECK_THROWS_AS(baer_sum(glue, glue), Error);
  (void)zero;
}

TEST_CASE("group operation descends to identified classes") {
  // Multiplying pointwise-related relaxed factor sets lands in the same
  // identified class.
  auto ra = w3_relaxed_action();
  auto zs = cocycles(ra);
  const auto& rel = ra.rel;
  const auto& n = rel.N();
  const auto& h = rel.H();
  for (const auto& x : zs.cocycles)
    for (const auto& y : zs.cocycles) {
      for (Elt h1 = 0; h1 < h.size(); ++h1)
        for (Elt h2 = 0; h2 < h.size(); ++h2) {
          Elt h12 = h.mul(h1, h2);
          // Replace y's entry by any related value; products stay related.
          for (Elt v = 0; v < n.size(); ++v) {
            if (!rel.related(h12, v, y[h1 * h.size() + h2])) continue;
            Elt a = n.mul(x[h1 * h.size() + h2], y[h1 * h.size() + h2]);
            Elt b = n.mul(x[h1 * h.size() + h2], v);
            CHECK(rel.related(h12, a, b));
          }
        }
    }
}

TEST_SUITE_END();
