#include <doctest.h>

#include <random>

#include "monext/monoid.hpp"
#include "monext/oracle.hpp"
#include "support.hpp"

using namespace monext;

TEST_SUITE_BEGIN("monoid");

TEST_CASE("validate_monoid accepts the small standards") {
  CHECK(validate_monoid(2, 0, {0, 1, 1, 0}).size() == 2);  // Z2
  CHECK(validate_monoid(2, 0, {0, 1, 1, 1}).size() == 2);  // meet
}

TEST_CASE("validate_monoid rejects with a witness") {
  CHECK_THROWS_WITH_AS(validate_monoid(2, 1, {0, 1, 1, 0}),
                       doctest::Contains("BadIdentity"), Error);
  CHECK_THROWS_WITH_AS(validate_monoid(2, 0, {0, 1, 1, 5}),
                       doctest::Contains("OutOfRange"), Error);
  // Left-zero multiplication with an identity glued on is not associative
  // once the table is corrupted.
  bool threw = false;
  try {
    validate_monoid(3, 0, {0, 1, 2, 1, 2, 0, 2, 2, 1});
  } catch (const Error& err) {
    threw = true;
    CHECK(err.code() == ErrorCode::NotAssociative);
  }
  CHECK(threw);
}

TEST_CASE("units and group detection") {
  auto z2 = monoids::cyclic(2);
  CHECK(is_group(z2));
  CHECK(is_commutative(z2));

  auto meet = monoids::chain(2);
  CHECK_FALSE(is_group(meet));
  CHECK(units(meet) == std::vector<Elt>{0});

  auto w3 = monoids::cyclic_with_zero(2);
  CHECK_FALSE(is_group(w3));
  CHECK(units(w3) == std::vector<Elt>{0, 1});
}

TEST_CASE("check_hom") {
  auto z2 = monoids::cyclic(2);
  CHECK(check_hom(identity_hom(z2)).ok);

  auto w3 = monoids::cyclic_with_zero(2);
  auto meet = monoids::chain(2);
  CHECK(check_hom(MonoidHom{w3, meet, {0, 0, 1}}).ok);

  CHECK_FALSE(check_hom(MonoidHom{z2, z2, {1, 0}}).ok);
}

TEST_CASE("congruence_generated") {
  auto meet = monoids::chain(2);
  auto empty = congruence_generated(meet, {});
  CHECK(empty.class_count == 2);

  auto z2x2 = direct_product(monoids::cyclic(2), monoids::chain(2));
  // Merging (1,top) with (0,top) collapses the group coordinate.
  auto c = congruence_generated(z2x2, {{2, 0}});
  CHECK(c.class_count == 2);
  CHECK(c.class_of[0] == c.class_of[2]);
  CHECK(c.class_of[1] == c.class_of[3]);
  CHECK(c.class_of[0] != c.class_of[1]);

  auto total = congruence_generated(meet, {{0, 1}});
  CHECK(total.class_count == 1);
}

TEST_CASE("quotient") {
  auto z2x2 = direct_product(monoids::cyclic(2), monoids::chain(2));
  auto c = congruence_generated(z2x2, {{2, 0}});
  auto [q, proj] = quotient(z2x2, c);
  CHECK(find_isomorphism(q, monoids::chain(2)).has_value());
  CHECK(check_hom(proj).ok);

  auto [q1, proj1] = quotient(z2x2, congruence_generated(z2x2, {}));
  CHECK(find_isomorphism(q1, z2x2).has_value());

  auto [q2, proj2] =
      quotient(monoids::chain(2),
               congruence_generated(monoids::chain(2), {{0, 1}}));
  CHECK(q2.size() == 1);
}

TEST_CASE("direct_product") {
  auto z2 = monoids::cyclic(2);
  CHECK(find_isomorphism(direct_product(z2, monoids::trivial()), z2)
            .has_value());
  auto z2xmeet = direct_product(z2, monoids::chain(2));
  CHECK(is_commutative(z2xmeet));
  CHECK(z2xmeet.size() == 4);
}

TEST_CASE("find_isomorphism") {
  auto z2 = monoids::cyclic(2);
  auto id = find_isomorphism(z2, z2);
  REQUIRE(id.has_value());
  CHECK(id->map == std::vector<Elt>{0, 1});

  auto z4 = monoids::cyclic(4);
  auto klein = direct_product(z2, z2);
  CHECK_FALSE(find_isomorphism(z4, klein).has_value());

  CHECK_FALSE(
      find_isomorphism(monoids::cyclic_with_zero(2), monoids::cyclic(3))
          .has_value());
}

TEST_CASE("isomorphism is reflexive and symmetric on the catalog") {
  for (int order = 1; order <= 4; ++order) {
    const auto& cat = enumerate_monoids(order);
    for (const auto& m : cat.monoids)
      CHECK(find_isomorphism(m, m).has_value());
    for (std::size_t i = 0; i < cat.monoids.size(); ++i)
      for (std::size_t j = i + 1; j < cat.monoids.size(); ++j) {
        bool ij = find_isomorphism(cat.monoids[i], cat.monoids[j]).has_value();
        bool ji = find_isomorphism(cat.monoids[j], cat.monoids[i]).has_value();
        CHECK(ij == ji);
      }
  }
}

TEST_CASE("congruences from random pairs stay congruences") {
  std::mt19937 rng(20240811);
  for (int order = 1; order <= 4; ++order) {
    for (const auto& m : enumerate_monoids(order).monoids) {
      std::uniform_int_distribution<int> pick(0, m.size() - 1);
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<std::pair<Elt, Elt>> pairs;
        for (int i = 0; i < trial; ++i)
          pairs.emplace_back(pick(rng), pick(rng));
        auto c = congruence_generated(m, pairs);
        CHECK(check_congruence(c).ok);
        for (auto [a, b] : pairs) CHECK(c.class_of[a] == c.class_of[b]);
        auto [q, proj] = quotient(m, c);
        CHECK(check_hom(proj).ok);
      }
    }
  }
}

TEST_CASE("direct products across the catalog validate") {
  for (int oa = 1; oa <= 4; ++oa)
    for (int ob = 1; ob <= 4; ++ob) {
      if (oa * ob > 16) continue;
      for (const auto& a : enumerate_monoids(oa).monoids)
        for (const auto& b : enumerate_monoids(ob).monoids) {
          auto p = direct_product(a, b);
          CHECK(p.size() == a.size() * b.size());
        }
    }
}

TEST_SUITE_END();
