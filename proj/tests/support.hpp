#ifndef MONEXT_TESTS_SUPPORT_HPP_
#define MONEXT_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <vector>

#include "monext/cohomology.hpp"
#include "monext/oracle.hpp"

namespace monext::testing {

// N = Z2, G = Z2 with an absorbing element, H = the two-element meet
// monoid; k the inclusion, e collapsing the group part, s sending bottom to
// the absorbing element. A weakly Schreier split extension that is not
// Schreier.
inline ExtensionDiagram w3_diagram() {
  FiniteMonoid n = monoids::cyclic(2);
  FiniteMonoid g = monoids::cyclic_with_zero(2);
  FiniteMonoid h = monoids::chain(2);
  MonoidHom k{n, g, {0, 1}};
  MonoidHom e{g, h, {0, 0, 1}};
  MonoidHom s{h, g, {0, 2}};
  return ExtensionDiagram{n, g, h, k, e, s};
}

// The action of the two-element meet monoid on Z2 that collapses the
// bottom row to 0.
inline Action zero_action() {
  FiniteMonoid h = monoids::chain(2);
  FiniteMonoid n = monoids::cyclic(2);
  return Action{h, n, {0, 1, 0, 0}};
}

// Z4 as an extension of Z2 by Z2: k(n) = 2n, e = parity.
inline ExtensionDiagram z4_extension() {
  FiniteMonoid n = monoids::cyclic(2);
  FiniteMonoid g = monoids::cyclic(4);
  FiniteMonoid h = monoids::cyclic(2);
  MonoidHom k{n, g, {0, 2}};
  MonoidHom e{g, h, {0, 1, 0, 1}};
  return ExtensionDiagram{n, g, h, k, e, std::nullopt};
}

// The Klein four-group as an extension of Z2 by Z2 (second projection).
inline ExtensionDiagram klein_extension() {
  FiniteMonoid n = monoids::cyclic(2);
  FiniteMonoid g = direct_product(monoids::cyclic(2), monoids::cyclic(2));
  FiniteMonoid h = monoids::cyclic(2);
  MonoidHom k{n, g, {0, 2}};
  MonoidHom e{g, h, {0, 1, 0, 1}};
  return ExtensionDiagram{n, g, h, k, e, std::nullopt};
}

// The symmetric group on three letters, from permutation composition.
// Permutations of {0,1,2} are listed lexicographically; (p * q)(x) =
// p(q(x)); the identity permutation sits at index 0.
inline FiniteMonoid s3() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) -
                            perms.begin());
  };
  std::vector<Elt> table;
  for (const auto& a : perms)
    for (const auto& b : perms) {
      std::vector<int> c(3);
      for (int x = 0; x < 3; ++x) c[x] = a[b[x]];
      table.push_back(index_of(c));
    }
  return validate_monoid(6, 0, table);
}

// The inversion action of Z2 on Z3.
inline Action inversion_action() {
  FiniteMonoid h = monoids::cyclic(2);
  FiniteMonoid n = monoids::cyclic(3);
  return Action{h, n, {0, 1, 2, 0, 2, 1}};
}

// The trivial action of H on N.
inline Action trivial_action(const FiniteMonoid& h, const FiniteMonoid& n) {
  std::vector<Elt> alpha(h.size() * n.size());
  for (Elt x = 0; x < h.size(); ++x)
    for (Elt m = 0; m < n.size(); ++m) alpha[x * n.size() + m] = m;
  return Action{h, n, alpha};
}

// The relaxation on (H = meet-2, N = Z2) that is total over bottom, with
// the bottom row of alpha collapsed to 0.
inline RelaxedAction w3_relaxed_action() {
  FiniteMonoid h = monoids::chain(2);
  FiniteMonoid n = monoids::cyclic(2);
  Relaxation rel(h, n, {0, 1, 0, 0});
  return RelaxedAction{rel, {0, 1, 0, 0}};
}

}  // namespace monext::testing

#endif  // MONEXT_TESTS_SUPPORT_HPP_
