#ifndef MONEXT_STRICT_HPP_
#define MONEXT_STRICT_HPP_

#include <optional>
#include <vector>

#include "monext/extension.hpp"

namespace monext {

/// A monoid action of H on N, stored as an |H| x |N| table (row h, column
/// n). check_action validates the four action laws.
struct Action {
  FiniteMonoid H, N;
  std::vector<Elt> alpha;

  Elt act(Elt h, Elt n) const { return alpha[h * N.size() + n]; }
};

/// Data (alpha, chi) for a crossed product. alpha is *not* required to be a
/// full action here: the composition law only holds twisted by chi
/// (condition 4 of check_factor_system), so the table is kept flat rather
/// than wrapped in a validated Action.
struct FactorSystem {
  FiniteMonoid H, N;
  std::vector<Elt> alpha;  // |H| x |N|
  std::vector<Elt> chi;    // |H| x |H|

  Elt act(Elt h, Elt n) const { return alpha[h * N.size() + n]; }
  Elt coc(Elt h1, Elt h2) const { return chi[h1 * H.size() + h2]; }
};

/// A witness for factor-system equivalence: the map gamma: H -> N defining
/// f(n, h) = (n gamma(h), h). `invertible` records whether every gamma(h)
/// is a unit of N.
struct GammaWitness {
  std::vector<Elt> gamma;
  bool invertible = false;
};

/// The four action laws: alpha(1,n) = n, alpha(h,1) = 1,
/// alpha(h, n1 n2) = alpha(h,n1) alpha(h,n2),
/// alpha(h1 h2, n) = alpha(h1, alpha(h2, n)).
CheckResult check_action(const FiniteMonoid& h, const FiniteMonoid& n,
                         const std::vector<Elt>& alpha);

/// Semidirect product extension on N x H with
/// (n1,h1)(n2,h2) = (n1 alpha(h1,n2), h1 h2), k(n) = (n,1), e(n,h) = h,
/// s(h) = (1,h). Pairs are encoded as n * |H| + h.
ExtensionDiagram semidirect(const Action& action);

/// The unique alpha with k(alpha(h,n)) s(h) = s(h) k(n).
/// Requires a Schreier split diagram.
Action extract_action(const ExtensionDiagram& d);

/// Conditions 1-6 for (alpha, chi): the three pointwise action laws, the
/// chi-twisted composition law, normalization, and the cocycle identity.
CheckResult check_factor_system(const FactorSystem& fs);

/// Crossed product extension on N x H with
/// (n1,h1)(n2,h2) = (n1 alpha(h1,n2) chi(h1,h2), h1 h2), k(n) = (n,1),
/// e(n,h) = h. No splitting in general.
ExtensionDiagram crossed_product(const FactorSystem& fs);

/// Extracts (alpha, chi) from a Schreier extension relative to a generator
/// choice (defaults to the classification's choice; u_1 must be the
/// identity of G): k(alpha(h,n)) u_h = u_h k(n) and
/// k(chi(h1,h2)) u_{h1 h2} = u_{h1} u_{h2}, each solved uniquely.
FactorSystem extract_factor_system(
    const ExtensionDiagram& d,
    const std::optional<std::vector<Elt>>& generator_choice = std::nullopt);

/// Searches all gamma: H -> N with gamma(1) = 1 (values restricted to units
/// of N when require_invertible) for one whose induced map
/// f(n,h) = (n gamma(h), h) is an isomorphism of the two crossed-product
/// extensions. The candidate is validated as a full extension isomorphism,
/// not just through the algebraic identity. Lexicographically first witness.
std::optional<GammaWitness> factor_systems_equivalent(const FactorSystem& fs1,
                                                      const FactorSystem& fs2,
                                                      bool require_invertible);

}  // namespace monext

#endif  // MONEXT_STRICT_HPP_
