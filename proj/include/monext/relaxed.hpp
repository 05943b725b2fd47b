#ifndef MONEXT_RELAXED_HPP_
#define MONEXT_RELAXED_HPP_

#include <optional>
#include <vector>

#include "monext/extension.hpp"
#include "monext/strict.hpp"

namespace monext {

/// An H-indexed family of partitions of N's elements: n1 ~h n2 iff they
/// share a class id in row h. Class ids are normalized to first-appearance
/// order, so structural equality compares partition families exactly.
///
/// check_relaxation validates the relaxation laws (equality at the
/// identity, left congruences, monotone under right multiplication of the
/// index). Factor systems reuse the same storage but impose their own
/// conditions, which do not include monotonicity.
class Relaxation {
 public:
  /// cls is |H| x |N|, row h assigning each n a class id; ids are
  /// renumbered canonically.
  Relaxation(FiniteMonoid h, FiniteMonoid n, std::vector<int> cls);

  /// The all-equality family (the strict case).
  static Relaxation equality(const FiniteMonoid& h, const FiniteMonoid& n);

  const FiniteMonoid& H() const noexcept { return h_; }
  const FiniteMonoid& N() const noexcept { return n_; }

  int class_id(Elt h, Elt n) const { return cls_[h * n_.size() + n]; }
  bool related(Elt h, Elt n1, Elt n2) const {
    return class_id(h, n1) == class_id(h, n2);
  }
  int class_count(Elt h) const { return counts_[h]; }
  /// Smallest member of class c at index h.
  Elt class_rep(Elt h, int c) const { return reps_[h][c]; }
  const std::vector<Elt>& class_members(Elt h, int c) const {
    return members_[h][c];
  }
  const std::vector<int>& table() const noexcept { return cls_; }

  friend bool operator==(const Relaxation& a, const Relaxation& b) {
    return a.h_ == b.h_ && a.n_ == b.n_ && a.cls_ == b.cls_;
  }

 private:
  FiniteMonoid h_, n_;
  std::vector<int> cls_;
  std::vector<int> counts_;
  std::vector<std::vector<Elt>> reps_;
  std::vector<std::vector<std::vector<Elt>>> members_;
};

/// A relaxation plus a chosen representative of the compatible-action
/// class [alpha].
struct RelaxedAction {
  Relaxation rel;
  std::vector<Elt> alpha;  // |H| x |N|

  Elt act(Elt h, Elt n) const { return alpha[h * rel.N().size() + n]; }
};

/// Data (E, alpha, chi) for a relaxed crossed product.
/// check_ws_factor_system validates the eleven factor-system conditions.
struct WSFactorSystem {
  Relaxation rel;
  std::vector<Elt> alpha;  // |H| x |N|
  std::vector<Elt> chi;    // |H| x |H|

  Elt act(Elt h, Elt n) const { return alpha[h * rel.N().size() + n]; }
  Elt coc(Elt h1, Elt h2) const { return chi[h1 * rel.H().size() + h2]; }
};

/// The three relaxation laws; the failing law and a witness are reported.
CheckResult check_relaxation(const Relaxation& e);

/// The six compatible-action conditions relative to a valid relaxation.
CheckResult check_compatible_action(const Relaxation& e,
                                    const std::vector<Elt>& alpha);

/// alpha ~ alpha' iff alpha(h,n) ~h alpha'(h,n) everywhere. Both must be
/// over the same relaxation.
bool relaxed_actions_equal(const RelaxedAction& a1, const RelaxedAction& a2);

/// Relaxed semidirect product on the disjoint union of the N/~h with
/// ([n1],h1)([n2],h2) = ([n1 alpha(h1,n2)], h1 h2), k(n) = ([n],1),
/// e([n],h) = h, s(h) = ([1],h). Elements are numbered fiber by fiber.
ExtensionDiagram relaxed_semidirect(const Relaxation& e,
                                    const std::vector<Elt>& alpha);

/// E from n1 ~h n2 iff k(n1) s(h) = k(n2) s(h); alpha(h, n) is the smallest
/// witness of k(alpha(h,n)) s(h) = s(h) k(n). Requires a weakly Schreier
/// split diagram.
RelaxedAction extract_relaxed_action(const ExtensionDiagram& d);

/// The eleven factor-system conditions; failures report the condition
/// number and witness tuple.
CheckResult check_ws_factor_system(const WSFactorSystem& fs);

/// Relaxed crossed product on the disjoint union of the N/~h with
/// ([n1],h1)([n2],h2) = ([n1 alpha(h1,n2) chi(h1,h2)], h1 h2). Products are
/// recomputed from every pair of class representatives to confirm they are
/// class-independent.
ExtensionDiagram relaxed_crossed_product(const WSFactorSystem& fs);

/// Extracts (E, alpha, chi) from a weakly Schreier extension relative to a
/// weak generator choice (defaults to the classification's choice; u_1 must
/// be the identity of G). alpha and chi are smallest witnesses and the
/// normalization chi(1,h) = 1 = chi(h,1) is imposed.
WSFactorSystem extract_ws_factor_system(
    const ExtensionDiagram& d,
    const std::optional<std::vector<Elt>>& generator_choice = std::nullopt);

/// Searches all gamma: H -> N with gamma(1) = 1 for one making
/// f([n],h) = ([n gamma(h)], h) an isomorphism between the two relaxed
/// crossed products. A candidate must be relatively invertible on both
/// sides (some lambda(h) with gamma(h) lambda(h) ~h 1 in E1 and some
/// lambda'(h) with lambda'(h) gamma(h) ~h 1 in E2), translate E1 into E2,
/// and is finally verified as a full extension isomorphism. Returns the
/// lexicographically first witness; prunes immediately when per-h class
/// counts differ.
std::optional<GammaWitness> ws_factor_systems_equivalent(
    const WSFactorSystem& fs1, const WSFactorSystem& fs2);

/// Builds the fibered-carrier diagram for raw (E, alpha, chi) data with no
/// factor-system validation: products are taken from class representatives
/// and the monoid axioms are checked directly. Returns nullopt when the
/// table fails them. chi may be null (semidirect shape); with_splitting
/// additionally requires s(h) = ([1],h) to be a homomorphism. Census
/// enumeration is built on this.
std::optional<ExtensionDiagram> try_build_fibered_extension(
    const Relaxation& e, const std::vector<Elt>& alpha,
    const std::vector<Elt>* chi, bool with_splitting);

}  // namespace monext

#endif  // MONEXT_RELAXED_HPP_
