#ifndef MONEXT_EXTENSION_HPP_
#define MONEXT_EXTENSION_HPP_

#include <optional>
#include <vector>

#include "monext/monoid.hpp"

namespace monext {

/// A diagram N --k--> G --e--> H, optionally with a splitting s: H -> G.
/// check_extension decides whether it is an extension (k the kernel of e,
/// e the cokernel of k, and e . s = id when s is present).
struct ExtensionDiagram {
  FiniteMonoid N, G, H;
  MonoidHom k;  // N -> G
  MonoidHom e;  // G -> H
  std::optional<MonoidHom> s;  // H -> G
};

/// Tri-state for conditions that only apply under a side hypothesis.
enum class Flag { No, Yes, NotApplicable };

struct ExtensionClass {
  bool is_extension = false;
  bool is_schreier = false;
  bool is_weakly_schreier = false;
  bool is_special_schreier = false;
  bool is_special_weakly_schreier = false;
  // Only evaluated when the kernel is a group.
  Flag is_leech_normal = Flag::NotApplicable;
  // Chosen generator u_h per H-element (u_1 = identity of G); present iff
  // weakly Schreier.
  std::optional<std::vector<Elt>> generators;
  // Per the provided splitting; absent when the diagram has no s.
  std::optional<bool> is_schreier_split;
  std::optional<bool> is_weakly_schreier_split;
};

/// The submonoid e^{-1}(identity) with its inclusion into the domain of e.
std::pair<FiniteMonoid, MonoidHom> kernel(const MonoidHom& e);

/// Verifies all extension axioms; the failing axiom and a witness are
/// reported in the detail.
CheckResult check_extension(const ExtensionDiagram& d);

/// Computes every classification flag by direct fiber search.
/// Throws Error{NotAnExtension} when check_extension fails.
ExtensionClass classify(const ExtensionDiagram& d);

/// {g in G : g S is contained in S g}. S must be a submonoid; the result is
/// verified to be one.
std::vector<Elt> right_normaliser(const FiniteMonoid& g,
                                  const std::vector<Elt>& s);

/// Split extension N -> Gl(f) -> H built from a meet-preserving map
/// f: H -> N between meet-semilattice monoids. Gl(f) is the submonoid of
/// N x H on the pairs (n, h) with n <= f(h); k(n) = (n, 1), e(n, h) = h,
/// s(h) = (f(h), h).
ExtensionDiagram artin_glueing(const FiniteMonoid& h, const FiniteMonoid& n,
                               const std::vector<Elt>& f);

/// All weak (or strict) generators of the fiber over h, ascending.
std::vector<Elt> generator_candidates(const ExtensionDiagram& d, Elt h,
                                      bool strict);

/// Isomorphism of extensions: a bijective hom G1 -> G2 commuting with k and
/// e (and with s when match_splitting). Requires d1, d2 to share N and H.
/// Deterministic first witness.
std::optional<MonoidHom> find_extension_isomorphism(const ExtensionDiagram& d1,
                                                    const ExtensionDiagram& d2,
                                                    bool match_splitting);

/// True iff x . x = x and multiplication is commutative: the monoid is a
/// bounded meet-semilattice with top = identity under x <= y iff x.y = x.
bool is_meet_semilattice(const FiniteMonoid& m);

}  // namespace monext

#endif  // MONEXT_EXTENSION_HPP_
