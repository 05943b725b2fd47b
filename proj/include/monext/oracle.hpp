#ifndef MONEXT_ORACLE_HPP_
#define MONEXT_ORACLE_HPP_

#include <functional>
#include <string>
#include <vector>

#include "monext/cohomology.hpp"
#include "monext/relaxed.hpp"

namespace monext {

/// All monoids of a given order up to isomorphism, in lexicographic table
/// order. Complete for the given order.
struct MonoidCatalog {
  int order = 0;
  std::vector<FiniteMonoid> monoids;
};

/// Backtracking over tables with the identity fixed at index 0 and
/// associativity checked incrementally; duplicates removed with
/// find_isomorphism. Cached per order. Throws Error{OrderTooLarge} for
/// n > 5.
const MonoidCatalog& enumerate_monoids(int n);

// Exhaustive hom-level searches. All results are in lexicographic map
// order.
std::vector<MonoidHom> all_homs(const FiniteMonoid& a, const FiniteMonoid& b);
std::vector<MonoidHom> all_injective_homs(const FiniteMonoid& a,
                                          const FiniteMonoid& b);
std::vector<MonoidHom> all_surjective_homs(const FiniteMonoid& a,
                                           const FiniteMonoid& b);
/// Homomorphic splittings s with e . s = id.
std::vector<MonoidHom> all_splittings(const MonoidHom& e);
/// Set-theoretic unit-preserving sections of e (not necessarily homs).
std::vector<std::vector<Elt>> all_sections(const MonoidHom& e);

/// All actions of H on N (tables passing check_action).
std::vector<Action> all_actions(const FiniteMonoid& h, const FiniteMonoid& n);

/// All H-relaxations of N (families passing check_relaxation).
std::vector<Relaxation> all_relaxations(const FiniteMonoid& h,
                                        const FiniteMonoid& n);

/// All relaxed actions (E, [alpha]): one lexicographically-smallest
/// compatible representative per class.
std::vector<RelaxedAction> all_relaxed_actions(const FiniteMonoid& h,
                                               const FiniteMonoid& n);

/// Streams every valid weakly Schreier factor system (E, alpha, chi) over
/// (N, H): E ranges over the identity-discrete left-congruence families,
/// chi is normalized on the identity rows. The Relaxation reference is
/// reused across calls.
void for_each_ws_factor_system(
    const FiniteMonoid& n, const FiniteMonoid& h,
    const std::function<void(const Relaxation&, const std::vector<Elt>&,
                             const std::vector<Elt>&)>& fn);

std::vector<WSFactorSystem> all_ws_factor_systems(const FiniteMonoid& n,
                                                  const FiniteMonoid& h);

enum class CensusMode {
  All,             // catalog monoids G, every (k, e)
  Split,           // catalog monoids G, every (k, e, s)
  WsCarrier,       // weakly Schreier extensions on fibered carriers
  WsSplitCarrier,  // weakly Schreier split extensions on fibered carriers
};

struct CensusEntry {
  ExtensionDiagram diagram;
  ExtensionClass cls;
  int iso_class = -1;
};

/// Extensions of H by N grouped into isomorphism classes (extension
/// isomorphisms; split modes additionally require the splitting triangle).
struct ExtensionCensus {
  FiniteMonoid N, H;
  CensusMode mode = CensusMode::All;
  std::vector<CensusEntry> entries;
  int class_count = 0;
  std::vector<int> class_reps;  // entry index of each class representative

  /// Index of the class isomorphic to d, or -1.
  int class_of(const ExtensionDiagram& d) const;
};

/// Catalog-based census: for every catalog monoid G with
/// |G| <= min(max_total_size, 5), every injective k and surjective e (and
/// every splitting s in Split mode) passing check_extension. The catalog
/// hard-cap of 5 bounds |G|; the fibered-carrier censuses below cover the
/// larger split and weakly Schreier slots. max_total_size above 16 throws
/// Error{OrderTooLarge}.
ExtensionCensus enumerate_extensions(const FiniteMonoid& n,
                                     const FiniteMonoid& h, CensusMode mode,
                                     int max_total_size);

/// Complete census of weakly Schreier split extensions of H by N: every
/// (relaxation, action table) pair is built on its fibered carrier and kept
/// when the monoid, hom and extension checks pass. Covers |G| up to
/// |N| * |H| independently of the catalog cap.
ExtensionCensus enumerate_ws_split_extensions(const FiniteMonoid& n,
                                              const FiniteMonoid& h);

/// Same for weakly Schreier (not necessarily split) extensions, enumerating
/// (E, alpha, chi) triples on fibered carriers.
ExtensionCensus enumerate_ws_extensions(const FiniteMonoid& n,
                                        const FiniteMonoid& h);

/// Cross-checks the characterization counts for the pair (N, H):
///  (a) actions vs Schreier split classes,
///  (b) relaxed actions vs weakly Schreier split classes,
///  (c) factor systems modulo gamma-equivalence vs weakly Schreier classes,
///  (d) h2 orders vs special (weakly) Schreier classes per action, when N
///      is an abelian group.
/// Each bijection is witnessed by locating the built extension in the
/// census; mismatches are collected as failures.
struct CensusReport {
  int action_count = 0;
  int schreier_split_classes = 0;
  int relaxed_action_count = 0;
  int ws_split_classes = 0;
  int ws_factor_system_classes = 0;
  int ws_classes = 0;
  bool checked_cohomology = false;
  struct CohomLine {
    std::string label;
    int h2_order = 0;
    int census_classes = 0;
  };
  std::vector<CohomLine> cohomology;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

CensusReport census_check(const FiniteMonoid& n, const FiniteMonoid& h);

}  // namespace monext

#endif  // MONEXT_ORACLE_HPP_
