#ifndef MONEXT_COHOMOLOGY_HPP_
#define MONEXT_COHOMOLOGY_HPP_

#include <vector>

#include "monext/relaxed.hpp"
#include "monext/strict.hpp"

namespace monext {

/// All factor sets relative to a fixed (relaxed) action over an abelian
/// group kernel. In the relaxed setting entries are canonicalized to class
/// representatives, so the list holds one table per identified class.
struct CocycleSet {
  FiniteMonoid H, N;
  bool relaxed = false;
  std::optional<Relaxation> rel;  // present iff relaxed
  std::vector<Elt> alpha;
  std::vector<std::vector<Elt>> cocycles;  // |H| x |H| tables, sorted
};

struct CohomologyResult {
  int cocycle_count = 0;
  int coboundary_count = 0;
  int h2_order = 0;
  int identity_class = 0;  // class of the trivial factor set
  std::vector<std::vector<Elt>> h2_classes;  // representative chi per class
  std::vector<Elt> group_table;              // h2_order x h2_order

  FiniteMonoid group() const;
};

/// Exhaustive enumeration of the factor sets relative to the action:
/// normalization fixes the identity rows and columns, the remaining entries
/// are filled with early rejection per cocycle-condition instance.
/// Throws Error{KernelNotAbelianGroup} unless N is an abelian group.
CocycleSet cocycles(const Action& action);
CocycleSet cocycles(const RelaxedAction& raction);

/// {delta t : t: H -> N with t(1) = 1} where
/// delta t(h1,h2) = t(h1) alpha(h1, t(h2)) t(h1 h2)^{-1}.
CocycleSet inner_factor_sets(const Action& action);
CocycleSet inner_factor_sets(const RelaxedAction& raction);

/// Quotient of the cocycles by the inner factor sets, with deterministic
/// class representatives and the quotient group's multiplication table.
CohomologyResult h2(const Action& action);
CohomologyResult h2(const RelaxedAction& raction);

/// Baer sum of two special (weakly) Schreier extensions with abelian group
/// kernel and the same extracted (relaxed) action: factor sets are added
/// pointwise in N and the sum is rebuilt through the (relaxed) crossed
/// product. The result's class is checked against an alternate generator
/// choice when one exists.
ExtensionDiagram baer_sum(const ExtensionDiagram& d1,
                          const ExtensionDiagram& d2);

}  // namespace monext

#endif  // MONEXT_COHOMOLOGY_HPP_
