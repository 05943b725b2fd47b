#ifndef MONEXT_MONOID_HPP_
#define MONEXT_MONOID_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monext/error.hpp"

namespace monext {

/// Element index inside a FiniteMonoid. Elements are dense integers in
/// [0, size); the identity is stored explicitly and need not be index 0.
using Elt = int;

/// A finite monoid presented by its multiplication table. Immutable after
/// construction; construction validates the identity and associativity
/// axioms, so every live FiniteMonoid is a monoid.
class FiniteMonoid {
 public:
  FiniteMonoid(int size, Elt identity, std::vector<Elt> table,
               std::vector<std::string> names = {});

  int size() const noexcept { return size_; }
  Elt identity() const noexcept { return identity_; }

  Elt mul(Elt a, Elt b) const { return table_[a * size_ + b]; }

  const std::vector<Elt>& table() const noexcept { return table_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Display label for an element; falls back to the index. Names are
  /// carried for reports only and never compared.
  std::string name_of(Elt x) const;

  /// Structural equality of the algebra (size, identity, table). Names are
  /// ignored.
  friend bool operator==(const FiniteMonoid& a, const FiniteMonoid& b) {
    return a.size_ == b.size_ && a.identity_ == b.identity_ &&
           a.table_ == b.table_;
  }

 private:
  int size_;
  Elt identity_;
  std::vector<Elt> table_;
  std::vector<std::string> names_;
};

/// A map between monoids together with its domain and codomain. Stored by
/// value: everything is desk-scale and copies keep lifetimes trivial.
/// Use check_hom to test the homomorphism laws.
struct MonoidHom {
  FiniteMonoid domain;
  FiniteMonoid codomain;
  std::vector<Elt> map;

  Elt operator()(Elt x) const { return map[x]; }
};

/// A partition of a monoid's elements compatible with multiplication.
struct Congruence {
  FiniteMonoid monoid;
  std::vector<int> class_of;  // element -> class index
  int class_count = 0;
};

/// Validates the monoid axioms and returns the monoid.
/// Throws Error{OutOfRange, BadIdentity, NotAssociative} with a witness.
FiniteMonoid validate_monoid(int size, Elt identity, std::vector<Elt> table,
                             std::vector<std::string> names = {});

bool is_commutative(const FiniteMonoid& m);

/// Elements with a two-sided inverse, ascending.
std::vector<Elt> units(const FiniteMonoid& m);

bool is_group(const FiniteMonoid& m);

/// True iff `f` preserves the identity and all products; the first failing
/// pair is reported in the detail.
CheckResult check_hom(const MonoidHom& f);

/// Composition g . f (apply f first).
MonoidHom compose(const MonoidHom& g, const MonoidHom& f);

MonoidHom identity_hom(const FiniteMonoid& m);

/// Smallest congruence containing the given pairs: worklist fixpoint over a
/// union-find structure, re-propagating left/right translations after each
/// merge.
Congruence congruence_generated(const FiniteMonoid& m,
                                const std::vector<std::pair<Elt, Elt>>& pairs);

CheckResult check_congruence(const Congruence& c);

/// Quotient monoid on class indices plus the projection hom.
std::pair<FiniteMonoid, MonoidHom> quotient(const FiniteMonoid& m,
                                            const Congruence& c);

/// Componentwise product; (a, b) is encoded as a * |B| + b.
FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b);

/// First bijective homomorphism in lexicographic order of the map sequence,
/// or nullopt. Backtracking with invariant pruning (idempotency, unit-ness,
/// element order profile); no canonical forms.
std::optional<MonoidHom> find_isomorphism(const FiniteMonoid& a,
                                          const FiniteMonoid& b);

// Small named monoids used by tests, fixtures and the CLI.
namespace monoids {

/// The one-element monoid.
FiniteMonoid trivial();

/// Cyclic group Z_n under addition, identity 0.
FiniteMonoid cyclic(int n);

/// The n-element meet chain (top = identity = 0, bottom = n-1).
/// chain(2) is the two-element meet monoid.
FiniteMonoid chain(int n);

/// Adjoin a new absorbing element to m (index |m|).
FiniteMonoid with_zero(const FiniteMonoid& m);

/// Z_n with an absorbing element adjoined ("infinity").
FiniteMonoid cyclic_with_zero(int n);

}  // namespace monoids

}  // namespace monext

#endif  // MONEXT_MONOID_HPP_
