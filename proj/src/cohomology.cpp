#include "monext/cohomology.hpp"

#include <algorithm>
#include <map>

namespace monext {

namespace {

void require_abelian_group(const FiniteMonoid& n) {
  if (!is_group(n) || !is_commutative(n))
    throw Error(ErrorCode::KernelNotAbelianGroup,
                "the kernel must be an abelian group");
}

std::vector<Elt> inverses(const FiniteMonoid& n) {
  std::vector<Elt> inv(n.size(), -1);
  for (Elt a = 0; a < n.size(); ++a)
    for (Elt b = 0; b < n.size(); ++b)
      if (n.mul(a, b) == n.identity()) inv[a] = b;
  return inv;
}

// Uniform view of the strict and relaxed settings. In the strict case the
// "class representative" is the element itself and relatedness is equality.
struct Setting {
  const FiniteMonoid& H;
  const FiniteMonoid& N;
  const std::vector<Elt>& alpha;
  const Relaxation* rel;  // null in the strict setting

  Elt act(Elt h, Elt n) const { return alpha[h * N.size() + n]; }
  Elt canon(Elt h, Elt n) const {
    return rel ? rel->class_rep(h, rel->class_id(h, n)) : n;
  }
  bool related(Elt h, Elt a, Elt b) const {
    return rel ? rel->related(h, a, b) : a == b;
  }

  std::vector<Elt> canon_table(const std::vector<Elt>& chi) const {
    const int nh = H.size();
    std::vector<Elt> out(chi);
    for (Elt h1 = 0; h1 < nh; ++h1)
      for (Elt h2 = 0; h2 < nh; ++h2)
        out[h1 * nh + h2] = canon(H.mul(h1, h2), out[h1 * nh + h2]);
    return out;
  }

  // Factor-set conditions for a full table: normalization up to relatedness
  // and the cocycle identity.
  bool is_factor_set(const std::vector<Elt>& chi) const {
    const int nh = H.size();
    auto coc = [&](Elt a, Elt b) { return chi[a * nh + b]; };
    for (Elt h = 0; h < nh; ++h)
      if (!related(h, coc(H.identity(), h), N.identity()) ||
          !related(h, coc(h, H.identity()), N.identity()))
        return false;
    for (Elt x = 0; x < nh; ++x)
      for (Elt y = 0; y < nh; ++y)
        for (Elt z = 0; z < nh; ++z)
          if (!related(H.mul(H.mul(x, y), z),
                       N.mul(coc(x, y), coc(H.mul(x, y), z)),
                       N.mul(act(x, coc(y, z)), coc(x, H.mul(y, z)))))
            return false;
    return true;
  }
};

// The identity rows and columns are pinned; the (|H|-1)^2 remaining entries
// are filled in row-major order, rejecting as soon as a cocycle-condition
// instance with all four lookups decided fails.
std::vector<std::vector<Elt>> enumerate_cocycles(const Setting& st) {
  const int nh = st.H.size();
  const Elt one_h = st.H.identity();

  std::vector<std::pair<Elt, Elt>> free_slots;
  for (Elt h1 = 0; h1 < nh; ++h1)
    for (Elt h2 = 0; h2 < nh; ++h2)
      if (h1 != one_h && h2 != one_h) free_slots.emplace_back(h1, h2);
  std::vector<int> slot_pos(nh * nh, -1);
  for (std::size_t i = 0; i < free_slots.size(); ++i) {
    auto [h1, h2] = free_slots[i];
    slot_pos[h1 * nh + h2] = static_cast<int>(i);
  }

  // Candidate values per slot: in the relaxed setting one representative
  // per class of ~(h1 h2), else every element of N.
  std::vector<std::vector<Elt>> slot_values(free_slots.size());
  for (std::size_t i = 0; i < free_slots.size(); ++i) {
    auto [h1, h2] = free_slots[i];
    Elt h12 = st.H.mul(h1, h2);
    if (st.rel) {
      for (int c = 0; c < st.rel->class_count(h12); ++c)
        slot_values[i].push_back(st.rel->class_rep(h12, c));
    } else {
      for (Elt n = 0; n < st.N.size(); ++n) slot_values[i].push_back(n);
    }
  }

  std::vector<Elt> chi(nh * nh, st.N.identity());
  if (st.rel)
    for (Elt h = 0; h < nh; ++h) {
      chi[one_h * nh + h] = st.canon(h, st.N.identity());
      chi[h * nh + one_h] = st.canon(h, st.N.identity());
    }
  chi[one_h * nh + one_h] = st.N.identity();

  auto decided = [&](Elt a, Elt b, int filled) {
    int p = slot_pos[a * nh + b];
    return p < 0 || p < filled;
  };
  auto instance_ok = [&](Elt x, Elt y, Elt z) {
    Elt xy = st.H.mul(x, y), yz = st.H.mul(y, z);
    return st.related(st.H.mul(xy, z),
                      st.N.mul(chi[x * nh + y], chi[xy * nh + z]),
                      st.N.mul(st.act(x, chi[y * nh + z]), chi[x * nh + yz]));
  };

  std::vector<std::vector<Elt>> out;
  auto fill = [&](auto&& self, std::size_t slot) -> void {
    if (slot == free_slots.size()) {
      out.push_back(chi);
      return;
    }
    for (Elt v : slot_values[slot]) {
      auto [sh1, sh2] = free_slots[slot];
      chi[sh1 * nh + sh2] = v;
      bool ok = true;
      int filled = static_cast<int>(slot) + 1;
      for (Elt x = 0; x < nh && ok; ++x)
        for (Elt y = 0; y < nh && ok; ++y)
          for (Elt z = 0; z < nh && ok; ++z) {
            Elt xy = st.H.mul(x, y), yz = st.H.mul(y, z);
            bool touches = (x == sh1 && y == sh2) ||
                           (xy == sh1 && z == sh2) ||
                           (y == sh1 && z == sh2) || (x == sh1 && yz == sh2);
            if (!touches) continue;
            if (decided(x, y, filled) && decided(xy, z, filled) &&
                decided(y, z, filled) && decided(x, yz, filled))
              ok = instance_ok(x, y, z);
          }
      if (ok) self(self, slot + 1);
    }
    chi[free_slots[slot].first * nh + free_slots[slot].second] =
        st.N.identity();
  };
  fill(fill, 0);

  // The incremental filter only sees instances that touch free slots; keep
  // exactly the tables satisfying every instance.
  std::vector<std::vector<Elt>> checked;
  for (auto& c : out) {
    std::swap(chi, c);
    if (st.is_factor_set(chi)) checked.push_back(chi);
    std::swap(chi, c);
  }
  std::sort(checked.begin(), checked.end());
  return checked;
}

Setting strict_setting(const Action& a) {
  return Setting{a.H, a.N, a.alpha, nullptr};
}

Setting relaxed_setting(const RelaxedAction& ra) {
  return Setting{ra.rel.H(), ra.rel.N(), ra.alpha, &ra.rel};
}

void validate_setting(const Action& a) {
  require_abelian_group(a.N);
  if (auto r = check_action(a.H, a.N, a.alpha); !r)
    throw Error(ErrorCode::ActionInvalid, r.detail);
}

void validate_setting(const RelaxedAction& ra) {
  require_abelian_group(ra.rel.N());
  if (auto r = check_relaxation(ra.rel); !r)
    throw Error(ErrorCode::InvalidRelaxedAction, r.detail);
  if (auto r = check_compatible_action(ra.rel, ra.alpha); !r)
    throw Error(ErrorCode::InvalidRelaxedAction, r.detail);
}

std::vector<std::vector<Elt>> enumerate_inner(const Setting& st) {
  const int nh = st.H.size(), nn = st.N.size();
  const Elt one_h = st.H.identity();
  auto inv = inverses(st.N);

  std::vector<Elt> slots;
  for (Elt h = 0; h < nh; ++h)
    if (h != one_h) slots.push_back(h);

  std::vector<std::vector<Elt>> out;
  std::vector<Elt> t(nh, st.N.identity());
  std::vector<int> pick(slots.size(), 0);
  for (;;) {
    for (std::size_t i = 0; i < slots.size(); ++i) t[slots[i]] = pick[i];
    std::vector<Elt> delta(nh * nh);
    for (Elt h1 = 0; h1 < nh; ++h1)
      for (Elt h2 = 0; h2 < nh; ++h2)
        delta[h1 * nh + h2] = st.N.mul(
            st.N.mul(t[h1], st.act(h1, t[h2])), inv[t[st.H.mul(h1, h2)]]);
    out.push_back(st.canon_table(delta));
    std::size_t i = slots.size();
    bool done = false;
    for (;;) {
      if (i == 0) {
        done = true;
        break;
      }
      --i;
      if (++pick[i] < nn) break;
      pick[i] = 0;
    }
    if (done) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CohomologyResult quotient_by_inner(const Setting& st,
                                   const std::vector<std::vector<Elt>>& zs,
                                   const std::vector<std::vector<Elt>>& bs) {
  std::map<std::vector<Elt>, int> index_of;
  for (std::size_t i = 0; i < zs.size(); ++i)
    index_of[zs[i]] = static_cast<int>(i);
  for (const auto& b : bs)
    if (!index_of.count(b))
      throw Error(ErrorCode::InvariantViolation,
                  "inner factor set outside the cocycle set");

  const int nh = st.H.size();
  auto mul_tables = [&](const std::vector<Elt>& a,
                        const std::vector<Elt>& b) {
    std::vector<Elt> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = st.N.mul(a[i], b[i]);
    for (Elt h1 = 0; h1 < nh; ++h1)
      for (Elt h2 = 0; h2 < nh; ++h2)
        out[h1 * nh + h2] = st.canon(st.H.mul(h1, h2), out[h1 * nh + h2]);
    return out;
  };

  // Cosets in first-appearance order; representatives are the smallest
  // members since zs is sorted.
  std::vector<int> coset_of(zs.size(), -1);
  std::vector<std::vector<Elt>> reps;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    if (coset_of[i] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(zs[i]);
    for (const auto& b : bs) {
      auto prod = mul_tables(zs[i], b);
      auto it = index_of.find(prod);
      if (it == index_of.end())
        throw Error(ErrorCode::InvariantViolation,
                    "cocycle set not closed under coboundary translation");
      coset_of[it->second] = id;
    }
    if (coset_of[i] != id)
      throw Error(ErrorCode::InvariantViolation,
                  "coset does not contain its base point");
  }

  const int order = static_cast<int>(reps.size());
  std::vector<Elt> table(order * order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      auto prod = mul_tables(reps[i], reps[j]);
      auto it = index_of.find(prod);
      if (it == index_of.end())
        throw Error(ErrorCode::InvariantViolation,
                    "cocycle set not closed under multiplication");
      table[i * order + j] = coset_of[it->second];
    }

  CohomologyResult res;
  res.cocycle_count = static_cast<int>(zs.size());
  res.coboundary_count = static_cast<int>(bs.size());
  res.h2_order = order;
  {
    std::vector<Elt> trivial(nh * nh, st.N.identity());
    auto it = index_of.find(st.canon_table(trivial));
    if (it == index_of.end())
      throw Error(ErrorCode::InvariantViolation,
                  "trivial factor set missing from the cocycle set");
    res.identity_class = coset_of[it->second];
  }
  res.h2_classes = std::move(reps);
  res.group_table = std::move(table);
  if (res.h2_order * res.coboundary_count != res.cocycle_count)
    throw Error(ErrorCode::InvariantViolation,
                "coset sizes do not divide the cocycle count evenly");
  FiniteMonoid grp = res.group();
  if (!is_group(grp) || !is_commutative(grp))
    throw Error(ErrorCode::InvariantViolation,
                "quotient table is not an abelian group");
  return res;
}

}  // namespace

FiniteMonoid CohomologyResult::group() const {
  return validate_monoid(h2_order, identity_class, group_table);
}

CocycleSet cocycles(const Action& action) {
  validate_setting(action);
  Setting st = strict_setting(action);
  return CocycleSet{action.H, action.N, false, std::nullopt, action.alpha,
                    enumerate_cocycles(st)};
}

CocycleSet cocycles(const RelaxedAction& raction) {
  validate_setting(raction);
  Setting st = relaxed_setting(raction);
  return CocycleSet{raction.rel.H(), raction.rel.N(), true, raction.rel,
                    raction.alpha, enumerate_cocycles(st)};
}

CocycleSet inner_factor_sets(const Action& action) {
  validate_setting(action);
  Setting st = strict_setting(action);
  return CocycleSet{action.H, action.N, false, std::nullopt, action.alpha,
                    enumerate_inner(st)};
}

CocycleSet inner_factor_sets(const RelaxedAction& raction) {
  validate_setting(raction);
  Setting st = relaxed_setting(raction);
  return CocycleSet{raction.rel.H(), raction.rel.N(), true, raction.rel,
                    raction.alpha, enumerate_inner(st)};
}

CohomologyResult h2(const Action& action) {
  validate_setting(action);
  Setting st = strict_setting(action);
  return quotient_by_inner(st, enumerate_cocycles(st), enumerate_inner(st));
}

CohomologyResult h2(const RelaxedAction& raction) {
  validate_setting(raction);
  Setting st = relaxed_setting(raction);
  return quotient_by_inner(st, enumerate_cocycles(st), enumerate_inner(st));
}

namespace {

// Smallest alternate generator choice differing from `gens` in one fiber,
// if any exists.
std::optional<std::vector<Elt>> alternate_generators(const ExtensionDiagram& d,
                                                     const std::vector<Elt>& gens,
                                                     bool strict) {
  for (Elt h = 0; h < d.H.size(); ++h) {
    if (h == d.H.identity()) continue;
    auto cands = generator_candidates(d, h, strict);
    for (Elt u : cands)
      if (u != gens[h]) {
        auto alt = gens;
        alt[h] = u;
        return alt;
      }
  }
  return std::nullopt;
}

ExtensionDiagram baer_sum_strict(const ExtensionDiagram& d1,
                                 const ExtensionDiagram& d2,
                                 const std::optional<std::vector<Elt>>& g1,
                                 const std::optional<std::vector<Elt>>& g2) {
  FactorSystem f1 = extract_factor_system(d1, g1);
  FactorSystem f2 = extract_factor_system(d2, g2);
  if (f1.alpha != f2.alpha)
    throw Error(ErrorCode::ActionsDiffer,
                "extracted actions of the summands differ");
  std::vector<Elt> chi(f1.chi.size());
  for (std::size_t i = 0; i < chi.size(); ++i)
    chi[i] = f1.N.mul(f1.chi[i], f2.chi[i]);
  return crossed_product(FactorSystem{f1.H, f1.N, f1.alpha, std::move(chi)});
}

ExtensionDiagram baer_sum_relaxed(const ExtensionDiagram& d1,
                                  const ExtensionDiagram& d2,
                                  const std::optional<std::vector<Elt>>& g1,
                                  const std::optional<std::vector<Elt>>& g2) {
  WSFactorSystem f1 = extract_ws_factor_system(d1, g1);
  WSFactorSystem f2 = extract_ws_factor_system(d2, g2);
  if (!(f1.rel == f2.rel) ||
      !relaxed_actions_equal(RelaxedAction{f1.rel, f1.alpha},
                             RelaxedAction{f2.rel, f2.alpha}))
    throw Error(ErrorCode::ActionsDiffer,
                "extracted relaxed actions of the summands differ");
  const auto& n = f1.rel.N();
  std::vector<Elt> chi(f1.chi.size());
  for (std::size_t i = 0; i < chi.size(); ++i)
    chi[i] = n.mul(f1.chi[i], f2.chi[i]);
  return relaxed_crossed_product(
      WSFactorSystem{f1.rel, f1.alpha, std::move(chi)});
}

}  // namespace

ExtensionDiagram baer_sum(const ExtensionDiagram& d1,
                          const ExtensionDiagram& d2) {
  require_abelian_group(d1.N);
  require_abelian_group(d2.N);
  auto c1 = classify(d1);
  auto c2 = classify(d2);

  bool strict = c1.is_special_schreier && c2.is_special_schreier;
  if (!strict &&
      !(c1.is_special_weakly_schreier && c2.is_special_weakly_schreier))
    throw Error(ErrorCode::NotSpecial,
                "summands must both be special (weakly) Schreier");

  ExtensionDiagram sum =
      strict ? baer_sum_strict(d1, d2, std::nullopt, std::nullopt)
             : baer_sum_relaxed(d1, d2, std::nullopt, std::nullopt);

  // The class must not depend on the generator choice; cross-check against
  // an alternate choice when one exists.
  auto alt = alternate_generators(d1, *c1.generators, strict);
  if (alt) {
    ExtensionDiagram sum2 = strict
                                ? baer_sum_strict(d1, d2, alt, std::nullopt)
                                : baer_sum_relaxed(d1, d2, alt, std::nullopt);
    if (!find_extension_isomorphism(sum, sum2, false))
      throw Error(ErrorCode::InvariantViolation,
                  "Baer sum depends on the generator choice");
  }
  return sum;
}

}  // namespace monext
