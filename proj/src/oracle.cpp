#include "monext/oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace monext {

namespace {

constexpr int kCatalogCap = 5;
constexpr int kTotalCap = 16;

// All monoid tables of order n with identity 0, in lexicographic order of
// the free cells; associativity is re-checked on every assignment for the
// instances it completes.
std::vector<std::vector<Elt>> monoid_tables(int n) {
  std::vector<Elt> t(n * n, -1);
  for (Elt x = 0; x < n; ++x) {
    t[0 * n + x] = x;
    t[x * n + 0] = x;
  }
  std::vector<std::pair<Elt, Elt>> cells;
  for (Elt i = 1; i < n; ++i)
    for (Elt j = 1; j < n; ++j) cells.emplace_back(i, j);

  auto defined = [&](Elt x, Elt y) { return t[x * n + y] >= 0; };
  auto assoc_ok_around = [&](Elt i, Elt j) {
    for (Elt a = 0; a < n; ++a)
      for (Elt b = 0; b < n; ++b) {
        if (!defined(a, b)) continue;
        Elt ab = t[a * n + b];
        for (Elt c = 0; c < n; ++c) {
          if (!defined(b, c) || !defined(ab, c)) continue;
          Elt bc = t[b * n + c];
          if (!defined(a, bc)) continue;
          bool touches = (a == i && b == j) || (b == i && c == j) ||
                         (ab == i && c == j) || (a == i && bc == j);
          if (!touches) continue;
          if (t[ab * n + c] != t[a * n + bc]) return false;
        }
      }
    return true;
  };

  std::vector<std::vector<Elt>> out;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      out.push_back(t);
      return;
    }
    auto [i, j] = cells[idx];
    for (Elt v = 0; v < n; ++v) {
      t[i * n + j] = v;
      if (assoc_ok_around(i, j)) self(self, idx + 1);
    }
    t[i * n + j] = -1;
  };
  rec(rec, 0);
  return out;
}

}  // namespace

const MonoidCatalog& enumerate_monoids(int n) {
  if (n < 1 || n > kCatalogCap)
    throw Error(ErrorCode::OrderTooLarge,
                "catalog orders are capped at " + std::to_string(kCatalogCap));
  static std::map<int, MonoidCatalog> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  MonoidCatalog cat;
  cat.order = n;
  for (auto& table : monoid_tables(n)) {
    FiniteMonoid m(n, 0, std::move(table));
    bool fresh = std::none_of(
        cat.monoids.begin(), cat.monoids.end(),
        [&](const FiniteMonoid& rep) { return find_isomorphism(m, rep).has_value(); });
    if (fresh) cat.monoids.push_back(std::move(m));
  }
  return cache.emplace(n, std::move(cat)).first->second;
}

namespace {

// Maps a -> b with the identity pinned, streamed in lexicographic order.
template <typename Fn>
void for_each_map(const FiniteMonoid& a, const FiniteMonoid& b, Fn&& fn) {
  std::vector<Elt> map(a.size(), 0);
  map[a.identity()] = b.identity();
  std::vector<Elt> slots;
  for (Elt x = 0; x < a.size(); ++x)
    if (x != a.identity()) slots.push_back(x);
  std::vector<Elt> pick(slots.size(), 0);
  for (;;) {
    for (std::size_t i = 0; i < slots.size(); ++i) map[slots[i]] = pick[i];
    fn(map);
    std::size_t i = slots.size();
    for (;;) {
      if (i == 0) return;
      --i;
      if (++pick[i] < b.size()) break;
      pick[i] = 0;
    }
  }
}

}  // namespace

std::vector<MonoidHom> all_homs(const FiniteMonoid& a, const FiniteMonoid& b) {
  std::vector<MonoidHom> out;
  for_each_map(a, b, [&](const std::vector<Elt>& map) {
    MonoidHom f{a, b, map};
    if (check_hom(f)) out.push_back(std::move(f));
  });
  return out;
}

std::vector<MonoidHom> all_injective_homs(const FiniteMonoid& a,
                                          const FiniteMonoid& b) {
  auto homs = all_homs(a, b);
  std::erase_if(homs, [](const MonoidHom& f) {
    std::set<Elt> img(f.map.begin(), f.map.end());
    return static_cast<int>(img.size()) != f.domain.size();
  });
  return homs;
}

std::vector<MonoidHom> all_surjective_homs(const FiniteMonoid& a,
                                           const FiniteMonoid& b) {
  auto homs = all_homs(a, b);
  std::erase_if(homs, [](const MonoidHom& f) {
    std::set<Elt> img(f.map.begin(), f.map.end());
    return static_cast<int>(img.size()) != f.codomain.size();
  });
  return homs;
}

std::vector<MonoidHom> all_splittings(const MonoidHom& e) {
  std::vector<MonoidHom> out;
  for (auto& s : all_homs(e.codomain, e.domain)) {
    bool splits = true;
    for (Elt h = 0; h < e.codomain.size(); ++h)
      splits = splits && e.map[s.map[h]] == h;
    if (splits) out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::vector<Elt>> all_sections(const MonoidHom& e) {
  const auto& g = e.domain;
  const auto& h = e.codomain;
  std::vector<std::vector<Elt>> fibers(h.size());
  for (Elt x = 0; x < g.size(); ++x) fibers[e.map[x]].push_back(x);
  std::vector<std::vector<Elt>> out;
  std::vector<Elt> slots;
  for (Elt y = 0; y < h.size(); ++y)
    if (y != h.identity()) slots.push_back(y);
  std::vector<std::size_t> pick(slots.size(), 0);
  std::vector<Elt> sec(h.size(), g.identity());
  for (;;) {
    for (std::size_t i = 0; i < slots.size(); ++i)
      sec[slots[i]] = fibers[slots[i]][pick[i]];
    out.push_back(sec);
    std::size_t i = slots.size();
    for (;;) {
      if (i == 0) return out;
      --i;
      if (++pick[i] < fibers[slots[i]].size()) break;
      pick[i] = 0;
    }
  }
}

namespace {

// Streams every |H| x |N| table with the identity row pinned to the
// identity map, in lexicographic order.
template <typename Fn>
void for_each_action_table(const FiniteMonoid& h, const FiniteMonoid& n,
                           Fn&& fn) {
  const int nh = h.size(), nn = n.size();
  std::vector<Elt> alpha(nh * nn, 0);
  for (Elt m = 0; m < nn; ++m) alpha[h.identity() * nn + m] = m;
  std::vector<int> slots;
  for (Elt x = 0; x < nh; ++x) {
    if (x == h.identity()) continue;
    for (Elt m = 0; m < nn; ++m) slots.push_back(x * nn + m);
  }
  std::vector<Elt> pick(slots.size(), 0);
  for (;;) {
    for (std::size_t i = 0; i < slots.size(); ++i) alpha[slots[i]] = pick[i];
    fn(alpha);
    std::size_t i = slots.size();
    for (;;) {
      if (i == 0) return;
      --i;
      if (++pick[i] < nn) break;
      pick[i] = 0;
    }
  }
}

// Set partitions of {0..n-1} as restricted growth strings.
std::vector<std::vector<int>> set_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(n, 0);
  auto rec = [&](auto&& self, int i, int maxv) -> void {
    if (i == n) {
      out.push_back(a);
      return;
    }
    for (int v = 0; v <= maxv + 1 && v < n; ++v) {
      a[i] = v;
      self(self, i + 1, std::max(maxv, v));
    }
  };
  rec(rec, 1, 0);  // a[0] = 0 always
  if (n == 0) out.push_back({});
  return out;
}

bool row_is_left_congruence(const FiniteMonoid& n, const std::vector<int>& row) {
  for (Elt n1 = 0; n1 < n.size(); ++n1)
    for (Elt n2 = n1 + 1; n2 < n.size(); ++n2) {
      if (row[n1] != row[n2]) continue;
      for (Elt x = 0; x < n.size(); ++x)
        if (row[n.mul(x, n1)] != row[n.mul(x, n2)]) return false;
    }
  return true;
}

// Families of per-h partitions with the identity row discrete and every row
// a left congruence (the shape shared by relaxations and factor-system
// relations). The callback receives the full |H| x |N| class table.
template <typename Fn>
void for_each_partition_family(const FiniteMonoid& h, const FiniteMonoid& n,
                               Fn&& fn) {
  const int nh = h.size(), nn = n.size();
  std::vector<std::vector<int>> rows;
  for (auto& p : set_partitions(nn))
    if (row_is_left_congruence(n, p)) rows.push_back(p);

  std::vector<int> cls(nh * nn);
  for (Elt m = 0; m < nn; ++m) cls[h.identity() * nn + m] = m;
  std::vector<Elt> slots;
  for (Elt x = 0; x < nh; ++x)
    if (x != h.identity()) slots.push_back(x);
  std::vector<std::size_t> pick(slots.size(), 0);
  for (;;) {
    for (std::size_t i = 0; i < slots.size(); ++i)
      for (Elt m = 0; m < nn; ++m) cls[slots[i] * nn + m] = rows[pick[i]][m];
    fn(cls);
    std::size_t i = slots.size();
    for (;;) {
      if (i == 0) return;
      --i;
      if (++pick[i] < rows.size()) break;
      pick[i] = 0;
    }
  }
}

}  // namespace

std::vector<Action> all_actions(const FiniteMonoid& h, const FiniteMonoid& n) {
  std::vector<Action> out;
  for_each_action_table(h, n, [&](const std::vector<Elt>& alpha) {
    if (check_action(h, n, alpha)) out.push_back(Action{h, n, alpha});
  });
  return out;
}

std::vector<Relaxation> all_relaxations(const FiniteMonoid& h,
                                        const FiniteMonoid& n) {
  std::vector<Relaxation> out;
  for_each_partition_family(h, n, [&](const std::vector<int>& cls) {
    Relaxation e(h, n, cls);
    if (check_relaxation(e)) out.push_back(std::move(e));
  });
  return out;
}

std::vector<RelaxedAction> all_relaxed_actions(const FiniteMonoid& h,
                                               const FiniteMonoid& n) {
  std::vector<RelaxedAction> out;
  for (const auto& e : all_relaxations(h, n)) {
    // Two compatible actions are identified iff their class tables agree.
    std::set<std::vector<int>> seen;
    for_each_action_table(h, n, [&](const std::vector<Elt>& alpha) {
      if (!check_compatible_action(e, alpha)) return;
      std::vector<int> key(alpha.size());
      for (Elt x = 0; x < h.size(); ++x)
        for (Elt m = 0; m < n.size(); ++m)
          key[x * n.size() + m] = e.class_id(x, alpha[x * n.size() + m]);
      if (seen.insert(std::move(key)).second)
        out.push_back(RelaxedAction{e, alpha});
    });
  }
  return out;
}

void for_each_ws_factor_system(
    const FiniteMonoid& n, const FiniteMonoid& h,
    const std::function<void(const Relaxation&, const std::vector<Elt>&,
                             const std::vector<Elt>&)>& fn) {
  const int nh = h.size(), nn = n.size();
  const Elt one_h = h.identity();
  const Elt one_n = n.identity();

  for_each_partition_family(h, n, [&](const std::vector<int>& cls) {
    Relaxation e(h, n, cls);
    // Conditions 1 and 2 hold by construction of the family.
    for_each_action_table(h, n, [&](const std::vector<Elt>& alpha) {
      auto act = [&](Elt x, Elt m) { return alpha[x * nn + m]; };
      // Condition 4.
      for (Elt x = 0; x < nh; ++x)
        for (Elt n1 = 0; n1 < nn; ++n1)
          for (Elt n2 = n1 + 1; n2 < nn; ++n2) {
            if (!e.related(x, n1, n2)) continue;
            for (Elt m = 0; m < nn; ++m)
              if (!e.related(x, n.mul(n1, act(x, m)), n.mul(n2, act(x, m))))
                return;
          }
      // Condition 6.
      for (Elt x = 0; x < nh; ++x)
        for (Elt n1 = 0; n1 < nn; ++n1)
          for (Elt n2 = 0; n2 < nn; ++n2)
            if (!e.related(x, act(x, n.mul(n1, n2)),
                           n.mul(act(x, n1), act(x, n2))))
              return;
      // Condition 8 (9 holds by the pinned identity row).
      for (Elt x = 0; x < nh; ++x)
        if (!e.related(x, act(x, one_n), one_n)) return;

      // Chi entries over non-identity rows and columns; the identity rows
      // are normalized to 1, which settles condition 10.
      std::vector<Elt> chi(nh * nh, one_n);
      std::vector<int> slots;
      for (Elt x = 0; x < nh; ++x)
        for (Elt y = 0; y < nh; ++y)
          if (x != one_h && y != one_h) slots.push_back(x * nh + y);
      std::vector<Elt> pick(slots.size(), 0);
      for (;;) {
        for (std::size_t i = 0; i < slots.size(); ++i) chi[slots[i]] = pick[i];
        auto coc = [&](Elt x, Elt y) { return chi[x * nh + y]; };
        bool ok = true;
        // Condition 3.
        for (Elt h1 = 0; h1 < nh && ok; ++h1)
          for (Elt n1 = 0; n1 < nn && ok; ++n1)
            for (Elt n2 = n1 + 1; n2 < nn && ok; ++n2) {
              if (!e.related(h1, n1, n2)) continue;
              for (Elt h2 = 0; h2 < nh && ok; ++h2)
                ok = e.related(h.mul(h1, h2), n.mul(n1, coc(h1, h2)),
                               n.mul(n2, coc(h1, h2)));
            }
        // Condition 5.
        for (Elt h2 = 0; h2 < nh && ok; ++h2)
          for (Elt n1 = 0; n1 < nn && ok; ++n1)
            for (Elt n2 = n1 + 1; n2 < nn && ok; ++n2) {
              if (!e.related(h2, n1, n2)) continue;
              for (Elt h1 = 0; h1 < nh && ok; ++h1)
                ok = e.related(h.mul(h1, h2),
                               n.mul(act(h1, n1), coc(h1, h2)),
                               n.mul(act(h1, n2), coc(h1, h2)));
            }
        // Condition 7.
        for (Elt h1 = 0; h1 < nh && ok; ++h1)
          for (Elt h2 = 0; h2 < nh && ok; ++h2) {
            Elt h12 = h.mul(h1, h2);
            for (Elt m = 0; m < nn && ok; ++m)
              ok = e.related(h12, n.mul(coc(h1, h2), act(h12, m)),
                             n.mul(act(h1, act(h2, m)), coc(h1, h2)));
          }
        // Condition 11.
        for (Elt x = 0; x < nh && ok; ++x)
          for (Elt y = 0; y < nh && ok; ++y) {
            Elt xy = h.mul(x, y);
            for (Elt z = 0; z < nh && ok; ++z)
              ok = e.related(h.mul(xy, z),
                             n.mul(coc(x, y), coc(xy, z)),
                             n.mul(act(x, coc(y, z)), coc(x, h.mul(y, z))));
          }
        if (ok) fn(e, alpha, chi);

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
    });
  });
}

std::vector<WSFactorSystem> all_ws_factor_systems(const FiniteMonoid& n,
                                                  const FiniteMonoid& h) {
  std::vector<WSFactorSystem> out;
  for_each_ws_factor_system(
      n, h,
      [&](const Relaxation& e, const std::vector<Elt>& alpha,
          const std::vector<Elt>& chi) {
        out.push_back(WSFactorSystem{e, alpha, chi});
      });
  return out;
}

namespace {

int encode_flags(const ExtensionClass& c) {
  int bits = 0;
  auto set = [&](int b, bool v) { bits |= v ? (1 << b) : 0; };
  set(0, c.is_schreier);
  set(1, c.is_weakly_schreier);
  set(2, c.is_special_schreier);
  set(3, c.is_special_weakly_schreier);
  set(4, c.is_leech_normal == Flag::Yes);
  set(5, c.is_leech_normal == Flag::NotApplicable);
  set(6, c.is_schreier_split.value_or(false));
  set(7, c.is_weakly_schreier_split.value_or(false));
  return bits;
}

std::vector<int> census_signature(const CensusEntry& entry) {
  const auto& d = entry.diagram;
  std::vector<int> fiber_sizes(d.H.size(), 0);
  for (Elt g = 0; g < d.G.size(); ++g) ++fiber_sizes[d.e.map[g]];
  int idem = 0;
  for (Elt g = 0; g < d.G.size(); ++g)
    if (d.G.mul(g, g) == g) ++idem;
  std::vector<int> sig{d.G.size(), encode_flags(entry.cls), idem,
                       static_cast<int>(units(d.G).size()),
                       is_commutative(d.G) ? 1 : 0};
  sig.insert(sig.end(), fiber_sizes.begin(), fiber_sizes.end());
  return sig;
}

void group_into_classes(ExtensionCensus& census, bool match_splitting) {
  std::vector<std::vector<int>> signatures;
  for (auto& entry : census.entries)
    signatures.push_back(census_signature(entry));
  census.class_count = 0;
  census.class_reps.clear();
  for (std::size_t i = 0; i < census.entries.size(); ++i) {
    int found = -1;
    for (std::size_t c = 0; c < census.class_reps.size() && found < 0; ++c) {
      std::size_t rep = census.class_reps[c];
      if (signatures[i] != signatures[rep]) continue;
      if (find_extension_isomorphism(census.entries[i].diagram,
                                     census.entries[rep].diagram,
                                     match_splitting))
        found = static_cast<int>(c);
    }
    if (found < 0) {
      found = census.class_count++;
      census.class_reps.push_back(static_cast<int>(i));
    }
    census.entries[i].iso_class = found;
  }
}

}  // namespace

int ExtensionCensus::class_of(const ExtensionDiagram& d) const {
  bool split = mode == CensusMode::Split || mode == CensusMode::WsSplitCarrier;
  for (std::size_t c = 0; c < class_reps.size(); ++c)
    if (find_extension_isomorphism(d, entries[class_reps[c]].diagram, split))
      return static_cast<int>(c);
  return -1;
}

ExtensionCensus enumerate_extensions(const FiniteMonoid& n,
                                     const FiniteMonoid& h, CensusMode mode,
                                     int max_total_size) {
  if (mode == CensusMode::WsCarrier) return enumerate_ws_extensions(n, h);
  if (mode == CensusMode::WsSplitCarrier)
    return enumerate_ws_split_extensions(n, h);
  if (max_total_size > kTotalCap)
    throw Error(ErrorCode::OrderTooLarge,
                "total sizes are capped at " + std::to_string(kTotalCap));

  ExtensionCensus census{n, h, mode, {}, 0, {}};
  const int cap = std::min(max_total_size, kCatalogCap);
  for (int order = std::max(n.size(), h.size()); order <= cap; ++order) {
    for (const auto& g : enumerate_monoids(order).monoids) {
      auto ks = all_injective_homs(n, g);
      auto es = all_surjective_homs(g, h);
      for (const auto& k : ks)
        for (const auto& e : es) {
          ExtensionDiagram d{n, g, h, k, e, std::nullopt};
          if (!check_extension(d)) continue;
          if (mode == CensusMode::Split) {
            for (const auto& s : all_splittings(e)) {
              ExtensionDiagram ds{n, g, h, k, e, s};
              census.entries.push_back(
                  CensusEntry{ds, classify(ds), -1});
            }
          } else {
            census.entries.push_back(CensusEntry{d, classify(d), -1});
          }
        }
    }
  }
  group_into_classes(census, mode == CensusMode::Split);
  return census;
}

namespace {

std::vector<int> diagram_key(const ExtensionDiagram& d) {
  std::vector<int> key;
  key.push_back(d.G.size());
  key.insert(key.end(), d.G.table().begin(), d.G.table().end());
  key.push_back(-1);
  key.insert(key.end(), d.k.map.begin(), d.k.map.end());
  key.push_back(-1);
  key.insert(key.end(), d.e.map.begin(), d.e.map.end());
  if (d.s) {
    key.push_back(-1);
    key.insert(key.end(), d.s->map.begin(), d.s->map.end());
  }
  return key;
}

}  // namespace

ExtensionCensus enumerate_ws_split_extensions(const FiniteMonoid& n,
                                              const FiniteMonoid& h) {
  ExtensionCensus census{n, h, CensusMode::WsSplitCarrier, {}, 0, {}};
  std::set<std::vector<int>> seen;
  for (const auto& e : all_relaxations(h, n)) {
    for_each_action_table(h, n, [&](const std::vector<Elt>& alpha) {
      auto d = try_build_fibered_extension(e, alpha, nullptr, true);
      if (!d) return;
      if (!seen.insert(diagram_key(*d)).second) return;
      if (!check_extension(*d)) return;
      auto cls = classify(*d);
      if (!cls.is_weakly_schreier_split.value_or(false)) return;
      census.entries.push_back(CensusEntry{std::move(*d), std::move(cls), -1});
    });
  }
  group_into_classes(census, true);
  return census;
}

ExtensionCensus enumerate_ws_extensions(const FiniteMonoid& n,
                                        const FiniteMonoid& h) {
  ExtensionCensus census{n, h, CensusMode::WsCarrier, {}, 0, {}};
  std::set<std::vector<int>> seen;
  const int nh = h.size(), nn = n.size();
  const Elt one_h = h.identity();
  const Elt one_n = n.identity();

  for_each_partition_family(h, n, [&](const std::vector<int>& cls_table) {
    Relaxation e(h, n, cls_table);
    for_each_action_table(h, n, [&](const std::vector<Elt>& alpha) {
      // Right identity pre-check: n alpha(x,1) chi(x,1) must stay in [n],
      // and chi(x,1) is pinned to 1.
      for (Elt x = 0; x < nh; ++x)
        for (Elt m = 0; m < nn; ++m)
          if (!e.related(x, n.mul(m, alpha[x * nn + one_n]), m)) return;

      std::vector<Elt> chi(nh * nh, one_n);
      std::vector<int> slots;
      for (Elt x = 0; x < nh; ++x)
        for (Elt y = 0; y < nh; ++y)
          if (x != one_h && y != one_h) slots.push_back(x * nh + y);
      std::vector<Elt> pick(slots.size(), 0);
      for (;;) {
        for (std::size_t i = 0; i < slots.size(); ++i) chi[slots[i]] = pick[i];
        auto d = try_build_fibered_extension(e, alpha, &chi, false);
        if (d && seen.insert(diagram_key(*d)).second) {
          if (check_extension(*d)) {
            auto cls = classify(*d);
            if (cls.is_weakly_schreier)
              census.entries.push_back(
                  CensusEntry{std::move(*d), std::move(cls), -1});
          }
        }
        std::size_t i = slots.size();
        for (;;) {
          if (i == 0) return;
          --i;
          if (++pick[i] < nn) break;
          pick[i] = 0;
        }
      }
    });
  });
  group_into_classes(census, false);
  return census;
}

namespace {

std::string pair_label(const FiniteMonoid& n, const FiniteMonoid& h) {
  std::ostringstream os;
  os << "(|N|=" << n.size() << ",|H|=" << h.size() << ")";
  return os.str();
}

}  // namespace

CensusReport census_check(const FiniteMonoid& n, const FiniteMonoid& h) {
  CensusReport report;
  auto fail = [&](const std::string& msg) { report.failures.push_back(msg); };

  // (a) actions vs Schreier split classes, with the bijection realized by
  // the semidirect product and the extraction round trip.
  auto actions = all_actions(h, n);
  auto split_census = enumerate_ws_split_extensions(n, h);
  report.action_count = static_cast<int>(actions.size());
  std::vector<int> schreier_split_class_ids;
  for (std::size_t c = 0; c < split_census.class_reps.size(); ++c)
    if (split_census.entries[split_census.class_reps[c]]
            .cls.is_schreier_split.value_or(false))
      schreier_split_class_ids.push_back(static_cast<int>(c));
  report.schreier_split_classes =
      static_cast<int>(schreier_split_class_ids.size());
  if (report.action_count != report.schreier_split_classes)
    fail("(a) action count != Schreier split class count");
  {
    std::set<int> hit;
    for (const auto& a : actions) {
      ExtensionDiagram d = semidirect(a);
      Action back = extract_action(d);
      if (back.alpha != a.alpha)
        fail("(a) extract_action . semidirect is not the identity");
      int c = split_census.class_of(d);
      if (c < 0) {
        fail("(a) semidirect product missing from the census");
        continue;
      }
      if (!split_census.entries[split_census.class_reps[c]]
               .cls.is_schreier_split.value_or(false))
        fail("(a) semidirect product landed in a non-Schreier-split class");
      if (!hit.insert(c).second)
        fail("(a) two actions map to the same census class");
    }
    if (static_cast<int>(hit.size()) != report.schreier_split_classes)
      fail("(a) semidirect products do not cover the Schreier split classes");
  }

  // (b) relaxed actions vs weakly Schreier split classes.
  auto relaxed_actions = all_relaxed_actions(h, n);
  report.relaxed_action_count = static_cast<int>(relaxed_actions.size());
  report.ws_split_classes = split_census.class_count;
  if (report.relaxed_action_count != report.ws_split_classes)
    fail("(b) relaxed action count != weakly Schreier split class count");
  {
    std::set<int> hit;
    for (const auto& ra : relaxed_actions) {
      ExtensionDiagram d = relaxed_semidirect(ra.rel, ra.alpha);
      int c = split_census.class_of(d);
      if (c < 0) {
        fail("(b) relaxed semidirect product missing from the census");
        continue;
      }
      if (!hit.insert(c).second)
        fail("(b) two relaxed actions map to the same census class");
    }
    if (static_cast<int>(hit.size()) != report.ws_split_classes)
      fail("(b) relaxed semidirect products do not cover the census classes");
  }

  // (c) factor systems modulo gamma-equivalence vs weakly Schreier classes.
  auto ws_census = enumerate_ws_extensions(n, h);
  report.ws_classes = ws_census.class_count;
  {
    // Bucket factor systems by the diagram they generate; keep one sample
    // per distinct relaxation within a bucket. Systems sharing diagram and
    // relaxation are gamma-equivalent via the identity.
    struct Bucket {
      WSFactorSystem fs;
      ExtensionDiagram diagram;
      std::vector<WSFactorSystem> other_relations;
    };
    std::vector<Bucket> buckets;
    std::map<std::vector<int>, int> bucket_of;
    for_each_ws_factor_system(
        n, h,
        [&](const Relaxation& e, const std::vector<Elt>& alpha,
            const std::vector<Elt>& chi) {
          auto d = try_build_fibered_extension(e, alpha, &chi, false);
          if (!d)
            throw Error(ErrorCode::InvariantViolation,
                        "valid factor system failed to build a monoid");
          auto key = diagram_key(*d);
          auto it = bucket_of.find(key);
          if (it == bucket_of.end()) {
            bucket_of.emplace(std::move(key),
                              static_cast<int>(buckets.size()));
            buckets.push_back(
                Bucket{WSFactorSystem{e, alpha, chi}, std::move(*d), {}});
          } else {
            Bucket& b = buckets[it->second];
            bool fresh = !(b.fs.rel == e) &&
                         std::none_of(b.other_relations.begin(),
                                      b.other_relations.end(),
                                      [&](const WSFactorSystem& f) {
                                        return f.rel == e;
                                      });
            if (fresh)
              b.other_relations.push_back(WSFactorSystem{e, alpha, chi});
          }
        });

    // Group buckets by extension isomorphism, then count gamma components
    // inside each group.
    std::vector<int> group_of(buckets.size(), -1);
    std::vector<int> group_reps;
    for (std::size_t i = 0; i < buckets.size(); ++i) {
      for (std::size_t g = 0; g < group_reps.size() && group_of[i] < 0; ++g)
        if (find_extension_isomorphism(buckets[i].diagram,
                                       buckets[group_reps[g]].diagram, false))
          group_of[i] = static_cast<int>(g);
      if (group_of[i] < 0) {
        group_of[i] = static_cast<int>(group_reps.size());
        group_reps.push_back(static_cast<int>(i));
      }
    }

    int fs_classes = 0;
    for (std::size_t g = 0; g < group_reps.size(); ++g) {
      std::vector<const WSFactorSystem*> nodes;
      for (std::size_t i = 0; i < buckets.size(); ++i) {
        if (group_of[i] != static_cast<int>(g)) continue;
        nodes.push_back(&buckets[i].fs);
        for (const auto& f : buckets[i].other_relations) nodes.push_back(&f);
      }
      std::vector<int> comp(nodes.size());
      std::iota(comp.begin(), comp.end(), 0);
      std::function<int(int)> find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
      };
      for (std::size_t i = 1; i < nodes.size(); ++i)
        if (ws_factor_systems_equivalent(*nodes[0], *nodes[i]))
          comp[find(static_cast<int>(i))] = find(0);
      // Any stragglers: full pairwise among the unconnected.
      for (std::size_t i = 1; i < nodes.size(); ++i) {
        if (find(static_cast<int>(i)) == find(0)) continue;
        for (std::size_t j = 1; j < nodes.size(); ++j) {
          if (i == j || find(static_cast<int>(i)) == find(static_cast<int>(j)))
            continue;
          if (ws_factor_systems_equivalent(*nodes[i], *nodes[j]))
            comp[find(static_cast<int>(i))] = find(static_cast<int>(j));
        }
      }
      std::set<int> roots;
      for (std::size_t i = 0; i < nodes.size(); ++i)
        roots.insert(find(static_cast<int>(i)));
      fs_classes += static_cast<int>(roots.size());
    }
    report.ws_factor_system_classes = fs_classes;
    if (fs_classes != report.ws_classes)
      fail("(c) factor system classes != weakly Schreier class count");

    // The crossed products must realize the census bijectively.
    std::set<int> hit;
    for (int rep : group_reps) {
      int c = ws_census.class_of(buckets[rep].diagram);
      if (c < 0) {
        fail("(c) crossed product missing from the census");
        continue;
      }
      if (!hit.insert(c).second)
        fail("(c) two factor-system classes share a census class");
    }
    if (static_cast<int>(hit.size()) != report.ws_classes)
      fail("(c) crossed products do not cover the census classes");
  }

  // (d) cohomology orders vs special (weakly) Schreier classes per action.
  if (is_group(n) && is_commutative(n)) {
    report.checked_cohomology = true;
    for (std::size_t ai = 0; ai < actions.size(); ++ai) {
      const auto& a = actions[ai];
      int census_classes = 0;
      for (int rep : ws_census.class_reps) {
        const auto& entry = ws_census.entries[rep];
        if (!entry.cls.is_special_schreier) continue;
        if (extract_factor_system(entry.diagram).alpha == a.alpha)
          ++census_classes;
      }
      auto res = h2(a);
      report.cohomology.push_back(CensusReport::CohomLine{
          "strict action " + std::to_string(ai), res.h2_order,
          census_classes});
      if (res.h2_order != census_classes)
        fail("(d) strict h2 order mismatch for action " + std::to_string(ai));
    }
    for (std::size_t ri = 0; ri < relaxed_actions.size(); ++ri) {
      const auto& ra = relaxed_actions[ri];
      int census_classes = 0;
      for (int rep : ws_census.class_reps) {
        const auto& entry = ws_census.entries[rep];
        if (!entry.cls.is_special_weakly_schreier) continue;
        auto fs = extract_ws_factor_system(entry.diagram);
        if (fs.rel == ra.rel &&
            relaxed_actions_equal(RelaxedAction{fs.rel, fs.alpha}, ra))
          ++census_classes;
      }
      auto res = h2(ra);
      report.cohomology.push_back(CensusReport::CohomLine{
          "relaxed action " + std::to_string(ri), res.h2_order,
          census_classes});
      if (res.h2_order != census_classes)
        fail("(d) relaxed h2 order mismatch for relaxed action " +
             std::to_string(ri));
    }
  }

  if (!report.ok())
    report.failures.insert(report.failures.begin(),
                           "census_check failed for " + pair_label(n, h));
  return report;
}

}  // namespace monext
