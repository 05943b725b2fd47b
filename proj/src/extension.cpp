#include "monext/extension.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace monext {

namespace {

// Submonoid of g on the (sorted) element set s, with its inclusion.
std::pair<FiniteMonoid, MonoidHom> submonoid(const FiniteMonoid& g,
                                             std::vector<Elt> s) {
  std::vector<int> pos(g.size(), -1);
  for (std::size_t i = 0; i < s.size(); ++i) pos[s[i]] = static_cast<int>(i);
  if (pos[g.identity()] < 0)
    throw Error(ErrorCode::NotASubmonoid, "identity missing");
  const int n = static_cast<int>(s.size());
  std::vector<Elt> table(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elt p = g.mul(s[i], s[j]);
      if (pos[p] < 0)
        throw Error(ErrorCode::NotASubmonoid, "set not closed");
      table[i * n + j] = pos[p];
    }
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = g.name_of(s[i]);
  FiniteMonoid sub =
      validate_monoid(n, pos[g.identity()], std::move(table), std::move(names));
  MonoidHom incl{sub, g, std::move(s)};
  return {std::move(sub), std::move(incl)};
}

}  // namespace

std::pair<FiniteMonoid, MonoidHom> kernel(const MonoidHom& e) {
  if (auto r = check_hom(e); !r)
    throw Error(ErrorCode::NotAHom, r.detail);
  std::vector<Elt> s;
  for (Elt g = 0; g < e.domain.size(); ++g)
    if (e.map[g] == e.codomain.identity()) s.push_back(g);
  return submonoid(e.domain, std::move(s));
}

CheckResult check_extension(const ExtensionDiagram& d) {
  if (auto r = check_hom(d.k); !r)
    return CheckResult::fail("k is not a homomorphism: " + r.detail);
  if (auto r = check_hom(d.e); !r)
    return CheckResult::fail("e is not a homomorphism: " + r.detail);
  if (!(d.k.domain == d.N) || !(d.k.codomain == d.G) || !(d.e.domain == d.G) ||
      !(d.e.codomain == d.H))
    return CheckResult::fail("hom endpoints do not match N, G, H");

  // k injective.
  for (Elt a = 0; a < d.N.size(); ++a)
    for (Elt b = a + 1; b < d.N.size(); ++b)
      if (d.k.map[a] == d.k.map[b])
        return CheckResult::fail("k not injective");
  // e surjective.
  {
    std::vector<bool> hit(d.H.size(), false);
    for (Elt g = 0; g < d.G.size(); ++g) hit[d.e.map[g]] = true;
    for (Elt h = 0; h < d.H.size(); ++h)
      if (!hit[h]) return CheckResult::fail("e not surjective");
  }
  // image(k) = e^{-1}(1_H).
  {
    std::vector<bool> in_image(d.G.size(), false);
    for (Elt v : d.k.map) in_image[v] = true;
    for (Elt g = 0; g < d.G.size(); ++g) {
      bool in_kernel = d.e.map[g] == d.H.identity();
      if (in_image[g] != in_kernel) {
        std::ostringstream os;
        os << "element " << g << (in_kernel ? " in kernel(e) \\ image(k)"
                                            : " in image(k) \\ kernel(e)");
        return CheckResult::fail(os.str());
      }
    }
  }
  // e is the cokernel of k: the fiber partition of e equals the congruence
  // generated by {(k(n), 1_G)}.
  {
    std::vector<std::pair<Elt, Elt>> pairs;
    for (Elt v : d.k.map) pairs.emplace_back(v, d.G.identity());
    Congruence c = congruence_generated(d.G, pairs);
    for (Elt a = 0; a < d.G.size(); ++a)
      for (Elt b = a + 1; b < d.G.size(); ++b) {
        bool same_fiber = d.e.map[a] == d.e.map[b];
        bool same_class = c.class_of[a] == c.class_of[b];
        if (same_fiber != same_class) {
          std::ostringstream os;
          os << "cokernel mismatch at (" << a << "," << b << ")";
          return CheckResult::fail(os.str());
        }
      }
  }
  if (d.s) {
    if (auto r = check_hom(*d.s); !r)
      return CheckResult::fail("s is not a homomorphism: " + r.detail);
    if (!(d.s->domain == d.H) || !(d.s->codomain == d.G))
      return CheckResult::fail("s endpoints do not match H, G");
    for (Elt h = 0; h < d.H.size(); ++h)
      if (d.e.map[d.s->map[h]] != h)
        return CheckResult::fail("e . s is not the identity");
  }
  return CheckResult::pass();
}

namespace {

std::vector<std::vector<Elt>> fibers_of(const ExtensionDiagram& d) {
  std::vector<std::vector<Elt>> out(d.H.size());
  for (Elt g = 0; g < d.G.size(); ++g) out[d.e.map[g]].push_back(g);
  return out;
}

// A weak generator of the fiber over h covers it: k(N) u = fiber. A strict
// generator additionally factors every fiber element uniquely.
bool is_weak_generator(const ExtensionDiagram& d,
                       const std::vector<Elt>& fiber, Elt u) {
  std::vector<bool> hit(d.G.size(), false);
  for (Elt n = 0; n < d.N.size(); ++n) hit[d.G.mul(d.k.map[n], u)] = true;
  return std::all_of(fiber.begin(), fiber.end(),
                     [&](Elt g) { return hit[g]; });
}

bool is_strict_generator(const ExtensionDiagram& d,
                         const std::vector<Elt>& fiber, Elt u) {
  std::vector<int> count(d.G.size(), 0);
  for (Elt n = 0; n < d.N.size(); ++n) ++count[d.G.mul(d.k.map[n], u)];
  return std::all_of(fiber.begin(), fiber.end(),
                     [&](Elt g) { return count[g] == 1; });
}

}  // namespace

ExtensionClass classify(const ExtensionDiagram& d) {
  if (auto r = check_extension(d); !r)
    throw Error(ErrorCode::NotAnExtension, r.detail);

  ExtensionClass out;
  out.is_extension = true;
  auto fibers = fibers_of(d);

  // Weak/strict generators per fiber; u_1 is pinned to the identity of G
  // (always a weak generator of the kernel fiber).
  std::vector<Elt> gens(d.H.size(), -1);
  bool weakly = true, strictly = true;
  for (Elt h = 0; h < d.H.size(); ++h) {
    const auto& fiber = fibers[h];
    bool weak_found = false, strict_found = false;
    if (h == d.H.identity()) {
      // The kernel fiber is k(N): the identity is a generator, and k's
      // injectivity makes the factorization unique.
      gens[h] = d.G.identity();
      weak_found = true;
      strict_found = true;
    } else {
      for (Elt u : fiber) {
        if (!weak_found && is_weak_generator(d, fiber, u)) {
          weak_found = true;
          gens[h] = u;
        }
        if (!strict_found && is_strict_generator(d, fiber, u))
          strict_found = true;
      }
    }
    weakly = weakly && weak_found;
    strictly = strictly && strict_found;
  }
  out.is_weakly_schreier = weakly;
  out.is_schreier = strictly;
  if (weakly) out.generators = gens;

  // Cosetal conditions: e(g1) = e(g2) implies g1 = k(n) g2 for some n
  // (unique n in the special Schreier case). Scanned pairwise per fiber.
  bool special_weak = true, special_strict = true;
  for (const auto& fiber : fibers)
    for (Elt g1 : fiber)
      for (Elt g2 : fiber) {
        int count = 0;
        for (Elt n = 0; n < d.N.size(); ++n)
          if (d.G.mul(d.k.map[n], g2) == g1) ++count;
        if (count == 0) special_weak = false;
        if (count != 1) special_strict = false;
      }
  out.is_special_weakly_schreier = special_weak;
  out.is_special_schreier = special_strict;

  // Leech normality g k(N) = k(N) g, evaluated only for group kernels.
  {
    auto [ker, incl] = kernel(d.e);
    if (is_group(ker)) {
      bool normal = true;
      for (Elt g = 0; g < d.G.size() && normal; ++g) {
        std::set<Elt> left, right;
        for (Elt v : incl.map) {
          left.insert(d.G.mul(g, v));
          right.insert(d.G.mul(v, g));
        }
        normal = left == right;
      }
      out.is_leech_normal = normal ? Flag::Yes : Flag::No;
    }
  }

  if (d.s) {
    bool weak_split = true, strict_split = true;
    for (Elt g = 0; g < d.G.size(); ++g) {
      Elt se = d.s->map[d.e.map[g]];
      int count = 0;
      for (Elt n = 0; n < d.N.size(); ++n)
        if (d.G.mul(d.k.map[n], se) == g) ++count;
      if (count == 0) weak_split = false;
      if (count != 1) strict_split = false;
    }
    out.is_weakly_schreier_split = weak_split;
    out.is_schreier_split = strict_split;
  }
  return out;
}

std::vector<Elt> generator_candidates(const ExtensionDiagram& d, Elt h,
                                      bool strict) {
  std::vector<Elt> fiber;
  for (Elt g = 0; g < d.G.size(); ++g)
    if (d.e.map[g] == h) fiber.push_back(g);
  std::vector<Elt> out;
  for (Elt u : fiber) {
    bool ok = strict ? is_strict_generator(d, fiber, u)
                     : is_weak_generator(d, fiber, u);
    if (ok) out.push_back(u);
  }
  return out;
}

std::vector<Elt> right_normaliser(const FiniteMonoid& g,
                                  const std::vector<Elt>& s) {
  std::vector<bool> in_s(g.size(), false);
  for (Elt x : s) {
    if (x < 0 || x >= g.size())
      throw Error(ErrorCode::OutOfRange, "submonoid element out of range");
    in_s[x] = true;
  }
  if (!in_s[g.identity()])
    throw Error(ErrorCode::NotASubmonoid, "identity missing");
  for (Elt a : s)
    for (Elt b : s)
      if (!in_s[g.mul(a, b)])
        throw Error(ErrorCode::NotASubmonoid, "set not closed");

  std::vector<Elt> out;
  for (Elt x = 0; x < g.size(); ++x) {
    std::set<Elt> right;
    for (Elt n : s) right.insert(g.mul(n, x));
    bool ok = std::all_of(s.begin(), s.end(), [&](Elt n) {
      return right.count(g.mul(x, n)) > 0;
    });
    if (ok) out.push_back(x);
  }
  // The normaliser is a submonoid; verify rather than assume.
  std::vector<bool> in_out(g.size(), false);
  for (Elt x : out) in_out[x] = true;
  if (!in_out[g.identity()])
    throw Error(ErrorCode::InvariantViolation, "normaliser lost the identity");
  for (Elt a : out)
    for (Elt b : out)
      if (!in_out[g.mul(a, b)])
        throw Error(ErrorCode::InvariantViolation, "normaliser not closed");
  return out;
}

bool is_meet_semilattice(const FiniteMonoid& m) {
  for (Elt x = 0; x < m.size(); ++x)
    if (m.mul(x, x) != x) return false;
  return is_commutative(m);
}

ExtensionDiagram artin_glueing(const FiniteMonoid& h, const FiniteMonoid& n,
                               const std::vector<Elt>& f) {
  if (!is_meet_semilattice(h))
    throw Error(ErrorCode::NotASemilattice, "quotient monoid");
  if (!is_meet_semilattice(n))
    throw Error(ErrorCode::NotASemilattice, "kernel monoid");
  if (static_cast<int>(f.size()) != h.size())
    throw Error(ErrorCode::OutOfRange, "map length differs from |H|");
  for (Elt v : f)
    if (v < 0 || v >= n.size())
      throw Error(ErrorCode::OutOfRange, "map value out of range");
  if (f[h.identity()] != n.identity())
    throw Error(ErrorCode::NotMeetPreserving, "top not preserved");
  for (Elt a = 0; a < h.size(); ++a)
    for (Elt b = 0; b < h.size(); ++b)
      if (f[h.mul(a, b)] != n.mul(f[a], f[b])) {
        std::ostringstream os;
        os << "(" << a << "," << b << ")";
        throw Error(ErrorCode::NotMeetPreserving, os.str());
      }

  // Gl(f) as a submonoid of N x H: pairs (m, x) with m <= f(x).
  FiniteMonoid prod = direct_product(n, h);
  std::vector<Elt> elems;
  std::vector<int> pos(prod.size(), -1);
  for (Elt m = 0; m < n.size(); ++m)
    for (Elt x = 0; x < h.size(); ++x)
      if (n.mul(m, f[x]) == m) {
        pos[m * h.size() + x] = static_cast<int>(elems.size());
        elems.push_back(m * h.size() + x);
      }
  auto [g, incl] = submonoid(prod, elems);

  std::vector<Elt> kmap(n.size()), emap(g.size()), smap(h.size());
  for (Elt m = 0; m < n.size(); ++m) kmap[m] = pos[m * h.size() + h.identity()];
  for (std::size_t i = 0; i < elems.size(); ++i)
    emap[i] = elems[i] % h.size();
  for (Elt x = 0; x < h.size(); ++x) smap[x] = pos[f[x] * h.size() + x];

  ExtensionDiagram d{n, g, h, MonoidHom{n, g, std::move(kmap)},
                     MonoidHom{g, h, std::move(emap)},
                     MonoidHom{h, g, std::move(smap)}};
  if (auto r = check_extension(d); !r)
    throw Error(ErrorCode::InvariantViolation,
                "glueing failed extension checks: " + r.detail);
  return d;
}

std::optional<MonoidHom> find_extension_isomorphism(const ExtensionDiagram& d1,
                                                    const ExtensionDiagram& d2,
                                                    bool match_splitting) {
  if (!(d1.N == d2.N) || !(d1.H == d2.H)) return std::nullopt;
  if (d1.G.size() != d2.G.size()) return std::nullopt;
  if (match_splitting && (!d1.s || !d2.s)) return std::nullopt;

  const int n = d1.G.size();
  std::vector<Elt> map(n, -1);
  std::vector<bool> used(n, false);

  auto pin = [&](Elt from, Elt to) {
    if (map[from] >= 0) return map[from] == to;
    if (used[to]) return false;
    map[from] = to;
    used[to] = true;
    return true;
  };
  if (!pin(d1.G.identity(), d2.G.identity())) return std::nullopt;
  for (Elt x = 0; x < d1.N.size(); ++x)
    if (!pin(d1.k.map[x], d2.k.map[x])) return std::nullopt;
  if (match_splitting)
    for (Elt h = 0; h < d1.H.size(); ++h)
      if (!pin(d1.s->map[h], d2.s->map[h])) return std::nullopt;
  // Fibers must correspond.
  for (Elt g = 0; g < n; ++g)
    if (map[g] >= 0 && d2.e.map[map[g]] != d1.e.map[g]) return std::nullopt;

  struct Search {
    const FiniteMonoid& a;
    const FiniteMonoid& b;
    const std::vector<Elt>& fiber_a;
    const std::vector<Elt>& fiber_b;
    std::vector<Elt>& map;
    std::vector<bool>& used;

    bool consistent() const {
      for (Elt x = 0; x < a.size(); ++x) {
        if (map[x] < 0) continue;
        for (Elt y = 0; y < a.size(); ++y) {
          if (map[y] < 0) continue;
          Elt p = a.mul(x, y);
          if (map[p] >= 0 && b.mul(map[x], map[y]) != map[p]) return false;
        }
      }
      return true;
    }

    bool run(Elt next) {
      while (next < a.size() && map[next] >= 0) ++next;
      if (next == a.size()) return consistent();
      for (Elt cand = 0; cand < b.size(); ++cand) {
        if (used[cand] || fiber_b[cand] != fiber_a[next]) continue;
        map[next] = cand;
        used[cand] = true;
        if (consistent() && run(next + 1)) return true;
        map[next] = -1;
        used[cand] = false;
      }
      return false;
    }
  };

  Search search{d1.G, d2.G, d1.e.map, d2.e.map, map, used};
  if (!search.consistent() || !search.run(0)) return std::nullopt;
  return MonoidHom{d1.G, d2.G, map};
}

}  // namespace monext
