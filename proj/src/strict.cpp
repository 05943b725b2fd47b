#include "monext/strict.hpp"

#include <algorithm>
#include <sstream>

namespace monext {

namespace {

std::string tuple_str(std::initializer_list<Elt> xs) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (Elt x : xs) {
    if (!first) os << ",";
    os << x;
    first = false;
  }
  os << ")";
  return os.str();
}

}  // namespace

CheckResult check_action(const FiniteMonoid& h, const FiniteMonoid& n,
                         const std::vector<Elt>& alpha) {
  const int nh = h.size(), nn = n.size();
  if (static_cast<int>(alpha.size()) != nh * nn)
    return CheckResult::fail("table is not |H| x |N|");
  for (Elt v : alpha)
    if (v < 0 || v >= nn) return CheckResult::fail("table value out of range");
  auto act = [&](Elt x, Elt m) { return alpha[x * nn + m]; };

  for (Elt m = 0; m < nn; ++m)
    if (act(h.identity(), m) != m)
      return CheckResult::fail("alpha(1,n) = n fails at n = " +
                               std::to_string(m));
  for (Elt x = 0; x < nh; ++x)
    if (act(x, n.identity()) != n.identity())
      return CheckResult::fail("alpha(h,1) = 1 fails at h = " +
                               std::to_string(x));
  for (Elt x = 0; x < nh; ++x)
    for (Elt m1 = 0; m1 < nn; ++m1)
      for (Elt m2 = 0; m2 < nn; ++m2)
        if (act(x, n.mul(m1, m2)) != n.mul(act(x, m1), act(x, m2)))
          return CheckResult::fail("alpha(h,n1 n2) law fails at " +
                                   tuple_str({x, m1, m2}));
  for (Elt x1 = 0; x1 < nh; ++x1)
    for (Elt x2 = 0; x2 < nh; ++x2)
      for (Elt m = 0; m < nn; ++m)
        if (act(h.mul(x1, x2), m) != act(x1, act(x2, m)))
          return CheckResult::fail("alpha(h1 h2,n) law fails at " +
                                   tuple_str({x1, x2, m}));
  return CheckResult::pass();
}

namespace {

// Shared builder for semidirect and crossed products: the carrier is N x H
// with (n, h) encoded as n * |H| + h; chi may be null (semidirect case).
ExtensionDiagram build_product_extension(const FiniteMonoid& H,
                                         const FiniteMonoid& N,
                                         const std::vector<Elt>& alpha,
                                         const std::vector<Elt>* chi,
                                         bool with_splitting) {
  const int nh = H.size(), nn = N.size(), sz = nn * nh;
  auto act = [&](Elt h, Elt n) { return alpha[h * nn + n]; };
  auto idx = [nh](Elt n, Elt h) { return n * nh + h; };

  std::vector<Elt> table(sz * sz);
  for (Elt n1 = 0; n1 < nn; ++n1)
    for (Elt h1 = 0; h1 < nh; ++h1)
      for (Elt n2 = 0; n2 < nn; ++n2)
        for (Elt h2 = 0; h2 < nh; ++h2) {
          Elt n = N.mul(n1, act(h1, n2));
          if (chi) n = N.mul(n, (*chi)[h1 * nh + h2]);
          table[idx(n1, h1) * sz + idx(n2, h2)] = idx(n, H.mul(h1, h2));
        }
  std::vector<std::string> names(sz);
  for (Elt n = 0; n < nn; ++n)
    for (Elt h = 0; h < nh; ++h)
      names[idx(n, h)] = "(" + N.name_of(n) + "," + H.name_of(h) + ")";
  FiniteMonoid g = validate_monoid(sz, idx(N.identity(), H.identity()),
                                   std::move(table), std::move(names));

  std::vector<Elt> kmap(nn), emap(sz);
  for (Elt n = 0; n < nn; ++n) kmap[n] = idx(n, H.identity());
  for (Elt n = 0; n < nn; ++n)
    for (Elt h = 0; h < nh; ++h) emap[idx(n, h)] = h;
  ExtensionDiagram d{N, g, H, MonoidHom{N, g, std::move(kmap)},
                     MonoidHom{g, H, std::move(emap)}, std::nullopt};
  if (with_splitting) {
    std::vector<Elt> smap(nh);
    for (Elt h = 0; h < nh; ++h) smap[h] = idx(N.identity(), h);
    d.s = MonoidHom{H, d.G, std::move(smap)};
  }
  if (auto r = check_extension(d); !r)
    throw Error(ErrorCode::InvariantViolation,
                "product extension failed checks: " + r.detail);
  return d;
}

}  // namespace

ExtensionDiagram semidirect(const Action& action) {
  if (auto r = check_action(action.H, action.N, action.alpha); !r)
    throw Error(ErrorCode::ActionInvalid, r.detail);
  return build_product_extension(action.H, action.N, action.alpha, nullptr,
                                 true);
}

Action extract_action(const ExtensionDiagram& d) {
  auto cls = classify(d);
  if (!cls.is_schreier_split.value_or(false))
    throw Error(ErrorCode::NotSchreierSplit,
                "diagram is not a Schreier split extension");
  const int nh = d.H.size(), nn = d.N.size();
  std::vector<Elt> alpha(nh * nn, -1);
  for (Elt h = 0; h < nh; ++h) {
    Elt sh = d.s->map[h];
    for (Elt n = 0; n < nn; ++n) {
      Elt target = d.G.mul(sh, d.k.map[n]);
      for (Elt m = 0; m < nn; ++m)
        if (d.G.mul(d.k.map[m], sh) == target) {
          alpha[h * nn + n] = m;
          break;
        }
    }
  }
  Action a{d.H, d.N, std::move(alpha)};
  if (auto r = check_action(a.H, a.N, a.alpha); !r)
    throw Error(ErrorCode::InvariantViolation,
                "extracted table is not an action: " + r.detail);
  return a;
}

CheckResult check_factor_system(const FactorSystem& fs) {
  const auto& H = fs.H;
  const auto& N = fs.N;
  const int nh = H.size(), nn = N.size();
  if (static_cast<int>(fs.alpha.size()) != nh * nn ||
      static_cast<int>(fs.chi.size()) != nh * nh)
    return CheckResult::fail("table shapes wrong");
  for (Elt v : fs.alpha)
    if (v < 0 || v >= nn) return CheckResult::fail("alpha value out of range");
  for (Elt v : fs.chi)
    if (v < 0 || v >= nn) return CheckResult::fail("chi value out of range");

  // 1. alpha(1,n) = n
  for (Elt n = 0; n < nn; ++n)
    if (fs.act(H.identity(), n) != n)
      return CheckResult::fail("condition 1 fails at n = " +
                               std::to_string(n));
  // 2. alpha(h,1) = 1
  for (Elt h = 0; h < nh; ++h)
    if (fs.act(h, N.identity()) != N.identity())
      return CheckResult::fail("condition 2 fails at h = " +
                               std::to_string(h));
  // 3. alpha(h, n1 n2) = alpha(h,n1) alpha(h,n2)
  for (Elt h = 0; h < nh; ++h)
    for (Elt n1 = 0; n1 < nn; ++n1)
      for (Elt n2 = 0; n2 < nn; ++n2)
        if (fs.act(h, N.mul(n1, n2)) != N.mul(fs.act(h, n1), fs.act(h, n2)))
          return CheckResult::fail("condition 3 fails at " +
                                   tuple_str({h, n1, n2}));
  // 4. chi(h1,h2) alpha(h1 h2, n) = alpha(h1, alpha(h2, n)) chi(h1,h2)
  for (Elt h1 = 0; h1 < nh; ++h1)
    for (Elt h2 = 0; h2 < nh; ++h2)
      for (Elt n = 0; n < nn; ++n)
        if (N.mul(fs.coc(h1, h2), fs.act(H.mul(h1, h2), n)) !=
            N.mul(fs.act(h1, fs.act(h2, n)), fs.coc(h1, h2)))
          return CheckResult::fail("condition 4 fails at " +
                                   tuple_str({h1, h2, n}));
  // 5. chi(1,h) = 1 = chi(h,1)
  for (Elt h = 0; h < nh; ++h)
    if (fs.coc(H.identity(), h) != N.identity() ||
        fs.coc(h, H.identity()) != N.identity())
      return CheckResult::fail("condition 5 fails at h = " +
                               std::to_string(h));
  // 6. chi(x,y) chi(xy,z) = alpha(x, chi(y,z)) chi(x,yz)
  for (Elt x = 0; x < nh; ++x)
    for (Elt y = 0; y < nh; ++y)
      for (Elt z = 0; z < nh; ++z)
        if (N.mul(fs.coc(x, y), fs.coc(H.mul(x, y), z)) !=
            N.mul(fs.act(x, fs.coc(y, z)), fs.coc(x, H.mul(y, z))))
          return CheckResult::fail("condition 6 fails at " +
                                   tuple_str({x, y, z}));
  return CheckResult::pass();
}

ExtensionDiagram crossed_product(const FactorSystem& fs) {
  if (auto r = check_factor_system(fs); !r)
    throw Error(ErrorCode::FactorSystemInvalid, r.detail);
  return build_product_extension(fs.H, fs.N, fs.alpha, &fs.chi, false);
}

namespace {

std::vector<Elt> resolve_generators(
    const ExtensionDiagram& d, const ExtensionClass& cls,
    const std::optional<std::vector<Elt>>& choice, bool strict) {
  std::vector<Elt> gens = choice ? *choice : *cls.generators;
  if (static_cast<int>(gens.size()) != d.H.size())
    throw Error(ErrorCode::BadGeneratorChoice,
                "generator choice length differs from |H|");
  if (gens[d.H.identity()] != d.G.identity())
    throw Error(ErrorCode::BadGeneratorChoice,
                "u_1 must be the identity of G");
  for (Elt h = 0; h < d.H.size(); ++h) {
    Elt u = gens[h];
    if (u < 0 || u >= d.G.size() || d.e.map[u] != h)
      throw Error(ErrorCode::BadGeneratorChoice,
                  "u_" + std::to_string(h) + " is not in its fiber");
    std::vector<int> count(d.G.size(), 0);
    for (Elt n = 0; n < d.N.size(); ++n) ++count[d.G.mul(d.k.map[n], u)];
    for (Elt g = 0; g < d.G.size(); ++g) {
      if (d.e.map[g] != h) continue;
      bool ok = strict ? count[g] == 1 : count[g] >= 1;
      if (!ok)
        throw Error(ErrorCode::BadGeneratorChoice,
                    "u_" + std::to_string(h) + " is not a generator");
    }
  }
  return gens;
}

}  // namespace

FactorSystem extract_factor_system(
    const ExtensionDiagram& d,
    const std::optional<std::vector<Elt>>& generator_choice) {
  auto cls = classify(d);
  if (!cls.is_schreier)
    throw Error(ErrorCode::NotSchreier, "diagram is not a Schreier extension");
  auto gens = resolve_generators(d, cls, generator_choice, true);

  const int nh = d.H.size(), nn = d.N.size();
  auto solve = [&](Elt u, Elt target) {
    for (Elt m = 0; m < nn; ++m)
      if (d.G.mul(d.k.map[m], u) == target) return m;
    throw Error(ErrorCode::InvariantViolation, "no factorization witness");
  };
  std::vector<Elt> alpha(nh * nn), chi(nh * nh);
  for (Elt h = 0; h < nh; ++h)
    for (Elt n = 0; n < nn; ++n)
      alpha[h * nn + n] = solve(gens[h], d.G.mul(gens[h], d.k.map[n]));
  for (Elt h1 = 0; h1 < nh; ++h1)
    for (Elt h2 = 0; h2 < nh; ++h2)
      chi[h1 * nh + h2] =
          solve(gens[d.H.mul(h1, h2)], d.G.mul(gens[h1], gens[h2]));
  FactorSystem fs{d.H, d.N, std::move(alpha), std::move(chi)};
  if (auto r = check_factor_system(fs); !r)
    throw Error(ErrorCode::InvariantViolation,
                "extracted data is not a factor system: " + r.detail);
  return fs;
}

std::optional<GammaWitness> factor_systems_equivalent(const FactorSystem& fs1,
                                                      const FactorSystem& fs2,
                                                      bool require_invertible) {
  if (!(fs1.H == fs2.H) || !(fs1.N == fs2.N)) return std::nullopt;
  const auto& H = fs1.H;
  const auto& N = fs1.N;
  const int nh = H.size(), nn = N.size();

  ExtensionDiagram cp1 = crossed_product(fs1);
  ExtensionDiagram cp2 = crossed_product(fs2);

  std::vector<Elt> candidates;
  if (require_invertible)
    candidates = units(N);
  else {
    candidates.resize(nn);
    for (Elt n = 0; n < nn; ++n) candidates[n] = n;
  }
  std::vector<bool> is_unit(nn, false);
  for (Elt u : units(N)) is_unit[u] = true;

  auto idx = [nh](Elt n, Elt h) { return n * nh + h; };
  auto is_extension_iso = [&](const std::vector<Elt>& gamma) {
    // f(n, h) = (n gamma(h), h) from cp1 to cp2: bijective per fiber, and a
    // homomorphism. The triangle conditions hold by construction since
    // gamma(1) = 1.
    std::vector<Elt> f(cp1.G.size());
    for (Elt n = 0; n < nn; ++n)
      for (Elt h = 0; h < nh; ++h)
        f[idx(n, h)] = idx(N.mul(n, gamma[h]), h);
    std::vector<bool> hit(cp2.G.size(), false);
    for (Elt v : f) {
      if (hit[v]) return false;
      hit[v] = true;
    }
    for (Elt a = 0; a < cp1.G.size(); ++a)
      for (Elt b = 0; b < cp1.G.size(); ++b)
        if (f[cp1.G.mul(a, b)] != cp2.G.mul(f[a], f[b])) return false;
    return true;
  };

  // Odometer over gamma values for h != 1 in lexicographic order.
  std::vector<Elt> slots;
  for (Elt h = 0; h < nh; ++h)
    if (h != H.identity()) slots.push_back(h);
  std::vector<std::size_t> pick(slots.size(), 0);
  std::vector<Elt> gamma(nh, N.identity());
  for (;;) {
    for (std::size_t i = 0; i < slots.size(); ++i)
      gamma[slots[i]] = candidates[pick[i]];
    if (is_extension_iso(gamma)) {
      bool inv = true;
      for (Elt h = 0; h < nh; ++h) inv = inv && is_unit[gamma[h]];
      return GammaWitness{gamma, inv};
    }
    std::size_t i = slots.size();
    for (;;) {
      if (i == 0) return std::nullopt;
      --i;
      if (++pick[i] < candidates.size()) break;
      pick[i] = 0;
    }
    // Positions after i reset to 0; loop continues.
  }
}

}  // namespace monext
