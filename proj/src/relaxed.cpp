#include "monext/relaxed.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace monext {

Relaxation::Relaxation(FiniteMonoid h, FiniteMonoid n, std::vector<int> cls)
    : h_(std::move(h)), n_(std::move(n)), cls_(std::move(cls)) {
  const int nh = h_.size(), nn = n_.size();
  if (static_cast<int>(cls_.size()) != nh * nn)
    throw Error(ErrorCode::OutOfRange, "partition table is not |H| x |N|");
  counts_.assign(nh, 0);
  reps_.assign(nh, {});
  members_.assign(nh, {});
  for (Elt x = 0; x < nh; ++x) {
    std::vector<int> renumber(nn, -1);
    int next = 0;
    for (Elt m = 0; m < nn; ++m) {
      int raw = cls_[x * nn + m];
      if (raw < 0 || raw >= nn)
        throw Error(ErrorCode::OutOfRange, "class id out of range");
      if (renumber[raw] < 0) {
        renumber[raw] = next++;
        reps_[x].push_back(m);
        members_[x].emplace_back();
      }
      cls_[x * nn + m] = renumber[raw];
      members_[x][renumber[raw]].push_back(m);
    }
    counts_[x] = next;
  }
}

Relaxation Relaxation::equality(const FiniteMonoid& h, const FiniteMonoid& n) {
  std::vector<int> cls(h.size() * n.size());
  for (Elt x = 0; x < h.size(); ++x)
    for (Elt m = 0; m < n.size(); ++m) cls[x * n.size() + m] = m;
  return Relaxation(h, n, std::move(cls));
}

namespace {

std::string tuple_str(std::initializer_list<int> xs) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (int x : xs) {
    if (!first) os << ",";
    os << x;
    first = false;
  }
  os << ")";
  return os.str();
}

}  // namespace

CheckResult check_relaxation(const Relaxation& e) {
  const auto& H = e.H();
  const auto& N = e.N();
  // 1. equality at the identity of H.
  if (e.class_count(H.identity()) != N.size())
    return CheckResult::fail("condition 1: ~1 is not equality");
  // 2. left congruence.
  for (Elt h = 0; h < H.size(); ++h)
    for (Elt n1 = 0; n1 < N.size(); ++n1)
      for (Elt n2 = n1 + 1; n2 < N.size(); ++n2) {
        if (!e.related(h, n1, n2)) continue;
        for (Elt x = 0; x < N.size(); ++x)
          if (!e.related(h, N.mul(x, n1), N.mul(x, n2)))
            return CheckResult::fail("condition 2 fails at " +
                                     tuple_str({h, n1, n2, x}));
      }
  // 3. monotone in divisibility: ~h1 contained in ~(h1 h2).
  for (Elt h1 = 0; h1 < H.size(); ++h1)
    for (Elt h2 = 0; h2 < H.size(); ++h2)
      for (Elt n1 = 0; n1 < N.size(); ++n1)
        for (Elt n2 = n1 + 1; n2 < N.size(); ++n2)
          if (e.related(h1, n1, n2) && !e.related(H.mul(h1, h2), n1, n2))
            return CheckResult::fail("condition 3 fails at " +
                                     tuple_str({h1, h2, n1, n2}));
  return CheckResult::pass();
}

CheckResult check_compatible_action(const Relaxation& e,
                                    const std::vector<Elt>& alpha) {
  const auto& H = e.H();
  const auto& N = e.N();
  const int nh = H.size(), nn = N.size();
  if (static_cast<int>(alpha.size()) != nh * nn)
    return CheckResult::fail("table is not |H| x |N|");
  for (Elt v : alpha)
    if (v < 0 || v >= nn) return CheckResult::fail("table value out of range");
  auto act = [&](Elt h, Elt n) { return alpha[h * nn + n]; };

  // 1. n1 ~h n2 implies n1 alpha(h,n) ~h n2 alpha(h,n).
  for (Elt h = 0; h < nh; ++h)
    for (Elt n1 = 0; n1 < nn; ++n1)
      for (Elt n2 = n1 + 1; n2 < nn; ++n2) {
        if (!e.related(h, n1, n2)) continue;
        for (Elt n = 0; n < nn; ++n)
          if (!e.related(h, N.mul(n1, act(h, n)), N.mul(n2, act(h, n))))
            return CheckResult::fail("condition 1 fails at " +
                                     tuple_str({h, n1, n2, n}));
      }
  // 2. n1 ~h2 n2 implies alpha(h1,n1) ~(h1 h2) alpha(h1,n2).
  for (Elt h2 = 0; h2 < nh; ++h2)
    for (Elt n1 = 0; n1 < nn; ++n1)
      for (Elt n2 = n1 + 1; n2 < nn; ++n2) {
        if (!e.related(h2, n1, n2)) continue;
        for (Elt h1 = 0; h1 < nh; ++h1)
          if (!e.related(H.mul(h1, h2), act(h1, n1), act(h1, n2)))
            return CheckResult::fail("condition 2 fails at " +
                                     tuple_str({h1, h2, n1, n2}));
      }
  // 3. alpha(h, n1 n2) ~h alpha(h,n1) alpha(h,n2).
  for (Elt h = 0; h < nh; ++h)
    for (Elt n1 = 0; n1 < nn; ++n1)
      for (Elt n2 = 0; n2 < nn; ++n2)
        if (!e.related(h, act(h, N.mul(n1, n2)),
                       N.mul(act(h, n1), act(h, n2))))
          return CheckResult::fail("condition 3 fails at " +
                                   tuple_str({h, n1, n2}));
  // 4. alpha(h1 h2, n) ~(h1 h2) alpha(h1, alpha(h2, n)).
  for (Elt h1 = 0; h1 < nh; ++h1)
    for (Elt h2 = 0; h2 < nh; ++h2)
      for (Elt n = 0; n < nn; ++n)
        if (!e.related(H.mul(h1, h2), act(H.mul(h1, h2), n),
                       act(h1, act(h2, n))))
          return CheckResult::fail("condition 4 fails at " +
                                   tuple_str({h1, h2, n}));
  // 5. alpha(h, 1) ~h 1.
  for (Elt h = 0; h < nh; ++h)
    if (!e.related(h, act(h, N.identity()), N.identity()))
      return CheckResult::fail("condition 5 fails at h = " +
                               std::to_string(h));
  // 6. alpha(1, n) ~1 n.
  for (Elt n = 0; n < nn; ++n)
    if (!e.related(H.identity(), act(H.identity(), n), n))
      return CheckResult::fail("condition 6 fails at n = " +
                               std::to_string(n));
  return CheckResult::pass();
}

bool relaxed_actions_equal(const RelaxedAction& a1, const RelaxedAction& a2) {
  if (!(a1.rel == a2.rel)) return false;
  const auto& e = a1.rel;
  for (Elt h = 0; h < e.H().size(); ++h)
    for (Elt n = 0; n < e.N().size(); ++n)
      if (!e.related(h, a1.act(h, n), a2.act(h, n))) return false;
  return true;
}

namespace {

// Dense numbering of the disjoint union of the N/~h slices.
struct FiberedCarrier {
  std::vector<int> offset;  // per h
  int total = 0;

  explicit FiberedCarrier(const Relaxation& e) {
    offset.resize(e.H().size());
    for (Elt h = 0; h < e.H().size(); ++h) {
      offset[h] = total;
      total += e.class_count(h);
    }
  }

  int elt(Elt h, int cls) const { return offset[h] + cls; }
};

}  // namespace

std::optional<ExtensionDiagram> try_build_fibered_extension(
    const Relaxation& e, const std::vector<Elt>& alpha,
    const std::vector<Elt>* chi, bool with_splitting) {
  const auto& H = e.H();
  const auto& N = e.N();
  const int nh = H.size(), nn = N.size();
  FiberedCarrier car(e);
  const int sz = car.total;
  auto act = [&](Elt h, Elt n) { return alpha[h * nn + n]; };

  // k must be injective: the identity slice has to be discrete.
  if (e.class_count(H.identity()) != nn) return std::nullopt;

  std::vector<Elt> table(sz * sz);
  std::vector<Elt> h_of(sz), rep_of(sz);
  for (Elt h = 0; h < nh; ++h)
    for (int c = 0; c < e.class_count(h); ++c) {
      h_of[car.elt(h, c)] = h;
      rep_of[car.elt(h, c)] = e.class_rep(h, c);
    }
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b) {
      Elt h1 = h_of[a], h2 = h_of[b];
      Elt n = N.mul(rep_of[a], act(h1, rep_of[b]));
      if (chi) n = N.mul(n, (*chi)[h1 * nh + h2]);
      Elt h12 = H.mul(h1, h2);
      table[a * sz + b] = car.elt(h12, e.class_id(h12, n));
    }

  const int id = car.elt(H.identity(), e.class_id(H.identity(), N.identity()));
  for (int x = 0; x < sz; ++x)
    if (table[id * sz + x] != x || table[x * sz + id] != x)
      return std::nullopt;
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b) {
      Elt ab = table[a * sz + b];
      for (int c = 0; c < sz; ++c)
        if (table[ab * sz + c] != table[a * sz + table[b * sz + c]])
          return std::nullopt;
    }
  if (with_splitting) {
    // s(h) = ([1],h) must be a homomorphism.
    auto s_of = [&](Elt h) { return car.elt(h, e.class_id(h, N.identity())); };
    for (Elt h1 = 0; h1 < nh; ++h1)
      for (Elt h2 = 0; h2 < nh; ++h2)
        if (table[s_of(h1) * sz + s_of(h2)] != s_of(H.mul(h1, h2)))
          return std::nullopt;
  }

  std::vector<std::string> names(sz);
  for (Elt h = 0; h < nh; ++h)
    for (int c = 0; c < e.class_count(h); ++c)
      names[car.elt(h, c)] =
          "[" + N.name_of(e.class_rep(h, c)) + "]," + H.name_of(h);
  FiniteMonoid g(sz, id, std::move(table), std::move(names));

  std::vector<Elt> kmap(nn), emap(sz);
  for (Elt n = 0; n < nn; ++n)
    kmap[n] = car.elt(H.identity(), e.class_id(H.identity(), n));
  for (int a = 0; a < sz; ++a) emap[a] = h_of[a];
  ExtensionDiagram d{N, g, H, MonoidHom{N, g, std::move(kmap)},
                     MonoidHom{g, H, std::move(emap)}, std::nullopt};
  if (with_splitting) {
    std::vector<Elt> smap(nh);
    for (Elt h = 0; h < nh; ++h)
      smap[h] = car.elt(h, e.class_id(h, N.identity()));
    d.s = MonoidHom{H, d.G, std::move(smap)};
  }
  return d;
}

ExtensionDiagram relaxed_semidirect(const Relaxation& e,
                                    const std::vector<Elt>& alpha) {
  if (auto r = check_relaxation(e); !r)
    throw Error(ErrorCode::InvalidRelaxedAction, r.detail);
  if (auto r = check_compatible_action(e, alpha); !r)
    throw Error(ErrorCode::InvalidRelaxedAction, r.detail);
  auto d = try_build_fibered_extension(e, alpha, nullptr, true);
  if (!d)
    throw Error(ErrorCode::InvariantViolation,
                "relaxed semidirect product failed the monoid axioms");
  if (auto r = check_extension(*d); !r)
    throw Error(ErrorCode::InvariantViolation,
                "relaxed semidirect product failed extension checks: " +
                    r.detail);
  return *d;
}

RelaxedAction extract_relaxed_action(const ExtensionDiagram& d) {
  auto cls = classify(d);
  if (!cls.is_weakly_schreier_split.value_or(false))
    throw Error(ErrorCode::NotWeaklySchreierSplit,
                "diagram is not a weakly Schreier split extension");
  const int nh = d.H.size(), nn = d.N.size();
  std::vector<int> part(nh * nn);
  for (Elt h = 0; h < nh; ++h) {
    Elt sh = d.s->map[h];
    for (Elt n = 0; n < nn; ++n)
      part[h * nn + n] = d.G.mul(d.k.map[n], sh);
  }
  // Raw ids are G-elements; renumbering happens in the constructor.
  Relaxation e(d.H, d.N, [&] {
    std::vector<int> ids(nh * nn);
    for (Elt h = 0; h < nh; ++h) {
      std::vector<int> renumber(d.G.size(), -1);
      int next = 0;
      for (Elt n = 0; n < nn; ++n) {
        int raw = part[h * nn + n];
        if (renumber[raw] < 0) renumber[raw] = next++;
        ids[h * nn + n] = renumber[raw];
      }
    }
    return ids;
  }());

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
  if (auto r = check_relaxation(e); !r)
    throw Error(ErrorCode::InvariantViolation,
                "extracted family is not a relaxation: " + r.detail);
  if (auto r = check_compatible_action(e, alpha); !r)
    throw Error(ErrorCode::InvariantViolation,
                "extracted table is not compatible: " + r.detail);
  return RelaxedAction{std::move(e), std::move(alpha)};
}

CheckResult check_ws_factor_system(const WSFactorSystem& fs) {
  const auto& e = fs.rel;
  const auto& H = e.H();
  const auto& N = e.N();
  const int nh = H.size(), nn = N.size();
  if (static_cast<int>(fs.alpha.size()) != nh * nn ||
      static_cast<int>(fs.chi.size()) != nh * nh)
    return CheckResult::fail("table shapes wrong");
  for (Elt v : fs.alpha)
    if (v < 0 || v >= nn) return CheckResult::fail("alpha value out of range");
  for (Elt v : fs.chi)
    if (v < 0 || v >= nn) return CheckResult::fail("chi value out of range");

  // 1. ~1 is equality.
  if (e.class_count(H.identity()) != nn)
    return CheckResult::fail("condition 1: ~1 is not equality");
  // 2. n1 ~h n2 implies x n1 ~h x n2.
  for (Elt h = 0; h < nh; ++h)
    for (Elt n1 = 0; n1 < nn; ++n1)
      for (Elt n2 = n1 + 1; n2 < nn; ++n2) {
        if (!e.related(h, n1, n2)) continue;
        for (Elt x = 0; x < nn; ++x)
          if (!e.related(h, N.mul(x, n1), N.mul(x, n2)))
            return CheckResult::fail("condition 2 fails at " +
                                     tuple_str({h, n1, n2, x}));
      }
  // 3. n1 ~h1 n2 implies n1 chi(h1,h2) ~(h1 h2) n2 chi(h1,h2).
  for (Elt h1 = 0; h1 < nh; ++h1)
    for (Elt n1 = 0; n1 < nn; ++n1)
      for (Elt n2 = n1 + 1; n2 < nn; ++n2) {
        if (!e.related(h1, n1, n2)) continue;
        for (Elt h2 = 0; h2 < nh; ++h2)
          if (!e.related(H.mul(h1, h2), N.mul(n1, fs.coc(h1, h2)),
                         N.mul(n2, fs.coc(h1, h2))))
            return CheckResult::fail("condition 3 fails at " +
                                     tuple_str({h1, h2, n1, n2}));
      }
  // 4. n1 ~h n2 implies n1 alpha(h,n) ~h n2 alpha(h,n).
  for (Elt h = 0; h < nh; ++h)
    for (Elt n1 = 0; n1 < nn; ++n1)
      for (Elt n2 = n1 + 1; n2 < nn; ++n2) {
        if (!e.related(h, n1, n2)) continue;
        for (Elt n = 0; n < nn; ++n)
          if (!e.related(h, N.mul(n1, fs.act(h, n)), N.mul(n2, fs.act(h, n))))
            return CheckResult::fail("condition 4 fails at " +
                                     tuple_str({h, n1, n2, n}));
      }
  // 5. n1 ~h2 n2 implies alpha(h1,n1) chi(h1,h2) ~(h1 h2)
  //    alpha(h1,n2) chi(h1,h2).
  for (Elt h2 = 0; h2 < nh; ++h2)
    for (Elt n1 = 0; n1 < nn; ++n1)
      for (Elt n2 = n1 + 1; n2 < nn; ++n2) {
        if (!e.related(h2, n1, n2)) continue;
        for (Elt h1 = 0; h1 < nh; ++h1)
          if (!e.related(H.mul(h1, h2),
                         N.mul(fs.act(h1, n1), fs.coc(h1, h2)),
                         N.mul(fs.act(h1, n2), fs.coc(h1, h2))))
            return CheckResult::fail("condition 5 fails at " +
                                     tuple_str({h1, h2, n1, n2}));
      }
  // 6. alpha(h, n1 n2) ~h alpha(h,n1) alpha(h,n2).
  for (Elt h = 0; h < nh; ++h)
    for (Elt n1 = 0; n1 < nn; ++n1)
      for (Elt n2 = 0; n2 < nn; ++n2)
        if (!e.related(h, fs.act(h, N.mul(n1, n2)),
                       N.mul(fs.act(h, n1), fs.act(h, n2))))
          return CheckResult::fail("condition 6 fails at " +
                                   tuple_str({h, n1, n2}));
  // 7. chi(h1,h2) alpha(h1 h2, n) ~(h1 h2) alpha(h1, alpha(h2,n)) chi(h1,h2).
  for (Elt h1 = 0; h1 < nh; ++h1)
    for (Elt h2 = 0; h2 < nh; ++h2)
      for (Elt n = 0; n < nn; ++n)
        if (!e.related(H.mul(h1, h2),
                       N.mul(fs.coc(h1, h2), fs.act(H.mul(h1, h2), n)),
                       N.mul(fs.act(h1, fs.act(h2, n)), fs.coc(h1, h2))))
          return CheckResult::fail("condition 7 fails at " +
                                   tuple_str({h1, h2, n}));
  // 8. alpha(h,1) ~h 1.
  for (Elt h = 0; h < nh; ++h)
    if (!e.related(h, fs.act(h, N.identity()), N.identity()))
      return CheckResult::fail("condition 8 fails at h = " +
                               std::to_string(h));
  // 9. alpha(1,n) ~1 n.
  for (Elt n = 0; n < nn; ++n)
    if (!e.related(H.identity(), fs.act(H.identity(), n), n))
      return CheckResult::fail("condition 9 fails at n = " +
                               std::to_string(n));
  // 10. chi(1,h) ~h 1 ~h chi(h,1).
  for (Elt h = 0; h < nh; ++h)
    if (!e.related(h, fs.coc(H.identity(), h), N.identity()) ||
        !e.related(h, fs.coc(h, H.identity()), N.identity()))
      return CheckResult::fail("condition 10 fails at h = " +
                               std::to_string(h));
  // 11. chi(x,y) chi(xy,z) ~(xyz) alpha(x, chi(y,z)) chi(x,yz).
  for (Elt x = 0; x < nh; ++x)
    for (Elt y = 0; y < nh; ++y)
      for (Elt z = 0; z < nh; ++z)
        if (!e.related(H.mul(H.mul(x, y), z),
                       N.mul(fs.coc(x, y), fs.coc(H.mul(x, y), z)),
                       N.mul(fs.act(x, fs.coc(y, z)), fs.coc(x, H.mul(y, z)))))
          return CheckResult::fail("condition 11 fails at " +
                                   tuple_str({x, y, z}));
  return CheckResult::pass();
}

ExtensionDiagram relaxed_crossed_product(const WSFactorSystem& fs) {
  if (auto r = check_ws_factor_system(fs); !r)
    throw Error(ErrorCode::InvalidWSFactorSystem, r.detail);
  auto d = try_build_fibered_extension(fs.rel, fs.alpha, &fs.chi, false);
  if (!d)
    throw Error(ErrorCode::InvariantViolation,
                "relaxed crossed product failed the monoid axioms");

  // Well-definedness: recompute every product from all representative pairs.
  const auto& e = fs.rel;
  const auto& H = e.H();
  const auto& N = e.N();
  for (Elt h1 = 0; h1 < H.size(); ++h1)
    for (int c1 = 0; c1 < e.class_count(h1); ++c1)
      for (Elt h2 = 0; h2 < H.size(); ++h2)
        for (int c2 = 0; c2 < e.class_count(h2); ++c2) {
          Elt h12 = H.mul(h1, h2);
          int expect = -1;
          for (Elt n1 : e.class_members(h1, c1))
            for (Elt n2 : e.class_members(h2, c2)) {
              Elt n = N.mul(N.mul(n1, fs.act(h1, n2)), fs.coc(h1, h2));
              int got = e.class_id(h12, n);
              if (expect < 0) expect = got;
              if (got != expect)
                throw Error(ErrorCode::InvariantViolation,
                            "product not representative-independent at " +
                                tuple_str({h1, c1, h2, c2}));
            }
        }
  if (auto r = check_extension(*d); !r)
    throw Error(ErrorCode::InvariantViolation,
                "relaxed crossed product failed extension checks: " +
                    r.detail);
  return *d;
}

namespace {

std::vector<Elt> resolve_weak_generators(
    const ExtensionDiagram& d, const ExtensionClass& cls,
    const std::optional<std::vector<Elt>>& choice) {
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
    std::vector<bool> hit(d.G.size(), false);
    for (Elt n = 0; n < d.N.size(); ++n) hit[d.G.mul(d.k.map[n], u)] = true;
    for (Elt g = 0; g < d.G.size(); ++g)
      if (d.e.map[g] == h && !hit[g])
        throw Error(ErrorCode::BadGeneratorChoice,
                    "u_" + std::to_string(h) + " is not a weak generator");
  }
  return gens;
}

}  // namespace

WSFactorSystem extract_ws_factor_system(
    const ExtensionDiagram& d,
    const std::optional<std::vector<Elt>>& generator_choice) {
  auto cls = classify(d);
  if (!cls.is_weakly_schreier)
    throw Error(ErrorCode::NotWeaklySchreier,
                "diagram is not a weakly Schreier extension");
  auto gens = resolve_weak_generators(d, cls, generator_choice);

  const int nh = d.H.size(), nn = d.N.size();
  std::vector<int> raw(nh * nn);
  for (Elt h = 0; h < nh; ++h) {
    std::vector<int> renumber(d.G.size(), -1);
    int next = 0;
    for (Elt n = 0; n < nn; ++n) {
      Elt prod = d.G.mul(d.k.map[n], gens[h]);
      if (renumber[prod] < 0) renumber[prod] = next++;
      raw[h * nn + n] = renumber[prod];
    }
  }
  Relaxation e(d.H, d.N, std::move(raw));

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
    for (Elt h2 = 0; h2 < nh; ++h2) {
      if (h1 == d.H.identity() || h2 == d.H.identity())
        chi[h1 * nh + h2] = d.N.identity();
      else
        chi[h1 * nh + h2] =
            solve(gens[d.H.mul(h1, h2)], d.G.mul(gens[h1], gens[h2]));
    }
  WSFactorSystem fs{std::move(e), std::move(alpha), std::move(chi)};
  if (auto r = check_ws_factor_system(fs); !r)
    throw Error(ErrorCode::InvariantViolation,
                "extracted data is not a factor system: " + r.detail);
  return fs;
}

std::optional<GammaWitness> ws_factor_systems_equivalent(
    const WSFactorSystem& fs1, const WSFactorSystem& fs2) {
  const auto& e1 = fs1.rel;
  const auto& e2 = fs2.rel;
  if (!(e1.H() == e2.H()) || !(e1.N() == e2.N())) return std::nullopt;
  const auto& H = e1.H();
  const auto& N = e1.N();
  const int nh = H.size(), nn = N.size();
  // A bijective f needs matching per-h class counts.
  for (Elt h = 0; h < nh; ++h)
    if (e1.class_count(h) != e2.class_count(h)) return std::nullopt;

  ExtensionDiagram cp1 = relaxed_crossed_product(fs1);
  ExtensionDiagram cp2 = relaxed_crossed_product(fs2);

  // Carrier element of the class of n over h, in either diagram. Class ids
  // are fiber-local, and fibers are numbered contiguously.
  std::vector<int> offset1(nh, 0), offset2(nh, 0);
  for (Elt h = 1; h < nh; ++h) {
    offset1[h] = offset1[h - 1] + e1.class_count(h - 1);
    offset2[h] = offset2[h - 1] + e2.class_count(h - 1);
  }

  auto qualifies = [&](const std::vector<Elt>& gamma) {
    // Relative invertibility on both sides.
    for (Elt h = 0; h < nh; ++h) {
      bool right = false, left = false;
      for (Elt l = 0; l < nn && !(right && left); ++l) {
        right = right ||
                e1.related(h, N.mul(gamma[h], l), N.identity());
        left = left || e2.related(h, N.mul(l, gamma[h]), N.identity());
      }
      if (!right || !left) return false;
    }
    // f must translate ~h in E1 into ~h in E2.
    for (Elt h = 0; h < nh; ++h)
      for (Elt n1 = 0; n1 < nn; ++n1)
        for (Elt n2 = n1 + 1; n2 < nn; ++n2)
          if (e1.related(h, n1, n2) &&
              !e2.related(h, N.mul(n1, gamma[h]), N.mul(n2, gamma[h])))
            return false;
    // Full extension isomorphism between the crossed products.
    std::vector<Elt> f(cp1.G.size());
    for (Elt h = 0; h < nh; ++h)
      for (int c = 0; c < e1.class_count(h); ++c) {
        Elt n = N.mul(e1.class_rep(h, c), gamma[h]);
        f[offset1[h] + c] = offset2[h] + e2.class_id(h, n);
      }
    std::vector<bool> hit(cp2.G.size(), false);
    for (Elt v : f) {
      if (hit[v]) return false;
      hit[v] = true;
    }
    for (Elt a = 0; a < cp1.G.size(); ++a)
      for (Elt b = 0; b < cp1.G.size(); ++b)
        if (f[cp1.G.mul(a, b)] != cp2.G.mul(f[a], f[b])) return false;
    for (Elt n = 0; n < nn; ++n)
      if (f[cp1.k.map[n]] != cp2.k.map[n]) return false;
    for (Elt a = 0; a < cp1.G.size(); ++a)
      if (cp2.e.map[f[a]] != cp1.e.map[a]) return false;
    return true;
  };

  std::vector<Elt> slots;
  for (Elt h = 0; h < nh; ++h)
    if (h != H.identity()) slots.push_back(h);
  std::vector<Elt> gamma(nh, N.identity());
  std::vector<Elt> pick(slots.size(), 0);
  for (;;) {
    for (std::size_t i = 0; i < slots.size(); ++i) gamma[slots[i]] = pick[i];
    if (qualifies(gamma)) return GammaWitness{gamma, true};
    std::size_t i = slots.size();
    for (;;) {
      if (i == 0) return std::nullopt;
      --i;
      if (++pick[i] < nn) break;
      pick[i] = 0;
    }
  }
}

}  // namespace monext
