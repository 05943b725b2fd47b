#include "monext/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace monext {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::BadIdentity: return "BadIdentity";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotAHom: return "NotAHom";
    case ErrorCode::NotAnExtension: return "NotAnExtension";
    case ErrorCode::NotASubmonoid: return "NotASubmonoid";
    case ErrorCode::NotASemilattice: return "NotASemilattice";
    case ErrorCode::NotMeetPreserving: return "NotMeetPreserving";
    case ErrorCode::ActionInvalid: return "ActionInvalid";
    case ErrorCode::FactorSystemInvalid: return "FactorSystemInvalid";
    case ErrorCode::InvalidRelaxedAction: return "InvalidRelaxedAction";
    case ErrorCode::InvalidWSFactorSystem: return "InvalidWSFactorSystem";
    case ErrorCode::NotSchreier: return "NotSchreier";
    case ErrorCode::NotSchreierSplit: return "NotSchreierSplit";
    case ErrorCode::NotWeaklySchreier: return "NotWeaklySchreier";
    case ErrorCode::NotWeaklySchreierSplit: return "NotWeaklySchreierSplit";
    case ErrorCode::NotSpecial: return "NotSpecial";
    case ErrorCode::BadGeneratorChoice: return "BadGeneratorChoice";
    case ErrorCode::KernelNotAbelianGroup: return "KernelNotAbelianGroup";
    case ErrorCode::ActionsDiffer: return "ActionsDiffer";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Error";
}

FiniteMonoid::FiniteMonoid(int size, Elt identity, std::vector<Elt> table,
                           std::vector<std::string> names)
    : size_(size), identity_(identity), table_(std::move(table)),
      names_(std::move(names)) {
  if (size_ <= 0) throw Error(ErrorCode::OutOfRange, "size must be positive");
  if (static_cast<int>(table_.size()) != size_ * size_)
    throw Error(ErrorCode::OutOfRange, "table is not size x size");
  if (!names_.empty() && static_cast<int>(names_.size()) != size_)
    throw Error(ErrorCode::OutOfRange, "names length differs from size");
  for (Elt a = 0; a < size_; ++a)
    for (Elt b = 0; b < size_; ++b) {
      Elt p = table_[a * size_ + b];
      if (p < 0 || p >= size_) {
        std::ostringstream os;
        os << "entry (" << a << "," << b << ") = " << p;
        throw Error(ErrorCode::OutOfRange, os.str());
      }
    }
  if (identity_ < 0 || identity_ >= size_)
    throw Error(ErrorCode::BadIdentity, "identity index out of range");
  for (Elt x = 0; x < size_; ++x)
    if (mul(identity_, x) != x || mul(x, identity_) != x) {
      std::ostringstream os;
      os << "element " << x << " breaks the identity law";
      throw Error(ErrorCode::BadIdentity, os.str());
    }
  for (Elt a = 0; a < size_; ++a)
    for (Elt b = 0; b < size_; ++b)
      for (Elt c = 0; c < size_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          std::ostringstream os;
          os << "(" << a << "," << b << "," << c << ")";
          throw Error(ErrorCode::NotAssociative, os.str());
        }
}

std::string FiniteMonoid::name_of(Elt x) const {
  if (!names_.empty()) return names_[x];
  return std::to_string(x);
}

FiniteMonoid validate_monoid(int size, Elt identity, std::vector<Elt> table,
                             std::vector<std::string> names) {
  return FiniteMonoid(size, identity, std::move(table), std::move(names));
}

bool is_commutative(const FiniteMonoid& m) {
  for (Elt a = 0; a < m.size(); ++a)
    for (Elt b = a + 1; b < m.size(); ++b)
      if (m.mul(a, b) != m.mul(b, a)) return false;
  return true;
}

std::vector<Elt> units(const FiniteMonoid& m) {
  std::vector<Elt> out;
  for (Elt x = 0; x < m.size(); ++x)
    for (Elt y = 0; y < m.size(); ++y)
      if (m.mul(x, y) == m.identity() && m.mul(y, x) == m.identity()) {
        out.push_back(x);
        break;
      }
  return out;
}

bool is_group(const FiniteMonoid& m) {
  return static_cast<int>(units(m).size()) == m.size();
}

CheckResult check_hom(const MonoidHom& f) {
  const auto& a = f.domain;
  const auto& b = f.codomain;
  if (static_cast<int>(f.map.size()) != a.size())
    return CheckResult::fail("map length differs from domain size");
  for (Elt x : f.map)
    if (x < 0 || x >= b.size())
      return CheckResult::fail("map value out of codomain range");
  if (f.map[a.identity()] != b.identity())
    return CheckResult::fail("identity not preserved");
  for (Elt x = 0; x < a.size(); ++x)
    for (Elt y = 0; y < a.size(); ++y)
      if (f.map[a.mul(x, y)] != b.mul(f.map[x], f.map[y])) {
        std::ostringstream os;
        os << "product (" << x << "," << y << ") not preserved";
        return CheckResult::fail(os.str());
      }
  return CheckResult::pass();
}

MonoidHom compose(const MonoidHom& g, const MonoidHom& f) {
  std::vector<Elt> map(f.map.size());
  for (std::size_t i = 0; i < f.map.size(); ++i) map[i] = g.map[f.map[i]];
  return MonoidHom{f.domain, g.codomain, std::move(map)};
}

MonoidHom identity_hom(const FiniteMonoid& m) {
  std::vector<Elt> map(m.size());
  std::iota(map.begin(), map.end(), 0);
  return MonoidHom{m, m, std::move(map)};
}

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  // Returns true if a merge happened.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

// Renumber union-find roots to dense class ids in first-appearance order.
std::pair<std::vector<int>, int> dense_classes(UnionFind& uf, int n) {
  std::vector<int> id(n, -1);
  std::vector<int> out(n);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    int r = uf.find(x);
    if (id[r] < 0) id[r] = next++;
    out[x] = id[r];
  }
  return {out, next};
}

}  // namespace

Congruence congruence_generated(const FiniteMonoid& m,
                                const std::vector<std::pair<Elt, Elt>>& pairs) {
  const int n = m.size();
  for (auto [a, b] : pairs)
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw Error(ErrorCode::OutOfRange, "generating pair out of range");

  UnionFind uf(n);
  std::vector<std::pair<Elt, Elt>> work(pairs);
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    if (!uf.unite(a, b)) continue;
    for (Elt x = 0; x < n; ++x) {
      work.emplace_back(m.mul(x, a), m.mul(x, b));
      work.emplace_back(m.mul(a, x), m.mul(b, x));
    }
  }
  auto [class_of, count] = dense_classes(uf, n);
  return Congruence{m, std::move(class_of), count};
}

CheckResult check_congruence(const Congruence& c) {
  const auto& m = c.monoid;
  const int n = m.size();
  if (static_cast<int>(c.class_of.size()) != n)
    return CheckResult::fail("class_of length differs from size");
  std::vector<bool> seen(c.class_count, false);
  for (int v : c.class_of) {
    if (v < 0 || v >= c.class_count)
      return CheckResult::fail("class index out of range");
    seen[v] = true;
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    return CheckResult::fail("class_of is not surjective onto class ids");
  for (Elt a = 0; a < n; ++a)
    for (Elt a2 = 0; a2 < n; ++a2) {
      if (c.class_of[a] != c.class_of[a2]) continue;
      for (Elt b = 0; b < n; ++b)
        for (Elt b2 = 0; b2 < n; ++b2) {
          if (c.class_of[b] != c.class_of[b2]) continue;
          if (c.class_of[m.mul(a, b)] != c.class_of[m.mul(a2, b2)]) {
            std::ostringstream os;
            os << "products of (" << a << "," << b << ") and (" << a2 << ","
               << b2 << ") land in different classes";
            return CheckResult::fail(os.str());
          }
        }
    }
  return CheckResult::pass();
}

std::pair<FiniteMonoid, MonoidHom> quotient(const FiniteMonoid& m,
                                            const Congruence& c) {
  if (auto r = check_congruence(c); !r)
    throw Error(ErrorCode::InvariantViolation, "not a congruence: " + r.detail);
  const int q = c.class_count;
  // Representative per class: smallest member.
  std::vector<Elt> rep(q, -1);
  for (Elt x = 0; x < m.size(); ++x)
    if (rep[c.class_of[x]] < 0) rep[c.class_of[x]] = x;
  std::vector<Elt> table(q * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[i * q + j] = c.class_of[m.mul(rep[i], rep[j])];
  std::vector<std::string> names(q);
  for (int i = 0; i < q; ++i) names[i] = "[" + m.name_of(rep[i]) + "]";
  FiniteMonoid qm = validate_monoid(q, c.class_of[m.identity()],
                                    std::move(table), std::move(names));
  MonoidHom proj{m, qm, std::vector<Elt>(c.class_of.begin(), c.class_of.end())};
  return {std::move(qm), std::move(proj)};
}

FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b) {
  const int na = a.size(), nb = b.size(), n = na * nb;
  auto idx = [nb](Elt x, Elt y) { return x * nb + y; };
  std::vector<Elt> table(n * n);
  for (Elt x1 = 0; x1 < na; ++x1)
    for (Elt y1 = 0; y1 < nb; ++y1)
      for (Elt x2 = 0; x2 < na; ++x2)
        for (Elt y2 = 0; y2 < nb; ++y2)
          table[idx(x1, y1) * n + idx(x2, y2)] =
              idx(a.mul(x1, x2), b.mul(y1, y2));
  std::vector<std::string> names(n);
  for (Elt x = 0; x < na; ++x)
    for (Elt y = 0; y < nb; ++y)
      names[idx(x, y)] = "(" + a.name_of(x) + "," + b.name_of(y) + ")";
  return validate_monoid(n, idx(a.identity(), b.identity()), std::move(table),
                         std::move(names));
}

namespace {

// (index, period) of the eventually-cyclic power sequence of x, plus
// idempotency and unit-ness. Isomorphisms preserve all of these.
struct EltProfile {
  int index;
  int period;
  bool idempotent;
  bool unit;

  bool operator==(const EltProfile&) const = default;
};

std::vector<EltProfile> element_profiles(const FiniteMonoid& m) {
  std::vector<EltProfile> out(m.size());
  std::vector<Elt> inverse_of(m.size(), -1);
  for (Elt u : units(m)) inverse_of[u] = 0;
  for (Elt x = 0; x < m.size(); ++x) {
    std::vector<int> pos(m.size(), -1);
    Elt cur = m.identity();
    int step = 0;
    pos[cur] = 0;
    int index = 0, period = 0;
    for (;;) {
      cur = m.mul(cur, x);
      ++step;
      if (pos[cur] >= 0) {
        index = pos[cur];
        period = step - pos[cur];
        break;
      }
      pos[cur] = step;
    }
    out[x] = EltProfile{index, period, m.mul(x, x) == x, inverse_of[x] >= 0};
  }
  return out;
}

struct IsoSearch {
  const FiniteMonoid& a;
  const FiniteMonoid& b;
  std::vector<EltProfile> pa, pb;
  std::vector<Elt> map;
  std::vector<bool> used;

  IsoSearch(const FiniteMonoid& a_, const FiniteMonoid& b_)
      : a(a_), b(b_), pa(element_profiles(a_)), pb(element_profiles(b_)),
        map(a_.size(), -1), used(b_.size(), false) {}

  bool consistent(Elt just_set) const {
    for (Elt x = 0; x < a.size(); ++x) {
      if (map[x] < 0) continue;
      for (Elt y = 0; y < a.size(); ++y) {
        if (map[y] < 0) continue;
        if (x != just_set && y != just_set && a.mul(x, y) != just_set)
          continue;
        Elt p = a.mul(x, y);
        if (map[p] >= 0 && b.mul(map[x], map[y]) != map[p]) return false;
      }
    }
    return true;
  }

  bool run(Elt next) {
    while (next < a.size() && map[next] >= 0) ++next;
    if (next == a.size()) return true;
    for (Elt cand = 0; cand < b.size(); ++cand) {
      if (used[cand] || !(pa[next] == pb[cand])) continue;
      map[next] = cand;
      used[cand] = true;
      if (consistent(next) && run(next + 1)) return true;
      map[next] = -1;
      used[cand] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<MonoidHom> find_isomorphism(const FiniteMonoid& a,
                                          const FiniteMonoid& b) {
  if (a.size() != b.size()) return std::nullopt;
  IsoSearch search(a, b);
  // Cheap global pruning: the profile multisets must agree.
  auto sa = search.pa;
  auto sb = search.pb;
  auto key = [](const EltProfile& p) {
    return std::tuple(p.index, p.period, p.idempotent, p.unit);
  };
  std::sort(sa.begin(), sa.end(),
            [&](auto& x, auto& y) { return key(x) < key(y); });
  std::sort(sb.begin(), sb.end(),
            [&](auto& x, auto& y) { return key(x) < key(y); });
  if (sa != sb) return std::nullopt;

  search.map[a.identity()] = b.identity();
  search.used[b.identity()] = true;
  if (!search.run(0)) return std::nullopt;
  return MonoidHom{a, b, search.map};
}

namespace monoids {

FiniteMonoid trivial() { return validate_monoid(1, 0, {0}, {"1"}); }

FiniteMonoid cyclic(int n) {
  std::vector<Elt> table(n * n);
  std::vector<std::string> names(n);
  for (Elt a = 0; a < n; ++a) {
    names[a] = std::to_string(a);
    for (Elt b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
  }
  return validate_monoid(n, 0, std::move(table), std::move(names));
}

FiniteMonoid chain(int n) {
  std::vector<Elt> table(n * n);
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b) table[a * n + b] = std::max(a, b);
  std::vector<std::string> names(n);
  for (Elt a = 0; a < n; ++a) names[a] = "c" + std::to_string(a);
  if (n >= 1) names[0] = "top";
  if (n >= 2) names[n - 1] = "bot";
  return validate_monoid(n, 0, std::move(table), std::move(names));
}

FiniteMonoid with_zero(const FiniteMonoid& m) {
  const int n = m.size() + 1;
  const Elt zero = m.size();
  std::vector<Elt> table(n * n, zero);
  for (Elt a = 0; a < m.size(); ++a)
    for (Elt b = 0; b < m.size(); ++b) table[a * n + b] = m.mul(a, b);
  std::vector<std::string> names(n);
  for (Elt a = 0; a < m.size(); ++a) names[a] = m.name_of(a);
  names[zero] = "inf";
  return validate_monoid(n, m.identity(), std::move(table), std::move(names));
}

FiniteMonoid cyclic_with_zero(int n) { return with_zero(cyclic(n)); }

}  // namespace monoids

}  // namespace monext
