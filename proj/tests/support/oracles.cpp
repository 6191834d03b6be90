#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oracle {

using namespace semico;

namespace {

// Odometer over `cells` digits in [0, base).
bool next(std::vector<Index>& digits, std::size_t base) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < base) return true;
    digits[i] = 0;
  }
  return false;
}

std::size_t power(std::size_t b, unsigned e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<Index> digits_of(std::size_t position, std::size_t base, unsigned n) {
  std::vector<Index> d(n);
  for (unsigned j = n; j-- > 0;) {
    d[j] = static_cast<Index>(position % base);
    position /= base;
  }
  return d;
}

std::size_t position_of(const std::vector<Index>& d, std::size_t base) {
  std::size_t p = 0;
  for (Index v : d) p = p * base + v;
  return p;
}

Index negate(const FiniteAbelianMonoid& a, Index x) {
  for (Index y = 0; y < a.size(); ++y)
    if (a.add(x, y) == 0) return y;
  throw std::logic_error("not a group element");
}

Full naive_terms(const MSemimodule& s, unsigned n, const Full& f, bool plus) {
  const auto& m = s.monoid();
  const auto& a = s.table();
  std::size_t ms = m.size();
  Full out(power(ms, n + 1), 0);
  for (std::size_t p = 0; p < out.size(); ++p) {
    auto x = digits_of(p, ms, n + 1);
    Index sum = 0;
    for (unsigned i = 0; i <= n + 1; ++i) {
      if (((i + n) % 2 == 1) != plus) continue;
      Index v;
      if (i == 0) {
        std::vector<Index> rest(x.begin() + 1, x.end());
        v = s.act(x[0], f[position_of(rest, ms)]);
      } else if (i == n + 1) {
        std::vector<Index> head(x.begin(), x.end() - 1);
        v = f[position_of(head, ms)];
      } else {
        std::vector<Index> merged;
        for (unsigned j = 0; j <= n; ++j) {
          if (j == i - 1) {
            merged.push_back(m.op(x[j], x[j + 1]));
            ++j;
          } else {
            merged.push_back(x[j]);
          }
        }
        v = f[position_of(merged, ms)];
      }
      sum = a.add(sum, v);
    }
    out[p] = sum;
  }
  return out;
}

}  // namespace

bool associative(const Rows& op) {
  std::size_t n = op.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (op[op[a][b]][c] != op[a][op[b][c]]) return false;
  return true;
}

std::vector<FiniteMonoid> all_monoids(std::size_t max_size) {
  std::vector<FiniteMonoid> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    std::vector<Index> cells((n - 1) * (n - 1), 0);
    do {
      Rows op(n, std::vector<Index>(n));
      for (Index i = 0; i < n; ++i) op[0][i] = op[i][0] = i;
      for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) op[i][j] = cells[(i - 1) * (n - 1) + (j - 1)];
      if (associative(op)) out.push_back(FiniteMonoid::from_rows(op));
    } while (!cells.empty() && next(cells, n));
  }
  return out;
}

std::vector<FiniteAbelianMonoid> all_abelian_monoids(std::size_t max_size) {
  std::vector<FiniteAbelianMonoid> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) free.emplace_back(i, j);
    std::vector<Index> cells(free.size(), 0);
    do {
      Rows op(n, std::vector<Index>(n));
      for (Index i = 0; i < n; ++i) op[0][i] = op[i][0] = i;
      for (std::size_t k = 0; k < free.size(); ++k)
        op[free[k].first][free[k].second] = op[free[k].second][free[k].first] = cells[k];
      if (associative(op)) out.push_back(FiniteAbelianMonoid::from_rows(op));
    } while (!cells.empty() && next(cells, n));
  }
  return out;
}

std::vector<Rows> all_actions(const FiniteMonoid& m, const FiniteAbelianMonoid& a) {
  std::size_t as = a.size();
  // Additive maps fixing 0.
  std::vector<std::vector<Index>> endos;
  std::vector<Index> tail(as - 1, 0);
  do {
    std::vector<Index> e{0};
    e.insert(e.end(), tail.begin(), tail.end());
    bool additive = true;
    for (Index x = 0; x < as && additive; ++x)
      for (Index y = 0; y < as && additive; ++y) additive = e[a.add(x, y)] == a.add(e[x], e[y]);
    if (additive) endos.push_back(e);
  } while (!tail.empty() && next(tail, as));

  std::vector<Rows> out;
  std::vector<Index> choice(m.size() - 1, 0);
  std::vector<Index> id(as);
  std::iota(id.begin(), id.end(), 0);
  do {
    Rows act{id};
    for (Index c : choice) act.push_back(endos[c]);
    bool ok = true;
    for (Index x = 0; x < m.size() && ok; ++x)
      for (Index y = 0; y < m.size() && ok; ++y)
        for (Index v = 0; v < as && ok; ++v) ok = act[m.op(x, y)][v] == act[x][act[y][v]];
    if (ok) out.push_back(act);
  } while (!choice.empty() && next(choice, endos.size()));
  return out;
}

std::vector<MSemimodule> all_semimodules(const FiniteMonoid& m, const FiniteAbelianMonoid& a) {
  std::vector<MSemimodule> out;
  for (auto& act : all_actions(m, a)) out.push_back(MSemimodule::finite(m, a, act));
  return out;
}

std::vector<std::vector<Index>> all_homs(const MSemimodule& s, const MSemimodule& t) {
  const auto& a = s.table();
  const auto& b = t.table();
  std::vector<std::vector<Index>> out;
  std::vector<Index> tail(a.size() - 1, 0);
  do {
    std::vector<Index> f{0};
    f.insert(f.end(), tail.begin(), tail.end());
    bool ok = true;
    for (Index x = 0; x < a.size() && ok; ++x)
      for (Index y = 0; y < a.size() && ok; ++y) ok = f[a.add(x, y)] == b.add(f[x], f[y]);
    for (Index x = 0; x < s.monoid().size() && ok; ++x)
      for (Index v = 0; v < a.size() && ok; ++v) ok = f[s.act(x, v)] == t.act(x, f[v]);
    if (ok) out.push_back(f);
  } while (!tail.empty() && next(tail, b.size()));
  return out;
}

bool is_monoid_hom(const std::vector<Index>& f, const FiniteMonoid& s, const FiniteMonoid& t) {
  if (f.size() != s.size() || f[0] != 0) return false;
  for (Index x = 0; x < s.size(); ++x)
    for (Index y = 0; y < s.size(); ++y)
      if (f[s.op(x, y)] != t.op(f[x], f[y])) return false;
  return true;
}

std::vector<std::vector<Index>> all_monoid_homs(const FiniteMonoid& s, const FiniteMonoid& t) {
  std::vector<std::vector<Index>> out;
  std::vector<Index> tail(s.size() - 1, 0);
  do {
    std::vector<Index> f{0};
    f.insert(f.end(), tail.begin(), tail.end());
    if (is_monoid_hom(f, s, t)) out.push_back(f);
  } while (!tail.empty() && next(tail, t.size()));
  return out;
}

bool has_identity(std::size_t position, std::size_t m, unsigned n) {
  for (Index d : digits_of(position, m, n))
    if (d == 0) return true;
  return false;
}

Full expand(const CochainComplex& c, const NormalizedCochain& f) {
  std::size_t ms = c.semimodule().monoid().size();
  Full out(power(ms, f.degree));
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = c.eval(f, digits_of(p, ms, f.degree));
  return out;
}

Full normalize(const MSemimodule& s, unsigned n, Full f) {
  for (std::size_t p = 0; p < f.size(); ++p)
    if (has_identity(p, s.monoid().size(), n)) f[p] = 0;
  return f;
}

Full naive_d_plus(const MSemimodule& s, unsigned n, const Full& f) { return naive_terms(s, n, f, true); }

Full naive_d_minus(const MSemimodule& s, unsigned n, const Full& f) { return naive_terms(s, n, f, false); }

OrderProfile profile_of(const AbGroupPresentation& g) {
  if (g.free_rank) throw std::logic_error("infinite group");
  OrderProfile out;
  std::vector<Index> e(g.factors.size(), 0);
  do {
    std::uint64_t order = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      std::uint64_t d = static_cast<std::uint64_t>(g.factors[i]);
      order = std::lcm(order, d / std::gcd<std::uint64_t>(d, e[i]));
    }
    ++out[order];
    std::size_t i = e.size();
    while (i-- > 0) {
      if (++e[i] < static_cast<Index>(g.factors[i])) break;
      e[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  } while (true);
  return out;
}

OrderProfile table_profile(const FiniteAbelianMonoid& g) {
  OrderProfile out;
  for (Index x = 0; x < g.size(); ++x) {
    std::uint64_t k = 1;
    for (Index y = x; y != 0; y = g.add(y, x)) ++k;
    ++out[k];
  }
  return out;
}

OrderProfile classical_profile(const MSemimodule& s, unsigned n) {
  const auto& a = s.table();
  std::size_t ms = s.monoid().size();
  std::size_t as = a.size();
  // Normalized cochains as full functions, enumerated through the values on
  // tuples without the identity.
  auto all = [&](unsigned k) {
    std::vector<std::size_t> cells;
    for (std::size_t p = 0; p < power(ms, k); ++p)
      if (!has_identity(p, ms, k)) cells.push_back(p);
    std::vector<Full> out;
    std::vector<Index> v(cells.size(), 0);
    do {
      Full f(power(ms, k), 0);
      for (std::size_t i = 0; i < cells.size(); ++i) f[cells[i]] = v[i];
      out.push_back(f);
    } while (!v.empty() && next(v, as));
    return out;
  };
  auto delta = [&](unsigned k, const Full& f) {
    Full p = naive_d_plus(s, k, f), q = naive_d_minus(s, k, f);
    Full out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = a.add(p[i], negate(a, q[i]));
    return out;
  };
  Full zero(power(ms, n + 1), 0);
  std::vector<Full> z;
  for (auto& f : all(n))
    if (delta(n, f) == zero) z.push_back(f);
  std::set<Full> b;
  if (n == 0) b.insert(Full(1, 0));
  else
    for (auto& g : all(n - 1)) b.insert(delta(n - 1, g));
  OrderProfile out;
  for (auto& f : z) {
    std::uint64_t k = 1;
    Full multiple = f;
    while (!b.count(multiple)) {
      for (std::size_t i = 0; i < multiple.size(); ++i) multiple[i] = a.add(multiple[i], f[i]);
      ++k;
    }
    ++out[k];
  }
  for (auto& [k, count] : out) count /= b.size();
  return out;
}

bool is_rep(const SchreierExtension& e, Index b) {
  std::set<Index> hit;
  for (Index a = 0; a < e.module.carrier_size(); ++a) {
    Index v = e.middle.op(e.kappa[a], b);
    if (e.sigma[v] != e.sigma[b]) return false;
    hit.insert(v);
  }
  std::size_t fibre = std::count(e.sigma.begin(), e.sigma.end(), e.sigma[b]);
  return hit.size() == e.module.carrier_size() && hit.size() == fibre;
}

std::optional<std::vector<Index>> congruence_search(const SchreierExtension& e, const SchreierExtension& f) {
  std::size_t bs = e.middle.size();
  if (bs != f.middle.size()) return std::nullopt;
  std::size_t ms = e.module.monoid().size();
  std::vector<std::vector<Index>> fibre(ms), target(ms);
  for (Index b = 0; b < bs; ++b) {
    fibre[e.sigma[b]].push_back(b);
    target[f.sigma[b]].push_back(b);
  }
  // Permutations of each target fibre, fixed to kappa' on the kernel.
  std::vector<std::vector<std::vector<Index>>> options(ms);
  for (Index x = 0; x < ms; ++x) {
    if (fibre[x].size() != target[x].size()) return std::nullopt;
    auto perm = target[x];
    std::sort(perm.begin(), perm.end());
    do options[x].push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::vector<Index> pick(ms, 0);
  while (true) {
    std::vector<Index> beta(bs);
    for (Index x = 0; x < ms; ++x)
      for (std::size_t i = 0; i < fibre[x].size(); ++i) beta[fibre[x][i]] = options[x][pick[x]][i];
    bool ok = true;
    for (Index a = 0; a < e.module.carrier_size() && ok; ++a) ok = beta[e.kappa[a]] == f.kappa[a];
    for (Index u = 0; u < bs && ok; ++u)
      for (Index v = 0; v < bs && ok; ++v) ok = beta[e.middle.op(u, v)] == f.middle.op(beta[u], beta[v]);
    for (Index x = 0; x < ms && ok; ++x) {
      bool found = false;
      for (Index b : fibre[x]) found = found || (is_rep(e, b) && is_rep(f, beta[b]));
      ok = found;
    }
    if (ok) return beta;
    std::size_t i = ms;
    while (i-- > 0) {
      if (++pick[i] < options[i].size()) break;
      pick[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) return std::nullopt;
  }
}

Rows middle_of(const MSemimodule& s, const CochainComplex& c, const NormalizedCochain& f) {
  std::size_t as = s.carrier_size(), ms = s.monoid().size();
  const auto& a = s.table();
  Rows out(as * ms, std::vector<Index>(as * ms));
  for (Index x = 0; x < ms; ++x)
    for (Index a1 = 0; a1 < as; ++a1)
      for (Index y = 0; y < ms; ++y)
        for (Index a2 = 0; a2 < as; ++a2) {
          Index v = a.add(a.add(a1, s.act(x, a2)), c.eval(f, {x, y}));
          out[x * as + a1][y * as + a2] = static_cast<Index>(s.monoid().op(x, y) * as + v);
        }
  return out;
}

Integer bareiss_det(std::vector<std::vector<Integer>> a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<Integer> invariant_factors_by_minors(const IntMatrix& m) {
  std::size_t r = m.rows(), c = m.cols();
  std::vector<Integer> gcds{1};
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    Integer g = 0;
    std::vector<bool> rs(r, false), cs(c, false);
    std::fill(rs.begin(), rs.begin() + k, true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + k, true);
      do {
        std::vector<std::vector<Integer>> sub;
        for (std::size_t i = 0; i < r; ++i) {
          if (!rs[i]) continue;
          sub.emplace_back();
          for (std::size_t j = 0; j < c; ++j)
            if (cs[j]) sub.back().push_back(m(i, j));
        }
        Integer d = bareiss_det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
    if (g == 0) break;
    gcds.push_back(g);
  }
  std::vector<Integer> out;
  for (std::size_t k = 1; k < gcds.size(); ++k) out.push_back(gcds[k] / gcds[k - 1]);
  return out;
}

NormalizedCochain shift_by_units(const CochainComplex& c, const NormalizedCochain& f, const std::vector<Index>& g) {
  const auto& s = c.semimodule();
  const auto& a = s.table();
  NormalizedCochain out = f;
  for (std::size_t p = 0; p < f.values.size(); ++p) {
    auto xy = c.arguments(2, p);
    Index x = xy[0], y = xy[1];
    Index v = a.add(f.values[p], negate(a, s.act(x, g[y])));
    v = a.add(v, g[s.monoid().op(x, y)]);
    out.values[p] = a.add(v, negate(a, g[x]));
  }
  return out;
}

NormalizedCochain apply_pointwise(const NormalizedCochain& f, const std::vector<Index>& alpha) {
  NormalizedCochain out = f;
  for (auto& v : out.values) v = alpha[v];
  return out;
}

MSemimodule c2_z2() { return MSemimodule::trivial(FiniteMonoid::cyclic_group(2), FiniteAbelianMonoid::cyclic_group(2)); }

MSemimodule c2_boolean() { return MSemimodule::trivial(FiniteMonoid::cyclic_group(2), FiniteAbelianMonoid::boolean()); }

MSemimodule o2_boolean() {
  return MSemimodule::trivial(FiniteMonoid::idempotent_pair(), FiniteAbelianMonoid::boolean());
}

MSemimodule c2_z3_negation() {
  return MSemimodule::finite(FiniteMonoid::cyclic_group(2), FiniteAbelianMonoid::cyclic_group(3),
                             {{0, 1, 2}, {0, 2, 1}});
}

MSemimodule c3_z3() { return MSemimodule::trivial(FiniteMonoid::cyclic_group(3), FiniteAbelianMonoid::cyclic_group(3)); }

std::vector<Named> classification_suite() {
  return {{"C2,Z/2", c2_z2()},
          {"C2,B", c2_boolean()},
          {"O2,B", o2_boolean()},
          {"C2,Z/3 negation", c2_z3_negation()},
          {"C3,Z/3", c3_z3()}};
}

}  // namespace oracle
