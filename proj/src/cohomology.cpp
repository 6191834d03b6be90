#include "semico/cohomology.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "semico/parallel.hpp"

namespace semico {

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

struct VectorHash {
  std::size_t operator()(const std::vector<Index>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Index x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Index{0}); }
  Index find(Index a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  void unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  std::vector<Index> labels() {
    std::vector<Index> out(parent_.size());
    for (Index i = 0; i < out.size(); ++i) out[i] = find(i);
    return out;
  }

 private:
  std::vector<Index> parent_;
};

std::vector<Index> pointwise_sum(const FiniteAbelianMonoid& a, const std::vector<Index>& f, const std::vector<Index>& g) {
  std::vector<Index> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = a.add(f[i], g[i]);
  return out;
}

std::string show_values(const std::vector<Index>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

// Position of `values` in the lexicographically sorted cocycle list, or -1.
std::int64_t locate(const std::vector<NormalizedCochain>& sorted, const std::vector<Index>& values) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), values,
                             [](const NormalizedCochain& c, const std::vector<Index>& v) { return c.values < v; });
  if (it == sorted.end() || it->values != values) return -1;
  return it - sorted.begin();
}

// Builds the class monoid from a partition of the sorted cocycles, after
// checking that sums of cocycles are cocycles and that the partition is
// compatible with addition by each additive generator of Z^n.
CohomologyMonoid finalize(const FiniteAbelianMonoid& a, unsigned n, std::vector<NormalizedCochain> cocycles,
                          const std::vector<Index>& labels, const char* relation) {
  CohomologyMonoid out;
  out.degree = n;
  Congruence cg = Congruence::from_labels(labels);
  const std::size_t z = cocycles.size();

  auto sum_index = [&](std::size_t i, std::size_t j) -> Index {
    auto s = pointwise_sum(a, cocycles[i].values, cocycles[j].values);
    std::int64_t k = locate(cocycles, s);
    if (k < 0)
      throw TheoremMismatch("sum of cocycles " + show_values(cocycles[i].values) + " and " +
                            show_values(cocycles[j].values) + " is not a cocycle");
    return static_cast<Index>(k);
  };

  // Greedy additive generators of Z^n.
  std::vector<bool> reached(z, false);
  std::vector<Index> gens;
  if (z) reached[0] = true;
  for (Index g = 0; g < z; ++g) {
    if (reached[g]) continue;
    gens.push_back(g);
    std::vector<Index> frontier;
    for (Index x = 0; x < z; ++x)
      if (reached[x]) frontier.push_back(x);
    while (!frontier.empty()) {
      Index x = frontier.back();
      frontier.pop_back();
      for (Index h : gens) {
        Index y = sum_index(x, h);
        if (!reached[y]) {
          reached[y] = true;
          frontier.push_back(y);
        }
      }
    }
  }

  const auto blocks = cg.blocks();
  for (const auto& block : blocks)
    for (Index h : gens) {
      Index expected = cg.block_of(sum_index(block[0], h));
      for (std::size_t i = 1; i < block.size(); ++i)
        if (cg.block_of(sum_index(block[i], h)) != expected)
          throw TheoremMismatch(std::string(relation) + " is not compatible with addition: " +
                                show_values(cocycles[block[0]].values) + " ~ " +
                                show_values(cocycles[block[i]].values) + " separated by adding " +
                                show_values(cocycles[h].values));
    }

  const std::size_t k = blocks.size();
  std::vector<Index> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = cg.block_of(sum_index(blocks[i][0], blocks[j][0]));
  out.monoid = FiniteAbelianMonoid(k, std::move(table));
  for (const auto& block : blocks) out.representatives.push_back(cocycles[block[0]]);
  out.class_of_cocycle = cg.labels();
  out.cocycles = std::move(cocycles);
  return out;
}

std::vector<Index> discrete_labels(std::size_t n) {
  std::vector<Index> l(n);
  std::iota(l.begin(), l.end(), Index{0});
  return l;
}

}  // namespace

// ---------------------------------------------------------------------------
// CochainComplex

CochainComplex::CochainComplex(MSemimodule s) : s_(std::move(s)), cache_(std::make_shared<Cache>()) {
  if (!s_.is_finite()) throw Unsupported("cochain enumeration needs a finite carrier, got " + s_.carrier().describe());
}

std::size_t CochainComplex::width(unsigned n) const {
  std::size_t w = 1;
  for (unsigned i = 0; i < n; ++i) w *= s_.monoid().size() - 1;
  return w;
}

std::uint64_t CochainComplex::cochain_count(unsigned n) const { return saturating_pow(s_.carrier_size(), width(n)); }

NormalizedCochain CochainComplex::zero(unsigned n) const { return {n, std::vector<Index>(width(n), 0)}; }

std::vector<Index> CochainComplex::arguments(unsigned n, std::size_t position) const {
  const std::size_t w = s_.monoid().size() - 1;
  std::vector<Index> args(n);
  for (unsigned j = n; j-- > 0;) {
    args[j] = static_cast<Index>(position % w + 1);
    position /= w;
  }
  return args;
}

Index CochainComplex::eval(const NormalizedCochain& f, const std::vector<Index>& args) const {
  if (args.size() != f.degree) throw std::invalid_argument("eval: argument count differs from cochain degree");
  const std::size_t w = s_.monoid().size() - 1;
  std::size_t pos = 0;
  for (Index x : args) {
    if (x == 0) return 0;
    pos = pos * w + (x - 1);
  }
  return f.values.at(pos);
}

const CochainComplex::Differential& CochainComplex::differential(unsigned n) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (cache_->levels.size() <= n) cache_->levels.resize(n + 1);
  if (cache_->levels[n]) return *cache_->levels[n];

  const auto& m = s_.monoid();
  const std::size_t w = m.size() - 1;
  auto position = [&](const std::vector<Index>& args) -> std::int64_t {
    std::int64_t pos = 0;
    for (Index x : args) {
      if (x == 0) return -1;
      pos = pos * static_cast<std::int64_t>(w) + (x - 1);
    }
    return pos;
  };
  auto merged = [&](const std::vector<Index>& x, unsigned j) {  // merges x_j x_{j+1}, 1-based
    std::vector<Index> y;
    for (unsigned i = 1; i <= x.size(); ++i) {
      if (i == j) {
        y.push_back(m.op(x[i - 1], x[i]));
        ++i;
      } else {
        y.push_back(x[i - 1]);
      }
    }
    return y;
  };
  auto drop_first = [](const std::vector<Index>& x) { return std::vector<Index>(x.begin() + 1, x.end()); };
  auto drop_last = [](const std::vector<Index>& x) { return std::vector<Index>(x.begin(), x.end() - 1); };

  auto d = std::make_unique<Differential>();
  d->degree = n;
  const std::size_t out_width = width(n + 1);
  d->plus.resize(out_width);
  d->minus.resize(out_width);
  for (std::size_t p = 0; p < out_width; ++p) {
    const auto x = arguments(n + 1, p);
    auto& plus = d->plus[p];
    auto& minus = d->minus[p];
    if (n % 2 == 0) {
      const unsigned k = n / 2;
      for (unsigned i = 1; i <= k; ++i) plus.push_back({0, position(merged(x, 2 * i - 1))});
      plus.push_back({0, position(drop_last(x))});
      minus.push_back({x[0], position(drop_first(x))});
      for (unsigned i = 1; i <= k; ++i) minus.push_back({0, position(merged(x, 2 * i))});
    } else {
      const unsigned k = (n + 1) / 2;
      plus.push_back({x[0], position(drop_first(x))});
      for (unsigned i = 1; i + 1 <= k; ++i) plus.push_back({0, position(merged(x, 2 * i))});
      plus.push_back({0, position(drop_last(x))});
      for (unsigned i = 1; i <= k; ++i) minus.push_back({0, position(merged(x, 2 * i - 1))});
    }
  }
  cache_->levels[n] = std::move(d);
  return *cache_->levels[n];
}

void CochainComplex::apply(const std::vector<std::vector<Term>>& terms, const std::vector<Index>& in,
                           std::vector<Index>& out) const {
  const auto& a = s_.table();
  out.assign(terms.size(), 0);
  for (std::size_t p = 0; p < terms.size(); ++p) {
    Index acc = 0;
    for (const Term& t : terms[p]) {
      if (t.source < 0) continue;
      Index v = in[static_cast<std::size_t>(t.source)];
      acc = a.add(acc, t.multiplier ? s_.act(t.multiplier, v) : v);
    }
    out[p] = acc;
  }
}

NormalizedCochain CochainComplex::d_plus(const NormalizedCochain& f) const {
  NormalizedCochain out{f.degree + 1, {}};
  apply(differential(f.degree).plus, f.values, out.values);
  return out;
}

NormalizedCochain CochainComplex::d_minus(const NormalizedCochain& f) const {
  NormalizedCochain out{f.degree + 1, {}};
  apply(differential(f.degree).minus, f.values, out.values);
  return out;
}

NormalizedCochain CochainComplex::add(const NormalizedCochain& f, const NormalizedCochain& g) const {
  if (f.degree != g.degree) throw std::invalid_argument("add: cochains of different degree");
  return {f.degree, pointwise_sum(s_.table(), f.values, g.values)};
}

bool CochainComplex::is_cocycle(const NormalizedCochain& f) const { return is_cocycle(f, differential(f.degree)); }

bool CochainComplex::is_cocycle(const NormalizedCochain& f, const Differential& d) const {
  const auto& a = s_.table();
  auto sum = [&](const std::vector<Term>& terms) {
    Index acc = 0;
    for (const Term& t : terms) {
      if (t.source < 0) continue;
      Index v = f.values[static_cast<std::size_t>(t.source)];
      acc = a.add(acc, t.multiplier ? s_.act(t.multiplier, v) : v);
    }
    return acc;
  };
  for (std::size_t p = 0; p < d.plus.size(); ++p)
    if (sum(d.plus[p]) != sum(d.minus[p])) return false;
  return true;
}

NormalizedCochain CochainComplex::cochain_at(unsigned n, std::uint64_t rank) const {
  NormalizedCochain f = zero(n);
  const std::uint64_t base = s_.carrier_size();
  for (std::size_t i = f.values.size(); i-- > 0;) {
    f.values[i] = static_cast<Index>(rank % base);
    rank /= base;
  }
  return f;
}

std::vector<NormalizedCochain> CochainComplex::enumerate(unsigned n, std::uint64_t budget) const {
  const std::uint64_t count = cochain_count(n);
  if (count > budget) throw BudgetExceeded(count, budget);
  std::vector<NormalizedCochain> out;
  out.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) out.push_back(cochain_at(n, r));
  return out;
}

std::vector<NormalizedCochain> CochainComplex::cocycles(unsigned n, std::uint64_t budget) const {
  const std::uint64_t count = cochain_count(n);
  if (count > budget) throw BudgetExceeded(count, budget);
  const Differential& d = differential(n);
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(count / 256 + 1, 256));
  std::vector<std::vector<NormalizedCochain>> parts(chunks);
  const Index base = static_cast<Index>(s_.carrier_size());
  parallel_chunks(count, chunks, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    if (begin == end) return;
    NormalizedCochain f = cochain_at(n, begin);
    for (std::size_t r = begin; r < end; ++r) {
      if (is_cocycle(f, d)) parts[chunk].push_back(f);
      for (std::size_t i = f.values.size(); i-- > 0;) {
        if (++f.values[i] < base) break;
        f.values[i] = 0;
      }
    }
  });
  std::vector<NormalizedCochain> out;
  for (auto& p : parts)
    for (auto& f : p) out.push_back(std::move(f));
  return out;
}

// ---------------------------------------------------------------------------
// +- identity

PmIdentityReport verify_pm_identity(const CochainComplex& c, unsigned n, std::uint64_t budget) {
  if (n == 0) throw std::invalid_argument("verify_pm_identity: degree must be at least 1");
  PmIdentityReport report;
  auto check = [&](const NormalizedCochain& f) {
    auto pf = c.d_plus(f);
    auto mf = c.d_minus(f);
    auto lhs = c.add(c.d_plus(pf), c.d_minus(mf));
    auto rhs = c.add(c.d_plus(mf), c.d_minus(pf));
    return lhs == rhs;
  };
  const std::uint64_t count = c.cochain_count(n - 1);
  if (count <= budget) {
    const std::size_t chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(count / 64 + 1, 256));
    std::vector<std::int64_t> first_failure(chunks, -1);
    parallel_chunks(count, chunks, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
      for (std::size_t r = begin; r < end; ++r)
        if (!check(c.cochain_at(n - 1, r))) {
          first_failure[chunk] = static_cast<std::int64_t>(r);
          return;
        }
    });
    report.checked = count;
    for (auto r : first_failure)
      if (r >= 0) {
        report.holds = false;
        report.witness = show_values(c.cochain_at(n - 1, static_cast<std::uint64_t>(r)).values);
        break;
      }
    return report;
  }
  report.sampled = true;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  std::uniform_int_distribution<Index> value(0, static_cast<Index>(c.semimodule().carrier_size() - 1));
  for (int i = 0; i < 10000; ++i) {
    NormalizedCochain f = c.zero(n - 1);
    for (auto& v : f.values) v = value(rng);
    ++report.checked;
    if (!check(f)) {
      report.holds = false;
      report.witness = show_values(f.values);
      break;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Cohomology monoids

Index CohomologyMonoid::class_of(const NormalizedCochain& f) const {
  std::int64_t k = locate(cocycles, f.values);
  if (k < 0 || f.degree != degree) throw ValidationError("not a " + std::to_string(degree) + "-cocycle: " + show_values(f.values));
  return class_of_cocycle[static_cast<std::size_t>(k)];
}

std::optional<AbGroupPresentation> CohomologyMonoid::group_type() const {
  if (!is_group(monoid)) return std::nullopt;
  return invariant_factors(monoid);
}

std::string CohomologyMonoid::describe() const {
  if (auto g = group_type()) return g->to_string();
  std::ostringstream os;
  os << "monoid of order " << size();
  return os.str();
}

CohomologyMonoid h_n(const CochainComplex& c, unsigned n, std::uint64_t budget) {
  auto z = c.cocycles(n, budget);
  const auto& a = c.semimodule().table();
  if (n == 0) return finalize(a, n, std::move(z), discrete_labels(z.size()), "rho^0");

  const std::uint64_t fcount = c.cochain_count(n - 1);
  if (fcount > budget) throw BudgetExceeded(fcount, budget);
  const std::uint64_t pair_budget = saturating_mul(budget, 64);
  const std::uint64_t pairs = saturating_mul(fcount, fcount);
  if (pairs > pair_budget) throw BudgetExceeded(pairs, pair_budget);

  const auto f = c.enumerate(n - 1, budget);
  std::vector<std::vector<Index>> dp(f.size()), dm(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    dp[i] = c.d_plus(f[i]).values;
    dm[i] = c.d_minus(f[i]).values;
  }

  // Distinct witness shifts (q, p) with p = d+u + d-v and q = d+v + d-u.
  const std::size_t w = c.width(n);
  std::vector<std::vector<Index>> shifts;
  shifts.reserve(pairs);
  {
    std::unordered_map<std::vector<Index>, char, VectorHash> seen;
    for (std::size_t u = 0; u < f.size(); ++u)
      for (std::size_t v = 0; v < f.size(); ++v) {
        auto p = pointwise_sum(a, dp[u], dm[v]);
        auto q = pointwise_sum(a, dp[v], dm[u]);
        std::vector<Index> key = q;
        key.insert(key.end(), p.begin(), p.end());
        if (seen.emplace(key, 0).second) shifts.push_back(std::move(key));
      }
  }
  std::sort(shifts.begin(), shifts.end());

  // Group shifts by q; for each group, match f + p against g + q.
  std::vector<std::size_t> group_start;
  for (std::size_t i = 0; i < shifts.size(); ++i)
    if (i == 0 || !std::equal(shifts[i].begin(), shifts[i].begin() + static_cast<std::ptrdiff_t>(w),
                              shifts[i - 1].begin()))
      group_start.push_back(i);
  group_start.push_back(shifts.size());

  const std::size_t groups = group_start.size() - 1;
  std::vector<std::vector<std::pair<Index, Index>>> found(groups);
  parallel_chunks(groups, groups, [&](std::size_t gi, std::size_t, std::size_t) {
    const auto& first = shifts[group_start[gi]];
    std::vector<Index> q(first.begin(), first.begin() + static_cast<std::ptrdiff_t>(w));
    std::unordered_map<std::vector<Index>, std::vector<Index>, VectorHash> by_sum;
    for (Index g = 0; g < z.size(); ++g) by_sum[pointwise_sum(a, z[g].values, q)].push_back(g);
    for (std::size_t s = group_start[gi]; s < group_start[gi + 1]; ++s) {
      std::vector<Index> p(shifts[s].begin() + static_cast<std::ptrdiff_t>(w), shifts[s].end());
      for (Index fi = 0; fi < z.size(); ++fi) {
        auto it = by_sum.find(pointwise_sum(a, z[fi].values, p));
        if (it == by_sum.end()) continue;
        for (Index g : it->second) found[gi].emplace_back(fi, g);
      }
    }
  });
  UnionFind uf(z.size());
  for (const auto& pairs_found : found)
    for (auto [x, y] : pairs_found) uf.unite(x, y);
  return finalize(a, n, std::move(z), uf.labels(), "rho^n");
}

CohomologyMonoid script_h_n(const CochainComplex& c, unsigned n, std::uint64_t budget) {
  auto z = c.cocycles(n, budget);
  const auto& a = c.semimodule().table();
  if (n == 0) return finalize(a, n, std::move(z), discrete_labels(z.size()), "strong relation");

  USubmodule u = u_subsemimodule(c.semimodule());
  const FiniteUnits& fu = *u.units.finite;
  std::vector<Index> negate(a.size(), 0);
  for (std::size_t i = 0; i < fu.inclusion.size(); ++i) negate[fu.inclusion[i]] = fu.inverse[i];

  CochainComplex cu(u.module);
  const auto ws = cu.enumerate(n - 1, budget);
  std::vector<std::vector<Index>> shifts;
  {
    std::unordered_map<std::vector<Index>, char, VectorHash> seen;
    for (const auto& w : ws) {
      auto plus = cu.d_plus(w).values;
      auto minus = cu.d_minus(w).values;
      std::vector<Index> s(plus.size());
      for (std::size_t p = 0; p < s.size(); ++p)
        s[p] = a.add(fu.inclusion[plus[p]], negate[fu.inclusion[minus[p]]]);
      if (seen.emplace(s, 0).second) shifts.push_back(std::move(s));
    }
  }
  std::sort(shifts.begin(), shifts.end());
  UnionFind uf(z.size());
  for (const auto& s : shifts)
    for (Index fi = 0; fi < z.size(); ++fi) {
      auto g = pointwise_sum(a, z[fi].values, s);
      std::int64_t k = locate(z, g);
      if (k < 0)
        throw TheoremMismatch("translating the cocycle " + show_values(z[fi].values) + " by the coboundary " +
                              show_values(s) + " leaves Z^" + std::to_string(n));
      uf.unite(fi, static_cast<Index>(k));
    }
  return finalize(a, n, std::move(z), uf.labels(), "strong relation");
}

// ---------------------------------------------------------------------------
// Low-degree closed descriptions

CohomologyMonoid h_low_direct(const MSemimodule& s, unsigned n) {
  if (n > 2) throw std::invalid_argument("h_low_direct: degree must be 0, 1 or 2");
  if (!s.is_finite()) throw Unsupported("h_low_direct needs a finite carrier");
  const auto& m = s.monoid();
  const auto& a = s.table();
  const auto nm = static_cast<Index>(m.size());
  const auto na = static_cast<Index>(a.size());

  if (n == 0) {
    std::vector<NormalizedCochain> fixed;
    for (Index v = 0; v < na; ++v) {
      bool ok = true;
      for (Index x = 0; x < nm && ok; ++x) ok = s.act(x, v) == v;
      if (ok) fixed.push_back({0, {v}});
    }
    return finalize(a, 0, std::move(fixed), discrete_labels(fixed.size()), "equality");
  }

  // Full normalized functions: f[x] for n = 1, f[x * nm + y] for n = 2.
  const std::size_t free_values = n == 1 ? nm - 1 : static_cast<std::size_t>(nm - 1) * (nm - 1);
  const std::uint64_t count = saturating_pow(na, free_values);
  if (count > default_budget) throw BudgetExceeded(count, default_budget);

  auto expand1 = [&](std::uint64_t r) {
    std::vector<Index> f(nm, 0);
    for (Index x = nm; x-- > 1;) {
      f[x] = static_cast<Index>(r % na);
      r /= na;
    }
    return f;
  };
  auto expand2 = [&](std::uint64_t r) {
    std::vector<Index> f(static_cast<std::size_t>(nm) * nm, 0);
    for (Index x = nm; x-- > 1;)
      for (Index y = nm; y-- > 1;) {
        f[x * nm + y] = static_cast<Index>(r % na);
        r /= na;
      }
    return f;
  };

  std::vector<std::vector<Index>> zs;  // full functions
  for (std::uint64_t r = 0; r < count; ++r) {
    if (n == 1) {
      auto f = expand1(r);
      bool ok = true;
      for (Index x = 0; x < nm && ok; ++x)
        for (Index y = 0; y < nm && ok; ++y) ok = a.add(s.act(x, f[y]), f[x]) == f[m.op(x, y)];
      if (ok) zs.push_back(std::move(f));
    } else {
      auto f = expand2(r);
      bool ok = true;
      for (Index x = 0; x < nm && ok; ++x)
        for (Index y = 0; y < nm && ok; ++y)
          for (Index zz = 0; zz < nm && ok; ++zz)
            ok = a.add(s.act(x, f[y * nm + zz]), f[x * nm + m.op(y, zz)]) ==
                 a.add(f[m.op(x, y) * nm + zz], f[x * nm + y]);
      if (ok) zs.push_back(std::move(f));
    }
  }

  // Witness shifts (p, q) taken over all arguments, identity included.
  std::vector<std::pair<std::vector<Index>, std::vector<Index>>> witnesses;
  if (n == 1) {
    for (Index a1 = 0; a1 < na; ++a1)
      for (Index a2 = 0; a2 < na; ++a2) {
        std::vector<Index> p(nm), q(nm);
        for (Index x = 0; x < nm; ++x) {
          p[x] = a.add(s.act(x, a1), a2);
          q[x] = a.add(s.act(x, a2), a1);
        }
        witnesses.emplace_back(std::move(p), std::move(q));
      }
  } else {
    const std::uint64_t gcount = saturating_pow(na, nm - 1);
    for (std::uint64_t r1 = 0; r1 < gcount; ++r1)
      for (std::uint64_t r2 = 0; r2 < gcount; ++r2) {
        auto g1 = expand1(r1);
        auto g2 = expand1(r2);
        std::vector<Index> p(static_cast<std::size_t>(nm) * nm), q(p.size());
        for (Index x = 0; x < nm; ++x)
          for (Index y = 0; y < nm; ++y) {
            p[x * nm + y] = a.add(a.add(s.act(x, g1[y]), g1[x]), g2[m.op(x, y)]);
            q[x * nm + y] = a.add(a.add(s.act(x, g2[y]), g2[x]), g1[m.op(x, y)]);
          }
        witnesses.emplace_back(std::move(p), std::move(q));
      }
  }

  UnionFind uf(zs.size());
  for (const auto& [p, q] : witnesses) {
    std::unordered_map<std::vector<Index>, std::vector<Index>, VectorHash> by_sum;
    for (Index g = 0; g < zs.size(); ++g) by_sum[pointwise_sum(a, zs[g], q)].push_back(g);
    for (Index f = 0; f < zs.size(); ++f) {
      auto it = by_sum.find(pointwise_sum(a, zs[f], p));
      if (it == by_sum.end()) continue;
      for (Index g : it->second) uf.unite(f, g);
    }
  }

  // Same storage as NormalizedCochain: drop identity arguments.
  std::vector<NormalizedCochain> cocycles;
  for (const auto& f : zs) {
    NormalizedCochain c{n, {}};
    if (n == 1) {
      c.values.assign(f.begin() + 1, f.end());
    } else {
      for (Index x = 1; x < nm; ++x)
        for (Index y = 1; y < nm; ++y) c.values.push_back(f[x * nm + y]);
    }
    cocycles.push_back(std::move(c));
  }
  // Enumeration order is already lexicographic in the stored values.
  return finalize(a, n, std::move(cocycles), uf.labels(), n == 1 ? "rho^1" : "rho^2");
}

// ---------------------------------------------------------------------------
// Maps between cohomology monoids

std::vector<Index> induced_map(const CochainComplex& source, const CohomologyMonoid& hs, const CochainComplex& target,
                               const CohomologyMonoid& ht, const SemimoduleHom& alpha) {
  (void)source;
  (void)target;
  auto push = [&](const NormalizedCochain& f) {
    NormalizedCochain g{f.degree, {}};
    for (Index v : f.values) g.values.push_back(alpha.map.at(v));
    return ht.class_of(g);
  };
  std::vector<Index> map;
  for (const auto& rep : hs.representatives) map.push_back(push(rep));
  for (std::size_t i = 0; i < hs.cocycles.size(); ++i)
    if (push(hs.cocycles[i]) != map[hs.class_of_cocycle[i]])
      throw TheoremMismatch("induced map is not well defined on the class of " + show_values(hs.representatives[hs.class_of_cocycle[i]].values));
  for (Index i = 0; i < hs.size(); ++i)
    for (Index j = 0; j < hs.size(); ++j)
      if (map[hs.monoid.add(i, j)] != ht.monoid.add(map[i], map[j]))
        throw TheoremMismatch("induced map is not additive");
  return map;
}

std::vector<Index> comparison_map(const CohomologyMonoid& finer, const CohomologyMonoid& coarser) {
  if (finer.cocycles != coarser.cocycles) throw std::invalid_argument("comparison_map: different cocycle sets");
  std::vector<Index> map(finer.size());
  for (Index c = 0; c < finer.size(); ++c) map[c] = coarser.class_of(finer.representatives[c]);
  for (std::size_t i = 0; i < finer.cocycles.size(); ++i)
    if (coarser.class_of_cocycle[i] != map[finer.class_of_cocycle[i]])
      throw TheoremMismatch("the strong relation does not refine the witness relation at " +
                            show_values(finer.cocycles[i].values));
  return map;
}

DiagramReport comparison_diagram(const CochainComplex& c, unsigned n, std::uint64_t budget) {
  DiagramReport r;
  r.degree = n;
  r.strong = script_h_n(c, n, budget);
  r.weak = h_n(c, n, budget);
  KModule k = k_module(c.semimodule());
  CochainComplex ck(k.module);
  r.completed = h_n(ck, n, budget);
  r.j = comparison_map(r.strong, r.weak);
  r.k_n = induced_map(c, r.strong, ck, r.completed, *k.k);
  r.h_k = induced_map(c, r.weak, ck, r.completed, *k.k);
  r.commutes = true;
  for (Index i = 0; i < r.strong.size(); ++i)
    if (r.k_n[i] != r.h_k[r.j[i]]) r.commutes = false;
  r.j_surjective = is_surjective(r.j, r.weak.size());
  r.h_k_injective = is_injective(r.h_k);
  r.cancellative = is_cancellative(c.semimodule().table());
  r.module = is_group(c.semimodule().table());
  return r;
}

}  // namespace semico
