#include "semico/extensions.hpp"

#include <algorithm>
#include <numeric>

#include "semico/parallel.hpp"

namespace semico {

namespace {

std::string str(Index v) { return std::to_string(v); }

std::vector<Index> fiber(const SchreierExtension& e, Index x) {
  std::vector<Index> out;
  for (Index b = 0; b < e.middle.size(); ++b)
    if (e.sigma[b] == x) out.push_back(b);
  return out;
}

// Can u serve as the representative of its fiber?
bool decomposes_over(const SchreierExtension& e, Index u) {
  const auto& a = e.module.table();
  const Index x = e.sigma[u];
  std::vector<int> hits(e.middle.size(), 0);
  for (Index v = 0; v < a.size(); ++v) ++hits[e.middle.op(e.kappa[v], u)];
  for (Index b = 0; b < e.middle.size(); ++b)
    if (e.sigma[b] == x && hits[b] != 1) return false;
  return true;
}

// Equivalence classes of a symmetric boolean matrix, verified to be an
// equivalence relation.
std::vector<Index> partition_from_matrix(const std::vector<std::vector<char>>& rel, const char* name) {
  const std::size_t n = rel.size();
  std::vector<Index> label(n);
  for (Index i = 0; i < n; ++i) {
    label[i] = i;
    for (Index j = 0; j < n; ++j)
      if (rel[i][j]) {
        label[i] = j;
        break;
      }
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (static_cast<bool>(rel[i][j]) != (label[i] == label[j]))
        throw TheoremMismatch(std::string(name) + " is not an equivalence relation at extensions " + str(i) + ", " +
                              str(j));
  return Congruence::from_labels(label).labels();
}

std::vector<std::vector<char>> pairwise(const std::vector<SchreierExtension>& exts) {
  const std::size_t n = exts.size();
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  parallel_chunks(n, n, [&](std::size_t i, std::size_t, std::size_t) {
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = are_congruent(exts[i], exts[j]).has_value();
  });
  return rel;
}

std::vector<ExtensionClass> describe_classes(const std::vector<Index>& labels,
                                             const std::vector<NormalizedCochain>& cocycles,
                                             const std::vector<SchreierExtension>& exts) {
  std::vector<ExtensionClass> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == out.size()) out.push_back({labels[i], 0, cocycles[i], order_profile(exts[i].middle)});
    ++out[labels[i]].size;
  }
  return out;
}

}  // namespace

ExtensionCheck validate_schreier(const SchreierExtension& e) {
  ExtensionCheck out;
  const auto& m = e.module.monoid();
  const auto& a = e.module.table();
  const auto& b = e.middle;
  auto fail = [&](std::string msg) {
    out.violation = {std::move(msg)};
    return out;
  };
  if (auto v = validate_monoid(b); !v.ok()) return fail("middle monoid: " + v.message);
  if (e.kappa.size() != a.size()) return fail("kappa is not total on A");
  if (e.sigma.size() != b.size()) return fail("sigma is not total on B");
  if (e.reps.size() != m.size()) return fail("expected one representative per element of M");
  for (Index v : e.kappa)
    if (v >= b.size()) return fail("kappa leaves B");
  for (Index v : e.sigma)
    if (v >= m.size()) return fail("sigma leaves M");
  if (!is_hom(e.kappa, FiniteMonoid::from_abelian(a), b)) return fail("kappa is not a monoid homomorphism");
  if (!is_hom(e.sigma, b, m)) return fail("sigma is not a monoid homomorphism");
  if (!is_injective(e.kappa)) return fail("kappa is not injective");
  if (!is_surjective(e.sigma, m.size())) return fail("sigma is not surjective");
  std::vector<bool> in_image(b.size(), false);
  for (Index v : e.kappa) in_image[v] = true;
  for (Index x = 0; x < b.size(); ++x)
    if ((e.sigma[x] == 0) != in_image[x]) return fail("kappa(A) differs from Ker(sigma) at b=" + str(x));
  if (e.reps[0] != 0) return fail("the representative of 1 must be the identity of B");
  for (Index x = 0; x < m.size(); ++x) {
    if (e.reps[x] >= b.size() || e.sigma[e.reps[x]] != x)
      return fail("representative u_" + m.label(x) + " does not lie over " + m.label(x));
    if (!decomposes_over(e, e.reps[x]))
      return fail("fiber over " + m.label(x) + " has no unique decomposition b = kappa(a) + u_x");
  }
  for (Index bb = 0; bb < b.size(); ++bb)
    for (Index v = 0; v < a.size(); ++v)
      if (b.op(bb, e.kappa[v]) != b.op(e.kappa[e.module.act(e.sigma[bb], v)], bb))
        return fail("b + kappa(a) = kappa(sigma(b)a) + b fails at b=" + str(bb) + ", a=" + str(v));
  out.representative_sets.resize(m.size());
  for (Index x = 0; x < m.size(); ++x)
    for (Index u : fiber(e, x))
      if (decomposes_over(e, u)) out.representative_sets[x].push_back(u);
  return out;
}

Decomposition decompose(const SchreierExtension& e) {
  Decomposition d;
  d.a_of.assign(e.middle.size(), 0);
  for (Index x = 0; x < e.reps.size(); ++x)
    for (Index v = 0; v < e.kappa.size(); ++v) d.a_of[e.middle.op(e.kappa[v], e.reps[x])] = v;
  return d;
}

std::vector<Index> representatives(const SchreierExtension& e, Index x) {
  FiniteUnits u = units(e.module.table());
  std::vector<Index> out;
  for (Index v : u.inclusion) out.push_back(e.middle.op(e.kappa[v], e.reps.at(x)));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_representative(const SchreierExtension& e, Index b) {
  FiniteUnits u = units(e.module.table());
  return u.find(decompose(e).a_of.at(b)).has_value();
}

NormalizedCochain factor_set(const SchreierExtension& e) {
  const auto& m = e.module.monoid();
  Decomposition d = decompose(e);
  NormalizedCochain f{2, {}};
  for (Index x = 1; x < m.size(); ++x)
    for (Index y = 1; y < m.size(); ++y) {
      Index s = e.middle.op(e.reps[x], e.reps[y]);
      if (e.sigma[s] != m.op(x, y)) throw ValidationError("u_x + u_y does not lie over xy");
      f.values.push_back(d.a_of[s]);
    }
  return f;
}

SchreierExtension build_extension(const MSemimodule& s, const NormalizedCochain& f) {
  CochainComplex c(s);
  if (f.degree != 2 || f.values.size() != c.width(2)) throw ValidationError("factor set must be a normalized 2-cochain");
  if (!c.is_cocycle(f)) throw ValidationError("factor set is not a 2-cocycle");
  const auto& a = s.table();
  const auto& m = s.monoid();
  const std::size_t na = a.size();
  const std::size_t n = na * m.size();
  std::vector<Index> t(n * n);
  for (Index x = 0; x < m.size(); ++x)
    for (Index a1 = 0; a1 < na; ++a1)
      for (Index y = 0; y < m.size(); ++y)
        for (Index a2 = 0; a2 < na; ++a2) {
          Index v = a.add(a.add(a1, s.act(x, a2)), c.eval(f, {x, y}));
          t[(x * na + a1) * n + (y * na + a2)] = static_cast<Index>(m.op(x, y) * na + v);
        }
  std::vector<std::string> labels(n);
  for (Index x = 0; x < m.size(); ++x)
    for (Index v = 0; v < na; ++v) labels[x * na + v] = "(" + str(v) + "," + m.label(x) + ")";
  SchreierExtension e{s, FiniteMonoid(n, std::move(t), std::move(labels)), {}, {}, {}};
  for (Index v = 0; v < na; ++v) e.kappa.push_back(v);
  for (Index b = 0; b < n; ++b) e.sigma.push_back(static_cast<Index>(b / na));
  for (Index x = 0; x < m.size(); ++x) e.reps.push_back(static_cast<Index>(x * na));
  return e;
}

SchreierExtension split_extension(const MSemimodule& s) {
  SemidirectProduct sp = semidirect_product(s);
  SchreierExtension e{s, sp.monoid, sp.iota, sp.pi, {}};
  for (Index x = 0; x < s.monoid().size(); ++x) e.reps.push_back(static_cast<Index>(x * s.carrier_size()));
  return e;
}

SchreierExtension with_representatives(const SchreierExtension& e, std::vector<Index> reps) {
  SchreierExtension out = e;
  out.reps = std::move(reps);
  return out;
}

std::vector<std::vector<Index>> representative_choices(const SchreierExtension& e) {
  ExtensionCheck check = validate_schreier(e);
  throw_if_violated(check.violation);
  const auto& sets = check.representative_sets;
  std::vector<std::vector<Index>> out;
  std::vector<std::size_t> pick(sets.size(), 0);
  for (;;) {
    std::vector<Index> reps(sets.size(), 0);
    for (std::size_t x = 1; x < sets.size(); ++x) reps[x] = sets[x][pick[x]];
    out.push_back(std::move(reps));
    std::size_t x = sets.size();
    while (x-- > 1) {
      if (++pick[x] < sets[x].size()) break;
      pick[x] = 0;
    }
    if (x == 0 || x == static_cast<std::size_t>(-1)) return out;
  }
}

Violation check_morphism(const SchreierExtension& e, const SchreierExtension& t, const ExtensionMorphism& mor) {
  if (!is_hom(mor.alpha, FiniteMonoid::from_abelian(e.module.table()), FiniteMonoid::from_abelian(t.module.table())))
    return {"alpha is not a homomorphism"};
  if (!is_hom(mor.beta, e.middle, t.middle)) return {"beta is not a homomorphism"};
  if (!is_hom(mor.gamma, e.module.monoid(), t.module.monoid())) return {"gamma is not a homomorphism"};
  for (Index v = 0; v < e.kappa.size(); ++v)
    if (mor.beta[e.kappa[v]] != t.kappa[mor.alpha[v]]) return {"beta kappa != kappa' alpha at a=" + str(v)};
  for (Index b = 0; b < e.middle.size(); ++b)
    if (t.sigma[mor.beta[b]] != mor.gamma[e.sigma[b]]) return {"sigma' beta != gamma sigma at b=" + str(b)};
  for (Index x = 0; x < e.reps.size(); ++x)
    if (!is_representative(t, mor.beta[e.reps[x]]))
      return {"beta(u_" + e.module.monoid().label(x) + ") is not a representative"};
  return {};
}

std::optional<std::vector<Index>> are_congruent(const SchreierExtension& e, const SchreierExtension& o) {
  const auto& a = e.module.table();
  const auto& m = e.module.monoid();
  if (!(a == o.module.table()) || !(m == o.module.monoid()) || e.middle.size() != o.middle.size()) return std::nullopt;
  const FiniteUnits u = units(a);
  const Decomposition d = decompose(e);
  std::vector<Index> g(m.size(), 0);  // indices into u.inclusion; g[0] stays 0
  std::vector<Index> beta(e.middle.size());
  for (;;) {
    for (Index b = 0; b < e.middle.size(); ++b) {
      Index x = e.sigma[b];
      beta[b] = o.middle.op(o.kappa[a.add(d.a_of[b], u.inclusion[g[x]])], o.reps[x]);
    }
    if (is_hom(beta, e.middle, o.middle)) return beta;
    std::size_t x = m.size();
    while (x-- > 1) {
      if (++g[x] < u.inclusion.size()) break;
      g[x] = 0;
    }
    if (x == 0 || x == static_cast<std::size_t>(-1)) return std::nullopt;
  }
}

Pushforward pushforward(const SemimoduleHom& alpha, const MSemimodule& target, const SchreierExtension& e) {
  const auto& at = target.table();
  const auto& b = e.middle;
  const auto& m = e.module.monoid();
  const std::size_t na = at.size();
  const std::size_t n = na * b.size();
  const Decomposition d = decompose(e);

  // A' x| B with b a' = sigma(b) a'; (a', b) has index b * |A'| + a'.
  std::vector<Index> t(n * n);
  for (Index b1 = 0; b1 < b.size(); ++b1)
    for (Index a1 = 0; a1 < na; ++a1)
      for (Index b2 = 0; b2 < b.size(); ++b2)
        for (Index a2 = 0; a2 < na; ++a2)
          t[(b1 * na + a1) * n + (b2 * na + a2)] =
              static_cast<Index>(b.op(b1, b2) * na + at.add(a1, target.act(e.sigma[b1], a2)));
  FiniteMonoid product(n, std::move(t));

  std::vector<Index> key(n);
  for (Index bb = 0; bb < b.size(); ++bb)
    for (Index a1 = 0; a1 < na; ++a1)
      key[bb * na + a1] = static_cast<Index>(e.sigma[bb] * na + at.add(a1, alpha.map.at(d.a_of[bb])));
  Congruence rho = Congruence::from_labels(key);
  if (auto v = check_monoid_congruence(product, rho); !v.ok())
    throw TheoremMismatch("pushforward relation is not a congruence: " + v.message);
  MonoidQuotient q = monoid_quotient(product, rho);

  std::vector<std::string> labels(q.monoid.size());
  for (Index x = 0; x < m.size(); ++x)
    for (Index a1 = 0; a1 < na; ++a1)
      labels[q.projection[e.reps[x] * na + a1]] = "[" + str(a1) + "," + m.label(x) + "]";

  Pushforward out;
  SchreierExtension& r = out.extension;
  r.module = target;
  r.middle = q.monoid.with_labels(std::move(labels));
  for (Index a1 = 0; a1 < na; ++a1) r.kappa.push_back(q.projection[a1]);
  r.sigma.assign(r.middle.size(), 0);
  for (Index i = 0; i < n; ++i) r.sigma[q.projection[i]] = e.sigma[i / na];
  out.morphism.alpha = alpha.map;
  for (Index bb = 0; bb < b.size(); ++bb) out.morphism.beta.push_back(q.projection[bb * na]);
  for (Index x = 0; x < m.size(); ++x) {
    r.reps.push_back(out.morphism.beta[e.reps[x]]);
    out.morphism.gamma.push_back(x);
  }
  return out;
}

Pushforward completion_pushforward(const SchreierExtension& e) {
  KModule k = k_module(e.module);
  return pushforward(*k.k, k.module, e);
}

bool are_similar(const SchreierExtension& e1, const SchreierExtension& e2) {
  return are_congruent(completion_pushforward(e1).extension, completion_pushforward(e2).extension).has_value();
}

std::optional<std::vector<Index>> strong_cohomology_witness(const MSemimodule& s, const NormalizedCochain& f,
                                                            const NormalizedCochain& fp) {
  CochainComplex c(s);
  const auto& a = s.table();
  const auto& m = s.monoid();
  const FiniteUnits u = units(a);
  std::vector<Index> negate(a.size(), 0);
  for (std::size_t i = 0; i < u.inclusion.size(); ++i) negate[u.inclusion[i]] = u.inverse[i];
  std::vector<Index> pick(m.size(), 0);
  for (;;) {
    std::vector<Index> g(m.size(), 0);
    for (Index x = 1; x < m.size(); ++x) g[x] = u.inclusion[pick[x]];
    bool ok = true;
    for (Index x = 1; x < m.size() && ok; ++x)
      for (Index y = 1; y < m.size() && ok; ++y) {
        Index rhs = a.add(a.add(a.add(c.eval(fp, {x, y}), s.act(x, g[y])), negate[g[m.op(x, y)]]), g[x]);
        ok = c.eval(f, {x, y}) == rhs;
      }
    if (ok) return g;
    std::size_t x = m.size();
    while (x-- > 1) {
      if (++pick[x] < u.inclusion.size()) break;
      pick[x] = 0;
    }
    if (x == 0 || x == static_cast<std::size_t>(-1)) return std::nullopt;
  }
}

Classification classify(const MSemimodule& s, bool with_oracle, std::uint64_t budget) {
  CochainComplex c(s);
  Classification r;
  r.strong = script_h_n(c, 2, budget);
  r.weak = h_n(c, 2, budget);
  const auto& z = r.strong.cocycles;
  r.cocycle_count = z.size();
  const std::uint64_t comparisons = static_cast<std::uint64_t>(z.size()) * z.size();
  if (comparisons > budget) throw BudgetExceeded(comparisons, budget);

  std::vector<SchreierExtension> exts;
  for (const auto& f : z) exts.push_back(build_extension(s, f));
  std::vector<SchreierExtension> pushed;
  for (const auto& e : exts) pushed.push_back(completion_pushforward(e).extension);

  r.congruence_of_cocycle = partition_from_matrix(pairwise(exts), "congruence of extensions");
  r.similarity_of_cocycle = partition_from_matrix(pairwise(pushed), "similarity of extensions");
  r.congruence_classes = describe_classes(r.congruence_of_cocycle, z, exts);
  r.similarity_classes = describe_classes(r.similarity_of_cocycle, z, exts);

  r.zeta.assign(r.strong.size(), 0);
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z[i] == r.strong.representatives[r.strong.class_of_cocycle[i]]) r.zeta[r.strong.class_of_cocycle[i]] = r.congruence_of_cocycle[i];
  for (std::size_t i = 0; i < z.size(); ++i)
    if (r.zeta[r.strong.class_of_cocycle[i]] != r.congruence_of_cocycle[i])
      throw TheoremMismatch("strongly cohomologous cocycles give non-congruent extensions");
  r.zeta_bijective = is_injective(r.zeta) && is_surjective(r.zeta, r.congruence_classes.size());
  if (!r.zeta_bijective) throw TheoremMismatch("congruence classes of extensions do not match script H^2");
  r.zeta_pointed = r.zeta[0] == r.congruence_of_cocycle[0] && are_congruent(exts[0], split_extension(s)).has_value();
  if (!r.zeta_pointed) throw TheoremMismatch("E_0 is not congruent to the semidirect product extension");

  const std::vector<Index>& weak_of = r.weak.class_of_cocycle;
  r.theta.assign(r.weak.size(), 0);
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z[i] == r.weak.representatives[weak_of[i]]) r.theta[weak_of[i]] = r.similarity_of_cocycle[i];
  for (std::size_t i = 0; i < z.size(); ++i)
    if (r.theta[weak_of[i]] != r.similarity_of_cocycle[i])
      throw TheoremMismatch("cohomologous cocycles give dissimilar extensions");
  r.theta_surjective = is_surjective(r.theta, r.similarity_classes.size());
  r.theta_injective = is_injective(r.theta);
  r.cancellative = is_cancellative(s.table());
  r.module = is_group(s.table());
  if (!r.theta_surjective) throw TheoremMismatch("H^2 does not reach every similarity class");
  if (r.cancellative && !r.theta_injective)
    throw TheoremMismatch("cancellative coefficients but H^2 -> similarity classes is not injective");

  r.congruence_refines_similarity = true;
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = 0; j < z.size(); ++j)
      if (r.congruence_of_cocycle[i] == r.congruence_of_cocycle[j] && r.similarity_of_cocycle[i] != r.similarity_of_cocycle[j])
        r.congruence_refines_similarity = false;
  if (!r.congruence_refines_similarity) throw TheoremMismatch("congruent extensions that are not similar");

  if (with_oracle) {
    OracleReport o;
    auto raw = raw_table_extensions(s, budget);
    o.extensions_found = raw.size();
    const std::size_t na = s.carrier_size();
    o.tables_checked = 1;
    const std::size_t nb = na * s.monoid().size();
    std::size_t free_entries = 0;
    for (Index b1 = 1; b1 < nb; ++b1)
      for (Index b2 = 1; b2 < nb; ++b2)
        if (!(b1 < na && b2 < na)) ++free_entries;
    for (std::size_t i = 0; i < free_entries; ++i) o.tables_checked *= na;
    std::vector<bool> hit(r.congruence_classes.size(), false);
    o.all_matched = true;
    for (const auto& e : raw) {
      bool matched = false;
      for (const auto& cls : r.congruence_classes) {
        std::size_t first = 0;
        while (r.congruence_of_cocycle[first] != cls.id) ++first;
        if (are_congruent(e, exts[first])) {
          hit[cls.id] = true;
          matched = true;
          break;
        }
      }
      o.all_matched = o.all_matched && matched;
    }
    o.classes_hit = static_cast<std::size_t>(std::count(hit.begin(), hit.end(), true));
    o.reproduces = o.all_matched && o.classes_hit == r.congruence_classes.size();
    r.oracle = o;
  }
  return r;
}

std::vector<SchreierExtension> raw_table_extensions(const MSemimodule& s, std::uint64_t budget) {
  const auto& a = s.table();
  const auto& m = s.monoid();
  const std::size_t na = a.size();
  const std::size_t n = na * m.size();
  std::vector<Index> t(n * n, 0);
  std::vector<std::pair<Index, Index>> free_cells;
  for (Index b1 = 0; b1 < n; ++b1)
    for (Index b2 = 0; b2 < n; ++b2) {
      if (b1 == 0) t[b1 * n + b2] = b2;
      else if (b2 == 0) t[b1 * n + b2] = b1;
      else if (b1 < na && b2 < na) t[b1 * n + b2] = a.add(b1, b2);
      else free_cells.emplace_back(b1, b2);
    }
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < free_cells.size(); ++i) {
    count *= na;
    if (count > budget) throw BudgetExceeded(count, budget);
  }

  std::vector<Index> kappa(na), sigma(n);
  std::iota(kappa.begin(), kappa.end(), Index{0});
  for (Index b = 0; b < n; ++b) sigma[b] = static_cast<Index>(b / na);

  std::vector<SchreierExtension> out;
  std::vector<Index> digit(free_cells.size(), 0);
  for (std::uint64_t r = 0; r < count; ++r) {
    for (std::size_t i = 0; i < free_cells.size(); ++i) {
      auto [b1, b2] = free_cells[i];
      t[b1 * n + b2] = static_cast<Index>(m.op(sigma[b1], sigma[b2]) * na + digit[i]);
    }
    FiniteMonoid b(n, t);
    if (validate_monoid(b).ok()) {
      SchreierExtension e{s, b, kappa, sigma, std::vector<Index>(m.size(), 0)};
      bool ok = true;
      for (Index x = 1; x < m.size() && ok; ++x) {
        ok = false;
        for (Index u = static_cast<Index>(x * na); u < (x + 1) * na; ++u)
          if (decomposes_over(e, u)) {
            e.reps[x] = u;
            ok = true;
            break;
          }
      }
      if (ok && validate_schreier(e).violation.ok()) out.push_back(std::move(e));
    }
    for (std::size_t i = free_cells.size(); i-- > 0;) {
      if (++digit[i] < na) break;
      digit[i] = 0;
    }
  }
  return out;
}

MSemimodule induce_action(const FiniteAbelianMonoid& a, const FiniteMonoid& m, const FiniteMonoid& b,
                          const std::vector<Index>& kappa, const std::vector<Index>& sigma) {
  if (!is_cancellative(a))
    throw Unsupported("an induced action needs a cancellative kernel; the kernel given is not cancellative");
  if (kappa.size() != a.size() || sigma.size() != b.size()) throw ValidationError("kappa or sigma is not total");
  if (!is_surjective(sigma, m.size())) throw ValidationError("sigma is not surjective");
  std::vector<std::vector<Index>> rows(m.size());
  std::vector<bool> seen(m.size(), false);
  for (Index bb = 0; bb < b.size(); ++bb) {
    std::vector<Index> theta(a.size());
    for (Index v = 0; v < a.size(); ++v) {
      std::size_t found = 0;
      for (Index w = 0; w < a.size(); ++w)
        if (b.op(bb, kappa[v]) == b.op(kappa[w], bb)) {
          theta[v] = w;
          ++found;
        }
      if (found != 1)
        throw ValidationError("no unique a' with b + kappa(a) = kappa(a') + b at b=" + str(bb) + ", a=" + str(v));
    }
    const Index x = sigma[bb];
    if (!seen[x]) {
      rows[x] = std::move(theta);
      seen[x] = true;
    } else if (rows[x] != theta) {
      throw ValidationError("theta_b depends on more than sigma(b) over " + m.label(x));
    }
  }
  return MSemimodule::finite(m, a, rows);
}

CyclicCoverFactorSet cyclic_cover_factor_set(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("cyclic_cover_factor_set: m must be positive");
  CyclicCoverFactorSet out;
  out.m = m;
  out.values.assign(static_cast<std::size_t>(m), std::vector<std::int64_t>(static_cast<std::size_t>(m)));
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j = 0; j < m; ++j) out.values[i][j] = (i + j) / m;
  auto f = [&](std::int64_t i, std::int64_t j) { return out.values[i][j]; };
  out.decomposition_holds = true;
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j = 0; j < m; ++j)
      if (i + j != m * f(i, j) + (i + j) % m) out.decomposition_holds = false;
  out.cocycle_holds = true;
  for (std::int64_t i = 0; i < m; ++i) {
    if (f(i, 0) != 0 || f(0, i) != 0) out.cocycle_holds = false;
    for (std::int64_t j = 0; j < m; ++j)
      for (std::int64_t k = 0; k < m; ++k)
        if (f(j, k) + f(i, (j + k) % m) != f((i + j) % m, k) + f(i, j)) out.cocycle_holds = false;
  }
  return out;
}

}  // namespace semico
