#include "semico/cyclic.hpp"

#include <gmp.h>

#include <map>

namespace semico {

namespace {

IntMatrix empty_columns(std::size_t dim) { return IntMatrix(dim, 0); }

IntMatrix basis_columns(std::size_t dim, const std::vector<std::size_t>& coords) {
  std::vector<IntVector> cols;
  for (std::size_t i : coords) {
    IntVector v(dim);
    v[i] = 1;
    cols.push_back(std::move(v));
  }
  return IntMatrix::from_columns(dim, cols);
}

IntMatrix power(const IntMatrix& t, std::int64_t e) {
  IntMatrix out = IntMatrix::identity(t.rows());
  for (std::int64_t i = 0; i < e; ++i) out = out * t;
  return out;
}

// Canonical vector of an element of Z^dim / R, from U R V = S.
class Canonical {
 public:
  explicit Canonical(const PresentedGroup& g) {
    SnfResult snf = smith_normal_form(g.relations());
    u_ = snf.left;
    d_.assign(g.dim(), 0);
    for (std::size_t i = 0; i < snf.rank; ++i) d_[i] = snf.diagonal(i, i);
  }
  IntVector operator()(const IntVector& x) const {
    IntVector y = u_ * x;
    for (std::size_t i = 0; i < y.size(); ++i)
      if (d_[i] != 0) mpz_fdiv_r(y[i].get_mpz_t(), y[i].get_mpz_t(), d_[i].get_mpz_t());
    return y;
  }

 private:
  IntMatrix u_;
  std::vector<Integer> d_;
};

std::string group_text(const AbGroupPresentation& g) { return g.to_string(); }

bool in_relations(const PresentedGroup& k, const IntVector& x) { return k.contains(empty_columns(k.dim()), x); }

}  // namespace

IntMatrix norm_matrix(const IntMatrix& t, std::int64_t m) {
  IntMatrix sum(t.rows(), t.cols());
  IntMatrix p = IntMatrix::identity(t.rows());
  for (std::int64_t i = 0; i < m; ++i) {
    sum = sum + p;
    p = p * t;
  }
  return sum;
}

Violation validate_cyclic_data(const CyclicData& d) {
  const std::size_t dim = d.k.dim();
  if (d.m < 1) return {"m must be positive"};
  if (d.t.rows() != dim || d.t.cols() != dim) return {"T must be a square matrix of size " + std::to_string(dim)};
  if (d.ugens.rows() != dim) return {"unit generators must have " + std::to_string(dim) + " rows"};
  if (!d.k.respects_relations(d.t)) return {"T does not respect the relations of K"};
  IntMatrix tm = power(d.t, d.m);
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector e(dim);
    e[i] = 1;
    if (!d.k.equal(tm * e, e)) return {"T^m is not the identity on K"};
  }
  IntMatrix image = d.t * d.ugens;
  if (!d.is_module && !d.k.subgroup_le(image, d.ugens)) return {"T does not preserve the unit subgroup"};
  return {};
}

AbGroupPresentation classical_cyclic_cohomology(const PresentedGroup& l, const IntMatrix& t, std::int64_t m,
                                                unsigned n) {
  const IntMatrix t1 = t - IntMatrix::identity(t.rows());
  const IntMatrix norm = norm_matrix(t, m);
  if (n == 0) return l.subquotient(l.kernel_of(t1), empty_columns(l.dim()));
  if (n % 2 == 0) return l.subquotient(l.kernel_of(t1), l.image_of(norm));
  return l.subquotient(l.kernel_of(norm), l.image_of(t1));
}

std::vector<IntVector> unit_elements(const CyclicData& d, std::uint64_t budget) {
  if (!d.k.subquotient(d.ugens, empty_columns(d.k.dim())).is_finite())
    throw Unsupported("U(A) is infinite; only finite unit groups are supported");
  Canonical canon(d.k);
  std::map<IntVector, IntVector> seen;
  IntVector zero(d.k.dim());
  seen.emplace(canon(zero), zero);
  std::vector<IntVector> frontier{zero};
  while (!frontier.empty()) {
    std::vector<IntVector> next;
    for (const auto& x : frontier)
      for (std::size_t g = 0; g < d.ugens.cols(); ++g) {
        IntVector y = x;
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += d.ugens(i, g);
        IntVector key = canon(y);
        if (seen.count(key)) continue;
        seen.emplace(std::move(key), y);
        next.push_back(std::move(y));
        if (seen.size() > budget) throw BudgetExceeded(seen.size(), budget);
      }
    frontier = std::move(next);
  }
  std::vector<IntVector> out;
  for (const auto& [key, value] : seen) out.push_back(value);
  return out;
}

CyclicResult cyclic_closed_form(const CyclicData& d, unsigned n, std::uint64_t budget) {
  throw_if_violated(validate_cyclic_data(d));
  CyclicResult r;
  r.degree = n;
  const std::size_t dim = d.k.dim();
  const IntMatrix t1 = d.t - IntMatrix::identity(dim);

  if (n > 0 && (n % 2 == 0 || d.is_module)) {
    r.group = classical_cyclic_cohomology(d.k, d.t, d.m, n);
    r.description = group_text(*r.group);
    return r;
  }

  if (n == 0) {
    IntMatrix ker = d.k.kernel_of(t1);
    AbGroupPresentation fixed = d.k.subquotient(ker, empty_columns(dim));
    if (d.is_module) {
      r.group = fixed;
      r.description = group_text(fixed);
      return r;
    }
    if (!d.contains) throw Unsupported("H^0 needs a membership test for A inside K(A)");
    const std::size_t gens = ker.cols() - d.k.relations().cols();
    std::vector<IntVector> units = unit_elements(d, budget);
    Canonical canon(d.k);
    std::map<IntVector, bool> unit_keys;
    for (const auto& u : units) unit_keys[canon(u)] = true;
    std::vector<IntVector> fixed_units;
    for (const auto& u : units)
      if (in_relations(d.k, t1 * u)) fixed_units.push_back(u);
    AbGroupPresentation unit_type =
        d.k.subquotient(IntMatrix::from_columns(dim, fixed_units), empty_columns(dim));
    bool all_in = true;
    bool non_unit = false;
    for (std::size_t c = 0; c < gens; ++c) {
      IntVector g = ker.column(c);
      IntVector neg = g;
      for (auto& v : neg) v = -v;
      for (const IntVector* x : {&g, &neg}) {
        bool in = d.contains(*x);
        all_in = all_in && in;
        if (in && !unit_keys.count(canon(*x))) non_unit = true;
      }
    }
    if (all_in) {
      r.group = fixed;
      r.description = group_text(fixed);
    } else if (non_unit) {
      r.description = "monoid, not a group; units " + group_text(unit_type) + " inside " + group_text(fixed);
    } else {
      r.description = "submonoid of " + group_text(fixed) + " with units " + group_text(unit_type);
    }
    return r;
  }

  const IntMatrix norm = norm_matrix(d.t, d.m);
  std::vector<IntVector> upper, lower;
  for (const auto& u : unit_elements(d, budget)) {
    if (in_relations(d.k, norm * u)) upper.push_back(u);
    if (d.k.contains(t1, u)) lower.push_back(u);
  }
  r.group = d.k.subquotient(IntMatrix::from_columns(dim, upper), IntMatrix::from_columns(dim, lower));
  r.description = group_text(*r.group);
  return r;
}

FiniteModulePresentation present_finite_module(const MSemimodule& s) {
  const auto& m = s.monoid();
  if (!is_group(m) || !cyclic_generator(m)) throw Unsupported("the acting monoid is not a finite cyclic group");
  const auto& a = s.table();
  if (!is_group(a)) throw Unsupported("the coefficients are not a group");
  const Index gen = *cyclic_generator(m);
  const std::size_t n = a.size();
  std::vector<IntVector> rels;
  IntVector e0(n);
  e0[0] = 1;
  rels.push_back(e0);
  for (Index x = 0; x < n; ++x)
    for (Index y = x; y < n; ++y) {
      IntVector r(n);
      r[x] += 1;
      r[y] += 1;
      r[a.add(x, y)] -= 1;
      rels.push_back(std::move(r));
    }
  FiniteModulePresentation out{PresentedGroup(n, IntMatrix::from_columns(n, rels)), IntMatrix(n, n),
                               static_cast<std::int64_t>(m.size())};
  for (Index x = 0; x < n; ++x) out.t(s.act(gen, x), x) = 1;
  return out;
}

CyclicData cyclic_data_from(const MSemimodule& s) {
  const auto& m = s.monoid();
  auto gen = cyclic_generator(m);
  if (!is_group(m) || !gen) throw Unsupported("the acting monoid is not a finite cyclic group");
  CyclicData d;
  d.m = static_cast<std::int64_t>(m.size());
  if (s.is_finite()) {
    if (!is_group(s.table()))
      throw Unsupported("finite coefficients must be cancellative, hence a group");
    FiniteModulePresentation p = present_finite_module(s);
    d.k = p.group;
    d.t = p.t;
    d.ugens = IntMatrix::identity(p.group.dim());
    d.is_module = true;
    d.contains = [](const IntVector&) { return true; };
    d.name = "finite module";
    return d;
  }
  const Carrier& c = s.carrier();
  if (!c.is_cancellative()) throw Unsupported("coefficients " + c.describe() + " are not cancellative");
  auto moduli = c.completion_moduli();
  d.k = PresentedGroup::from_moduli(moduli);
  d.t = s.matrices().at(*gen);
  std::vector<std::size_t> unit_coords;
  auto mask = c.unit_coordinates();
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) unit_coords.push_back(i);
  d.ugens = basis_columns(moduli.size(), unit_coords);
  d.is_module = c.is_group();
  d.contains = [c](const IntVector& v) {
    Element e;
    for (const auto& x : v) {
      if (!x.fits_slong_p()) return false;
      e.push_back(x.get_si());
    }
    return c.contains(c.normalize(e));
  };
  d.name = c.describe();
  return d;
}

CrosscheckReport crosscheck_bar_vs_formula(const MSemimodule& s, unsigned n, std::uint64_t budget) {
  FiniteModulePresentation p = present_finite_module(s);
  CochainComplex c(s);
  CrosscheckReport r;
  r.degree = n;
  auto bar = h_n(c, n, budget).group_type();
  auto strong = script_h_n(c, n, budget).group_type();
  if (!bar || !strong) throw TheoremMismatch("cohomology of a module is not a group");
  r.bar = *bar;
  r.strong = *strong;
  r.formula = classical_cyclic_cohomology(p.group, p.t, p.m, n);
  r.equal = r.bar == r.formula && r.strong == r.formula;
  return r;
}

SeparationExample separation_example(std::int64_t m) {
  if (m < 2) throw std::invalid_argument("separation_example: m must be at least 2");
  SeparationExample ex;
  ex.m = m;
  // Coordinates (d_n, d_p, n, p); t adds n to p.
  IntMatrix t = IntMatrix::identity(4);
  t(3, 2) = 1;
  Carrier carrier = Carrier::direct_sum({Carrier::truncated_d(m), Carrier::free_commutative(1),
                                         Carrier::fg_group(AbGroupPresentation::from_cyclic_orders({Integer(m)}))});
  std::vector<IntMatrix> mats;
  for (std::int64_t i = 0; i < m; ++i) mats.push_back(power(t, i));
  ex.semimodule = MSemimodule::structured(FiniteMonoid::cyclic_group(static_cast<std::size_t>(m)), carrier, mats);
  ex.semimodule_valid = validate_semimodule(ex.semimodule).ok();

  PresentedGroup k = PresentedGroup::from_moduli({0, m, 0, m});
  ex.a = {m, k, t, basis_columns(4, {3}), false, nullptr, "A"};
  ex.a.contains = [carrier](const IntVector& v) {
    Element e;
    for (const auto& x : v) {
      if (!x.fits_slong_p()) return false;
      e.push_back(x.get_si());
    }
    return carrier.contains(carrier.normalize(e));
  };
  ex.u = {m, PresentedGroup::from_moduli({m}), IntMatrix::identity(1), IntMatrix::identity(1), true,
          [](const IntVector&) { return true; }, "U(A)"};
  ex.k = {m, k, t, IntMatrix::identity(4), true, [](const IntVector&) { return true; }, "K(A)"};

  const IntMatrix norm = norm_matrix(t, m);
  ex.kernel_norm_fact = k.same_subgroup(k.kernel_of(norm), basis_columns(4, {1, 3}));
  ex.t_minus_one_fact = k.same_subgroup(k.image_of(t - IntMatrix::identity(4)), basis_columns(4, {3}));

  CyclicData from = cyclic_data_from(ex.semimodule);
  ex.data_matches_semimodule = from.m == m && from.k.same_subgroup(from.k.relations(), k.relations()) &&
                               from.t == t && k.same_subgroup(from.ugens, ex.a.ugens) && !from.is_module;
  return ex;
}

SeparationReport separation_report(std::int64_t m, unsigned n_lo, unsigned n_hi) {
  SeparationReport r;
  r.example = separation_example(m);
  const auto zm = AbGroupPresentation::from_cyclic_orders({Integer(m)});
  bool odd_seen = false;
  bool odd_ok = true;
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    SeparationRow row{n, cyclic_closed_form(r.example.a, n), cyclic_closed_form(r.example.u, n),
                      cyclic_closed_form(r.example.k, n)};
    if (n % 2 == 1) {
      odd_seen = true;
      odd_ok = odd_ok && row.a.group && row.a.group->is_trivial() && row.u.group && *row.u.group == zm &&
               row.k.group && *row.k.group == zm;
    }
    r.rows.push_back(std::move(row));
  }
  const auto& ex = r.example;
  r.separates = odd_seen && odd_ok && ex.kernel_norm_fact && ex.t_minus_one_fact && ex.semimodule_valid &&
                ex.data_matches_semimodule;
  return r;
}

}  // namespace semico
