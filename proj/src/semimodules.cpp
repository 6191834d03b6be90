#include "semico/semimodules.hpp"

#include <map>
#include <random>

namespace semico {

namespace {

IntVector to_int_vector(const Element& e) {
  IntVector v;
  v.reserve(e.size());
  for (auto c : e) v.emplace_back(static_cast<long>(c));
  return v;
}

Element to_element(const IntVector& v) {
  Element e;
  e.reserve(v.size());
  for (const auto& c : v) {
    if (!c.fits_slong_p()) throw Unsupported("coordinate exceeds 64-bit range: " + c.get_str());
    e.push_back(c.get_si());
  }
  return e;
}

std::string show(const Element& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

}  // namespace

MSemimodule MSemimodule::finite(FiniteMonoid m, FiniteAbelianMonoid a, const std::vector<std::vector<Index>>& action) {
  if (action.size() != m.size()) throw ParseError("action: expected one row per monoid element");
  MSemimodule s;
  s.action_.reserve(m.size() * a.size());
  for (const auto& row : action) {
    if (row.size() != a.size()) throw ParseError("action: each row must have one entry per carrier element");
    for (Index v : row) {
      if (v >= a.size()) throw ParseError("action: entry " + std::to_string(v) + " out of range");
      s.action_.push_back(v);
    }
  }
  s.m_ = std::move(m);
  s.a_ = Carrier::finite(std::move(a));
  return s;
}

MSemimodule MSemimodule::trivial(FiniteMonoid m, FiniteAbelianMonoid a) {
  std::vector<std::vector<Index>> rows(m.size(), std::vector<Index>(a.size()));
  for (auto& r : rows)
    for (Index i = 0; i < r.size(); ++i) r[i] = i;
  return finite(std::move(m), std::move(a), rows);
}

MSemimodule MSemimodule::structured(FiniteMonoid m, Carrier a, std::vector<IntMatrix> matrices) {
  if (a.is_finite_table()) throw ParseError("action: a finite table carrier takes an action table, not matrices");
  if (matrices.size() != m.size()) throw ParseError("action: expected one matrix per monoid element");
  const std::size_t n = a.arity();
  for (const auto& t : matrices)
    if (t.rows() != n || t.cols() != n)
      throw ParseError("action: matrices must be " + std::to_string(n) + "x" + std::to_string(n));
  MSemimodule s;
  s.m_ = std::move(m);
  s.a_ = std::move(a);
  s.matrices_ = std::move(matrices);
  return s;
}

MSemimodule MSemimodule::structured_trivial(FiniteMonoid m, Carrier a) {
  std::vector<IntMatrix> mats(m.size(), IntMatrix::identity(a.arity()));
  return structured(std::move(m), std::move(a), std::move(mats));
}

Element MSemimodule::act(Index x, const Element& a) const {
  if (is_finite()) return {static_cast<std::int64_t>(act(x, static_cast<Index>(a.at(0))))};
  return a_.normalize(to_element(matrices_.at(x) * to_int_vector(a)));
}

std::vector<std::vector<Index>> MSemimodule::action_rows() const {
  const std::size_t n = carrier_size();
  std::vector<std::vector<Index>> rows(m_.size());
  for (std::size_t x = 0; x < m_.size(); ++x)
    rows[x].assign(action_.begin() + static_cast<std::ptrdiff_t>(x * n),
                   action_.begin() + static_cast<std::ptrdiff_t>((x + 1) * n));
  return rows;
}

bool MSemimodule::has_trivial_action() const {
  if (is_finite()) {
    for (Index x = 0; x < m_.size(); ++x)
      for (Index a = 0; a < carrier_size(); ++a)
        if (act(x, a) != a) return false;
    return true;
  }
  for (const auto& g : a_.additive_generators())
    for (Index x = 0; x < m_.size(); ++x)
      if (!a_.equal(act(x, g), g)) return false;
  return true;
}

namespace {

Violation validate_finite_action(const MSemimodule& s) {
  const auto& m = s.monoid();
  const auto& a = s.table();
  const auto nm = static_cast<Index>(m.size());
  const auto na = static_cast<Index>(a.size());
  auto tag = [](Index v) { return std::to_string(v); };
  for (Index v = 0; v < na; ++v)
    if (s.act(0, v) != v) return {"1a = a fails at a=" + tag(v)};
  for (Index x = 0; x < nm; ++x)
    if (s.act(x, 0) != 0) return {"x0 = 0 fails at x=" + tag(x)};
  for (Index x = 0; x < nm; ++x)
    for (Index u = 0; u < na; ++u)
      for (Index v = 0; v < na; ++v)
        if (s.act(x, a.add(u, v)) != a.add(s.act(x, u), s.act(x, v)))
          return {"x(a+a') = xa+xa' fails at x=" + tag(x) + ", a=" + tag(u) + ", a'=" + tag(v)};
  for (Index x = 0; x < nm; ++x)
    for (Index y = 0; y < nm; ++y)
      for (Index v = 0; v < na; ++v)
        if (s.act(m.op(x, y), v) != s.act(x, s.act(y, v)))
          return {"(xy)a = x(ya) fails at x=" + tag(x) + ", y=" + tag(y) + ", a=" + tag(v)};
  return {};
}

Violation validate_structured_action(const MSemimodule& s) {
  const auto& m = s.monoid();
  const auto& a = s.carrier();
  const auto nm = static_cast<Index>(m.size());
  PresentedGroup k = PresentedGroup::from_moduli(a.completion_moduli());
  for (Index x = 0; x < nm; ++x)
    if (!k.respects_relations(s.matrices()[x]))
      return {"matrix of x=" + std::to_string(x) + " is not well defined modulo the completion relations"};

  std::vector<Element> samples = a.additive_generators();
  std::mt19937_64 rng(0x5e1c0u);
  for (int i = 0; i < 100; ++i) samples.push_back(a.random_element(rng));
  samples.push_back(a.zero());

  for (const auto& v : samples) {
    if (!a.equal(s.act(0, v), v)) return {"1a = a fails at a=" + show(v)};
    for (Index x = 0; x < nm; ++x) {
      Element xv = s.act(x, v);
      if (!a.contains(xv)) return {"x=" + std::to_string(x) + " carries a=" + show(v) + " outside the carrier"};
      for (Index y = 0; y < nm; ++y)
        if (!a.equal(s.act(m.op(x, y), v), s.act(x, s.act(y, v))))
          return {"(xy)a = x(ya) fails at x=" + std::to_string(x) + ", y=" + std::to_string(y) + ", a=" + show(v)};
    }
  }
  for (Index x = 0; x < nm; ++x)
    if (!a.equal(s.act(x, a.zero()), a.zero())) return {"x0 = 0 fails at x=" + std::to_string(x)};
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    const auto& u = samples[i];
    const auto& v = samples[i + 1];
    for (Index x = 0; x < nm; ++x)
      if (!a.equal(s.act(x, a.add(u, v)), a.add(s.act(x, u), s.act(x, v))))
        return {"x(a+a') = xa+xa' fails at x=" + std::to_string(x) + ", a=" + show(u) + ", a'=" + show(v)};
  }
  return {};
}

}  // namespace

Violation validate_semimodule(const MSemimodule& s) {
  if (auto v = validate_monoid(s.monoid()); !v.ok()) return {"monoid: " + v.message};
  if (s.is_finite()) {
    if (auto v = validate_abelian_monoid(s.table()); !v.ok()) return {"carrier: " + v.message};
    return validate_finite_action(s);
  }
  return validate_structured_action(s);
}

Violation check_semimodule_hom(const MSemimodule& source, const MSemimodule& target, const SemimoduleHom& f) {
  const auto& a = source.table();
  const auto& b = target.table();
  if (f.map.size() != a.size()) return {"map is not total on the source carrier"};
  for (Index v : f.map)
    if (v >= b.size()) return {"map leaves the target carrier"};
  if (f.map[0] != 0) return {"f(0) != 0"};
  for (Index u = 0; u < a.size(); ++u)
    for (Index v = 0; v < a.size(); ++v)
      if (f.map[a.add(u, v)] != b.add(f.map[u], f.map[v]))
        return {"not additive at (" + std::to_string(u) + "," + std::to_string(v) + ")"};
  if (source.monoid().size() != target.monoid().size()) return {"different acting monoids"};
  for (Index x = 0; x < source.monoid().size(); ++x)
    for (Index u = 0; u < a.size(); ++u)
      if (f.map[source.act(x, u)] != target.act(x, f.map[u]))
        return {"not equivariant at x=" + std::to_string(x) + ", a=" + std::to_string(u)};
  return {};
}

SemimoduleHom compose(const SemimoduleHom& second, const SemimoduleHom& first) {
  SemimoduleHom out;
  out.map.reserve(first.map.size());
  for (Index v : first.map) out.map.push_back(second.map.at(v));
  return out;
}

SemimoduleHom identity_hom(std::size_t size) {
  SemimoduleHom out;
  for (Index i = 0; i < size; ++i) out.map.push_back(i);
  return out;
}

std::vector<SemimoduleHom> enumerate_semimodule_homs(const MSemimodule& source, const MSemimodule& target) {
  std::vector<SemimoduleHom> out;
  for (auto& f : enumerate_homs(FiniteMonoid::from_abelian(source.table()), FiniteMonoid::from_abelian(target.table()))) {
    SemimoduleHom h{std::move(f)};
    if (check_semimodule_hom(source, target, h).ok()) out.push_back(std::move(h));
  }
  return out;
}

KModule k_module(const MSemimodule& s) {
  KModule out{MSemimodule(), std::nullopt, group_completion(s.carrier())};
  if (s.is_finite()) {
    const FiniteCompletion& fc = *out.completion.finite;
    std::vector<std::vector<Index>> rows(s.monoid().size(), std::vector<Index>(fc.group.size()));
    for (Index x = 0; x < s.monoid().size(); ++x)
      for (Index c = 0; c < fc.group.size(); ++c) {
        auto [u, v] = fc.representative[c];
        rows[x][c] = fc.class_of(s.act(x, u), s.act(x, v));
      }
    out.module = MSemimodule::finite(s.monoid(), fc.group, rows);
    out.k = SemimoduleHom{fc.canonical};
    return out;
  }
  out.module = MSemimodule::structured(s.monoid(), out.completion.group, s.matrices());
  return out;
}

USubmodule u_subsemimodule(const MSemimodule& s) {
  USubmodule out{MSemimodule(), std::nullopt, units(s.carrier())};
  const auto nm = static_cast<Index>(s.monoid().size());
  if (s.is_finite()) {
    const FiniteUnits& fu = *out.units.finite;
    std::vector<std::vector<Index>> rows(nm, std::vector<Index>(fu.group.size()));
    for (Index x = 0; x < nm; ++x)
      for (Index u = 0; u < fu.group.size(); ++u) {
        auto image = fu.find(s.act(x, fu.inclusion[u]));
        if (!image)
          throw ValidationError("x=" + std::to_string(x) + " carries the unit " + std::to_string(fu.inclusion[u]) +
                                " outside U(A)");
        rows[x][u] = *image;
      }
    out.module = MSemimodule::finite(s.monoid(), fu.group, rows);
    out.inclusion = SemimoduleHom{fu.inclusion};
    return out;
  }
  const auto& cmap = out.units.coordinate_map;
  const auto mask = s.carrier().unit_coordinates();
  std::vector<IntMatrix> mats;
  for (Index x = 0; x < nm; ++x) {
    for (std::size_t j : cmap) {
      Element e(s.carrier().arity(), 0);
      e[j] = 1;
      Element image = s.act(x, e);
      for (std::size_t i = 0; i < image.size(); ++i)
        if (!mask[i] && image[i] != 0)
          throw ValidationError("x=" + std::to_string(x) + " carries unit coordinate " + std::to_string(j) +
                                " outside U(A)");
    }
    IntMatrix sub(cmap.size(), cmap.size());
    for (std::size_t r = 0; r < cmap.size(); ++r)
      for (std::size_t c = 0; c < cmap.size(); ++c) sub(r, c) = s.matrices()[x](cmap[r], cmap[c]);
    mats.push_back(std::move(sub));
  }
  out.module = MSemimodule::structured(s.monoid(), out.units.group, std::move(mats));
  return out;
}

SemidirectProduct semidirect_product(const MSemimodule& s) {
  const auto& a = s.table();
  const auto& m = s.monoid();
  const std::size_t na = a.size();
  const std::size_t n = na * m.size();
  std::vector<Index> t(n * n);
  for (Index x = 0; x < m.size(); ++x)
    for (Index u = 0; u < na; ++u)
      for (Index y = 0; y < m.size(); ++y)
        for (Index v = 0; v < na; ++v) {
          Index sum = a.add(u, s.act(x, v));
          t[(x * na + u) * n + (y * na + v)] = static_cast<Index>(m.op(x, y) * na + sum);
        }
  std::vector<std::string> labels(n);
  for (Index x = 0; x < m.size(); ++x)
    for (Index u = 0; u < na; ++u) labels[x * na + u] = "(" + std::to_string(u) + "," + m.label(x) + ")";
  SemidirectProduct out{FiniteMonoid(n, std::move(t), std::move(labels)), {}, {}};
  for (Index u = 0; u < na; ++u) out.iota.push_back(u);
  for (Index b = 0; b < n; ++b) out.pi.push_back(static_cast<Index>(b / na));
  return out;
}

EndomorphismMonoid endomorphism_monoid(const FiniteAbelianMonoid& a) {
  const FiniteMonoid am = FiniteMonoid::from_abelian(a);
  auto homs = enumerate_homs(am, am);
  EndomorphismMonoid out;
  std::vector<Index> id(a.size());
  for (Index i = 0; i < a.size(); ++i) id[i] = i;
  out.maps.push_back(id);
  for (auto& h : homs)
    if (h != id) out.maps.push_back(std::move(h));
  std::map<std::vector<Index>, Index> index;
  for (Index i = 0; i < out.maps.size(); ++i) index[out.maps[i]] = i;
  const std::size_t n = out.maps.size();
  std::vector<Index> t(n * n);
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = 0; g < n; ++g) {
      std::vector<Index> fg(a.size());
      for (Index v = 0; v < a.size(); ++v) fg[v] = out.maps[f][out.maps[g][v]];
      t[f * n + g] = index.at(fg);
    }
  out.monoid = FiniteMonoid(n, std::move(t));
  return out;
}

std::vector<MSemimodule> enumerate_actions(const FiniteMonoid& m, const FiniteAbelianMonoid& a) {
  EndomorphismMonoid end = endomorphism_monoid(a);
  std::vector<MSemimodule> out;
  for (const auto& phi : enumerate_homs(m, end.monoid)) {
    std::vector<std::vector<Index>> rows;
    for (Index x : phi) rows.push_back(end.maps[x]);
    out.push_back(MSemimodule::finite(m, a, rows));
  }
  return out;
}

}  // namespace semico
