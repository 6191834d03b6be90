#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace semico::capi {

namespace {

using io::Json;

constexpr const char* schema = "semico-report/1";

const char* yes(bool b) { return b ? "yes" : "no"; }

Json envelope(const char* command) { return {{"schema", schema}, {"command", command}}; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string table_name(const FiniteAbelianMonoid& a) {
  if (is_group(a)) return invariant_factors(a).to_string();
  std::string s = "monoid of order " + std::to_string(a.size());
  if (a == FiniteAbelianMonoid::boolean()) s = "B";
  return s;
}

std::string carrier_name(const Carrier& c) { return c.is_finite_table() ? table_name(c.table()) : c.describe(); }

std::string monoid_name(const FiniteMonoid& m) {
  if (auto g = cyclic_generator(m); g && is_group(m)) return "C" + std::to_string(m.size());
  if (m == FiniteMonoid::idempotent_pair()) return "O2";
  return "monoid of order " + std::to_string(m.size());
}

std::string action_name(const MSemimodule& s) {
  if (s.has_trivial_action()) return "trivial";
  if (!s.is_finite()) return "by matrices";
  std::vector<std::string> rows;
  const auto& m = s.monoid();
  auto r = s.action_rows();
  for (Index x = 1; x < m.size(); ++x) {
    std::vector<std::string> v;
    for (Index a : r[x]) v.push_back(std::to_string(a));
    rows.push_back(m.label(x) + ": [" + join(v, " ") + "]");
  }
  return join(rows, ", ");
}

Json semimodule_json(const MSemimodule& s) {
  Json j = {{"monoid", io::monoid_json(s.monoid())}, {"carrier", carrier_name(s.carrier())}};
  if (s.is_finite()) {
    j["carrier_table"] = io::carrier_json(s.table());
    j["action"] = s.action_rows();
  } else {
    Json mats = Json::array();
    for (const auto& m : s.matrices()) mats.push_back(io::matrix_json(m));
    j["action"] = mats;
  }
  return j;
}

std::string semimodule_line(const MSemimodule& s) {
  return "M = " + monoid_name(s.monoid()) + ", A = " + carrier_name(s.carrier()) + ", action " + action_name(s) + "\n";
}

Json cohomology_json(const CohomologyMonoid& h) {
  Json j = {{"degree", h.degree}, {"text", h.describe()}, {"classes", h.size()}, {"cocycles", h.cocycles.size()}};
  if (auto g = h.group_type()) j["group"] = io::group_json(*g);
  else j["table"] = h.monoid.rows();
  return j;
}

Json map_json(const std::vector<Index>& f) { return Json(f); }

std::string class_table(const char* title, const std::vector<ExtensionClass>& classes, const CochainComplex& c) {
  std::size_t width = 19;
  for (const auto& k : classes) width = std::max(width, io::cochain_text(c, k.canonical).size() + 2);
  std::ostringstream os;
  os << title << "\n";
  os << "  " << std::left << std::setw(4) << "id" << std::setw(6) << "size" << std::setw(static_cast<int>(width))
     << "canonical cocycle" << "order profile\n";
  for (const auto& k : classes)
    os << "  " << std::left << std::setw(4) << k.id << std::setw(6) << k.size << std::setw(static_cast<int>(width))
       << io::cochain_text(c, k.canonical) << k.order_profile << "\n";
  return os.str();
}

Json classes_json(const std::vector<ExtensionClass>& classes, const CochainComplex& c) {
  Json out = Json::array();
  for (const auto& k : classes)
    out.push_back({{"id", k.id},
                   {"size", k.size},
                   {"canonical", io::cochain_json(c, k.canonical)},
                   {"order_profile", k.order_profile}});
  return out;
}

Json cyclic_result_json(const CyclicResult& r) {
  Json j = {{"degree", r.degree}, {"text", r.description}, {"is_group", r.group.has_value()}};
  if (r.group) j["group"] = io::group_json(*r.group);
  return j;
}

}  // namespace

Report validate_report(const io::Input& in) {
  Report r;
  r.json = envelope("validate");
  std::ostringstream os;
  Violation v;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FiniteMonoid>) {
          v = validate_monoid(x);
          r.json["kind"] = "monoid";
          os << "monoid of order " << x.size() << "\n";
          if (v.ok()) {
            r.json["commutative"] = is_commutative(x);
            r.json["group"] = is_group(x);
            r.json["generators"] = generators(x);
            os << "commutative: " << yes(is_commutative(x)) << "\ngroup: " << yes(is_group(x)) << "\n";
          }
        } else if constexpr (std::is_same_v<T, Carrier>) {
          r.json["kind"] = "carrier";
          if (x.is_finite_table()) v = validate_abelian_monoid(x.table());
          os << "carrier " << (v.ok() ? carrier_name(x) : x.describe()) << "\n";
          if (v.ok()) {
            r.json["cancellative"] = x.is_cancellative();
            r.json["group"] = x.is_group();
            os << "cancellative: " << yes(x.is_cancellative()) << "\ngroup: " << yes(x.is_group()) << "\n";
          }
        } else if constexpr (std::is_same_v<T, MSemimodule>) {
          r.json["kind"] = "semimodule";
          v = validate_semimodule(x);
          os << semimodule_line(x);
        } else if constexpr (std::is_same_v<T, SchreierExtension>) {
          r.json["kind"] = "extension";
          v = validate_semimodule(x.module);
          if (v.ok()) v = validate_schreier(x).violation;
          os << "extension with middle monoid of order " << x.middle.size() << "\n";
          if (v.ok()) {
            CochainComplex c(x.module);
            NormalizedCochain f = factor_set(x);
            r.json["factor_set"] = io::cochain_json(c, f);
            r.json["factor_set_is_cocycle"] = c.is_cocycle(f);
            os << "factor set: " << io::cochain_text(c, f) << "\n";
          }
        } else {
          r.json["kind"] = "cyclic";
          v = validate_cyclic_data(x);
          os << "cyclic data over C" << x.m << ", K = " << x.k.isomorphism_type().to_string() << "\n";
        }
      },
      in);
  r.ok = v.ok();
  r.json["valid"] = r.ok;
  if (!r.ok) r.json["violation"] = v.message;
  os << (r.ok ? "valid" : "invalid: " + v.message) << "\n";
  r.text = os.str();
  return r;
}

Report cohomology_report(const MSemimodule& s, unsigned n_lo, unsigned n_hi, std::uint64_t budget) {
  throw_if_violated(validate_semimodule(s));
  CochainComplex c(s);
  Report r;
  r.json = envelope("cohomology");
  r.json["semimodule"] = semimodule_json(s);
  Json degrees = Json::array();
  std::ostringstream os;
  os << semimodule_line(s);
  os << std::left << std::setw(4) << "n" << std::setw(10) << "|Z^n|" << std::setw(24) << "H^n" << "script H^n\n";
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    CohomologyMonoid weak = h_n(c, n, budget);
    CohomologyMonoid strong = script_h_n(c, n, budget);
    degrees.push_back({{"n", n}, {"H", cohomology_json(weak)}, {"script_H", cohomology_json(strong)}});
    os << std::left << std::setw(4) << n << std::setw(10) << weak.cocycles.size() << std::setw(24) << weak.describe()
       << strong.describe() << "\n";
  }
  r.json["degrees"] = degrees;
  r.text = os.str();
  return r;
}

Report diagram_report(const MSemimodule& s, unsigned n, std::uint64_t budget) {
  throw_if_violated(validate_semimodule(s));
  CochainComplex c(s);
  DiagramReport d = comparison_diagram(c, n, budget);
  Report r;
  r.ok = d.commutes && d.j_surjective && (!d.module || d.h_k_injective);
  r.json = envelope("diagram");
  r.json["semimodule"] = semimodule_json(s);
  r.json["degree"] = n;
  r.json["script_H"] = cohomology_json(d.strong);
  r.json["H"] = cohomology_json(d.weak);
  r.json["H_completion"] = cohomology_json(d.completed);
  r.json["j"] = map_json(d.j);
  r.json["k"] = map_json(d.k_n);
  r.json["h_k"] = map_json(d.h_k);
  r.json["commutes"] = d.commutes;
  r.json["j_surjective"] = d.j_surjective;
  r.json["h_k_injective"] = d.h_k_injective;
  r.json["cancellative"] = d.cancellative;
  r.json["module"] = d.module;
  std::ostringstream os;
  os << semimodule_line(s);
  os << "script H^" << n << " = " << d.strong.describe() << "\n";
  os << "H^" << n << " = " << d.weak.describe() << "\n";
  os << "H^" << n << "(M, K(A)) = " << d.completed.describe() << "\n";
  os << "triangle commutes: " << yes(d.commutes) << "\n";
  os << "j surjective: " << yes(d.j_surjective) << "\n";
  os << "H^" << n << "(M, k_A) injective: " << yes(d.h_k_injective) << "\n";
  os << "A cancellative: " << yes(d.cancellative) << "; A a group: " << yes(d.module) << "\n";
  r.text = os.str();
  return r;
}

Report classify_report(const MSemimodule& s, bool with_oracle, std::uint64_t budget) {
  throw_if_violated(validate_semimodule(s));
  CochainComplex c(s);
  Classification k = classify(s, with_oracle, budget);
  Report r;
  r.json = envelope("extensions classify");
  r.json["semimodule"] = semimodule_json(s);
  r.json["cocycles"] = k.cocycle_count;
  r.json["script_H2"] = cohomology_json(k.strong);
  r.json["H2"] = cohomology_json(k.weak);
  r.json["congruence_classes"] = classes_json(k.congruence_classes, c);
  r.json["similarity_classes"] = classes_json(k.similarity_classes, c);
  r.json["zeta"] = map_json(k.zeta);
  r.json["theta"] = map_json(k.theta);
  r.json["zeta_bijective"] = k.zeta_bijective;
  r.json["zeta_pointed"] = k.zeta_pointed;
  r.json["theta_surjective"] = k.theta_surjective;
  r.json["theta_injective"] = k.theta_injective;
  r.json["congruence_refines_similarity"] = k.congruence_refines_similarity;
  r.json["cancellative"] = k.cancellative;
  std::ostringstream os;
  os << semimodule_line(s);
  os << "2-cocycles: " << k.cocycle_count << "\n";
  os << "script H^2 = " << k.strong.describe() << "; H^2 = " << k.weak.describe() << "\n";
  os << "congruence classes: " << k.congruence_classes.size() << "; similarity classes: " << k.similarity_classes.size()
     << "\n";
  os << class_table("congruence classes", k.congruence_classes, c);
  os << class_table("similarity classes", k.similarity_classes, c);
  os << "script H^2 -> congruence classes bijective: " << yes(k.zeta_bijective)
     << "; class of 0 -> semidirect product: " << yes(k.zeta_pointed) << "\n";
  os << "H^2 -> similarity classes surjective: " << yes(k.theta_surjective)
     << "; injective: " << yes(k.theta_injective) << "\n";
  r.ok = k.zeta_bijective && k.zeta_pointed && k.theta_surjective && k.congruence_refines_similarity;
  if (k.oracle) {
    const auto& o = *k.oracle;
    r.json["oracle"] = {{"tables_checked", o.tables_checked},
                        {"extensions_found", o.extensions_found},
                        {"classes_hit", o.classes_hit},
                        {"all_matched", o.all_matched},
                        {"reproduces", o.reproduces}};
    os << "raw tables: " << o.tables_checked << " checked, " << o.extensions_found << " extensions, "
       << o.classes_hit << " classes reached; reproduces: " << yes(o.reproduces) << "\n";
    r.ok = r.ok && o.reproduces;
  }
  r.text = os.str();
  return r;
}

Report completion_report(const io::Input& in) {
  Carrier c;
  std::optional<MSemimodule> s;
  if (auto* x = std::get_if<Carrier>(&in)) c = *x;
  else if (auto* y = std::get_if<MSemimodule>(&in)) s = *y, c = y->carrier();
  else if (auto* e = std::get_if<SchreierExtension>(&in)) s = e->module, c = e->module.carrier();
  else throw std::invalid_argument("completion needs a carrier or a semimodule");
  if (c.is_finite_table()) throw_if_violated(validate_abelian_monoid(c.table()));
  if (s) throw_if_violated(validate_semimodule(*s));

  Completion k = group_completion(c);
  CarrierUnits u = units(c);
  Report r;
  r.json = envelope("completion");
  r.json["carrier"] = carrier_name(c);
  r.json["completion"] = io::group_json(k.presentation);
  r.json["cancellative"] = c.is_cancellative();
  r.json["group"] = c.is_group();
  std::ostringstream os;
  os << "A = " << carrier_name(c) << "\n";
  os << "K(A) = " << k.presentation.to_string() << "\n";
  if (k.finite) {
    r.json["k_A"] = k.finite->canonical;
    std::vector<std::string> v;
    for (Index a : k.finite->canonical) v.push_back(std::to_string(a));
    os << "k_A: [" << join(v, " ") << "]\n";
  }
  if (u.finite) {
    r.json["units"] = {{"text", table_name(u.finite->group)}, {"inclusion", u.finite->inclusion}};
    os << "U(A) = " << table_name(u.finite->group) << "\n";
  } else {
    r.json["units"] = {{"text", carrier_name(u.group)}};
    os << "U(A) = " << carrier_name(u.group) << "\n";
  }
  os << "cancellative: " << yes(c.is_cancellative()) << "; group: " << yes(c.is_group()) << "\n";
  if (s && s->is_finite()) {
    KModule km = k_module(*s);
    r.json["completion_action"] = km.module.action_rows();
    os << "action on K(A): " << action_name(km.module) << "\n";
  }
  r.text = os.str();
  return r;
}

Report cyclic_report(const CyclicData& d, unsigned n_lo, unsigned n_hi, std::uint64_t budget) {
  Report r;
  r.json = envelope("cyclic");
  r.json["m"] = d.m;
  r.json["completion"] = io::group_json(d.k.isomorphism_type());
  r.json["module"] = d.is_module;
  Json rows = Json::array();
  std::ostringstream os;
  os << "C" << d.m << " acting on " << d.name << ", K(A) = " << d.k.isomorphism_type().to_string() << "\n";
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    CyclicResult c = cyclic_closed_form(d, n, budget);
    rows.push_back(cyclic_result_json(c));
    os << "H^" << n << " = " << c.description << "\n";
  }
  r.json["degrees"] = rows;
  r.text = os.str();
  return r;
}

Report separation_report_of(std::int64_t m, unsigned n_lo, unsigned n_hi) {
  SeparationReport s = separation_report(m, n_lo, n_hi);
  const auto& ex = s.example;
  Report r;
  r.ok = s.separates;
  r.json = envelope("cyclic separation");
  r.json["m"] = m;
  r.json["facts"] = {{"kernel_of_norm", ex.kernel_norm_fact},
                     {"t_minus_one_image", ex.t_minus_one_fact},
                     {"semimodule_valid", ex.semimodule_valid},
                     {"data_matches_semimodule", ex.data_matches_semimodule}};
  Json rows = Json::array();
  std::ostringstream os;
  os << "A = D(" << m << ") + N + Z/" << m << ", t(d, n, p) = (d, n, n + p)\n";
  os << "K(A) = " << ex.k.k.isomorphism_type().to_string() << "; U(A) = Z/" << m << "\n";
  os << "ker N on K(A) = 0 + Z/" << m << " + 0 + Z/" << m << ": " << yes(ex.kernel_norm_fact) << "\n";
  os << "(t-1)K(A) = last Z/" << m << ": " << yes(ex.t_minus_one_fact) << "\n";
  int width = 8;
  for (const auto& row : s.rows) width = std::max(width, static_cast<int>(row.a.description.size()) + 2);
  os << std::left << std::setw(4) << "n" << std::setw(width) << "A" << std::setw(12) << "U(A)" << "K(A)\n";
  for (const auto& row : s.rows) {
    rows.push_back({{"n", row.degree},
                    {"A", cyclic_result_json(row.a)},
                    {"U", cyclic_result_json(row.u)},
                    {"K", cyclic_result_json(row.k)}});
    os << std::left << std::setw(4) << row.degree << std::setw(width) << row.a.description << std::setw(12)
       << row.u.description << row.k.description << "\n";
  }
  r.json["degrees"] = rows;
  r.json["separates"] = s.separates;
  os << "odd degrees separate A from U(A) and K(A): " << yes(s.separates) << "\n";
  r.text = os.str();
  return r;
}

}  // namespace semico::capi
