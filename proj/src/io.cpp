#include "semico/io.hpp"

#include <fstream>
#include <sstream>

namespace semico::io {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Index as_index(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw ParseError(std::string(what) + " must be a non-negative integer");
  return j.get<Index>();
}

std::vector<Index> index_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<Index> out;
  for (const auto& v : j) out.push_back(as_index(v, what));
  return out;
}

std::vector<std::vector<Index>> index_rows(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of rows");
  std::vector<std::vector<Index>> out;
  for (const auto& r : j) out.push_back(index_list(r, what));
  return out;
}

std::vector<Index> flatten(const std::vector<std::vector<Index>>& rows, std::size_t n, const char* what) {
  if (rows.size() != n) throw ParseError(std::string(what) + " must have " + std::to_string(n) + " rows");
  std::vector<Index> t;
  for (const auto& r : rows) {
    if (r.size() != n) throw ParseError(std::string(what) + " rows must have " + std::to_string(n) + " entries");
    t.insert(t.end(), r.begin(), r.end());
  }
  return t;
}

// Product table, first factor most significant.
FiniteAbelianMonoid product(const std::vector<FiniteAbelianMonoid>& parts) {
  FiniteAbelianMonoid acc;
  for (const auto& p : parts) {
    const std::size_t n = acc.size() * p.size();
    std::vector<Index> t(n * n);
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) {
        Index hi = acc.add(a / p.size(), b / p.size());
        Index lo = p.add(a % p.size(), b % p.size());
        t[a * n + b] = static_cast<Index>(hi * p.size() + lo);
      }
    acc = FiniteAbelianMonoid(n, std::move(t));
  }
  return acc;
}

Carrier finite_or_structured(Carrier c) {
  if (auto* g = std::get_if<Carrier::FgAbelianGroup>(&c.variant()); g && g->group.is_finite()) {
    std::vector<FiniteAbelianMonoid> parts;
    for (auto d : g->group.factors) parts.push_back(FiniteAbelianMonoid::cyclic_group(static_cast<std::size_t>(d)));
    return Carrier(Carrier::FiniteTable{product(parts)});
  }
  return c;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(trim(part));
  return out;
}

}  // namespace

FiniteMonoid parse_monoid(const Json& j) {
  if (j.is_string()) {
    const std::string name = trim(j.get<std::string>());
    if (name == "O2") return FiniteMonoid::idempotent_pair();
    if (name.size() > 1 && name[0] == 'C') {
      try {
        std::size_t used = 0;
        long m = std::stol(name.substr(1), &used);
        if (used == name.size() - 1 && m >= 1) return FiniteMonoid::cyclic_group(static_cast<std::size_t>(m));
      } catch (const std::exception&) {
      }
    }
    throw ParseError("unknown monoid name \"" + name + "\"");
  }
  if (j.contains("kind") && j.at("kind") != "monoid") throw ParseError("expected \"kind\": \"monoid\"");
  const std::size_t n = as_index(field(j, "size"), "size");
  auto table = flatten(index_rows(field(j, "op"), "op"), n, "op");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return FiniteMonoid(n, std::move(table), std::move(labels));
}

Carrier parse_carrier(const Json& j) {
  if (j.is_string()) {
    const std::string name = trim(j.get<std::string>());
    if (name == "B" || name == "boolean") return Carrier(Carrier::FiniteTable{FiniteAbelianMonoid::boolean()});
    if (name == "0") return Carrier(Carrier::FiniteTable{FiniteAbelianMonoid()});
    try {
      return finite_or_structured(Carrier::parse_name(name));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError("carrier \"" + name + "\": " + e.what());
    }
  }
  if (j.is_object() && j.contains("sum")) {
    std::vector<Carrier> parts;
    bool all_tables = true;
    for (const auto& s : field(j, "sum")) {
      parts.push_back(parse_carrier(s));
      all_tables = all_tables && parts.back().is_finite_table();
    }
    if (all_tables) {
      std::vector<FiniteAbelianMonoid> tables;
      for (const auto& p : parts) tables.push_back(p.table());
      return Carrier(Carrier::FiniteTable{product(tables)});
    }
    return Carrier::direct_sum(std::move(parts));
  }
  if (j.is_object() && j.contains("name")) return parse_carrier(j.at("name"));
  const std::size_t n = as_index(field(j, "size"), "size");
  return Carrier(Carrier::FiniteTable{FiniteAbelianMonoid(n, flatten(index_rows(field(j, "add"), "add"), n, "add"))});
}

IntMatrix parse_matrix(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j.at(r).is_array() || j.at(r).size() != cols) throw ParseError("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) {
      const Json& v = j.at(r).at(c);
      if (v.is_number_integer()) m(r, c) = Integer(v.get<long>());
      else if (v.is_string()) m(r, c) = Integer(v.get<std::string>());
      else throw ParseError("matrix entries must be integers");
    }
  }
  return m;
}

MSemimodule parse_semimodule(const Json& j) {
  FiniteMonoid m = parse_monoid(field(j, "monoid"));
  Carrier a = parse_carrier(field(j, "carrier"));
  const bool trivial = !j.contains("action") || (j.at("action").is_string() && j.at("action") == "trivial");
  if (a.is_finite_table()) {
    if (trivial) return MSemimodule::trivial(m, a.table());
    return MSemimodule::finite(m, a.table(), index_rows(j.at("action"), "action"));
  }
  if (trivial) return MSemimodule::structured_trivial(m, a);
  std::vector<IntMatrix> mats;
  for (const auto& x : j.at("action")) mats.push_back(parse_matrix(x));
  return MSemimodule::structured(m, a, std::move(mats));
}

CyclicData parse_cyclic(const Json& j) {
  if (j.contains("semimodule")) return cyclic_data_from(parse_semimodule(j.at("semimodule")));
  CyclicData d;
  d.m = field(j, "m").get<std::int64_t>();
  auto moduli = field(j, "moduli").get<std::vector<std::int64_t>>();
  d.k = PresentedGroup::from_moduli(moduli);
  d.t = parse_matrix(field(j, "t"));
  std::vector<IntVector> cols;
  if (j.contains("ugens"))
    for (const auto& c : j.at("ugens")) {
      IntVector v;
      for (const auto& x : c) v.push_back(Integer(x.get<long>()));
      if (v.size() != moduli.size()) throw ParseError("each unit generator needs one entry per coordinate");
      cols.push_back(std::move(v));
    }
  d.ugens = IntMatrix::from_columns(moduli.size(), cols);
  d.is_module = j.value("module", false);
  if (d.is_module) {
    d.contains = [](const IntVector&) { return true; };
  } else if (j.contains("carrier")) {
    Carrier c = parse_carrier(j.at("carrier"));
    if (c.is_finite_table() || c.arity() != moduli.size())
      throw ParseError("membership carrier must be structured with one coordinate per modulus");
    d.contains = [c](const IntVector& v) {
      Element e;
      for (const auto& x : v) {
        if (!x.fits_slong_p()) return false;
        e.push_back(x.get_si());
      }
      return c.contains(c.normalize(e));
    };
  }
  d.name = j.value("name", std::string("input"));
  return d;
}

SchreierExtension parse_extension(const Json& j) {
  SchreierExtension e;
  e.module = parse_semimodule(field(j, "semimodule"));
  e.middle = parse_monoid(field(j, "middle"));
  e.kappa = index_list(field(j, "kappa"), "kappa");
  e.sigma = index_list(field(j, "sigma"), "sigma");
  e.reps = index_list(field(j, "reps"), "reps");
  return e;
}

NormalizedCochain parse_cochain(const Json& j, const CochainComplex& c) {
  const unsigned n = field(j, "n").get<unsigned>();
  const auto& m = c.semimodule().monoid();
  NormalizedCochain f = c.zero(n);
  const std::size_t base = m.size() - 1;
  for (const auto& [key, value] : field(j, "values").items()) {
    auto names = n == 0 ? std::vector<std::string>{} : split(key, ',');
    if (names.size() != n) throw ParseError("cochain key \"" + key + "\" needs " + std::to_string(n) + " labels");
    std::size_t pos = 0;
    bool identity = false;
    for (const auto& name : names) {
      Index x = 0;
      while (x < m.size() && m.label(x) != name) ++x;
      if (x == m.size()) throw ParseError("unknown monoid label \"" + name + "\"");
      if (x == 0) identity = true;
      pos = pos * base + (x == 0 ? 0 : x - 1);
    }
    const Index v = as_index(value, "cochain value");
    if (v >= c.semimodule().carrier_size()) throw ParseError("cochain value out of range");
    if (identity) {
      if (v != 0) throw ValidationError("cochain is not normalized at \"" + key + "\"");
      continue;
    }
    f.values[pos] = v;
  }
  return f;
}

Json monoid_json(const FiniteMonoid& m) {
  return {{"kind", "monoid"}, {"size", m.size()}, {"op", m.rows()}, {"labels", m.labels()}};
}

Json carrier_json(const FiniteAbelianMonoid& a) { return {{"size", a.size()}, {"add", a.rows()}}; }

Json matrix_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).fits_slong_p()) row.push_back(m(r, c).get_si());
      else row.push_back(m(r, c).get_str());
    }
    out.push_back(std::move(row));
  }
  return out;
}

Json group_json(const AbGroupPresentation& g) {
  return {{"text", g.to_string()}, {"free_rank", g.free_rank}, {"factors", g.factors}};
}

Json cochain_json(const CochainComplex& c, const NormalizedCochain& f) {
  const auto& m = c.semimodule().monoid();
  Json values = Json::object();
  for (std::size_t pos = 0; pos < f.values.size(); ++pos) {
    std::string key;
    for (Index x : c.arguments(f.degree, pos)) key += (key.empty() ? "" : ",") + m.label(x);
    values[key] = f.values[pos];
  }
  return {{"n", f.degree}, {"values", values}};
}

std::string cochain_text(const CochainComplex& c, const NormalizedCochain& f) {
  const auto& m = c.semimodule().monoid();
  std::string out;
  for (std::size_t pos = 0; pos < f.values.size(); ++pos) {
    if (f.values[pos] == 0) continue;
    std::string key;
    for (Index x : c.arguments(f.degree, pos)) key += (key.empty() ? "" : ",") + m.label(x);
    out += (out.empty() ? "" : " ") + key + "->" + std::to_string(f.values[pos]);
  }
  return out.empty() ? "0" : out;
}

Json semimodule_json(const MSemimodule& s) {
  return {{"kind", "semimodule"},
          {"monoid", monoid_json(s.monoid())},
          {"carrier", carrier_json(s.table())},
          {"action", s.action_rows()}};
}

Json extension_json(const SchreierExtension& e) {
  return {{"kind", "extension"}, {"semimodule", semimodule_json(e.module)}, {"middle", monoid_json(e.middle)},
          {"kappa", e.kappa},    {"sigma", e.sigma},                         {"reps", e.reps}};
}

Input parse_input(const Json& j) {
  if (j.is_string()) {
    try {
      return parse_monoid(j);
    } catch (const ParseError&) {
      return parse_carrier(j);
    }
  }
  if (!j.is_object()) throw ParseError("input must be a JSON object or a name");
  const std::string kind = j.value("kind", std::string());
  if (kind == "monoid") return parse_monoid(j);
  if (kind == "cyclic") return parse_cyclic(j);
  if (kind == "extension") return parse_extension(j);
  if (kind == "carrier" || j.contains("add") || j.contains("sum")) return parse_carrier(j);
  if (kind == "semimodule" || j.contains("monoid")) return parse_semimodule(j);
  throw ParseError("cannot tell what the input describes; set \"kind\"");
}

Input parse_input_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return parse_input(j);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed input: ") + e.what());
  }
}

Input load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_input_text(ss.str());
}

}  // namespace semico::io
