#include "semico/carriers.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>

namespace semico {

namespace {

std::string triple(Index a, Index b, Index c) {
  std::ostringstream os;
  os << '(' << a << ',' << b << ',' << c << ')';
  return os.str();
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Index{0}); }
  Index find(Index a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  bool unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<Index> parent_;
};

}  // namespace

// ---------------------------------------------------------------------------
// FiniteAbelianMonoid

FiniteAbelianMonoid::FiniteAbelianMonoid() : size_(1), table_{0} {}

FiniteAbelianMonoid::FiniteAbelianMonoid(std::size_t size, std::vector<Index> table)
    : size_(size), table_(std::move(table)) {
  if (size_ == 0) throw ParseError("abelian monoid: size must be positive");
  if (table_.size() != size_ * size_) throw ParseError("abelian monoid: table is not size x size");
  for (Index v : table_)
    if (v >= size_) throw ParseError("abelian monoid: table entry " + std::to_string(v) + " out of range");
}

FiniteAbelianMonoid FiniteAbelianMonoid::from_rows(const std::vector<std::vector<Index>>& rows) {
  std::vector<Index> flat;
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw ParseError("abelian monoid: table is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return FiniteAbelianMonoid(rows.size(), std::move(flat));
}

FiniteAbelianMonoid FiniteAbelianMonoid::cyclic_group(std::size_t n) {
  std::vector<Index> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Index>((a + b) % n);
  return FiniteAbelianMonoid(n, std::move(t));
}

FiniteAbelianMonoid FiniteAbelianMonoid::boolean() { return FiniteAbelianMonoid(2, {0, 1, 1, 1}); }

FiniteAbelianMonoid FiniteAbelianMonoid::truncated_naturals(std::size_t cap) {
  const std::size_t n = cap + 1;
  std::vector<Index> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Index>(std::min(a + b, cap));
  return FiniteAbelianMonoid(n, std::move(t));
}

std::vector<std::vector<Index>> FiniteAbelianMonoid::rows() const {
  std::vector<std::vector<Index>> out(size_);
  for (std::size_t a = 0; a < size_; ++a)
    out[a].assign(table_.begin() + static_cast<std::ptrdiff_t>(a * size_),
                  table_.begin() + static_cast<std::ptrdiff_t>((a + 1) * size_));
  return out;
}

Violation validate_abelian_monoid(const FiniteAbelianMonoid& a) {
  const auto n = static_cast<Index>(a.size());
  for (Index x = 0; x < n; ++x)
    if (a.add(0, x) != x || a.add(x, 0) != x)
      return {"identity fails at " + std::to_string(x) + ": 0 is not neutral"};
  for (Index x = 0; x < n; ++x)
    for (Index y = x + 1; y < n; ++y)
      if (a.add(x, y) != a.add(y, x))
        return {"commutativity fails at (" + std::to_string(x) + "," + std::to_string(y) + ")"};
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z)
        if (a.add(a.add(x, y), z) != a.add(x, a.add(y, z)))
          return {"associativity fails at " + triple(x, y, z)};
  return {};
}

bool is_group(const FiniteAbelianMonoid& a) { return units(a).inclusion.size() == a.size(); }

bool is_cancellative(const FiniteAbelianMonoid& a) {
  const auto n = static_cast<Index>(a.size());
  for (Index x = 0; x < n; ++x) {
    std::vector<bool> seen(n, false);
    for (Index y = 0; y < n; ++y) {
      Index s = a.add(x, y);
      if (seen[s]) return false;
      seen[s] = true;
    }
  }
  return true;
}

std::vector<Index> additive_generators(const FiniteAbelianMonoid& a) {
  const auto n = static_cast<Index>(a.size());
  std::vector<bool> in_span(n, false);
  in_span[0] = true;
  std::vector<Index> gens;
  for (Index g = 1; g < n; ++g) {
    if (in_span[g]) continue;
    gens.push_back(g);
    // Close the span under adding the new generator (and all old ones).
    std::vector<Index> frontier;
    for (Index x = 0; x < n; ++x)
      if (in_span[x]) frontier.push_back(x);
    while (!frontier.empty()) {
      Index x = frontier.back();
      frontier.pop_back();
      for (Index h : gens) {
        Index y = a.add(x, h);
        if (!in_span[y]) {
          in_span[y] = true;
          frontier.push_back(y);
        }
      }
    }
  }
  return gens;
}

AbGroupPresentation invariant_factors(const FiniteAbelianMonoid& group) {
  if (!is_group(group)) throw ValidationError("invariant_factors: table is not a group");
  const std::size_t n = group.size();
  const auto gens = additive_generators(group);
  // Generators e_a for every element; relations e_a + e_g = e_{a+g} and e_0 = 0.
  std::vector<IntVector> rels;
  IntVector zero_rel(n);
  zero_rel[0] = 1;
  rels.push_back(zero_rel);
  for (Index a = 0; a < n; ++a)
    for (Index g : gens) {
      IntVector r(n);
      r[a] += 1;
      r[g] += 1;
      r[group.add(a, g)] -= 1;
      rels.push_back(std::move(r));
    }
  return PresentedGroup(n, IntMatrix::from_columns(n, rels)).isomorphism_type();
}

std::optional<Index> FiniteUnits::find(Index a) const {
  auto it = std::lower_bound(inclusion.begin(), inclusion.end(), a);
  if (it == inclusion.end() || *it != a) return std::nullopt;
  return static_cast<Index>(it - inclusion.begin());
}

FiniteUnits units(const FiniteAbelianMonoid& a) {
  const auto n = static_cast<Index>(a.size());
  FiniteUnits u;
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (a.add(x, y) == 0) {
        u.inclusion.push_back(x);
        u.inverse.push_back(y);
        break;
      }
  const std::size_t k = u.inclusion.size();
  std::vector<Index> t(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto pos = u.find(a.add(u.inclusion[i], u.inclusion[j]));
      if (!pos) throw TheoremMismatch("units: U(A) is not closed under addition");
      t[i * k + j] = *pos;
    }
  u.group = FiniteAbelianMonoid(k, std::move(t));
  return u;
}

FiniteCompletion group_completion(const FiniteAbelianMonoid& a) {
  const auto n = static_cast<Index>(a.size());
  // x ~0 y iff x + z = y + z for some z.
  std::vector<char> stably_equal(static_cast<std::size_t>(n) * n, 0);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z)
        if (a.add(x, z) == a.add(y, z)) {
          stably_equal[x * n + y] = 1;
          break;
        }

  FiniteCompletion c;
  c.source_size = n;
  const std::size_t pairs = static_cast<std::size_t>(n) * n;
  constexpr Index unassigned = ~Index{0};
  c.pair_class.assign(pairs, unassigned);
  // Pairs (a, 0) come first, so classes of k_A(A) are numbered as in A.
  std::vector<std::size_t> order;
  for (Index x = 0; x < n; ++x) order.push_back(static_cast<std::size_t>(x) * n);
  for (std::size_t p = 0; p < pairs; ++p)
    if (p % n != 0) order.push_back(p);
  Index classes = 0;
  for (std::size_t p : order) {
    if (c.pair_class[p] != unassigned) continue;
    const Index u = static_cast<Index>(p / n), v = static_cast<Index>(p % n);
    c.representative.emplace_back(u, v);
    for (std::size_t q = 0; q < pairs; ++q) {
      if (c.pair_class[q] != unassigned) continue;
      const Index x = static_cast<Index>(q / n), y = static_cast<Index>(q % n);
      if (stably_equal[a.add(u, y) * n + a.add(v, x)]) c.pair_class[q] = classes;
    }
    ++classes;
  }
  std::vector<Index> t(static_cast<std::size_t>(classes) * classes);
  for (Index i = 0; i < classes; ++i)
    for (Index j = 0; j < classes; ++j) {
      auto [u1, v1] = c.representative[i];
      auto [u2, v2] = c.representative[j];
      t[i * classes + j] = c.class_of(a.add(u1, u2), a.add(v1, v2));
    }
  c.group = FiniteAbelianMonoid(classes, std::move(t));
  c.canonical.resize(n);
  for (Index x = 0; x < n; ++x) c.canonical[x] = c.class_of(x, 0);
  c.presentation = invariant_factors(c.group);
  return c;
}

// ---------------------------------------------------------------------------
// Congruences

Congruence Congruence::from_labels(const std::vector<Index>& labels) {
  Congruence c;
  c.block_of_.resize(labels.size());
  std::vector<std::pair<Index, Index>> renumber;  // label -> block
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find_if(renumber.begin(), renumber.end(), [&](auto& p) { return p.first == labels[i]; });
    if (it == renumber.end()) {
      renumber.emplace_back(labels[i], static_cast<Index>(renumber.size()));
      c.block_of_[i] = renumber.back().second;
    } else {
      c.block_of_[i] = it->second;
    }
  }
  c.block_count_ = renumber.size();
  return c;
}

Congruence Congruence::discrete(std::size_t n) {
  std::vector<Index> labels(n);
  std::iota(labels.begin(), labels.end(), Index{0});
  return from_labels(labels);
}

std::vector<std::vector<Index>> Congruence::blocks() const {
  std::vector<std::vector<Index>> out(block_count_);
  for (std::size_t i = 0; i < block_of_.size(); ++i) out[block_of_[i]].push_back(static_cast<Index>(i));
  return out;
}

Congruence close_congruence(std::size_t n, const std::vector<Index>& op,
                            const std::vector<std::pair<Index, Index>>& seeds, bool two_sided) {
  UnionFind uf(n);
  std::deque<std::pair<Index, Index>> work(seeds.begin(), seeds.end());
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    if (a >= n || b >= n) throw ParseError("congruence seed out of range");
    if (!uf.unite(a, b)) continue;
    for (std::size_t c = 0; c < n; ++c) {
      work.emplace_back(op[a * n + c], op[b * n + c]);
      if (two_sided) work.emplace_back(op[c * n + a], op[c * n + b]);
    }
  }
  std::vector<Index> labels(n);
  for (Index i = 0; i < n; ++i) labels[i] = uf.find(i);
  return Congruence::from_labels(labels);
}

Congruence congruence_closure(const FiniteAbelianMonoid& a, const std::vector<std::pair<Index, Index>>& seeds) {
  return close_congruence(a.size(), a.table(), seeds, false);
}

Violation check_congruence(const FiniteAbelianMonoid& a, const Congruence& c) {
  if (c.element_count() != a.size()) return {"partition size does not match carrier"};
  for (const auto& block : c.blocks())
    for (std::size_t i = 1; i < block.size(); ++i)
      for (Index z = 0; z < a.size(); ++z)
        if (!c.related(a.add(block[0], z), a.add(block[i], z)))
          return {"not compatible with addition: " + std::to_string(block[0]) + "~" + std::to_string(block[i]) +
                  " but adding " + std::to_string(z) + " separates them"};
  return {};
}

FiniteQuotient quotient(const FiniteAbelianMonoid& a, const Congruence& c) {
  throw_if_violated(check_congruence(a, c));
  const auto blocks = c.blocks();
  const std::size_t k = blocks.size();
  std::vector<Index> t(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) t[i * k + j] = c.block_of(a.add(blocks[i][0], blocks[j][0]));
  return {FiniteAbelianMonoid(k, std::move(t)), c.labels()};
}

// ---------------------------------------------------------------------------
// Carrier

Carrier::Carrier(Variant v) : v_(std::move(v)) {
  if (auto* d = std::get_if<TruncatedD>(&v_); d && d->modulus < 2)
    throw ParseError("D(m) requires m >= 2");
}

Carrier Carrier::parse_name(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  try {
    if (s == "N") return free_commutative(1);
    if (s.rfind("N^", 0) == 0) return free_commutative(static_cast<unsigned>(std::stoul(s.substr(2))));
    if (s.rfind("D(", 0) == 0 && s.back() == ')') return truncated_d(std::stoll(s.substr(2, s.size() - 3)));
  } catch (const std::logic_error&) {
    throw ParseError("malformed carrier name '" + raw + "'");
  }
  return fg_group(AbGroupPresentation::parse(s));
}

const FiniteAbelianMonoid& Carrier::table() const {
  if (auto* t = std::get_if<FiniteTable>(&v_)) return t->table;
  throw Unsupported("carrier " + describe() + " is not a finite table");
}

std::size_t Carrier::arity() const {
  return std::visit(
      [](const auto& c) -> std::size_t {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, FiniteTable>) return 1;
        else if constexpr (std::is_same_v<T, FreeCommutative>) return c.rank;
        else if constexpr (std::is_same_v<T, FgAbelianGroup>) return c.group.free_rank + c.group.factors.size();
        else if constexpr (std::is_same_v<T, TruncatedD>) return 2;
        else {
          std::size_t n = 0;
          for (const auto& s : c.summands) n += s.arity();
          return n;
        }
      },
      v_);
}

Element Carrier::zero() const { return Element(arity(), 0); }

Element Carrier::add(const Element& a, const Element& b) const {
  if (a.size() != arity() || b.size() != arity()) throw std::invalid_argument("Carrier::add: arity mismatch");
  return std::visit(
      [&](const auto& c) -> Element {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, FiniteTable>) {
          return {static_cast<std::int64_t>(c.table.add(static_cast<Index>(a[0]), static_cast<Index>(b[0])))};
        } else if constexpr (std::is_same_v<T, DirectSum>) {
          Element out;
          std::size_t off = 0;
          for (const auto& s : c.summands) {
            const std::size_t k = s.arity();
            Element sa(a.begin() + off, a.begin() + off + k), sb(b.begin() + off, b.begin() + off + k);
            Element r = s.add(sa, sb);
            out.insert(out.end(), r.begin(), r.end());
            off += k;
          }
          return out;
        } else {
          Element out(a.size());
          for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
          return normalize(out);
        }
      },
      v_);
}

Element Carrier::normalize(const Element& a) const {
  return std::visit(
      [&](const auto& c) -> Element {
        using T = std::decay_t<decltype(c)>;
        Element out = a;
        if constexpr (std::is_same_v<T, FgAbelianGroup>) {
          for (std::size_t i = 0; i < c.group.factors.size(); ++i) {
            auto& v = out[c.group.free_rank + i];
            v = mod_floor(v, c.group.factors[i]);
          }
        } else if constexpr (std::is_same_v<T, TruncatedD>) {
          out[1] = mod_floor(out[1], c.modulus);
        } else if constexpr (std::is_same_v<T, DirectSum>) {
          std::size_t off = 0;
          for (const auto& s : c.summands) {
            const std::size_t k = s.arity();
            Element part = s.normalize(Element(a.begin() + off, a.begin() + off + k));
            std::copy(part.begin(), part.end(), out.begin() + off);
            off += k;
          }
        }
        return out;
      },
      v_);
}

bool Carrier::contains(const Element& a) const {
  if (a.size() != arity()) return false;
  return std::visit(
      [&](const auto& c) -> bool {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, FiniteTable>) {
          return a[0] >= 0 && static_cast<std::size_t>(a[0]) < c.table.size();
        } else if constexpr (std::is_same_v<T, FreeCommutative>) {
          return std::all_of(a.begin(), a.end(), [](std::int64_t v) { return v >= 0; });
        } else if constexpr (std::is_same_v<T, FgAbelianGroup>) {
          for (std::size_t i = 0; i < c.group.factors.size(); ++i) {
            auto v = a[c.group.free_rank + i];
            if (v < 0 || v >= c.group.factors[i]) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, TruncatedD>) {
          if (a[0] == 0) return a[1] == 0;
          return a[0] >= 1 && a[1] >= 0 && a[1] < c.modulus;
        } else {
          std::size_t off = 0;
          for (const auto& s : c.summands) {
            const std::size_t k = s.arity();
            if (!s.contains(Element(a.begin() + off, a.begin() + off + k))) return false;
            off += k;
          }
          return true;
        }
      },
      v_);
}

bool Carrier::is_enumerable() const {
  if (is_finite_table()) return true;
  if (auto* s = std::get_if<DirectSum>(&v_))
    return std::all_of(s->summands.begin(), s->summands.end(), [](const Carrier& c) { return c.is_enumerable(); });
  return false;
}

FiniteAbelianMonoid Carrier::materialize(std::vector<Element>* elements) const {
  if (!is_enumerable()) throw Unsupported("carrier " + describe() + " is not enumerable");
  if (auto* t = std::get_if<FiniteTable>(&v_)) {
    if (elements) {
      elements->clear();
      for (std::size_t i = 0; i < t->table.size(); ++i) elements->push_back({static_cast<std::int64_t>(i)});
    }
    return t->table;
  }
  const auto& summands = std::get<DirectSum>(v_).summands;
  std::vector<std::vector<Element>> parts(summands.size());
  std::vector<FiniteAbelianMonoid> tables;
  for (std::size_t i = 0; i < summands.size(); ++i) tables.push_back(summands[i].materialize(&parts[i]));
  std::size_t total = 1;
  for (const auto& t : tables) total *= t.size();
  // Mixed radix, first summand most significant.
  auto digits_of = [&](std::size_t idx) {
    std::vector<Index> d(tables.size());
    for (std::size_t i = tables.size(); i-- > 0;) {
      d[i] = static_cast<Index>(idx % tables[i].size());
      idx /= tables[i].size();
    }
    return d;
  };
  auto index_of = [&](const std::vector<Index>& d) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < tables.size(); ++i) idx = idx * tables[i].size() + d[i];
    return static_cast<Index>(idx);
  };
  std::vector<Index> table(total * total);
  for (std::size_t x = 0; x < total; ++x) {
    auto dx = digits_of(x);
    for (std::size_t y = 0; y < total; ++y) {
      auto dy = digits_of(y);
      std::vector<Index> ds(tables.size());
      for (std::size_t i = 0; i < tables.size(); ++i) ds[i] = tables[i].add(dx[i], dy[i]);
      table[x * total + y] = index_of(ds);
    }
  }
  if (elements) {
    elements->clear();
    for (std::size_t x = 0; x < total; ++x) {
      auto dx = digits_of(x);
      Element e;
      for (std::size_t i = 0; i < tables.size(); ++i) e.insert(e.end(), parts[i][dx[i]].begin(), parts[i][dx[i]].end());
      elements->push_back(std::move(e));
    }
  }
  return FiniteAbelianMonoid(total, std::move(table));
}

bool Carrier::is_cancellative() const {
  return std::visit(
      [](const auto& c) -> bool {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, FiniteTable>) return semico::is_cancellative(c.table);
        else if constexpr (std::is_same_v<T, DirectSum>)
          return std::all_of(c.summands.begin(), c.summands.end(), [](const Carrier& s) { return s.is_cancellative(); });
        else return true;
      },
      v_);
}

bool Carrier::is_group() const {
  return std::visit(
      [](const auto& c) -> bool {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, FiniteTable>) return semico::is_group(c.table);
        else if constexpr (std::is_same_v<T, FreeCommutative>) return c.rank == 0;
        else if constexpr (std::is_same_v<T, FgAbelianGroup>) return true;
        else if constexpr (std::is_same_v<T, TruncatedD>) return false;
        else return std::all_of(c.summands.begin(), c.summands.end(), [](const Carrier& s) { return s.is_group(); });
      },
      v_);
}

std::vector<std::int64_t> Carrier::completion_moduli() const {
  return std::visit(
      [this](const auto& c) -> std::vector<std::int64_t> {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, FiniteTable>) {
          throw Unsupported("completion coordinates are not defined for table carrier " + describe());
        } else if constexpr (std::is_same_v<T, FreeCommutative>) {
          return std::vector<std::int64_t>(c.rank, 0);
        } else if constexpr (std::is_same_v<T, FgAbelianGroup>) {
          std::vector<std::int64_t> m(c.group.free_rank, 0);
          m.insert(m.end(), c.group.factors.begin(), c.group.factors.end());
          return m;
        } else if constexpr (std::is_same_v<T, TruncatedD>) {
          return {0, c.modulus};
        } else {
          std::vector<std::int64_t> m;
          for (const auto& s : c.summands) {
            auto part = s.completion_moduli();
            m.insert(m.end(), part.begin(), part.end());
          }
          return m;
        }
      },
      v_);
}

std::vector<bool> Carrier::unit_coordinates() const {
  return std::visit(
      [this](const auto& c) -> std::vector<bool> {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, FiniteTable>) {
          throw Unsupported("unit coordinates are not defined for table carrier " + describe());
        } else if constexpr (std::is_same_v<T, FgAbelianGroup>) {
          return std::vector<bool>(arity(), true);
        } else if constexpr (std::is_same_v<T, DirectSum>) {
          std::vector<bool> m;
          for (const auto& s : c.summands) {
            auto part = s.unit_coordinates();
            m.insert(m.end(), part.begin(), part.end());
          }
          return m;
        } else {
          return std::vector<bool>(arity(), false);
        }
      },
      v_);
}

std::vector<Element> Carrier::additive_generators() const {
  const std::size_t n = arity();
  auto unit = [n](std::size_t i, std::int64_t v) {
    Element e(n, 0);
    e[i] = v;
    return e;
  };
  return std::visit(
      [&](const auto& c) -> std::vector<Element> {
        using T = std::decay_t<decltype(c)>;
        std::vector<Element> out;
        if constexpr (std::is_same_v<T, FiniteTable>) {
          for (Index g : semico::additive_generators(c.table)) out.push_back({static_cast<std::int64_t>(g)});
        } else if constexpr (std::is_same_v<T, FreeCommutative>) {
          for (std::size_t i = 0; i < n; ++i) out.push_back(unit(i, 1));
        } else if constexpr (std::is_same_v<T, FgAbelianGroup>) {
          for (std::size_t i = 0; i < c.group.free_rank; ++i) {
            out.push_back(unit(i, 1));
            out.push_back(unit(i, -1));
          }
          for (std::size_t i = c.group.free_rank; i < n; ++i) out.push_back(unit(i, 1));
        } else if constexpr (std::is_same_v<T, TruncatedD>) {
          for (std::int64_t p = 0; p < c.modulus; ++p) out.push_back({1, p});
        } else {
          std::size_t off = 0;
          for (const auto& s : c.summands) {
            for (const auto& g : s.additive_generators()) {
              Element e(n, 0);
              std::copy(g.begin(), g.end(), e.begin() + off);
              out.push_back(std::move(e));
            }
            off += s.arity();
          }
        }
        return out;
      },
      v_);
}

Element Carrier::random_element(std::mt19937_64& rng) const {
  auto uniform = [&rng](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  return std::visit(
      [&](const auto& c) -> Element {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, FiniteTable>) {
          return {uniform(0, static_cast<std::int64_t>(c.table.size()) - 1)};
        } else if constexpr (std::is_same_v<T, FreeCommutative>) {
          Element e(c.rank);
          for (auto& v : e) v = uniform(0, 9);
          return e;
        } else if constexpr (std::is_same_v<T, FgAbelianGroup>) {
          Element e;
          for (unsigned i = 0; i < c.group.free_rank; ++i) e.push_back(uniform(-9, 9));
          for (auto d : c.group.factors) e.push_back(uniform(0, d - 1));
          return e;
        } else if constexpr (std::is_same_v<T, TruncatedD>) {
          std::int64_t n = uniform(0, 9);
          return {n, n == 0 ? 0 : uniform(0, c.modulus - 1)};
        } else {
          Element e;
          for (const auto& s : c.summands) {
            auto part = s.random_element(rng);
            e.insert(e.end(), part.begin(), part.end());
          }
          return e;
        }
      },
      v_);
}

std::string Carrier::describe() const {
  return std::visit(
      [](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, FiniteTable>) return "table(" + std::to_string(c.table.size()) + ")";
        else if constexpr (std::is_same_v<T, FreeCommutative>) return c.rank == 1 ? "N" : "N^" + std::to_string(c.rank);
        else if constexpr (std::is_same_v<T, FgAbelianGroup>) return c.group.to_string();
        else if constexpr (std::is_same_v<T, TruncatedD>) return "D(" + std::to_string(c.modulus) + ")";
        else {
          std::string s = "(";
          for (std::size_t i = 0; i < c.summands.size(); ++i) {
            if (i) s += " + ";
            s += c.summands[i].describe();
          }
          return s + ")";
        }
      },
      v_);
}

// ---------------------------------------------------------------------------
// Completion and units of arbitrary carriers

Element Completion::canonical(const Element& a) const {
  if (finite) return {static_cast<std::int64_t>(finite->canonical.at(static_cast<std::size_t>(a.at(0))))};
  return group.normalize(a);
}

namespace {

Carrier structured_completion(const Carrier& a) {
  return std::visit(
      [&](const auto& c) -> Carrier {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Carrier::FiniteTable>) {
          throw Unsupported("mixed table/structured direct sums are not supported");
        } else if constexpr (std::is_same_v<T, Carrier::FreeCommutative>) {
          return Carrier::fg_group(AbGroupPresentation{c.rank, {}, {}});
        } else if constexpr (std::is_same_v<T, Carrier::FgAbelianGroup>) {
          return a;
        } else if constexpr (std::is_same_v<T, Carrier::TruncatedD>) {
          return Carrier::fg_group(AbGroupPresentation{1, {c.modulus}, {}});
        } else {
          std::vector<Carrier> parts;
          for (const auto& s : c.summands) parts.push_back(structured_completion(s));
          return Carrier::direct_sum(std::move(parts));
        }
      },
      a.variant());
}

Carrier structured_units(const Carrier& a) {
  return std::visit(
      [&](const auto& c) -> Carrier {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Carrier::FiniteTable>) {
          throw Unsupported("mixed table/structured direct sums are not supported");
        } else if constexpr (std::is_same_v<T, Carrier::FgAbelianGroup>) {
          return a;
        } else if constexpr (std::is_same_v<T, Carrier::DirectSum>) {
          std::vector<Carrier> parts;
          for (const auto& s : c.summands) parts.push_back(structured_units(s));
          return Carrier::direct_sum(std::move(parts));
        } else {
          return Carrier::fg_group(AbGroupPresentation{});
        }
      },
      a.variant());
}

std::vector<Integer> orders_from_moduli(const std::vector<std::int64_t>& moduli) {
  std::vector<Integer> orders;
  for (auto m : moduli) orders.emplace_back(static_cast<long>(m));
  return orders;
}

}  // namespace

Completion group_completion(const Carrier& a) {
  Completion out;
  if (a.is_finite_table()) {
    FiniteCompletion fc = group_completion(a.table());
    out.presentation = fc.presentation;
    out.group = Carrier::finite(fc.group);
    out.finite = std::move(fc);
    return out;
  }
  if (a.is_enumerable()) throw Unsupported("completion of an enumerable direct sum: materialize the carrier first");
  out.group = structured_completion(a);
  out.presentation = AbGroupPresentation::from_cyclic_orders(orders_from_moduli(a.completion_moduli()));
  return out;
}

Element CarrierUnits::include(const Element& u) const {
  if (finite) return {static_cast<std::int64_t>(finite->inclusion.at(static_cast<std::size_t>(u.at(0))))};
  Element e(source_arity, 0);
  for (std::size_t i = 0; i < coordinate_map.size(); ++i) e[coordinate_map[i]] = u.at(i);
  return e;
}

CarrierUnits units(const Carrier& a) {
  CarrierUnits out;
  out.source_arity = a.arity();
  if (a.is_finite_table()) {
    FiniteUnits fu = units(a.table());
    out.group = Carrier::finite(fu.group);
    out.finite = std::move(fu);
    return out;
  }
  if (a.is_enumerable()) throw Unsupported("units of an enumerable direct sum: materialize the carrier first");
  out.group = structured_units(a);
  auto mask = a.unit_coordinates();
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) out.coordinate_map.push_back(i);
  return out;
}

bool is_cancellative(const Carrier& a) { return a.is_cancellative(); }

}  // namespace semico
