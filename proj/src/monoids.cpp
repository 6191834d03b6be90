#include "semico/monoids.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace semico {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> l(n);
  for (std::size_t i = 0; i < n; ++i) l[i] = std::to_string(i);
  return l;
}

}  // namespace

FiniteMonoid::FiniteMonoid() : size_(1), table_{0}, labels_{"1"} {}

FiniteMonoid::FiniteMonoid(std::size_t size, std::vector<Index> table, std::vector<std::string> labels)
    : size_(size), table_(std::move(table)), labels_(std::move(labels)) {
  if (size_ == 0) throw ParseError("monoid: size must be positive");
  if (table_.size() != size_ * size_) throw ParseError("monoid: table is not size x size");
  for (Index v : table_)
    if (v >= size_) throw ParseError("monoid: table entry " + std::to_string(v) + " out of range");
  if (labels_.empty()) labels_ = default_labels(size_);
  if (labels_.size() != size_) throw ParseError("monoid: label count does not match size");
}

FiniteMonoid FiniteMonoid::from_rows(const std::vector<std::vector<Index>>& rows) {
  std::vector<Index> flat;
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw ParseError("monoid: table is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return FiniteMonoid(rows.size(), std::move(flat));
}

FiniteMonoid FiniteMonoid::cyclic_group(std::size_t m) {
  std::vector<Index> t(m * m);
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = i == 0 ? "1" : i == 1 ? "t" : "t^" + std::to_string(i);
    for (std::size_t j = 0; j < m; ++j) t[i * m + j] = static_cast<Index>((i + j) % m);
  }
  return FiniteMonoid(m, std::move(t), std::move(labels));
}

FiniteMonoid FiniteMonoid::idempotent_pair() { return FiniteMonoid(2, {0, 1, 1, 1}, {"1", "z"}); }

FiniteMonoid FiniteMonoid::from_abelian(const FiniteAbelianMonoid& a) { return FiniteMonoid(a.size(), a.table()); }

std::vector<std::vector<Index>> FiniteMonoid::rows() const {
  std::vector<std::vector<Index>> out(size_);
  for (std::size_t a = 0; a < size_; ++a)
    out[a].assign(table_.begin() + static_cast<std::ptrdiff_t>(a * size_),
                  table_.begin() + static_cast<std::ptrdiff_t>((a + 1) * size_));
  return out;
}

FiniteMonoid FiniteMonoid::with_labels(std::vector<std::string> labels) const {
  return FiniteMonoid(size_, table_, std::move(labels));
}

Violation validate_monoid(const FiniteMonoid& s) {
  const auto n = static_cast<Index>(s.size());
  for (Index x = 0; x < n; ++x)
    if (s.op(0, x) != x || s.op(x, 0) != x)
      return {"identity fails at " + std::to_string(x) + ": index 0 is not a two-sided identity"};
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z)
        if (s.op(s.op(x, y), z) != s.op(x, s.op(y, z)))
          return {"associativity fails at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                  std::to_string(z) + ")"};
  return {};
}

bool is_commutative(const FiniteMonoid& s) {
  for (Index x = 0; x < s.size(); ++x)
    for (Index y = x + 1; y < s.size(); ++y)
      if (s.op(x, y) != s.op(y, x)) return false;
  return true;
}

Invertibles invertible_elements(const FiniteMonoid& s) {
  Invertibles out;
  for (Index u = 0; u < s.size(); ++u)
    for (Index v = 0; v < s.size(); ++v)
      if (s.op(u, v) == 0 && s.op(v, u) == 0) {
        out.elements.push_back(u);
        out.inverse.push_back(v);
        break;
      }
  return out;
}

bool is_group(const FiniteMonoid& s) { return invertible_elements(s).elements.size() == s.size(); }

bool is_hom(const std::vector<Index>& f, const FiniteMonoid& source, const FiniteMonoid& target) {
  if (f.size() != source.size()) return false;
  for (Index v : f)
    if (v >= target.size()) return false;
  if (f[0] != 0) return false;
  for (Index a = 0; a < source.size(); ++a)
    for (Index b = 0; b < source.size(); ++b)
      if (f[source.op(a, b)] != target.op(f[a], f[b])) return false;
  return true;
}

bool is_injective(const std::vector<Index>& f) {
  std::vector<Index> sorted = f;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool is_surjective(const std::vector<Index>& f, std::size_t target_size) {
  std::vector<bool> hit(target_size, false);
  for (Index v : f) hit.at(v) = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::vector<Index> generators(const FiniteMonoid& s) {
  const auto n = static_cast<Index>(s.size());
  std::vector<bool> reached(n, false);
  reached[0] = true;
  std::vector<Index> gens;
  for (Index g = 1; g < n; ++g) {
    if (reached[g]) continue;
    gens.push_back(g);
    std::vector<Index> frontier;
    for (Index x = 0; x < n; ++x)
      if (reached[x]) frontier.push_back(x);
    while (!frontier.empty()) {
      Index x = frontier.back();
      frontier.pop_back();
      for (Index h : gens)
        for (Index y : {s.op(x, h), s.op(h, x)})
          if (!reached[y]) {
            reached[y] = true;
            frontier.push_back(y);
          }
    }
  }
  return gens;
}

namespace {

// Extends generator images to a full map along right multiplication by
// generators; nullopt on a conflict.
std::optional<std::vector<Index>> propagate(const FiniteMonoid& source, const FiniteMonoid& target,
                                            const std::vector<Index>& gens, const std::vector<Index>& images) {
  constexpr Index unset = ~Index{0};
  std::vector<Index> f(source.size(), unset);
  f[0] = 0;
  std::vector<Index> frontier{0};
  while (!frontier.empty()) {
    Index x = frontier.back();
    frontier.pop_back();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Index y = source.op(x, gens[i]);
      Index fy = target.op(f[x], images[i]);
      if (f[y] == unset) {
        f[y] = fy;
        frontier.push_back(y);
      } else if (f[y] != fy) {
        return std::nullopt;
      }
    }
  }
  if (std::find(f.begin(), f.end(), unset) != f.end()) return std::nullopt;
  return f;
}

}  // namespace

std::vector<std::vector<Index>> enumerate_homs(const FiniteMonoid& source, const FiniteMonoid& target) {
  const auto gens = generators(source);
  std::vector<std::vector<Index>> out;
  std::vector<Index> images(gens.size(), 0);
  for (;;) {
    if (auto f = propagate(source, target, gens, images); f && is_hom(*f, source, target)) out.push_back(*f);
    std::size_t i = gens.size();
    while (i > 0) {
      --i;
      if (++images[i] < target.size()) break;
      images[i] = 0;
      if (i == 0) return out;
    }
    if (gens.empty()) return out;
  }
}

std::optional<std::vector<Index>> find_isomorphism(const FiniteMonoid& a, const FiniteMonoid& b) {
  if (a.size() != b.size()) return std::nullopt;
  for (auto& f : enumerate_homs(a, b))
    if (is_injective(f)) return f;
  return std::nullopt;
}

Congruence monoid_congruence_closure(const FiniteMonoid& s, const std::vector<std::pair<Index, Index>>& seeds) {
  return close_congruence(s.size(), s.table(), seeds, true);
}

Violation check_monoid_congruence(const FiniteMonoid& s, const Congruence& c) {
  if (c.element_count() != s.size()) return {"partition size does not match monoid"};
  for (const auto& block : c.blocks())
    for (std::size_t i = 1; i < block.size(); ++i)
      for (Index z = 0; z < s.size(); ++z) {
        if (!c.related(s.op(block[0], z), s.op(block[i], z)))
          return {"not right-compatible: " + std::to_string(block[0]) + "~" + std::to_string(block[i]) +
                  " separated by right factor " + std::to_string(z)};
        if (!c.related(s.op(z, block[0]), s.op(z, block[i])))
          return {"not left-compatible: " + std::to_string(block[0]) + "~" + std::to_string(block[i]) +
                  " separated by left factor " + std::to_string(z)};
      }
  return {};
}

MonoidQuotient monoid_quotient(const FiniteMonoid& s, const Congruence& c) {
  throw_if_violated(check_monoid_congruence(s, c));
  const auto blocks = c.blocks();
  const std::size_t k = blocks.size();
  std::vector<Index> t(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) t[i * k + j] = c.block_of(s.op(blocks[i][0], blocks[j][0]));
  return {FiniteMonoid(k, std::move(t)), c.labels()};
}

std::string order_profile(const FiniteMonoid& s) {
  std::vector<std::pair<std::size_t, std::size_t>> profile;
  for (Index x = 0; x < s.size(); ++x) {
    std::map<Index, std::size_t> first_seen;
    Index p = x;
    std::size_t k = 1;
    while (!first_seen.count(p)) {
      first_seen[p] = k++;
      p = s.op(p, x);
    }
    const std::size_t index = first_seen[p];
    profile.emplace_back(index, k - index);
  }
  std::sort(profile.begin(), profile.end());
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i) os << ' ';
    os << '(' << profile[i].first << ',' << profile[i].second << ')';
  }
  os << ']';
  return os.str();
}

std::optional<Index> cyclic_generator(const FiniteMonoid& s) {
  if (!is_group(s)) return std::nullopt;
  for (Index g = 0; g < s.size(); ++g) {
    std::vector<bool> seen(s.size(), false);
    Index p = 0;
    std::size_t count = 0;
    do {
      if (!seen[p]) ++count;
      seen[p] = true;
      p = s.op(p, g);
    } while (p != 0);
    if (count == s.size()) return g;
  }
  return std::nullopt;
}

}  // namespace semico
