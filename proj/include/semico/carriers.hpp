#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "semico/abelian_group.hpp"
#include "semico/error.hpp"

namespace semico {

using Index = std::uint32_t;
/// Element of a structured carrier, as integer coordinates.
using Element = std::vector<std::int64_t>;

/// Additive abelian monoid given by its addition table over 0..size-1.
/// Index 0 is the neutral element.
class FiniteAbelianMonoid {
 public:
  /// The trivial monoid {0}.
  FiniteAbelianMonoid();
  /// Throws ParseError on a wrong-sized table or an out-of-range entry.
  FiniteAbelianMonoid(std::size_t size, std::vector<Index> table);

  static FiniteAbelianMonoid from_rows(const std::vector<std::vector<Index>>& rows);
  /// Z/n with a+b = (a+b) mod n.
  static FiniteAbelianMonoid cyclic_group(std::size_t n);
  /// B = {0, 1} with 1 + 1 = 1.
  static FiniteAbelianMonoid boolean();
  /// {0, 1, ..., cap} with addition truncated at cap.
  static FiniteAbelianMonoid truncated_naturals(std::size_t cap);

  std::size_t size() const noexcept { return size_; }
  Index add(Index a, Index b) const { return table_[a * size_ + b]; }
  const std::vector<Index>& table() const noexcept { return table_; }
  std::vector<std::vector<Index>> rows() const;

  friend bool operator==(const FiniteAbelianMonoid& a, const FiniteAbelianMonoid& b) {
    return a.size_ == b.size_ && a.table_ == b.table_;
  }

 private:
  std::size_t size_;
  std::vector<Index> table_;
};

/// Commutativity, associativity and neutrality of 0; the report names the
/// first failing triple.
Violation validate_abelian_monoid(const FiniteAbelianMonoid& a);

bool is_group(const FiniteAbelianMonoid& a);
bool is_cancellative(const FiniteAbelianMonoid& a);

/// Greedy additive generating set, smallest indices first.
std::vector<Index> additive_generators(const FiniteAbelianMonoid& a);

/// Invariant factors of a finite abelian group given by its table.
AbGroupPresentation invariant_factors(const FiniteAbelianMonoid& group);

/// U(A) = { a | a + a' = 0 for some a' } with its inclusion into A.
struct FiniteUnits {
  FiniteAbelianMonoid group;
  std::vector<Index> inclusion;  // U index -> A index
  std::vector<Index> inverse;    // A index of the inverse of inclusion[i]

  /// U index of an A element, or nullopt for non-units.
  std::optional<Index> find(Index a) const;
};

FiniteUnits units(const FiniteAbelianMonoid& a);

/// K(A) as a finite group, pairs (u, v) modulo u + y + z = v + x + z.
struct FiniteCompletion {
  FiniteAbelianMonoid group;
  std::vector<Index> canonical;                    // k_A : a -> [a, 0]
  std::vector<std::pair<Index, Index>> representative;  // least pair per class
  std::vector<Index> pair_class;                   // class of (u, v) at u * |A| + v
  AbGroupPresentation presentation;

  Index class_of(Index u, Index v) const { return pair_class[u * source_size + v]; }
  std::size_t source_size = 0;
};

FiniteCompletion group_completion(const FiniteAbelianMonoid& a);

/// A partition with blocks numbered in order of their least element.
class Congruence {
 public:
  Congruence() = default;
  /// Renumbers arbitrary labels into canonical block numbers.
  static Congruence from_labels(const std::vector<Index>& labels);
  static Congruence discrete(std::size_t n);

  std::size_t element_count() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return block_count_; }
  Index block_of(Index a) const { return block_of_[a]; }
  const std::vector<Index>& labels() const noexcept { return block_of_; }
  std::vector<std::vector<Index>> blocks() const;
  bool related(Index a, Index b) const { return block_of_[a] == block_of_[b]; }

  friend bool operator==(const Congruence& a, const Congruence& b) { return a.block_of_ == b.block_of_; }

 private:
  std::vector<Index> block_of_;
  std::size_t block_count_ = 0;
};

/// Least equivalence containing `seeds` and stable under translation by
/// every element through the table `op` (size n*n, row-major). With
/// `two_sided`, both left and right translations are closed over.
Congruence close_congruence(std::size_t n, const std::vector<Index>& op,
                            const std::vector<std::pair<Index, Index>>& seeds, bool two_sided);

Congruence congruence_closure(const FiniteAbelianMonoid& a, const std::vector<std::pair<Index, Index>>& seeds);

Violation check_congruence(const FiniteAbelianMonoid& a, const Congruence& c);

struct FiniteQuotient {
  FiniteAbelianMonoid monoid;
  std::vector<Index> projection;
};

/// Throws ValidationError when `c` is not compatible with addition.
FiniteQuotient quotient(const FiniteAbelianMonoid& a, const Congruence& c);

/// Coefficient carrier: a finite table or one of the structured infinite
/// families. Structured elements are integer coordinates that coincide with
/// the coordinates of the group completion (free coordinates, then residues).
class Carrier {
 public:
  struct FiniteTable {
    FiniteAbelianMonoid table;
  };
  /// N^rank.
  struct FreeCommutative {
    unsigned rank;
  };
  /// Z^r x Z/d1 x ...; coordinates are r integers then one residue per factor.
  struct FgAbelianGroup {
    AbGroupPresentation group;
  };
  /// {(0,0)} together with {(n, p) : n >= 1, p in Z/m}, inside N + Z/m.
  struct TruncatedD {
    std::int64_t modulus;
  };
  struct DirectSum {
    std::vector<Carrier> summands;
  };
  using Variant = std::variant<FiniteTable, FreeCommutative, FgAbelianGroup, TruncatedD, DirectSum>;

  Carrier() : v_(FiniteTable{FiniteAbelianMonoid()}) {}
  explicit Carrier(Variant v);

  static Carrier finite(FiniteAbelianMonoid table) { return Carrier(FiniteTable{std::move(table)}); }
  static Carrier free_commutative(unsigned rank) { return Carrier(FreeCommutative{rank}); }
  static Carrier fg_group(AbGroupPresentation g) { return Carrier(FgAbelianGroup{std::move(g)}); }
  static Carrier truncated_d(std::int64_t m) { return Carrier(TruncatedD{m}); }
  static Carrier direct_sum(std::vector<Carrier> summands) { return Carrier(DirectSum{std::move(summands)}); }
  /// "N", "N^k", "Z^r x Z/d1 x ...", "D(m)".
  static Carrier parse_name(const std::string& name);

  const Variant& variant() const noexcept { return v_; }
  bool is_finite_table() const noexcept { return std::holds_alternative<FiniteTable>(v_); }
  const FiniteAbelianMonoid& table() const;

  /// Number of integer coordinates of a structured element (1 for tables).
  std::size_t arity() const;
  Element zero() const;
  Element add(const Element& a, const Element& b) const;
  /// Residue coordinates reduced into [0, d).
  Element normalize(const Element& a) const;
  bool contains(const Element& a) const;
  bool equal(const Element& a, const Element& b) const { return normalize(a) == normalize(b); }

  /// Tables, and direct sums of enumerable carriers.
  bool is_enumerable() const;
  /// Finite table of an enumerable carrier; tuple order has the first summand
  /// most significant, so the zero tuple is index 0.
  FiniteAbelianMonoid materialize(std::vector<Element>* elements = nullptr) const;

  bool is_cancellative() const;
  bool is_group() const;

  /// Moduli of the completion coordinates (0 = Z). Structured carriers only.
  std::vector<std::int64_t> completion_moduli() const;
  /// Which coordinates span U(A) (structured carriers only).
  std::vector<bool> unit_coordinates() const;
  /// Additive generators (structured carriers only).
  std::vector<Element> additive_generators() const;
  /// A pseudo-random element with small coordinates (structured carriers only).
  Element random_element(std::mt19937_64& rng) const;

  std::string describe() const;

 private:
  Variant v_;
};

/// Group completion of any carrier. Finite tables are computed by witness
/// enumeration; structured families by rule.
struct Completion {
  AbGroupPresentation presentation;
  Carrier group;
  std::optional<FiniteCompletion> finite;

  /// k_A applied to an element of the source carrier.
  Element canonical(const Element& a) const;
};

Completion group_completion(const Carrier& a);

/// U(A) of any carrier, with an inclusion.
struct CarrierUnits {
  Carrier group;
  std::optional<FiniteUnits> finite;
  std::vector<std::size_t> coordinate_map;  // structured: U coordinate -> A coordinate
  std::size_t source_arity = 0;

  Element include(const Element& u) const;
};

CarrierUnits units(const Carrier& a);
bool is_cancellative(const Carrier& a);

}  // namespace semico
