#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semico/carriers.hpp"

namespace semico {

/// Finite monoid by Cayley table over 0..size-1; index 0 is the identity.
/// Written multiplicatively when it plays M, additively when it is the
/// middle object of an extension.
class FiniteMonoid {
 public:
  FiniteMonoid();
  /// Throws ParseError on shape problems; axioms are checked by validate_monoid.
  FiniteMonoid(std::size_t size, std::vector<Index> table, std::vector<std::string> labels = {});

  static FiniteMonoid from_rows(const std::vector<std::vector<Index>>& rows);
  /// C_m = {1, t, ..., t^(m-1)} with index i standing for t^i.
  static FiniteMonoid cyclic_group(std::size_t m);
  /// O_2 = {1, z} with z*z = z.
  static FiniteMonoid idempotent_pair();
  /// The additive monoid of A viewed as a monoid.
  static FiniteMonoid from_abelian(const FiniteAbelianMonoid& a);

  std::size_t size() const noexcept { return size_; }
  Index op(Index a, Index b) const { return table_[a * size_ + b]; }
  const std::vector<Index>& table() const noexcept { return table_; }
  std::vector<std::vector<Index>> rows() const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Index a) const { return labels_.at(a); }
  FiniteMonoid with_labels(std::vector<std::string> labels) const;

  friend bool operator==(const FiniteMonoid& a, const FiniteMonoid& b) {
    return a.size_ == b.size_ && a.table_ == b.table_;
  }

 private:
  std::size_t size_;
  std::vector<Index> table_;
  std::vector<std::string> labels_;
};

Violation validate_monoid(const FiniteMonoid& s);

bool is_commutative(const FiniteMonoid& s);

struct Invertibles {
  std::vector<Index> elements;  // ascending
  std::vector<Index> inverse;   // inverse[i] is the inverse of elements[i]
};

Invertibles invertible_elements(const FiniteMonoid& s);

bool is_group(const FiniteMonoid& s);

/// f(1) = 1 and f(ab) = f(a) f(b) on all pairs.
bool is_hom(const std::vector<Index>& f, const FiniteMonoid& source, const FiniteMonoid& target);

bool is_injective(const std::vector<Index>& f);
bool is_surjective(const std::vector<Index>& f, std::size_t target_size);

/// Greedy generating set: scan indices, keep those outside the submonoid
/// generated so far.
std::vector<Index> generators(const FiniteMonoid& s);

/// Every monoid homomorphism source -> target, in lexicographic order of the
/// generator images. Images are fixed on generators and propagated, so the
/// search visits |target|^|generators| candidates.
std::vector<std::vector<Index>> enumerate_homs(const FiniteMonoid& source, const FiniteMonoid& target);

std::optional<std::vector<Index>> find_isomorphism(const FiniteMonoid& a, const FiniteMonoid& b);

Congruence monoid_congruence_closure(const FiniteMonoid& s, const std::vector<std::pair<Index, Index>>& seeds);

/// Two-sided compatibility: a~a', b~b' implies ab ~ a'b'.
Violation check_monoid_congruence(const FiniteMonoid& s, const Congruence& c);

struct MonoidQuotient {
  FiniteMonoid monoid;
  std::vector<Index> projection;
};

/// Throws ValidationError on incompatible partitions.
MonoidQuotient monoid_quotient(const FiniteMonoid& s, const Congruence& c);

/// Isomorphism invariant: sorted list of (index, period) of each element's
/// cyclic submonoid, e.g. "[(1,1) (1,2) (1,4) (1,4)]".
std::string order_profile(const FiniteMonoid& s);

/// An element whose powers exhaust a group s, when s is cyclic.
std::optional<Index> cyclic_generator(const FiniteMonoid& s);

}  // namespace semico
