#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semico/integer_matrix.hpp"

namespace semico {

/// Isomorphism type of a finitely generated abelian group:
/// Z^free_rank x Z/d1 x ... x Z/ds with d1 | d2 | ... and every di >= 2.
struct AbGroupPresentation {
  unsigned free_rank = 0;
  std::vector<std::int64_t> factors;
  std::vector<std::string> labels;  // optional generator names

  bool is_trivial() const noexcept { return free_rank == 0 && factors.empty(); }
  bool is_finite() const noexcept { return free_rank == 0; }
  /// Group order, 0 when infinite.
  std::uint64_t order() const;
  bool divisibility_chain() const;
  std::string to_string() const;

  /// Canonical form from arbitrary cyclic orders (0 meaning Z); 1s dropped.
  static AbGroupPresentation from_cyclic_orders(const std::vector<Integer>& orders);
  /// Parses "0", "Z", "Z^2 x Z/2 x Z/6" (whitespace-insensitive).
  static AbGroupPresentation parse(const std::string& text);

  friend bool operator==(const AbGroupPresentation& a, const AbGroupPresentation& b) {
    return a.free_rank == b.free_rank && a.factors == b.factors;
  }
};

/// A finitely presented abelian group Z^dim / <relation columns>.
/// Subgroups are handled through generator matrices in the ambient Z^dim.
class PresentedGroup {
 public:
  PresentedGroup() = default;
  PresentedGroup(std::size_t dim, IntMatrix relations);

  /// Z/m1 x Z/m2 x ... with modulus 0 meaning a free coordinate.
  static PresentedGroup from_moduli(const std::vector<std::int64_t>& moduli);

  std::size_t dim() const noexcept { return dim_; }
  const IntMatrix& relations() const noexcept { return relations_; }

  AbGroupPresentation isomorphism_type() const;

  /// Generators (columns) of { x in Z^dim : endo(x) in relations }, the
  /// preimage of the kernel of `endo`; always contains the relation lattice.
  IntMatrix kernel_of(const IntMatrix& endo) const;
  /// Generators of endo(Z^dim) + relations.
  IntMatrix image_of(const IntMatrix& endo) const;
  /// Generators of <gens> + relations.
  IntMatrix span_with_relations(const IntMatrix& gens) const;

  /// Does x lie in <gens> + relations?
  bool contains(const IntMatrix& gens, const IntVector& x) const;
  /// Is <sub> + relations contained in <super> + relations?
  bool subgroup_le(const IntMatrix& sub, const IntMatrix& super) const;
  bool same_subgroup(const IntMatrix& a, const IntMatrix& b) const;
  /// x == y in the presented group.
  bool equal(const IntVector& x, const IntVector& y) const;

  /// Isomorphism type of (<upper> + R) / (<lower> + R); lower must be inside upper.
  AbGroupPresentation subquotient(const IntMatrix& upper, const IntMatrix& lower) const;

  /// An endomorphism given by its matrix on Z^dim respects the relations.
  bool respects_relations(const IntMatrix& endo) const;

 private:
  std::size_t dim_ = 0;
  IntMatrix relations_;
};

}  // namespace semico
