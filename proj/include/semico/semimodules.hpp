#pragma once

#include <optional>
#include <vector>

#include "semico/carriers.hpp"
#include "semico/integer_matrix.hpp"
#include "semico/monoids.hpp"

namespace semico {

/// A carrier with an action of a finite monoid by additive endomorphisms.
/// Finite tables store the action as a table, x * |A| + a -> xa. Structured
/// carriers store one integer matrix per monoid element acting on the
/// completion coordinates; the carrier must be preserved by each matrix.
class MSemimodule {
 public:
  MSemimodule() = default;

  /// action[x][a] = xa. Throws ParseError on shape problems.
  static MSemimodule finite(FiniteMonoid m, FiniteAbelianMonoid a, const std::vector<std::vector<Index>>& action);
  static MSemimodule trivial(FiniteMonoid m, FiniteAbelianMonoid a);
  /// One arity x arity matrix per monoid element.
  static MSemimodule structured(FiniteMonoid m, Carrier a, std::vector<IntMatrix> matrices);
  static MSemimodule structured_trivial(FiniteMonoid m, Carrier a);

  const FiniteMonoid& monoid() const noexcept { return m_; }
  const Carrier& carrier() const noexcept { return a_; }
  bool is_finite() const noexcept { return a_.is_finite_table(); }
  /// Finite carrier table; throws Unsupported for structured carriers.
  const FiniteAbelianMonoid& table() const { return a_.table(); }
  std::size_t carrier_size() const { return a_.table().size(); }

  Index act(Index x, Index a) const { return action_[x * a_.table().size() + a]; }
  Element act(Index x, const Element& a) const;
  const std::vector<Index>& action_table() const noexcept { return action_; }
  std::vector<std::vector<Index>> action_rows() const;
  const std::vector<IntMatrix>& matrices() const noexcept { return matrices_; }

  bool is_module() const { return a_.is_group(); }
  bool has_trivial_action() const;

 private:
  FiniteMonoid m_;
  Carrier a_;
  std::vector<Index> action_;
  std::vector<IntMatrix> matrices_;
};

/// Monoid axioms, carrier axioms, then the action axioms 1a = a, x0 = 0,
/// x(a+a') = xa + xa', (xy)a = x(ya). Exhaustive for finite carriers; for
/// structured carriers the additive generators plus 100 seeded random
/// elements are checked, together with well-definedness of each matrix
/// modulo the completion relations and closure of the carrier.
Violation validate_semimodule(const MSemimodule& s);

/// Carrier map between finite semimodules over the same monoid.
struct SemimoduleHom {
  std::vector<Index> map;
};

/// f(0) = 0, f(a+b) = f(a)+f(b), f(xa) = x f(a).
Violation check_semimodule_hom(const MSemimodule& source, const MSemimodule& target, const SemimoduleHom& f);

SemimoduleHom compose(const SemimoduleHom& second, const SemimoduleHom& first);
SemimoduleHom identity_hom(std::size_t size);

/// Every homomorphism of finite semimodules source -> target.
std::vector<SemimoduleHom> enumerate_semimodule_homs(const MSemimodule& source, const MSemimodule& target);

struct KModule {
  MSemimodule module;
  /// k_A : A -> K(A) on finite carriers.
  std::optional<SemimoduleHom> k;
  Completion completion;
};

/// x[a1, a2] = [xa1, xa2] on K(A).
KModule k_module(const MSemimodule& s);

struct USubmodule {
  MSemimodule module;
  /// Inclusion U(A) -> A on finite carriers.
  std::optional<SemimoduleHom> inclusion;
  CarrierUnits units;
};

/// Restriction of the action to U(A); throws ValidationError if some x
/// carries a unit outside U(A).
USubmodule u_subsemimodule(const MSemimodule& s);

struct SemidirectProduct {
  FiniteMonoid monoid;       // index of (a, x) is x * |A| + a
  std::vector<Index> iota;   // a -> (a, 1)
  std::vector<Index> pi;     // (a, x) -> x
};

/// (a, x) + (b, y) = (a + xb, xy) on A x M.
SemidirectProduct semidirect_product(const MSemimodule& s);

/// End(A) of a finite abelian monoid under composition, identity at index 0.
struct EndomorphismMonoid {
  FiniteMonoid monoid;
  std::vector<std::vector<Index>> maps;
};

EndomorphismMonoid endomorphism_monoid(const FiniteAbelianMonoid& a);

/// Every action of m on a, as semimodules, in a fixed order.
std::vector<MSemimodule> enumerate_actions(const FiniteMonoid& m, const FiniteAbelianMonoid& a);

}  // namespace semico
