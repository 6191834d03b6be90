#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semico/cohomology.hpp"

namespace semico {

/// A -> B -> M over a finite M-semimodule A, with one chosen representative
/// per fiber (reps[x] in sigma^-1(x), reps[0] the identity of B).
struct SchreierExtension {
  MSemimodule module;
  FiniteMonoid middle;
  std::vector<Index> kappa;  // A -> B
  std::vector<Index> sigma;  // B -> M
  std::vector<Index> reps;   // M -> B
};

struct ExtensionCheck {
  Violation violation;
  /// Every element of sigma^-1(x) that can serve as a representative.
  std::vector<std::vector<Index>> representative_sets;
};

/// Exhaustive check of the extension axioms, the unique decomposition
/// b = kappa(a) + u_x, and b + kappa(a) = kappa(sigma(b) a) + b.
ExtensionCheck validate_schreier(const SchreierExtension& e);

/// b = kappa(a_of[b]) + reps[sigma[b]]; requires a valid extension.
struct Decomposition {
  std::vector<Index> a_of;
};
Decomposition decompose(const SchreierExtension& e);

/// { kappa(a) + u_x | a in U(A) }, ascending.
std::vector<Index> representatives(const SchreierExtension& e, Index x);
bool is_representative(const SchreierExtension& e, Index b);

/// u_x + u_y = kappa(f(x, y)) + u_xy.
NormalizedCochain factor_set(const SchreierExtension& e);

/// B_f = A x M with (a1, x) + (a2, y) = (a1 + x a2 + f(x, y), xy); the
/// element (a, x) has index x * |A| + a. Throws ValidationError when f is
/// not a 2-cocycle.
SchreierExtension build_extension(const MSemimodule& s, const NormalizedCochain& f);

/// The semidirect product extension A -> A x| M -> M with reps (0, x).
SchreierExtension split_extension(const MSemimodule& s);

/// Same extension, other representatives.
SchreierExtension with_representatives(const SchreierExtension& e, std::vector<Index> reps);

/// Every admissible choice of representatives with u_1 = 0, in index order.
std::vector<std::vector<Index>> representative_choices(const SchreierExtension& e);

struct ExtensionMorphism {
  std::vector<Index> alpha;  // A -> A'
  std::vector<Index> beta;   // B -> B'
  std::vector<Index> gamma;  // M -> M'
};

/// Homomorphism checks, both squares, and representative preservation.
Violation check_morphism(const SchreierExtension& e, const SchreierExtension& target, const ExtensionMorphism& m);
inline bool is_morphism(const SchreierExtension& e, const SchreierExtension& target, const ExtensionMorphism& m) {
  return check_morphism(e, target, m).ok();
}

/// A witnessing beta for E == E', searched over beta(kappa(a) + u_x) =
/// kappa'(a + g(x)) + u'_x with g : M \ {1} -> U(A) in lexicographic order.
std::optional<std::vector<Index>> are_congruent(const SchreierExtension& e, const SchreierExtension& other);

struct Pushforward {
  SchreierExtension extension;
  ExtensionMorphism morphism;  // (alpha, beta, 1)
};

/// alpha E as the quotient of A' x| B by the relation keyed by
/// (sigma(b), a' + alpha(a)). Throws TheoremMismatch if that relation is not
/// a congruence.
Pushforward pushforward(const SemimoduleHom& alpha, const MSemimodule& target, const SchreierExtension& e);

/// Pushforward along k_A : A -> K(A).
Pushforward completion_pushforward(const SchreierExtension& e);

/// E1 ~ E2: their pushforwards along k_A are congruent.
bool are_similar(const SchreierExtension& e1, const SchreierExtension& e2);

/// Some g : M -> U(A) with g(1) = 0 and f(x,y) = f'(x,y) + x g(y) - g(xy) + g(x),
/// found by direct search.
std::optional<std::vector<Index>> strong_cohomology_witness(const MSemimodule& s, const NormalizedCochain& f,
                                                            const NormalizedCochain& f_prime);

struct ExtensionClass {
  Index id = 0;
  std::size_t size = 0;               // number of cocycles whose E_f lie in the class
  NormalizedCochain canonical;        // least such cocycle
  std::string order_profile;          // of the middle monoid
};

struct OracleReport {
  std::uint64_t tables_checked = 0;
  std::size_t extensions_found = 0;   // tables that are Schreier extensions
  std::size_t classes_hit = 0;        // congruence classes reached by raw tables
  bool all_matched = false;           // every raw extension is congruent to some E_f
  bool reproduces = false;            // all_matched and every class hit
};

struct Classification {
  std::size_t cocycle_count = 0;
  CohomologyMonoid strong;  // script H^2
  CohomologyMonoid weak;    // H^2
  std::vector<Index> congruence_of_cocycle;
  std::vector<Index> similarity_of_cocycle;
  std::vector<ExtensionClass> congruence_classes;
  std::vector<ExtensionClass> similarity_classes;
  std::vector<Index> zeta;   // strong class -> congruence class
  std::vector<Index> theta;  // weak class -> similarity class
  bool zeta_bijective = false;
  bool zeta_pointed = false;
  bool theta_surjective = false;
  bool theta_injective = false;
  bool congruence_refines_similarity = false;
  bool cancellative = false;
  bool module = false;
  std::optional<OracleReport> oracle;
};

/// Enumerates every 2-cocycle, builds E_f, and partitions the extensions by
/// congruence and by similarity. Throws TheoremMismatch when either
/// partition disagrees with the cohomological classification.
Classification classify(const MSemimodule& s, bool with_oracle = false, std::uint64_t budget = default_budget);

/// Every monoid structure on A x M with kappa(a) = (a, 1), sigma(a, x) = x and
/// identity (0, 1) fixed, filtered to Schreier extensions of s, with
/// representatives chosen as the least admissible index per fiber.
std::vector<SchreierExtension> raw_table_extensions(const MSemimodule& s, std::uint64_t budget = default_budget);

/// The action induced by an extension of monoids with cancellative abelian
/// kernel: b + kappa(a) = kappa(phi(sigma(b)) a) + b. Throws Unsupported for
/// non-cancellative kernels and ValidationError when no such action exists.
MSemimodule induce_action(const FiniteAbelianMonoid& a, const FiniteMonoid& m, const FiniteMonoid& b,
                          const std::vector<Index>& kappa, const std::vector<Index>& sigma);

/// N -> N -> C_m with kappa(1) = m, sigma(1) = t and representatives
/// 0, ..., m-1: the factor set f(t^i, t^j) = floor((i + j) / m).
struct CyclicCoverFactorSet {
  std::int64_t m = 0;
  std::vector<std::vector<std::int64_t>> values;  // values[i][j]
  bool decomposition_holds = false;   // i + j = m f(i,j) + ((i + j) mod m)
  bool cocycle_holds = false;
};
CyclicCoverFactorSet cyclic_cover_factor_set(std::int64_t m);

}  // namespace semico
