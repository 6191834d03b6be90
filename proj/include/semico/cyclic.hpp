#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "semico/abelian_group.hpp"
#include "semico/cohomology.hpp"

namespace semico {

/// A cancellative C_m(t)-semimodule A described through its completion:
/// K(A) = Z^dim / relations, the action T of t on K, generators of U(A)
/// inside K, and optionally a membership test for A inside K.
struct CyclicData {
  std::int64_t m = 0;
  PresentedGroup k;
  IntMatrix t;
  IntMatrix ugens;  // columns
  /// A = K(A); U(A) is then all of K and need not be finite.
  bool is_module = false;
  std::function<bool(const IntVector&)> contains;
  std::string name;
};

/// T respects the relations, T^m = 1, and T maps <Ugens> into itself.
Violation validate_cyclic_data(const CyclicData& d);

/// 1 + T + ... + T^(m-1).
IntMatrix norm_matrix(const IntMatrix& t, std::int64_t m);

/// H^n(C_m, L) of a C_m-module: ker(T-1) for n = 0, ker(T-1)/im N for even
/// n > 0, ker N/im(T-1) for odd n.
AbGroupPresentation classical_cyclic_cohomology(const PresentedGroup& l, const IntMatrix& t, std::int64_t m,
                                                unsigned n);

struct CyclicResult {
  unsigned degree = 0;
  /// Absent when H^0 is a monoid that is not a group.
  std::optional<AbGroupPresentation> group;
  std::string description;
};

/// H^n(C_m, A) by closed form: fixed points for n = 0, the cohomology of
/// K(A) for even n > 0, and { u in U(A) | Nu = 0 } / (U(A) cap (t-1)K(A))
/// for odd n. Throws Unsupported for n = 0 without a membership test and for
/// odd n with infinite U(A).
CyclicResult cyclic_closed_form(const CyclicData& d, unsigned n, std::uint64_t budget = default_budget);

/// Elements of the finite subgroup <Ugens> of K, one canonical vector each.
std::vector<IntVector> unit_elements(const CyclicData& d, std::uint64_t budget = default_budget);

/// Cyclic data of an M-semimodule over a finite cyclic group. Finite carriers
/// must be groups; structured carriers must be cancellative.
CyclicData cyclic_data_from(const MSemimodule& s);

/// A finite C_m-module presented with one generator per element and the
/// addition table as relations; t permutes the generators.
struct FiniteModulePresentation {
  PresentedGroup group;
  IntMatrix t;
  std::int64_t m = 0;
};
FiniteModulePresentation present_finite_module(const MSemimodule& s);

struct CrosscheckReport {
  unsigned degree = 0;
  AbGroupPresentation bar;       // h_n over the normalized cochains
  AbGroupPresentation strong;    // script_h_n
  AbGroupPresentation formula;   // classical_cyclic_cohomology
  bool equal = false;
};

/// Bar-complex cohomology against the classical formula for a finite module
/// over C_m.
CrosscheckReport crosscheck_bar_vs_formula(const MSemimodule& s, unsigned n, std::uint64_t budget = default_budget);

/// A = D(m) + N + Z/m with t(d, n, p) = (d, n, n + p); K(A) = Z + Z/m + Z + Z/m,
/// U(A) = Z/m with trivial action.
struct SeparationExample {
  std::int64_t m = 0;
  MSemimodule semimodule;  // A as a structured semimodule
  CyclicData a;
  CyclicData u;
  CyclicData k;
  bool kernel_norm_fact = false;       // ker N on K(A) is {(0, c, 0, p)}
  bool t_minus_one_fact = false;       // (t-1)K(A) is the last Z/m
  bool semimodule_valid = false;       // the structured action validates
  bool data_matches_semimodule = false;
};
SeparationExample separation_example(std::int64_t m);

struct SeparationRow {
  unsigned degree = 0;
  CyclicResult a, u, k;
};
struct SeparationReport {
  SeparationExample example;
  std::vector<SeparationRow> rows;
  bool separates = false;  // odd rows: A = 0, U(A) = Z/m, K(A) = Z/m
};
SeparationReport separation_report(std::int64_t m, unsigned n_lo, unsigned n_hi);

}  // namespace semico
