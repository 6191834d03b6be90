#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "semico/semimodules.hpp"

namespace semico {

constexpr std::uint64_t default_budget = 2'000'000;

/// Normalized n-cochain M^n -> A. Only tuples over M \ {1} are stored: the
/// argument tuple (x1, ..., xn) sits at the base-(|M|-1) position with digit
/// x_j - 1 and x1 most significant. Degree 0 stores one element.
struct NormalizedCochain {
  unsigned degree = 0;
  std::vector<Index> values;

  friend bool operator==(const NormalizedCochain& a, const NormalizedCochain& b) {
    return a.degree == b.degree && a.values == b.values;
  }
  friend bool operator<(const NormalizedCochain& a, const NormalizedCochain& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.values < b.values;
  }
};

/// The normalized +- cochain complex F(M, A) of a finite semimodule.
class CochainComplex {
 public:
  /// Throws Unsupported for structured carriers.
  explicit CochainComplex(MSemimodule s);

  const MSemimodule& semimodule() const noexcept { return s_; }

  /// Number of stored values, (|M|-1)^n.
  std::size_t width(unsigned n) const;
  /// |F^n| = |A|^width, saturating at UINT64_MAX.
  std::uint64_t cochain_count(unsigned n) const;

  NormalizedCochain zero(unsigned n) const;
  /// Argument tuple at a stored position (monoid indices, none equal to 0).
  std::vector<Index> arguments(unsigned n, std::size_t position) const;
  /// f(x1, ..., xn), zero when some xj is the identity.
  Index eval(const NormalizedCochain& f, const std::vector<Index>& args) const;

  NormalizedCochain d_plus(const NormalizedCochain& f) const;
  NormalizedCochain d_minus(const NormalizedCochain& f) const;
  NormalizedCochain add(const NormalizedCochain& f, const NormalizedCochain& g) const;
  bool is_cocycle(const NormalizedCochain& f) const;

  /// The cochain of lexicographic rank r (values read as base-|A| digits,
  /// first value most significant).
  NormalizedCochain cochain_at(unsigned n, std::uint64_t rank) const;
  /// All of F^n in lexicographic order; BudgetExceeded above `budget`.
  std::vector<NormalizedCochain> enumerate(unsigned n, std::uint64_t budget = default_budget) const;
  /// Z^n = { f | d+ f = d- f } in lexicographic order.
  std::vector<NormalizedCochain> cocycles(unsigned n, std::uint64_t budget = default_budget) const;

  /// Precomputed differential d^n: for every stored position of degree
  /// n+1, the terms (multiplier, source position) summed by d+ and d-.
  struct Term {
    Index multiplier;           // monoid element acting on the value, 0 = none
    std::int64_t source;        // stored position in degree n, -1 = forced zero
  };
  struct Differential {
    unsigned degree;
    std::vector<std::vector<Term>> plus;
    std::vector<std::vector<Term>> minus;
  };
  const Differential& differential(unsigned n) const;

 private:
  bool is_cocycle(const NormalizedCochain& f, const Differential& d) const;
  void apply(const std::vector<std::vector<Term>>& terms, const std::vector<Index>& in, std::vector<Index>& out) const;

  struct Cache {
    std::mutex mutex;
    std::vector<std::unique_ptr<Differential>> levels;
  };

  MSemimodule s_;
  std::shared_ptr<Cache> cache_;
};

struct PmIdentityReport {
  bool holds = true;
  bool sampled = false;
  std::uint64_t checked = 0;
  std::string witness;  // first failing cochain, when any
};

/// d+^n d+^(n-1) + d-^n d-^(n-1) = d+^n d-^(n-1) + d-^n d+^(n-1) on every
/// cochain of degree n-1; above the budget, 10000 seeded samples.
PmIdentityReport verify_pm_identity(const CochainComplex& c, unsigned n, std::uint64_t budget = default_budget);

/// Classes of n-cocycles with their addition.
struct CohomologyMonoid {
  unsigned degree = 0;
  FiniteAbelianMonoid monoid;
  std::vector<NormalizedCochain> representatives;  // least cocycle per class
  std::vector<NormalizedCochain> cocycles;         // all of Z^n, lexicographic
  std::vector<Index> class_of_cocycle;

  std::size_t size() const noexcept { return representatives.size(); }
  /// Class of a cocycle; throws ValidationError for non-cocycles.
  Index class_of(const NormalizedCochain& f) const;
  /// Isomorphism type when the monoid is a group.
  std::optional<AbGroupPresentation> group_type() const;
  std::string describe() const;
};

/// H^n(M, A): Z^n modulo f ~ g iff f + d+u + d-v = g + d+v + d-u for some
/// u, v in F^(n-1). The witness pair count |F^(n-1)|^2 must stay within
/// 64 * budget.
CohomologyMonoid h_n(const CochainComplex& c, unsigned n, std::uint64_t budget = default_budget);
/// The strong relation: f ~ g iff f = g + d+w - d-w with w in F^(n-1)(M, U(A)).
CohomologyMonoid script_h_n(const CochainComplex& c, unsigned n, std::uint64_t budget = default_budget);

/// H^0, H^1, H^2 computed from the explicit low-degree descriptions over
/// full functions on M, independently of the differentials.
CohomologyMonoid h_low_direct(const MSemimodule& s, unsigned n);

/// Class map H^n(M, A) -> H^n(M, A') induced by alpha, checked to be well
/// defined and additive.
std::vector<Index> induced_map(const CochainComplex& source, const CohomologyMonoid& hs, const CochainComplex& target,
                               const CohomologyMonoid& ht, const SemimoduleHom& alpha);

/// Map of classes of the same cocycle set under a coarser relation.
std::vector<Index> comparison_map(const CohomologyMonoid& finer, const CohomologyMonoid& coarser);

struct DiagramReport {
  unsigned degree = 0;
  CohomologyMonoid strong;      // script H^n(M, A)
  CohomologyMonoid weak;        // H^n(M, A)
  CohomologyMonoid completed;   // H^n(M, K(A))
  std::vector<Index> j;         // strong -> weak
  std::vector<Index> k_n;       // strong -> completed
  std::vector<Index> h_k;       // weak -> completed
  bool commutes = false;
  bool j_surjective = false;
  bool h_k_injective = false;
  bool cancellative = false;
  bool module = false;
};

/// The triangle script H^n -> H^n -> H^n(M, K(A)).
DiagramReport comparison_diagram(const CochainComplex& c, unsigned n, std::uint64_t budget = default_budget);

}  // namespace semico
