#include "semico/abelian_group.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "semico/error.hpp"

namespace semico {

namespace {

std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p()) throw Unsupported("invariant factor exceeds 64-bit range: " + v.get_str());
  return v.get_si();
}

}  // namespace

std::uint64_t AbGroupPresentation::order() const {
  if (free_rank) return 0;
  std::uint64_t n = 1;
  for (auto d : factors) n *= static_cast<std::uint64_t>(d);
  return n;
}

bool AbGroupPresentation::divisibility_chain() const {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2) return false;
    if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0) return false;
  }
  return true;
}

std::string AbGroupPresentation::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank) {
    os << 'Z';
    if (free_rank > 1) os << '^' << free_rank;
    first = false;
  }
  for (auto d : factors) {
    if (!first) os << " x ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

AbGroupPresentation AbGroupPresentation::from_cyclic_orders(const std::vector<Integer>& orders) {
  IntMatrix diag(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) diag(i, i) = orders[i];
  SnfResult snf = smith_normal_form(diag);
  AbGroupPresentation out;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i >= snf.rank) {
      ++out.free_rank;
    } else if (snf.diagonal(i, i) != 1) {
      out.factors.push_back(to_int64(snf.diagonal(i, i)));
    }
  }
  return out;
}

AbGroupPresentation AbGroupPresentation::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "0" || s.empty()) return {};
  std::vector<Integer> orders;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find('x', pos);
    if (end == std::string::npos) end = s.size();
    std::string part = s.substr(pos, end - pos);
    pos = end + 1;
    try {
      if (part == "Z") {
        orders.emplace_back(0);
      } else if (part.rfind("Z^", 0) == 0) {
        int r = std::stoi(part.substr(2));
        if (r < 0) throw ParseError("negative rank");
        for (int i = 0; i < r; ++i) orders.emplace_back(0);
      } else if (part.rfind("Z/", 0) == 0) {
        long d = std::stol(part.substr(2));
        if (d < 1) throw ParseError("cyclic order must be positive");
        orders.emplace_back(d);
      } else {
        throw ParseError("unrecognized group factor '" + part + "'");
      }
    } catch (const std::logic_error&) {
      throw ParseError("unrecognized group factor '" + part + "'");
    }
  }
  return from_cyclic_orders(orders);
}

PresentedGroup::PresentedGroup(std::size_t dim, IntMatrix relations)
    : dim_(dim), relations_(std::move(relations)) {
  if (relations_.cols() == 0) relations_ = IntMatrix(dim_, 0);
  if (relations_.rows() != dim_) throw std::invalid_argument("PresentedGroup: relation rows must equal dim");
}

PresentedGroup PresentedGroup::from_moduli(const std::vector<std::int64_t>& moduli) {
  std::vector<IntVector> cols;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (moduli[i] == 0) continue;
    IntVector c(moduli.size());
    c[i] = moduli[i];
    cols.push_back(std::move(c));
  }
  return PresentedGroup(moduli.size(), IntMatrix::from_columns(moduli.size(), cols));
}

AbGroupPresentation PresentedGroup::isomorphism_type() const {
  return subquotient(IntMatrix::identity(dim_), IntMatrix(dim_, 0));
}

IntMatrix PresentedGroup::kernel_of(const IntMatrix& endo) const {
  IntMatrix ker = integer_kernel(endo.hconcat(relations_));
  return ker.row_block(0, dim_).hconcat(relations_);
}

IntMatrix PresentedGroup::image_of(const IntMatrix& endo) const { return endo.hconcat(relations_); }

IntMatrix PresentedGroup::span_with_relations(const IntMatrix& gens) const { return gens.hconcat(relations_); }

bool PresentedGroup::contains(const IntMatrix& gens, const IntVector& x) const {
  return in_column_span(gens.hconcat(relations_), x);
}

bool PresentedGroup::subgroup_le(const IntMatrix& sub, const IntMatrix& super) const {
  IntMatrix span = super.hconcat(relations_);
  for (std::size_t c = 0; c < sub.cols(); ++c)
    if (!in_column_span(span, sub.column(c))) return false;
  return true;
}

bool PresentedGroup::same_subgroup(const IntMatrix& a, const IntMatrix& b) const {
  return subgroup_le(a, b) && subgroup_le(b, a);
}

bool PresentedGroup::equal(const IntVector& x, const IntVector& y) const {
  IntVector d(dim_);
  for (std::size_t i = 0; i < dim_; ++i) d[i] = x[i] - y[i];
  return in_column_span(relations_, d);
}

AbGroupPresentation PresentedGroup::subquotient(const IntMatrix& upper, const IntMatrix& lower) const {
  IntMatrix h = upper.hconcat(relations_);
  IntMatrix l = lower.hconcat(relations_);
  if (!subgroup_le(lower, upper))
    throw TheoremMismatch("subquotient: lower subgroup is not contained in upper subgroup");
  // Coefficient vectors c with h c in <l>: these present (<h>)/(<l>) on the columns of h.
  IntMatrix rel = integer_kernel(h.hconcat(l)).row_block(0, h.cols());
  SnfResult snf = smith_normal_form(rel);
  AbGroupPresentation out;
  for (std::size_t i = 0; i < h.cols(); ++i) {
    if (i >= snf.rank) {
      ++out.free_rank;
    } else if (snf.diagonal(i, i) != 1) {
      out.factors.push_back(to_int64(snf.diagonal(i, i)));
    }
  }
  return out;
}

bool PresentedGroup::respects_relations(const IntMatrix& endo) const {
  IntMatrix image = endo * relations_;
  for (std::size_t c = 0; c < image.cols(); ++c)
    if (!in_column_span(relations_, image.column(c))) return false;
  return true;
}

}  // namespace semico
