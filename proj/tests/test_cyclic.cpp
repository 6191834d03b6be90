#include <gtest/gtest.h>

#include "oracles.hpp"
#include "semico/cyclic.hpp"
#include "semico/error.hpp"

using namespace semico;

namespace {

CyclicData trivial_module(std::vector<std::int64_t> moduli, std::int64_t m) {
  CyclicData d;
  d.m = m;
  d.k = PresentedGroup::from_moduli(moduli);
  d.t = IntMatrix::identity(moduli.size());
  d.ugens = IntMatrix::identity(moduli.size());
  d.is_module = true;
  return d;
}

}  // namespace

TEST(Cyclic, ClassicalExamples) {
  auto z2 = PresentedGroup::from_moduli({2});
  auto z = PresentedGroup::from_moduli({0});
  EXPECT_EQ(classical_cyclic_cohomology(z2, IntMatrix::identity(1), 2, 2).to_string(), "Z/2");
  EXPECT_EQ(classical_cyclic_cohomology(z, IntMatrix::identity(1), 2, 1).to_string(), "0");
  EXPECT_EQ(classical_cyclic_cohomology(z, IntMatrix::identity(1), 2, 2).to_string(), "Z/2");
  EXPECT_EQ(classical_cyclic_cohomology(z, IntMatrix::identity(1), 2, 0).to_string(), "Z");
  // Z with t = -1: H^1 = Z/2, H^2 = 0.
  EXPECT_EQ(classical_cyclic_cohomology(z, IntMatrix{{-1}}, 2, 1).to_string(), "Z/2");
  EXPECT_EQ(classical_cyclic_cohomology(z, IntMatrix{{-1}}, 2, 2).to_string(), "0");
}

TEST(Cyclic, NormMatrix) {
  EXPECT_EQ(norm_matrix(IntMatrix{{-1}}, 2), (IntMatrix{{0}}));
  EXPECT_EQ(norm_matrix(IntMatrix::identity(2), 3), (IntMatrix{{3, 0}, {0, 3}}));
}

TEST(Cyclic, ModulesAgreeWithClassical) {
  auto d = trivial_module({0, 2}, 3);
  for (unsigned n = 0; n <= 5; ++n) {
    auto r = cyclic_closed_form(d, n);
    ASSERT_TRUE(r.group);
    EXPECT_EQ(*r.group, classical_cyclic_cohomology(d.k, d.t, d.m, n));
  }
}

TEST(Cyclic, ValidateData) {
  auto d = trivial_module({3}, 2);
  EXPECT_TRUE(validate_cyclic_data(d).ok());
  d.t = IntMatrix{{2}};  // t^2 = 4 = 1 on Z/3, fine
  EXPECT_TRUE(validate_cyclic_data(d).ok());
  d.m = 3;  // t^3 = 8 = 2 on Z/3
  EXPECT_FALSE(validate_cyclic_data(d).ok());
}

TEST(Cyclic, UnitElements) {
  auto d = trivial_module({2, 3}, 2);
  d.is_module = false;
  EXPECT_EQ(unit_elements(d).size(), 6u);
  auto inf = trivial_module({0}, 2);
  inf.is_module = false;
  EXPECT_THROW(unit_elements(inf), Unsupported);
}

TEST(Cyclic, HZeroNeedsMembership) {
  auto ex = separation_example(2);
  auto a = ex.a;
  a.contains = nullptr;
  EXPECT_THROW(cyclic_closed_form(a, 0), Unsupported);
  auto r = cyclic_closed_form(ex.a, 0);
  EXPECT_FALSE(r.group);
  EXPECT_FALSE(r.description.empty());
}

TEST(Cyclic, SeparationExample) {
  for (std::int64_t m : {2, 3, 4}) {
    auto ex = separation_example(m);
    EXPECT_TRUE(ex.kernel_norm_fact);
    EXPECT_TRUE(ex.t_minus_one_fact);
    EXPECT_TRUE(ex.semimodule_valid);
    EXPECT_TRUE(ex.data_matches_semimodule);
    auto zm = AbGroupPresentation::from_cyclic_orders({m});
    for (unsigned n : {1u, 3u, 5u}) {
      EXPECT_TRUE(cyclic_closed_form(ex.a, n).group->is_trivial());
      EXPECT_EQ(*cyclic_closed_form(ex.u, n).group, zm);
      EXPECT_EQ(*cyclic_closed_form(ex.k, n).group, zm);
    }
    EXPECT_TRUE(separation_report(m, 0, 4).separates);
  }
}

TEST(Cyclic, Periodicity) {
  auto ex = separation_example(3);
  for (auto* d : {&ex.a, &ex.u, &ex.k})
    for (unsigned n = 1; n <= 4; ++n)
      EXPECT_EQ(cyclic_closed_form(*d, n).group, cyclic_closed_form(*d, n + 2).group) << d->name << " " << n;
}

TEST(Cyclic, Crosscheck) {
  EXPECT_TRUE(crosscheck_bar_vs_formula(oracle::c2_z2(), 2).equal);
  EXPECT_TRUE(crosscheck_bar_vs_formula(oracle::c2_z3_negation(), 2).equal);
  EXPECT_TRUE(crosscheck_bar_vs_formula(oracle::c3_z3(), 2).equal);
  for (unsigned n = 0; n <= 3; ++n) EXPECT_EQ(crosscheck_bar_vs_formula(oracle::c2_z2(), n).bar.to_string(), "Z/2");
}

TEST(Cyclic, FiniteModulePresentation) {
  auto p = present_finite_module(oracle::c2_z3_negation());
  EXPECT_EQ(p.group.isomorphism_type().to_string(), "Z/3");
  EXPECT_TRUE(p.group.respects_relations(p.t));
}

TEST(Cyclic, DataFromSemimodule) {
  auto d = cyclic_data_from(oracle::c2_z3_negation());
  EXPECT_EQ(d.m, 2);
  EXPECT_TRUE(d.is_module);
  EXPECT_THROW(cyclic_data_from(oracle::c2_boolean()), Unsupported);
  EXPECT_THROW(cyclic_data_from(oracle::o2_boolean()), Unsupported);
}
