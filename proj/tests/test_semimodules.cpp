#include <gtest/gtest.h>

#include "oracles.hpp"
#include "semico/cyclic.hpp"
#include "semico/error.hpp"
#include "semico/semimodules.hpp"

using namespace semico;

TEST(Semimodules, Validate) {
  EXPECT_TRUE(validate_semimodule(oracle::c2_z3_negation()).ok());
  EXPECT_TRUE(validate_semimodule(oracle::c2_boolean()).ok());
  auto shift = MSemimodule::finite(FiniteMonoid::cyclic_group(2), FiniteAbelianMonoid::cyclic_group(4),
                                   {{0, 1, 2, 3}, {1, 2, 3, 0}});
  auto v = validate_semimodule(shift);
  EXPECT_FALSE(v.ok());
  EXPECT_NE(v.message.find("x0"), std::string::npos) << v.message;
}

TEST(Semimodules, KModule) {
  auto kb = k_module(oracle::c2_boolean());
  EXPECT_EQ(kb.module.carrier_size(), 1u);
  auto kz = k_module(oracle::c2_z3_negation());
  EXPECT_EQ(kz.module.action_rows(), oracle::c2_z3_negation().action_rows());
  ASSERT_TRUE(kz.k);
  EXPECT_EQ(kz.k->map, (std::vector<Index>{0, 1, 2}));

  auto ex = separation_example(2);
  auto k = k_module(ex.semimodule);
  EXPECT_EQ(k.completion.presentation.to_string(), "Z^2 x Z/2 x Z/2");
  EXPECT_TRUE(validate_semimodule(k.module).ok());
  // t(c, z, p) = (c, z, z + p) on the Z + Z/2 + Z/2 part; coordinates
  // (d_n, d_p, n, p).
  const auto& t = k.module.matrices()[1];
  EXPECT_EQ(t, (IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 1, 1}}));
}

TEST(Semimodules, USubmodule) {
  auto u = u_subsemimodule(separation_example(3).semimodule);
  EXPECT_EQ(group_completion(u.units.group).presentation.to_string(), "Z/3");
  EXPECT_TRUE(u.module.has_trivial_action());
  auto z = u_subsemimodule(oracle::c2_z3_negation());
  EXPECT_EQ(z.module.action_rows(), oracle::c2_z3_negation().action_rows());
  EXPECT_EQ(u_subsemimodule(oracle::c2_boolean()).module.carrier_size(), 1u);
}

TEST(Semimodules, SemidirectProduct) {
  auto trivial = semidirect_product(oracle::c2_z2());
  EXPECT_TRUE(is_commutative(trivial.monoid));
  EXPECT_EQ(order_profile(trivial.monoid), order_profile(FiniteMonoid::from_abelian(
                                                 FiniteAbelianMonoid::from_rows({{0, 1, 2, 3},
                                                                                 {1, 0, 3, 2},
                                                                                 {2, 3, 0, 1},
                                                                                 {3, 2, 1, 0}}))));
  auto s3 = semidirect_product(oracle::c2_z3_negation());
  EXPECT_TRUE(validate_monoid(s3.monoid).ok());
  EXPECT_TRUE(is_group(s3.monoid));
  EXPECT_FALSE(is_commutative(s3.monoid));
  EXPECT_EQ(s3.monoid.size(), 6u);
  auto bc2 = semidirect_product(oracle::c2_boolean());
  EXPECT_EQ(bc2.monoid.size(), 4u);
  EXPECT_TRUE(is_commutative(bc2.monoid));
  EXPECT_TRUE(oracle::is_monoid_hom(bc2.pi, bc2.monoid, FiniteMonoid::cyclic_group(2)));
}

TEST(Semimodules, Homs) {
  auto s = oracle::c2_z3_negation();
  EXPECT_TRUE(check_semimodule_hom(s, s, identity_hom(3)).ok());
  EXPECT_TRUE(check_semimodule_hom(s, s, {{0, 2, 1}}).ok());
  EXPECT_FALSE(check_semimodule_hom(s, s, {{0, 1, 1}}).ok());
  EXPECT_EQ(compose(SemimoduleHom{{0, 2, 1}}, SemimoduleHom{{0, 2, 1}}).map, identity_hom(3).map);
}

TEST(Semimodules, StructuredValidation) {
  auto ex = separation_example(4);
  EXPECT_TRUE(validate_semimodule(ex.semimodule).ok());
  // t(n) = -n leaves N.
  auto bad = MSemimodule::structured(
      FiniteMonoid::cyclic_group(2), Carrier::free_commutative(1),
      {IntMatrix::identity(1), IntMatrix{{-1}}});
  EXPECT_FALSE(validate_semimodule(bad).ok());
}

// Properties over every semimodule with |M|, |A| <= 3.
TEST(SemimoduleProperties, ActionsFunctorsProducts) {
  for (auto& m : oracle::all_monoids(3))
    for (auto& a : oracle::all_abelian_monoids(3)) {
      auto mine = oracle::all_semimodules(m, a);
      auto theirs = enumerate_actions(m, a);
      ASSERT_EQ(mine.size(), theirs.size());
      for (auto& s : mine) {
        ASSERT_TRUE(validate_semimodule(s).ok());
        auto k = k_module(s);
        EXPECT_TRUE(validate_semimodule(k.module).ok());
        EXPECT_TRUE(is_group(k.module.table()));
        ASSERT_TRUE(k.k);
        EXPECT_TRUE(check_semimodule_hom(s, k.module, *k.k).ok());

        auto u = u_subsemimodule(s);
        EXPECT_TRUE(validate_semimodule(u.module).ok());
        EXPECT_TRUE(is_group(u.module.table()));
        // Adding any non-unit to U(A) leaves the group property.
        for (Index v = 0; v < a.size(); ++v) {
          if (u.units.finite->find(v)) continue;
          bool has_inverse = false;
          for (Index w = 0; w < a.size(); ++w) has_inverse = has_inverse || a.add(v, w) == 0;
          EXPECT_FALSE(has_inverse);
        }

        auto p = semidirect_product(s);
        EXPECT_TRUE(validate_monoid(p.monoid).ok());
        EXPECT_TRUE(oracle::is_monoid_hom(p.pi, p.monoid, m));
        for (auto& h : oracle::all_homs(s, s)) EXPECT_TRUE(check_semimodule_hom(s, s, {h}).ok());
        EXPECT_EQ(enumerate_semimodule_homs(s, s).size(), oracle::all_homs(s, s).size());
      }
    }
}
