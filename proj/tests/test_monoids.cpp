#include <gtest/gtest.h>

#include "oracles.hpp"
#include "semico/error.hpp"
#include "semico/monoids.hpp"

using namespace semico;

TEST(Monoids, Validate) {
  EXPECT_TRUE(validate_monoid(FiniteMonoid::cyclic_group(2)).ok());
  EXPECT_TRUE(validate_monoid(FiniteMonoid::idempotent_pair()).ok());
  // (1*1)*2 = 2*2 = 1 but 1*(1*2) = 1*1 = 2.
  auto bad = FiniteMonoid::from_rows({{0, 1, 2}, {1, 2, 1}, {2, 1, 1}});
  EXPECT_EQ(validate_monoid(bad).ok(), oracle::associative(bad.rows()));
  EXPECT_FALSE(validate_monoid(bad).ok());
  EXPECT_NE(validate_monoid(bad).message.find("(1,1,2)"), std::string::npos);
}

TEST(Monoids, Invertibles) {
  EXPECT_EQ(invertible_elements(FiniteMonoid::cyclic_group(3)).elements.size(), 3u);
  EXPECT_EQ(invertible_elements(FiniteMonoid::idempotent_pair()).elements, (std::vector<Index>{0}));
  auto b = FiniteMonoid::from_abelian(FiniteAbelianMonoid::boolean());
  EXPECT_EQ(invertible_elements(b).elements, (std::vector<Index>{0}));
}

TEST(Monoids, Homomorphisms) {
  auto c4 = FiniteMonoid::cyclic_group(4), c2 = FiniteMonoid::cyclic_group(2);
  EXPECT_TRUE(is_hom({0, 1, 2, 3}, c4, c4));
  EXPECT_TRUE(is_hom({0, 1, 0, 1}, c4, c2));
  EXPECT_FALSE(is_hom({1, 1, 1, 1}, c4, c2));
  EXPECT_EQ(enumerate_homs(c4, c2).size(), 2u);
  EXPECT_EQ(enumerate_homs(c4, c4).size(), 4u);
}

TEST(Monoids, Quotients) {
  auto c4 = FiniteMonoid::cyclic_group(4);
  EXPECT_EQ(monoid_quotient(c4, Congruence::discrete(4)).monoid, c4);
  auto q = monoid_quotient(c4, Congruence::from_labels({0, 1, 0, 1}));
  EXPECT_TRUE(find_isomorphism(q.monoid, FiniteMonoid::cyclic_group(2)));
  EXPECT_EQ(monoid_quotient(c4, Congruence::from_labels({0, 0, 0, 0})).monoid.size(), 1u);
  EXPECT_THROW(monoid_quotient(c4, Congruence::from_labels({0, 0, 1, 1})), ValidationError);
}

TEST(Monoids, OrderProfileAndGenerators) {
  EXPECT_EQ(order_profile(FiniteMonoid::cyclic_group(2)), order_profile(FiniteMonoid::cyclic_group(2)));
  EXPECT_NE(order_profile(FiniteMonoid::cyclic_group(2)), order_profile(FiniteMonoid::idempotent_pair()));
  EXPECT_EQ(generators(FiniteMonoid::cyclic_group(5)), (std::vector<Index>{1}));
  EXPECT_TRUE(cyclic_generator(FiniteMonoid::cyclic_group(6)));
}

// Properties over every monoid of order at most 3.
TEST(MonoidProperties, HomsQuotientsInvertibles) {
  auto monoids = oracle::all_monoids(3);
  for (auto& s : monoids) {
    ASSERT_TRUE(validate_monoid(s).ok());
    auto inv = invertible_elements(s);
    for (std::size_t i = 0; i < inv.elements.size(); ++i) {
      EXPECT_EQ(s.op(inv.elements[i], inv.inverse[i]), 0u);
      EXPECT_EQ(s.op(inv.inverse[i], inv.elements[i]), 0u);
      for (Index v : inv.elements)
        EXPECT_TRUE(std::binary_search(inv.elements.begin(), inv.elements.end(), s.op(inv.elements[i], v)));
    }
    for (auto& t : monoids) {
      if (t.size() > s.size()) continue;
      auto homs = enumerate_homs(s, t);
      EXPECT_EQ(homs, oracle::all_monoid_homs(s, t));
    }
    for (Index a = 0; a < s.size(); ++a)
      for (Index b = 0; b < s.size(); ++b) {
        auto c = monoid_congruence_closure(s, {{a, b}});
        EXPECT_TRUE(check_monoid_congruence(s, c).ok());
        auto q = monoid_quotient(s, c);
        EXPECT_TRUE(validate_monoid(q.monoid).ok());
        EXPECT_TRUE(oracle::is_monoid_hom(q.projection, s, q.monoid));
        EXPECT_TRUE(is_surjective(q.projection, q.monoid.size()));
      }
  }
}
