#include <gtest/gtest.h>

#include "oracles.hpp"
#include "semico/error.hpp"
#include "semico/io.hpp"

using namespace semico;
using io::Json;

TEST(Io, Monoids) {
  EXPECT_EQ(io::parse_monoid("C3"), FiniteMonoid::cyclic_group(3));
  EXPECT_EQ(io::parse_monoid("O2"), FiniteMonoid::idempotent_pair());
  auto m = io::parse_monoid(Json::parse(R"({"kind":"monoid","size":2,"op":[[0,1],[1,0]],"labels":["e","s"]})"));
  EXPECT_EQ(m, FiniteMonoid::cyclic_group(2));
  EXPECT_EQ(m.label(1), "s");
  EXPECT_EQ(io::parse_monoid(io::monoid_json(m)), m);
  EXPECT_THROW(io::parse_monoid("Q7"), ParseError);
}

TEST(Io, Carriers) {
  EXPECT_EQ(io::parse_carrier("B").table(), FiniteAbelianMonoid::boolean());
  EXPECT_EQ(io::parse_carrier("Z/4").table(), FiniteAbelianMonoid::cyclic_group(4));
  EXPECT_EQ(io::parse_carrier("Z/2 x Z/2").table().size(), 4u);
  EXPECT_FALSE(io::parse_carrier("N^2").is_finite_table());
  EXPECT_EQ(io::parse_carrier("D(3)").describe(), "D(3)");
  auto t = io::parse_carrier(Json::parse(R"({"size":2,"add":[[0,1],[1,1]]})"));
  EXPECT_EQ(t.table(), FiniteAbelianMonoid::boolean());
  EXPECT_EQ(io::parse_carrier(io::carrier_json(t.table())).table(), t.table());
  EXPECT_THROW(io::parse_carrier(Json::parse(R"({"size":2,"add":[[0,1]]})")), ParseError);
}

TEST(Io, Semimodules) {
  auto s = io::parse_semimodule(Json::parse(R"({"monoid":"C2","carrier":"Z/3","action":[[0,1,2],[0,2,1]]})"));
  EXPECT_EQ(s.action_rows(), oracle::c2_z3_negation().action_rows());
  auto t = io::parse_semimodule(Json::parse(R"({"monoid":"C2","carrier":"B"})"));
  EXPECT_TRUE(t.has_trivial_action());
  auto st = io::parse_semimodule(
      Json::parse(R"({"monoid":"C2","carrier":"Z","action":[[[1]],[[-1]]]})"));
  EXPECT_FALSE(st.is_finite());
  EXPECT_TRUE(validate_semimodule(st).ok());
}

TEST(Io, Cochains) {
  CochainComplex c(oracle::c2_z2());
  auto f = c.cocycles(2).at(1);
  EXPECT_EQ(io::cochain_text(c, f), "t,t->1");
  EXPECT_EQ(io::cochain_text(c, c.zero(2)), "0");
  EXPECT_EQ(io::parse_cochain(io::cochain_json(c, f), c), f);
}

TEST(Io, Extensions) {
  auto s = oracle::c2_z2();
  auto e = build_extension(s, CochainComplex(s).cocycles(2).at(1));
  auto j = io::extension_json(e);
  auto back = io::parse_extension(j);
  EXPECT_EQ(back.middle, e.middle);
  EXPECT_EQ(back.kappa, e.kappa);
  EXPECT_EQ(back.sigma, e.sigma);
  EXPECT_EQ(back.reps, e.reps);
  EXPECT_EQ(back.module.action_rows(), e.module.action_rows());
  EXPECT_TRUE(std::holds_alternative<SchreierExtension>(io::parse_input(j)));
  EXPECT_TRUE(validate_schreier(back).violation.ok());
}

TEST(Io, Cyclic) {
  auto d = io::parse_cyclic(Json::parse(R"({"kind":"cyclic","m":2,"moduli":[0],"t":[[-1]],"ugens":[[1]],"module":true})"));
  EXPECT_EQ(d.m, 2);
  EXPECT_EQ(cyclic_closed_form(d, 1).group->to_string(), "Z/2");
  auto from = io::parse_cyclic(
      Json::parse(R"({"kind":"cyclic","semimodule":{"monoid":"C2","carrier":"Z/3","action":[[0,1,2],[0,2,1]]}})"));
  EXPECT_TRUE(from.is_module);
}

TEST(Io, InputDispatch) {
  EXPECT_TRUE(std::holds_alternative<FiniteMonoid>(io::parse_input_text(R"({"kind":"monoid","size":1,"op":[[0]]})")));
  EXPECT_TRUE(std::holds_alternative<Carrier>(io::parse_input_text(R"({"size":1,"add":[[0]]})")));
  EXPECT_TRUE(std::holds_alternative<MSemimodule>(io::parse_input_text(R"({"monoid":"C2","carrier":"B"})")));
  EXPECT_THROW(io::parse_input_text("{not json"), std::exception);
  EXPECT_THROW(io::load_input("/nonexistent/input.json"), ParseError);
}

TEST(Io, GroupJson) {
  auto j = io::group_json(AbGroupPresentation::parse("Z x Z/2 x Z/6"));
  EXPECT_EQ(j["text"], "Z x Z/2 x Z/6");
  EXPECT_EQ(j["free_rank"], 1);
  EXPECT_EQ(j["factors"], Json::parse("[2,6]"));
}
