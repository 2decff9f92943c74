#include <doctest.h>

#include "support.hpp"
#include "ybsys/error.hpp"

using namespace ybsys;

TEST_CASE("zoo algebras and coalgebras pass their checks") {
  for (const auto& a : test::zoo_algebras()) {
    CAPTURE(a.space().label);
    CHECK(check_algebra(a).passed());
  }
  for (const auto& c : test::zoo_coalgebras()) {
    CAPTURE(c.space().label);
    CHECK(check_coalgebra(c).passed());
  }
}

TEST_CASE("the two-dimensional example in structure constants") {
  Algebra a = ex28_algebra(test::S);
  CHECK(a.mu(1, 1, 0) == ScalarExpr(1) / (test::S + 1));
  CHECK(a.mu(1, 1, 1) == 0);
  CHECK(a.mu(0, 1, 1) == 1);
  CHECK(a.eta(0) == 1);
  Coalgebra c = ex28_coalgebra(test::S);
  CHECK(c.delta(0, 1, 1) == ScalarExpr(1) / (test::S + 1));
  CHECK(c.delta(1, 0, 1) == 1);
  CHECK(c.delta(1, 1, 0) == 1);
  CHECK(c.eps(0) == 1);
  CHECK(c.eps(1) == 0);
}

TEST_CASE("check names") {
  Report r = check_algebra(test::zoo_algebras()[1]);
  REQUIRE(r.checks().size() == 3);
  CHECK(r.checks()[0].name == "associativity");
  CHECK(r.checks()[1].name == "left unit");
  CHECK(r.checks()[2].name == "right unit");
  Report b = check_bialgebra(group_bialgebra(3));
  CHECK(b.passed());
  CHECK(b.at("algebra.associativity").holds());
  CHECK(b.at("coalgebra.coassociativity").holds());
  CHECK(b.at("comultiplication is multiplicative").holds());
  CHECK_THROWS_AS(b.at("nonsense"), InvalidArgument);
}

TEST_CASE("broken associativity is reported with a witness") {
  Space v("V", {"1", "x"});
  Tensor3 mult(8);
  mult[0] = 1;
  mult[(0 * 2 + 1) * 2 + 1] = 1;
  mult[(1 * 2 + 0) * 2 + 1] = 1;
  mult[(1 * 2 + 1) * 2 + 1] = 1;  // x² = x: fine
  Algebra good(v, mult, {1, 0});
  CHECK(check_algebra(good).passed());
  mult[(1 * 2 + 1) * 2 + 0] = test::S;  // x² = s + x: still associative (commutative, 2-dim)
  CHECK(check_algebra(Algebra(v, mult, {1, 0})).passed());
  mult[(0 * 2 + 1) * 2 + 0] = 1;  // 1·x = 1 + x: breaks the unit
  Report r = check_algebra(Algebra(v, mult, {1, 0}));
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.at("left unit").holds());
  auto w = r.at("left unit").witness();
  REQUIRE(w.has_value());
  CHECK(w->domain_element == "x");
  CHECK(w->codomain_element == "1");
  CHECK(w->value == 1);
  CHECK(r.to_text().find("FAIL left unit: at x -> 1, difference 1") != std::string::npos);
}

TEST_CASE("single-entry perturbations that break an axiom carry a witness") {
  test::Rng rng(101);
  int broken = 0;
  for (const auto& a : test::zoo_algebras()) {
    for (int round = 0; round < 5; ++round) {
      Algebra p(a.space(), test::perturb_one(rng, a.mult()), a.unit());
      Report r = check_algebra(p);
      for (const auto* f : r.failures()) {
        ++broken;
        CHECK(f->witness().has_value());
        CHECK_FALSE(f->witness()->value.is_zero());
      }
    }
  }
  CHECK(broken > 0);
}

TEST_CASE("constructors reject wrong shapes") {
  Space v("V", {"a", "b"});
  CHECK_THROWS_AS(Algebra(v, Tensor3(7), {1, 0}), DimensionMismatch);
  CHECK_THROWS_AS(Algebra(v, Tensor3(8), {1}), DimensionMismatch);
  CHECK_THROWS_AS(Coalgebra(v, Tensor3(8), {1, 0, 0}), DimensionMismatch);
  CHECK_THROWS_AS(Algebra(v, LinMap(v, v), LinMap(ProductSpace(), v)), DimensionMismatch);
  CHECK_THROWS_AS(Bialgebra(group_bialgebra(2).alg, group_bialgebra(3).coalg), InvalidArgument);
  CHECK_THROWS_AS(group_bialgebra(0), InvalidArgument);
}

TEST_CASE("group bialgebra") {
  Bialgebra b = group_bialgebra(3);
  CHECK(b.space().basis == std::vector<std::string>{"g0", "g1", "g2"});
  CHECK(b.alg.mu(2, 2, 1) == 1);
  CHECK(b.coalg.delta(1, 1, 1) == 1);
  CHECK(check_bialgebra(b).passed());
  CHECK(check_comodule_algebra(regular_comodule_algebra(b)).passed());
  CHECK(check_module_coalgebra(regular_module_coalgebra(b)).passed());
}

TEST_CASE("comodule and module checks catch bad data") {
  Bialgebra b = group_bialgebra(2);
  ComoduleAlgebra ca = regular_comodule_algebra(b);
  ca.coaction = LinMap(ca.coaction.domain(), ca.coaction.codomain());
  CHECK_FALSE(check_comodule_algebra(ca).passed());
  ModuleCoalgebra mc = regular_module_coalgebra(b);
  mc.action.at(1, 0) += 1;
  CHECK_FALSE(check_module_coalgebra(mc).passed());
}

TEST_CASE("duality exchanges algebra and coalgebra axioms") {
  for (const auto& a : test::zoo_algebras()) {
    Coalgebra d = dualize_algebra(a);
    CHECK(check_coalgebra(d).passed());
    CHECK(d.space().label == a.space().label + "*");
    CHECK(dualize_coalgebra(d) == a);
  }
  for (const auto& c : test::zoo_coalgebras()) CHECK(check_algebra(dualize_coalgebra(c)).passed());
  test::Rng rng(55);
  int fails = 0;
  for (const auto& a : test::zoo_algebras()) {
    for (int round = 0; round < 6; ++round) {
      Algebra p(a.space(), test::perturb_one(rng, a.mult()), a.unit());
      bool alg = check_algebra(p).passed();
      CHECK(alg == check_coalgebra(dualize_algebra(p)).passed());
      fails += alg ? 0 : 1;
    }
  }
  CHECK(fails > 0);
}

TEST_CASE("substitution specialises structures") {
  Algebra a = ex28_algebra(test::S).substitute({{Var::s, ScalarExpr(1)}});
  CHECK(a.mu(1, 1, 0) == Rational(1, 2));
  CHECK(a == ex28_algebra(ScalarExpr(1)));
}
