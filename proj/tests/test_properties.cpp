#include <doctest.h>

#include "support.hpp"

using namespace ybsys;

TEST_CASE("field axioms on random triples") {
  test::Rng rng(20240101);
  for (int round = 0; round < 150; ++round) {
    ScalarExpr a = test::random_scalar(rng), b = test::random_scalar(rng), c = test::random_scalar(rng);
    CAPTURE(a.to_string());
    CAPTURE(b.to_string());
    CAPTURE(c.to_string());
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + ScalarExpr(0) == a);
    CHECK(a * ScalarExpr(1) == a);
    CHECK(a - a == ScalarExpr(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == ScalarExpr(1));
    if (!b.is_zero()) CHECK(scalar_div(scalar_mul(a, b), b) == a);
  }
}

TEST_CASE("representation is canonical") {
  test::Rng rng(7);
  for (int round = 0; round < 100; ++round) {
    ScalarExpr a = test::random_scalar(rng), b = test::random_nonzero_scalar(rng);
    ScalarExpr x = a * b / b;
    CHECK(x.num() == a.num());
    CHECK(x.den() == a.den());
    if (!x.den().is_zero()) CHECK(x.den().leading_coeff() == 1);
    CHECK(gcd(x.num(), x.den()) == (x.is_zero() ? x.den() : MultiPoly(1)));
    CHECK(ScalarExpr::parse(x.to_string()) == x);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  test::Rng rng(99);
  int checked = 0;
  for (int round = 0; round < 200; ++round) {
    ScalarExpr a = test::random_scalar(rng), b = test::random_scalar(rng);
    auto at = test::random_point(rng);
    try {
      Rational ea = a.evaluate(at), eb = b.evaluate(at);
      CHECK((a + b).evaluate(at) == ea + eb);
      Rational prod = ea * eb;
      CHECK((a * b).evaluate(at) == prod);
      ++checked;
    } catch (const DivisionByZero&) {
    }
  }
  CHECK(checked > 150);
}

TEST_CASE("tensor functoriality on random maps") {
  test::Rng rng(3);
  Space u("U", {"u0", "u1"}), v("V", {"v0", "v1", "v2"}), w("W", {"w0", "w1"});
  for (int round = 0; round < 20; ++round) {
    LinMap f1 = test::random_map(rng, u, v), f2 = test::random_map(rng, v, w);
    LinMap g1 = test::random_map(rng, w, u), g2 = test::random_map(rng, u, v);
    CHECK(lin_tensor(f2, g2) * lin_tensor(f1, g1) == lin_tensor(f2 * f1, g2 * g1));
  }
}

TEST_CASE("maps on disjoint legs commute") {
  test::Rng rng(5);
  Space a("A", {"a0", "a1"}), b("B", {"b0", "b1", "b2"}), c("C", {"c0", "c1"});
  ProductSpace ab = ProductSpace(a) * ProductSpace(b);
  for (int round = 0; round < 20; ++round) {
    LinMap m = test::random_map(rng, ab, ab);
    LinMap k = test::random_map(rng, c, c);
    LinMap on12 = lift12(m, c);
    LinMap on3 = lin_tensor(LinMap::identity(ab), k);
    CHECK(on12 * on3 == on3 * on12);
  }
}

TEST_CASE("lift13 is lift12 conjugated by the flip of the last two legs") {
  test::Rng rng(13);
  Space a("A", {"a0", "a1"}), b("B", {"b0", "b1", "b2"}), c("C", {"c0", "c1"});
  ProductSpace ac = ProductSpace(a) * ProductSpace(c);
  LinMap flip_cb = lin_tensor(LinMap::identity(a), lin_flip(c, b));  // A⊗C⊗B → A⊗B⊗C
  LinMap flip_bc = lin_tensor(LinMap::identity(a), lin_flip(b, c));  // A⊗B⊗C → A⊗C⊗B
  for (int round = 0; round < 20; ++round) {
    LinMap m = test::random_map(rng, ac, ac);
    CHECK(lift13(m, b) == flip_cb * lift12(m, b) * flip_bc);
  }
  LinMap flip_front = lin_tensor(lin_flip(a, b), LinMap::identity(c));  // A⊗B⊗C → B⊗A⊗C
  LinMap flip_back = lin_tensor(lin_flip(b, a), LinMap::identity(c));
  for (int round = 0; round < 20; ++round) {
    LinMap m = test::random_map(rng, ac, ac);
    CHECK(lift13(m, b) == flip_back * lift23(m, b) * flip_front);
  }
}

TEST_CASE("applying a map to a row vector gives image coordinates") {
  test::Rng rng(17);
  Space a("A", {"a0", "a1", "a2"}), b("B", {"b0", "b1"});
  for (int round = 0; round < 20; ++round) {
    LinMap f = test::random_map(rng, a, b), g = test::random_map(rng, b, a);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      std::vector<ScalarExpr> e(a.dim());
      e[i] = 1;
      auto image = f.apply(e);
      for (std::size_t j = 0; j < b.dim(); ++j) CHECK(image[j] == f(i, j));
      auto twice = g.apply(image);
      auto direct = (g * f).apply(e);
      CHECK(twice == direct);
    }
  }
}

TEST_CASE("braid and QYBE are equivalent under composition with the flip") {
  test::Rng rng(23);
  std::vector<LinMap> ops;
  for (const auto& a : test::zoo_algebras()) {
    ops.push_back(build_RA(a, test::R, test::S));
    ops.push_back(build_W(a, test::R, test::S));
  }
  for (const auto& c : test::zoo_coalgebras()) {
    if (c.dim() > 3) continue;
    ops.push_back(build_RC(c, test::P, test::T));
    ops.push_back(build_Z(c, test::P, test::T));
  }
  std::size_t base = ops.size();
  for (std::size_t i = 0; i < base; ++i) {
    if (ops[i].domain().dim() <= 9) ops.push_back(test::perturb_one(rng, ops[i]));
  }
  Space v("V", {"v0", "v1"});
  for (int round = 0; round < 10; ++round) {
    ProductSpace vv = ProductSpace(v) * ProductSpace(v);
    ops.push_back(test::random_map(rng, vv, vv, 0.3));
  }
  int braid_passes = 0, braid_fails = 0;
  for (const auto& r : ops) {
    bool braid = check_braid(r).passed();
    CHECK(braid == check_qybe(compose_flip(r)).passed());
    (braid ? braid_passes : braid_fails)++;
  }
  CHECK(braid_passes > 0);
  CHECK(braid_fails > 0);
}
