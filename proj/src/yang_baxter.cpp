#include "ybsys/yang_baxter.hpp"

#include <future>

#include "ybsys/error.hpp"

namespace ybsys {

namespace {

ProductSpace square(const Space& v) { return ProductSpace(v) * ProductSpace(v); }

void require_endo(const LinMap& m, const ProductSpace& on, const char* what) {
  if (!(m.domain() == on) || !(m.codomain() == on)) {
    throw DimensionMismatch(std::string(what) + " must be an endomorphism of " + on.label() + ", got " +
                            m.domain().label() + " -> " + m.codomain().label());
  }
}

void require_square_two_leg(const LinMap& r, const char* what) {
  if (r.domain().arity() != 2 || !r.is_endomorphism() || !(r.domain().factor(0) == r.domain().factor(1))) {
    throw DimensionMismatch(std::string(what) + " needs an endomorphism of V⊗V, got " + r.domain().label() + " -> " +
                            r.codomain().label());
  }
}

}  // namespace

WXZSystem::WXZSystem(Space v, Space vp, LinMap w, LinMap x, LinMap z)
    : V(std::move(v)), Vp(std::move(vp)), W(std::move(w)), X(std::move(x)), Z(std::move(z)) {
  require_endo(W, square(V), "W");
  require_endo(X, ProductSpace(V) * ProductSpace(Vp), "X");
  require_endo(Z, square(Vp), "Z");
}

LinMap build_RA(const Algebra& a, const ScalarExpr& r, const ScalarExpr& s) {
  LinMap I = LinMap::identity(a.space());
  LinMap ab_1 = lin_tensor(I, a.unit()) * a.mult();
  LinMap one_ab = lin_tensor(a.unit(), I) * a.mult();
  return s * ab_1 + r * one_ab - s * LinMap::identity(square(a.space()));
}

LinMap invert_RA(const Algebra& a, const ScalarExpr& r, const ScalarExpr& s) {
  if (r.is_zero() || s.is_zero()) throw DivisionByZero("R^A_{r,s} is invertible only for nonzero r and s");
  LinMap I = LinMap::identity(a.space());
  LinMap ab_1 = lin_tensor(I, a.unit()) * a.mult();
  LinMap one_ab = lin_tensor(a.unit(), I) * a.mult();
  ScalarExpr inv_s = s.inverse();
  return r.inverse() * ab_1 + inv_s * one_ab - inv_s * LinMap::identity(square(a.space()));
}

LinMap build_RC(const Coalgebra& c, const ScalarExpr& p, const ScalarExpr& t) {
  LinMap I = LinMap::identity(c.space());
  LinMap eps_first = c.comult() * lin_tensor(c.counit(), I);  // c⊗d ↦ ε(c)Δ(d)
  LinMap eps_second = c.comult() * lin_tensor(I, c.counit());  // c⊗d ↦ ε(d)Δ(c)
  return p * eps_first + t * eps_second - p * LinMap::identity(square(c.space()));
}

LinMap build_W(const Algebra& a, const ScalarExpr& r, const ScalarExpr& s) {
  const std::size_t n = a.dim();
  LinMap w(square(a.space()), square(a.space()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row = i * n + j;
      // e_j e_i = Σ_k μ[j][i][k] e_k
      for (std::size_t k = 0; k < n; ++k) {
        const ScalarExpr& ba = a.mu(j, i, k);
        if (ba.is_zero()) continue;
        for (std::size_t l = 0; l < n; ++l) {
          const ScalarExpr& one = a.eta(l);
          if (one.is_zero()) continue;
          w.at(row, k * n + l) += s * ba * one;
          w.at(row, l * n + k) += r * one * ba;
        }
      }
      w.at(row, j * n + i) -= s;
    }
  }
  return w;
}

LinMap build_Z(const Coalgebra& c, const ScalarExpr& p, const ScalarExpr& t) {
  const std::size_t n = c.dim();
  LinMap z(square(c.space()), square(c.space()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row = i * n + j;
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          ScalarExpr v;
          if (!c.eps(i).is_zero() && !c.delta(j, k, l).is_zero()) v += t * c.eps(i) * c.delta(j, k, l);
          if (!c.eps(j).is_zero() && !c.delta(i, k, l).is_zero()) v += p * c.eps(j) * c.delta(i, k, l);
          if (!v.is_zero()) z.at(row, k * n + l) += v;
        }
      }
      z.at(row, j * n + i) -= p;
    }
  }
  return z;
}

LinMap compose_flip(const LinMap& r) {
  require_square_two_leg(r, "compose_flip");
  ProductSpace v(r.domain().factor(0));
  return r * lin_flip(v, v);
}

Report check_braid(const LinMap& r) {
  require_square_two_leg(r, "check_braid");
  const Space& v = r.domain().factor(0);
  LinMap r12 = lift12(r, v);
  LinMap r23 = lift23(r, v);
  Report rep;
  rep.add(equation("braid", r12 * r23 * r12, r23 * r12 * r23));
  return rep;
}

Report check_qybe(const LinMap& r) {
  require_square_two_leg(r, "check_qybe");
  Report rep;
  rep.add("qybe", yb_commutator(r, r, r));
  return rep;
}

LinMap yb_commutator(const LinMap& r, const LinMap& s, const LinMap& t) {
  for (const LinMap* m : {&r, &s, &t}) {
    if (m->domain().arity() != 2 || !m->is_endomorphism()) {
      throw DimensionMismatch("Yang-Baxter commutator needs endomorphisms of two-fold products, got " +
                              m->domain().label() + " -> " + m->codomain().label());
    }
  }
  const Space& v = r.domain().factor(0);
  const Space& vp = r.domain().factor(1);
  const Space& vpp = s.domain().factor(1);
  if (!(s.domain().factor(0) == v) || !(t.domain().factor(0) == vp) || !(t.domain().factor(1) == vpp)) {
    throw DimensionMismatch("leg mismatch in [R, S, T]: R on " + r.domain().label() + ", S on " + s.domain().label() +
                            ", T on " + t.domain().label());
  }
  LinMap r12 = lift12(r, vpp);
  LinMap s13 = lift13(s, vp);
  LinMap t23 = lift23(t, v);
  return r12 * s13 * t23 - t23 * s13 * r12;
}

Report check_wxz(const WXZSystem& sys) {
  auto www = std::async(std::launch::async, [&] { return yb_commutator(sys.W, sys.W, sys.W); });
  auto zzz = std::async(std::launch::async, [&] { return yb_commutator(sys.Z, sys.Z, sys.Z); });
  auto wxx = std::async(std::launch::async, [&] { return yb_commutator(sys.W, sys.X, sys.X); });
  auto xxz = std::async(std::launch::async, [&] { return yb_commutator(sys.X, sys.X, sys.Z); });
  Report rep;
  rep.add("[W,W,W]", www.get());
  rep.add("[Z,Z,Z]", zzz.get());
  rep.add("[W,X,X]", wxx.get());
  rep.add("[X,X,Z]", xxz.get());
  return rep;
}

}  // namespace ybsys
