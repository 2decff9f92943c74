#include "ybsys/gluing.hpp"

#include <set>

#include "ybsys/error.hpp"

namespace ybsys {

namespace {

ProductSpace ps(const Space& v) { return ProductSpace(v); }

struct Layout {
  std::size_t n;  // dim V
  std::size_t m;  // dim V'
  std::size_t total() const { return n + m; }
  std::size_t offset(bool primed) const { return primed ? n : 0; }
  std::size_t size(bool primed) const { return primed ? m : n; }
};

void place(LinMap& glued, const Layout& lay, const LinMap& block, bool a, bool b, bool c, bool d) {
  const std::size_t N = lay.total();
  const std::size_t db = lay.size(b), dd = lay.size(d);
  for (std::size_t row = 0; row < block.domain().dim(); ++row) {
    std::size_t i = row / db, j = row % db;
    std::size_t grow = (lay.offset(a) + i) * N + lay.offset(b) + j;
    for (std::size_t col = 0; col < block.codomain().dim(); ++col) {
      const ScalarExpr& v = block(row, col);
      if (v.is_zero()) continue;
      std::size_t k = col / dd, l = col % dd;
      glued.at(grow, (lay.offset(c) + k) * N + lay.offset(d) + l) += v;
    }
  }
}

GluedOperator assemble(const Space& v, const Space& vp, const LinMap& r, const LinMap& rp, const LinMap& on_vp_v,
                       const LinMap& on_v_vp) {
  Space sum = direct_sum(v, vp);
  GluedOperator g{v, vp, sum, LinMap(ps(sum) * ps(sum), ps(sum) * ps(sum))};
  Layout lay{v.dim(), vp.dim()};
  place(g.map, lay, r, false, false, false, false);
  place(g.map, lay, rp, true, true, true, true);
  place(g.map, lay, on_vp_v, true, false, false, true);
  place(g.map, lay, on_v_vp, false, true, true, false);
  return g;
}

}  // namespace

Space direct_sum(const Space& v, const Space& vp) {
  std::set<std::string> left(v.basis.begin(), v.basis.end());
  bool clash = false;
  for (const auto& b : vp.basis) clash = clash || left.count(b) > 0;
  std::string left_prefix = v.label, right_prefix = vp.label;
  if (left_prefix == right_prefix) {
    left_prefix += "1";
    right_prefix += "2";
  }
  std::vector<std::string> basis;
  for (const auto& b : v.basis) basis.push_back(clash ? left_prefix + "." + b : b);
  for (const auto& b : vp.basis) basis.push_back(clash ? right_prefix + "." + b : b);
  return Space(v.label + "⊕" + vp.label, std::move(basis));
}

LinMap GluedOperator::block(bool first, bool second, bool out_first, bool out_second) const {
  Layout lay{V.dim(), Vp.dim()};
  const std::size_t N = lay.total();
  const Space& a = first ? Vp : V;
  const Space& b = second ? Vp : V;
  const Space& c = out_first ? Vp : V;
  const Space& d = out_second ? Vp : V;
  LinMap out(ps(a) * ps(b), ps(c) * ps(d));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      std::size_t grow = (lay.offset(first) + i) * N + lay.offset(second) + j;
      for (std::size_t k = 0; k < c.dim(); ++k) {
        for (std::size_t l = 0; l < d.dim(); ++l) {
          out.at(i * b.dim() + j, k * d.dim() + l) = map(grow, (lay.offset(out_first) + k) * N + lay.offset(out_second) + l);
        }
      }
    }
  }
  return out;
}

GluedOperator glue(const WXZSystem& sys) {
  Report check = check_wxz(sys);
  if (!check.passed()) throw PreconditionFailed("not a WXZ-system:\n" + check.to_text());
  LinMap r = compose_flip(sys.W);
  LinMap rp = compose_flip(sys.Z);
  LinMap u = sys.X * lin_flip(ps(sys.Vp), ps(sys.V));  // V'⊗V → V⊗V'
  LinMap u_inv = lin_invert(u);                           // V⊗V' → V'⊗V
  return assemble(sys.V, sys.Vp, r, rp, u, u_inv);
}

GluedOperator hecke_glue(const EntwiningStructure& e, const ScalarExpr& q) {
  if (q.is_zero()) throw DivisionByZero("q-Hecke gluing needs a nonzero q");
  ScalarExpr q_inv = q.inverse();
  WXZSystem sys = wxz_from_entwining(e, q, q_inv, q_inv, q);
  LinMap r = compose_flip(sys.W);
  LinMap rp = compose_flip(sys.Z);
  LinMap psi_inv = invert_entwining(e);  // A⊗C → C⊗A
  GluedOperator g = assemble(sys.V, sys.Vp, r, rp, e.psi, psi_inv);
  // c⊗a additionally picks up (q − q⁻¹)·c⊗a.
  Layout lay{sys.V.dim(), sys.Vp.dim()};
  ScalarExpr correction = q - q_inv;
  if (!correction.is_zero()) {
    LinMap diag = correction * LinMap::identity(ps(sys.Vp) * ps(sys.V));
    place(g.map, lay, diag, true, false, true, false);
  }
  return g;
}

Report check_hecke(const LinMap& r, const ScalarExpr& q) {
  if (q.is_zero()) throw DivisionByZero("q-Hecke condition needs a nonzero q");
  if (!r.is_endomorphism()) throw DimensionMismatch("check_hecke needs an endomorphism");
  LinMap I = LinMap::identity(r.domain());
  Report rep;
  rep.add("hecke", (r - q * I) * (r + q.inverse() * I));
  rep.merge(check_braid(r));
  return rep;
}

Report annihilating_poly_check(const Algebra& a, const ScalarExpr& r, const ScalarExpr& s) {
  LinMap R = build_RA(a, r, s);
  LinMap I = LinMap::identity(R.domain());
  Report rep;
  rep.add("annihilation", (R - r * I) * (R + s * I));
  return rep;
}

Report annihilating_poly_check(const Coalgebra& c, const ScalarExpr& p, const ScalarExpr& t) {
  LinMap R = build_RC(c, p, t);
  LinMap I = LinMap::identity(R.domain());
  Report rep;
  rep.add("annihilation", (R - t * I) * (R + p * I));
  return rep;
}

}  // namespace ybsys
