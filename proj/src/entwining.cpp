#include "ybsys/entwining.hpp"

#include "ybsys/error.hpp"

namespace ybsys {

namespace {

ProductSpace ps(const Space& v) { return ProductSpace(v); }
LinMap id(const Space& v) { return LinMap::identity(ps(v)); }

std::string failed_names(const Report& r) {
  std::string out;
  for (const auto* c : r.failures()) {
    if (!out.empty()) out += ", ";
    out += c->name;
  }
  return out;
}

}  // namespace

EntwiningStructure::EntwiningStructure(Algebra a, Coalgebra c, LinMap p)
    : A(std::move(a)), C(std::move(c)), psi(std::move(p)) {
  if (!(psi.domain() == ps(C.space()) * ps(A.space())) || !(psi.codomain() == ps(A.space()) * ps(C.space()))) {
    throw DimensionMismatch("entwining map must be C⊗A -> A⊗C, got " + psi.domain().label() + " -> " +
                            psi.codomain().label());
  }
}

Report check_entwining(const EntwiningStructure& e) {
  const LinMap& psi = e.psi;
  LinMap IA = id(e.A.space()), IC = id(e.C.space());
  Report r;
  r.add(equation("mult", psi * lin_tensor(IC, e.A.mult()),
                 lin_tensor(e.A.mult(), IC) * lin_tensor(IA, psi) * lin_tensor(psi, IA)));
  r.add(equation("comult", lin_tensor(IA, e.C.comult()) * psi,
                 lin_tensor(psi, IC) * lin_tensor(IC, psi) * lin_tensor(e.C.comult(), IA)));
  r.add(equation("unit", psi * lin_tensor(IC, e.A.unit()), lin_tensor(e.A.unit(), IC)));
  r.add(equation("counit", lin_tensor(IA, e.C.counit()) * psi, lin_tensor(e.C.counit(), IA)));
  return r;
}

EntwiningStructure flip_entwining(const Algebra& a, const Coalgebra& c) {
  return EntwiningStructure(a, c, lin_flip(ps(c.space()), ps(a.space())));
}

WXZSystem wxz_from_entwining(const EntwiningStructure& e, const ScalarExpr& r, const ScalarExpr& s,
                             const ScalarExpr& p, const ScalarExpr& t) {
  Report check = check_entwining(e);
  if (!check.passed()) throw PreconditionFailed("not an entwining structure; failed: " + failed_names(check));
  LinMap x = e.psi * lin_flip(ps(e.A.space()), ps(e.C.space()));
  return WXZSystem(e.A.space(), e.C.space(), build_W(e.A, r, s), std::move(x), build_Z(e.C, p, t));
}

Report side_conditions(const LinMap& x, const Algebra& a, const Coalgebra& c) {
  LinMap IA = id(a.space()), IC = id(c.space());
  Report r;
  r.add(equation("unit side condition", x * lin_tensor(a.unit(), IC), lin_tensor(a.unit(), IC)));
  r.add(equation("counit side condition", lin_tensor(IA, c.counit()) * x, lin_tensor(IA, c.counit())));
  return r;
}

RecoveredEntwining recover_entwining(const WXZSystem& sys, const Algebra& a, const Coalgebra& c) {
  if (!(sys.V == a.space()) || !(sys.Vp == c.space())) {
    throw DimensionMismatch("system spaces " + sys.V.label + ", " + sys.Vp.label + " do not match algebra " +
                            a.space().label + " and coalgebra " + c.space().label);
  }
  RecoveredEntwining out{check_wxz(sys), side_conditions(sys.X, a, c), std::nullopt};
  if (out.wxz.passed() && out.side_conditions.passed()) {
    out.entwining.emplace(a, c, sys.X * lin_flip(ps(c.space()), ps(a.space())));
  }
  return out;
}

EntwiningStructure entwining_from_wxz(const WXZSystem& sys, const Algebra& a, const Coalgebra& c) {
  auto rec = recover_entwining(sys, a, c);
  if (!rec.wxz.passed()) throw PreconditionFailed("not a WXZ-system; failed: " + failed_names(rec.wxz));
  if (!rec.side_conditions.passed()) {
    throw PreconditionFailed("side condition failed: " + failed_names(rec.side_conditions));
  }
  return std::move(*rec.entwining);
}

EntwiningStructure doi_koppinen_entwining(const ComoduleAlgebra& a, const ModuleCoalgebra& c) {
  if (!(a.over == c.over)) throw InvalidArgument("comodule algebra and module coalgebra are over different bialgebras");
  Report pre;
  pre.merge(check_bialgebra(a.over), "bialgebra");
  pre.merge(check_comodule_algebra(a), "comodule algebra");
  pre.merge(check_module_coalgebra(c), "module coalgebra");
  if (!pre.passed()) throw PreconditionFailed("Doi-Koppinen prerequisites failed: " + failed_names(pre));
  const Space& A = a.alg.space();
  const Space& C = c.coalg.space();
  const Space& B = a.over.space();
  // c⊗a → c⊗a₍₀₎⊗a₍₁₎ → a₍₀₎⊗c⊗a₍₁₎ → a₍₀₎⊗c·a₍₁₎
  LinMap psi = lin_tensor(id(A), c.action) * lin_tensor(lin_flip(ps(C), ps(A)), id(B)) * lin_tensor(id(C), a.coaction);
  return EntwiningStructure(a.alg, c.coalg, std::move(psi));
}

LinMap invert_entwining(const EntwiningStructure& e) { return lin_invert(e.psi); }

EntwiningStructure dualize_entwining(const EntwiningStructure& e) {
  return EntwiningStructure(dualize_coalgebra(e.C), dualize_algebra(e.A), dual_map(e.psi));
}

AlgebraFactorisation::AlgebraFactorisation(Algebra a, Algebra b, LinMap psi)
    : A(std::move(a)), B(std::move(b)), Psi(std::move(psi)) {
  if (!(Psi.domain() == ps(B.space()) * ps(A.space())) || !(Psi.codomain() == ps(A.space()) * ps(B.space()))) {
    throw DimensionMismatch("factorisation map must be B⊗A -> A⊗B, got " + Psi.domain().label() + " -> " +
                            Psi.codomain().label());
  }
}

Report check_factorisation(const AlgebraFactorisation& f) {
  const LinMap& psi = f.Psi;
  LinMap IA = id(f.A.space()), IB = id(f.B.space());
  Report r;
  r.add(equation("mult A", psi * lin_tensor(IB, f.A.mult()),
                 lin_tensor(f.A.mult(), IB) * lin_tensor(IA, psi) * lin_tensor(psi, IA)));
  r.add(equation("mult B", psi * lin_tensor(f.B.mult(), IA),
                 lin_tensor(IA, f.B.mult()) * lin_tensor(psi, IB) * lin_tensor(IB, psi)));
  r.add(equation("unit A", psi * lin_tensor(f.B.unit(), IA), lin_tensor(IA, f.B.unit())));
  r.add(equation("unit B", psi * lin_tensor(IB, f.A.unit()), lin_tensor(f.A.unit(), IB)));
  return r;
}

WXZSystem wxz_from_factorisation(const AlgebraFactorisation& f, const ScalarExpr& r, const ScalarExpr& s,
                                 const ScalarExpr& rb, const ScalarExpr& sb) {
  Report check = check_factorisation(f);
  if (!check.passed()) throw PreconditionFailed("not an algebra factorisation; failed: " + failed_names(check));
  LinMap x = f.Psi * lin_flip(ps(f.A.space()), ps(f.B.space()));
  return WXZSystem(f.A.space(), f.B.space(), build_W(f.A, r, s), std::move(x), build_W(f.B, rb, sb));
}

AlgebraFactorisation semi_dualize(const EntwiningStructure& e) {
  Algebra b = dualize_coalgebra(e.C);
  const std::size_t na = e.A.dim(), nc = e.C.dim();
  LinMap psi(ps(b.space()) * ps(e.A.space()), ps(e.A.space()) * ps(b.space()));
  for (std::size_t j = 0; j < nc; ++j) {
    for (std::size_t a = 0; a < na; ++a) {
      for (std::size_t x = 0; x < na; ++x) {
        for (std::size_t k = 0; k < nc; ++k) psi.at(j * na + a, x * nc + k) = e.psi(k * na + a, x * nc + j);
      }
    }
  }
  return AlgebraFactorisation(e.A, std::move(b), std::move(psi));
}

AlgebraFactorisation flip_factorisation(const Algebra& a, const Algebra& b) {
  return AlgebraFactorisation(a, b, lin_flip(ps(b.space()), ps(a.space())));
}

}  // namespace ybsys
