#pragma once

// Gluing a WXZ-system into one Yang-Baxter operator on V⊕V', and the q-Hecke
// variant built from an invertible entwining map.

#include "ybsys/entwining.hpp"

namespace ybsys {

/// V⊕V' with the V-basis first. If any basis label occurs in both, every
/// label is prefixed with its space label ("A.1").
Space direct_sum(const Space& v, const Space& vp);

struct GluedOperator {
  Space V;
  Space Vp;
  Space sum_space;
  LinMap map;  // on (V⊕V')⊗(V⊕V')

  /// Restriction of `map` to the input block first⊗second with outputs in
  /// out_first⊗out_second; each argument selects V (false) or V' (true).
  LinMap block(bool first, bool second, bool out_first, bool out_second) const;
};

/// R = W∘τ on V⊗V, R' = Z∘τ on V'⊗V', y⊗x ↦ U(y⊗x) and x⊗y ↦ U⁻¹(x⊗y)
/// for U = X∘τ_{V',V}. Throws PreconditionFailed if check_wxz fails and
/// SingularMap if X is not invertible.
GluedOperator glue(const WXZSystem& sys);

/// With r = t = q and s = p = q⁻¹: R = W∘τ on A⊗A, R' = Z∘τ on C⊗C,
/// a⊗c ↦ ψ⁻¹(a⊗c) and c⊗a ↦ ψ(c⊗a) + (q − q⁻¹)·c⊗a.
/// Throws PreconditionFailed (not entwining), SingularMap, or DivisionByZero (q = 0).
GluedOperator hecke_glue(const EntwiningStructure& e, const ScalarExpr& q);

/// Checks "hecke" ((R + q⁻¹I)∘(R − qI) = 0) and "braid".
/// Throws DivisionByZero for q = 0.
Report check_hecke(const LinMap& r, const ScalarExpr& q);

/// (R + sI)∘(R − rI) = 0 for R = build_RA(A, r, s), as check "annihilation".
Report annihilating_poly_check(const Algebra& a, const ScalarExpr& r, const ScalarExpr& s);
/// (R + pI)∘(R − tI) = 0 for R = build_RC(C, p, t), as check "annihilation".
Report annihilating_poly_check(const Coalgebra& c, const ScalarExpr& p, const ScalarExpr& t);

}  // namespace ybsys
