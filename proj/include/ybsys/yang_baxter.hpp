#pragma once

// Yang-Baxter operators built from (co)algebras, braid and QYBE checks,
// Yang-Baxter commutators and WXZ-systems.

#include "ybsys/report.hpp"
#include "ybsys/structures.hpp"

namespace ybsys {

/// W on V⊗V, X on V⊗V', Z on V'⊗V'.
struct WXZSystem {
  Space V;
  Space Vp;
  LinMap W;
  LinMap X;
  LinMap Z;

  /// Throws DimensionMismatch when a map lives on the wrong spaces.
  WXZSystem(Space v, Space vp, LinMap w, LinMap x, LinMap z);
  friend bool operator==(const WXZSystem&, const WXZSystem&) = default;
};

/// a⊗b ↦ s·ab⊗1 + r·1⊗ab − s·a⊗b
LinMap build_RA(const Algebra& a, const ScalarExpr& r, const ScalarExpr& s);
/// a⊗b ↦ (1/r)·ab⊗1 + (1/s)·1⊗ab − (1/s)·a⊗b. Throws DivisionByZero if r or s is 0.
LinMap invert_RA(const Algebra& a, const ScalarExpr& r, const ScalarExpr& s);
/// c⊗d ↦ p·ε(c)Δ(d) + t·ε(d)Δ(c) − p·c⊗d
LinMap build_RC(const Coalgebra& c, const ScalarExpr& p, const ScalarExpr& t);

/// a⊗b ↦ s·ba⊗1 + r·1⊗ba − s·b⊗a, equal to build_RA(a, r, s)∘τ.
LinMap build_W(const Algebra& a, const ScalarExpr& r, const ScalarExpr& s);
/// c⊗d ↦ t·ε(c)Δ(d) + p·ε(d)Δ(c) − p·d⊗c, equal to build_RC(c, p, t)∘τ.
LinMap build_Z(const Coalgebra& c, const ScalarExpr& p, const ScalarExpr& t);

/// R₁₂R₂₃R₁₂ − R₂₃R₁₂R₂₃ as check "braid".
Report check_braid(const LinMap& r);
/// R₁₂R₁₃R₂₃ − R₂₃R₁₃R₁₂ as check "qybe".
Report check_qybe(const LinMap& r);

/// [R, S, T] = R₁₂S₁₃T₂₃ − T₂₃S₁₃R₁₂ on V⊗V'⊗V'' for R on V⊗V', S on V⊗V'',
/// T on V'⊗V''.
LinMap yb_commutator(const LinMap& r, const LinMap& s, const LinMap& t);

/// Checks "[W,W,W]", "[Z,Z,Z]", "[W,X,X]" and "[X,X,Z]".
Report check_wxz(const WXZSystem& sys);

/// R∘τ for an endomorphism R of V⊗V.
LinMap compose_flip(const LinMap& r);

}  // namespace ybsys
