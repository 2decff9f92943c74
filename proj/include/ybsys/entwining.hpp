#pragma once

// Entwining structures (A, C)_ψ and their correspondence with WXZ-systems.

#include <optional>

#include "ybsys/yang_baxter.hpp"

namespace ybsys {

/// Algebra A and coalgebra C linked by ψ: C⊗A → A⊗C. Writing
/// ψ(c⊗a) = Σ_α a_α⊗c^α, the α-components are the rows of `psi`.
struct EntwiningStructure {
  Algebra A;
  Coalgebra C;
  LinMap psi;

  /// Throws DimensionMismatch unless psi maps C⊗A → A⊗C.
  EntwiningStructure(Algebra a, Coalgebra c, LinMap psi);
  friend bool operator==(const EntwiningStructure&, const EntwiningStructure&) = default;
};

/// The four entwining axioms, named "mult", "comult", "unit", "counit":
///   ψ∘(I⊗μ) = (μ⊗I)∘(I⊗ψ)∘(ψ⊗I)
///   (I⊗Δ)∘ψ = (ψ⊗I)∘(I⊗ψ)∘(Δ⊗I)
///   ψ∘(I⊗ι) = ι⊗I
///   (I⊗ε)∘ψ = ε⊗I
Report check_entwining(const EntwiningStructure& e);

/// ψ = τ_{C,A}.
EntwiningStructure flip_entwining(const Algebra& a, const Coalgebra& c);

/// W = build_W(A, r, s), X = ψ∘τ_{A,C}, Z = build_Z(C, p, t).
/// Throws PreconditionFailed if `e` is not an entwining structure.
WXZSystem wxz_from_entwining(const EntwiningStructure& e, const ScalarExpr& r, const ScalarExpr& s,
                             const ScalarExpr& p, const ScalarExpr& t);

/// X∘(ι⊗I_C) = ι⊗I_C ("unit side condition") and
/// (I_A⊗ε)∘X = I_A⊗ε ("counit side condition").
Report side_conditions(const LinMap& x, const Algebra& a, const Coalgebra& c);

/// Outcome of reading an entwining map off a WXZ-system.
struct RecoveredEntwining {
  Report wxz;
  Report side_conditions;
  std::optional<EntwiningStructure> entwining;  // set only when both reports pass

  bool ok() const { return entwining.has_value(); }
};

/// Returns the reports and, when they pass, ψ = X∘τ_{C,A}.
RecoveredEntwining recover_entwining(const WXZSystem& sys, const Algebra& a, const Coalgebra& c);
/// As recover_entwining, but throws PreconditionFailed naming the failed checks.
EntwiningStructure entwining_from_wxz(const WXZSystem& sys, const Algebra& a, const Coalgebra& c);

/// ψ(c⊗a) = Σ a₍₀₎ ⊗ c·a₍₁₎. Throws InvalidArgument when the bialgebras differ
/// and PreconditionFailed when a prerequisite check fails.
EntwiningStructure doi_koppinen_entwining(const ComoduleAlgebra& a, const ModuleCoalgebra& c);

/// ψ⁻¹: A⊗C → C⊗A. Throws SingularMap.
LinMap invert_entwining(const EntwiningStructure& e);

/// (C*, A*) entwined by the transpose of ψ.
EntwiningStructure dualize_entwining(const EntwiningStructure& e);

/// Ψ: B⊗A → A⊗B.
struct AlgebraFactorisation {
  Algebra A;
  Algebra B;
  LinMap Psi;

  AlgebraFactorisation(Algebra a, Algebra b, LinMap psi);
};

/// Axioms "mult A", "mult B", "unit A", "unit B":
///   Ψ∘(I⊗μ_A) = (μ_A⊗I)∘(I⊗Ψ)∘(Ψ⊗I)
///   Ψ∘(μ_B⊗I) = (I⊗μ_B)∘(Ψ⊗I)∘(I⊗Ψ)
///   Ψ(1_B⊗a) = a⊗1_B
///   Ψ(b⊗1_A) = 1_A⊗b
Report check_factorisation(const AlgebraFactorisation& f);

/// W = build_W(A, r, s), Z = build_W(B, rb, sb), X = Ψ∘τ_{A,B}.
WXZSystem wxz_from_factorisation(const AlgebraFactorisation& f, const ScalarExpr& r, const ScalarExpr& s,
                                 const ScalarExpr& rb, const ScalarExpr& sb);

/// Semi-dual factorisation of (A, C)_ψ: B = C* with the convolution product and
/// ⟨Ψ(φ⊗a), c⟩ = Σ a_α φ(c^α).
AlgebraFactorisation semi_dualize(const EntwiningStructure& e);

/// A⊗B with componentwise product: Ψ = τ_{B,A}.
AlgebraFactorisation flip_factorisation(const Algebra& a, const Algebra& b);

}  // namespace ybsys
