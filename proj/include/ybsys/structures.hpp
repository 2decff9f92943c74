#pragma once

// Algebras, coalgebras and their Hopf-type relatives as structure-constant
// data, stored as linear maps so that every axiom is a tensor identity.

#include <vector>

#include "ybsys/report.hpp"
#include "ybsys/tensor.hpp"

namespace ybsys {

/// Structure constants μ[i][j][k] flattened as (i*n + j)*n + k.
using Tensor3 = std::vector<ScalarExpr>;

class Algebra {
 public:
  /// e_i·e_j = Σ_k mult[(i*n+j)*n+k] e_k and 1 = Σ_k unit[k] e_k.
  Algebra(Space space, const Tensor3& mult, const std::vector<ScalarExpr>& unit);
  /// μ: A⊗A → A and ι: k → A given directly.
  Algebra(Space space, LinMap mult, LinMap unit);

  const Space& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  const LinMap& mult() const noexcept { return mult_; }
  const LinMap& unit() const noexcept { return unit_; }
  const ScalarExpr& mu(std::size_t i, std::size_t j, std::size_t k) const { return mult_(i * dim() + j, k); }
  const ScalarExpr& eta(std::size_t k) const { return unit_(0, k); }

  Algebra substitute(const std::map<Var, ScalarExpr>& values) const;
  friend bool operator==(const Algebra&, const Algebra&) = default;

 private:
  Space space_;
  LinMap mult_;
  LinMap unit_;
};

class Coalgebra {
 public:
  /// Δ(e_i) = Σ_{j,k} comult[(i*n+j)*n+k] e_j⊗e_k and ε(e_i) = counit[i].
  Coalgebra(Space space, const Tensor3& comult, const std::vector<ScalarExpr>& counit);
  /// Δ: C → C⊗C and ε: C → k given directly.
  Coalgebra(Space space, LinMap comult, LinMap counit);

  const Space& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  const LinMap& comult() const noexcept { return comult_; }
  const LinMap& counit() const noexcept { return counit_; }
  const ScalarExpr& delta(std::size_t i, std::size_t j, std::size_t k) const { return comult_(i, j * dim() + k); }
  const ScalarExpr& eps(std::size_t i) const { return counit_(i, 0); }

  Coalgebra substitute(const std::map<Var, ScalarExpr>& values) const;
  friend bool operator==(const Coalgebra&, const Coalgebra&) = default;

 private:
  Space space_;
  LinMap comult_;
  LinMap counit_;
};

struct Bialgebra {
  Algebra alg;
  Coalgebra coalg;

  /// Throws InvalidArgument when the two structures live on different spaces.
  Bialgebra(Algebra a, Coalgebra c);
  const Space& space() const noexcept { return alg.space(); }
  friend bool operator==(const Bialgebra&, const Bialgebra&) = default;
};

/// Right B-comodule algebra with coaction ρ: A → A⊗B.
struct ComoduleAlgebra {
  Algebra alg;
  Bialgebra over;
  LinMap coaction;
};

/// Right B-module coalgebra with action C⊗B → C.
struct ModuleCoalgebra {
  Coalgebra coalg;
  Bialgebra over;
  LinMap action;
};

Report check_algebra(const Algebra& a);
Report check_coalgebra(const Coalgebra& c);
/// Includes the algebra and coalgebra checks, then the compatibility axioms.
Report check_bialgebra(const Bialgebra& b);
Report check_comodule_algebra(const ComoduleAlgebra& ca);
Report check_module_coalgebra(const ModuleCoalgebra& mc);

/// Basis-dual space: label and basis labels gain a trailing '*' (or lose one).
Space dual_space(const Space& v);
ProductSpace dual_space(const ProductSpace& v);
/// Transpose of f as a map between the dual product spaces.
LinMap dual_map(const LinMap& f);

Coalgebra dualize_algebra(const Algebra& a);
Algebra dualize_coalgebra(const Coalgebra& c);

/// Group algebra k[ℤ_n] on basis {prefix}0..{prefix}{n-1}, as a bialgebra with Δ(g) = g⊗g.
Bialgebra group_bialgebra(std::size_t n, const std::string& label = "B", const std::string& prefix = "g");
/// B as a right B-comodule algebra via Δ.
ComoduleAlgebra regular_comodule_algebra(const Bialgebra& b);
/// B as a right B-module coalgebra via μ.
ModuleCoalgebra regular_module_coalgebra(const Bialgebra& b);

}  // namespace ybsys
