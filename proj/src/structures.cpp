#include "ybsys/structures.hpp"

#include "ybsys/error.hpp"

namespace ybsys {

namespace {

LinMap id(const Space& v) { return LinMap::identity(ProductSpace(v)); }

void require_cube(const Tensor3& t, std::size_t n, const char* what) {
  if (t.size() != n * n * n) {
    throw DimensionMismatch(std::string(what) + " needs " + std::to_string(n * n * n) + " structure constants, got " +
                            std::to_string(t.size()));
  }
}

void require_shape(const LinMap& f, const ProductSpace& dom, const ProductSpace& cod, const char* what) {
  if (!(f.domain() == dom) || !(f.codomain() == cod)) {
    throw DimensionMismatch(std::string(what) + " must map " + dom.label() + " -> " + cod.label() + ", got " +
                            f.domain().label() + " -> " + f.codomain().label());
  }
}

}  // namespace

// ------------------------------------------------------------------ Algebra

Algebra::Algebra(Space space, const Tensor3& mult, const std::vector<ScalarExpr>& unit)
    : space_(space), mult_(ProductSpace(space) * ProductSpace(space), space), unit_(ProductSpace(), space) {
  const std::size_t n = space_.dim();
  require_cube(mult, n, "multiplication");
  if (unit.size() != n) throw DimensionMismatch("unit needs " + std::to_string(n) + " coordinates");
  for (std::size_t i = 0; i < n * n; ++i) {
    for (std::size_t k = 0; k < n; ++k) mult_.at(i, k) = mult[i * n + k];
  }
  for (std::size_t k = 0; k < n; ++k) unit_.at(0, k) = unit[k];
}

Algebra::Algebra(Space space, LinMap mult, LinMap unit)
    : space_(std::move(space)), mult_(std::move(mult)), unit_(std::move(unit)) {
  require_shape(mult_, ProductSpace(space_) * ProductSpace(space_), space_, "multiplication");
  require_shape(unit_, ProductSpace(), space_, "unit");
}

Algebra Algebra::substitute(const std::map<Var, ScalarExpr>& values) const {
  return Algebra(space_, mult_.substitute(values), unit_.substitute(values));
}

// ---------------------------------------------------------------- Coalgebra

Coalgebra::Coalgebra(Space space, const Tensor3& comult, const std::vector<ScalarExpr>& counit)
    : space_(space), comult_(space, ProductSpace(space) * ProductSpace(space)), counit_(space, ProductSpace()) {
  const std::size_t n = space_.dim();
  require_cube(comult, n, "comultiplication");
  if (counit.size() != n) throw DimensionMismatch("counit needs " + std::to_string(n) + " coordinates");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t jk = 0; jk < n * n; ++jk) comult_.at(i, jk) = comult[i * n * n + jk];
    counit_.at(i, 0) = counit[i];
  }
}

Coalgebra::Coalgebra(Space space, LinMap comult, LinMap counit)
    : space_(std::move(space)), comult_(std::move(comult)), counit_(std::move(counit)) {
  require_shape(comult_, space_, ProductSpace(space_) * ProductSpace(space_), "comultiplication");
  require_shape(counit_, space_, ProductSpace(), "counit");
}

Coalgebra Coalgebra::substitute(const std::map<Var, ScalarExpr>& values) const {
  return Coalgebra(space_, comult_.substitute(values), counit_.substitute(values));
}

Bialgebra::Bialgebra(Algebra a, Coalgebra c) : alg(std::move(a)), coalg(std::move(c)) {
  if (!(alg.space() == coalg.space())) throw InvalidArgument("bialgebra structures must share one space");
}

// ------------------------------------------------------------------- checks

Report check_algebra(const Algebra& a) {
  const auto& mu = a.mult();
  const auto& unit = a.unit();
  LinMap I = id(a.space());
  Report r;
  r.add(equation("associativity", mu * lin_tensor(mu, I), mu * lin_tensor(I, mu)));
  r.add(equation("left unit", mu * lin_tensor(unit, I), I));
  r.add(equation("right unit", mu * lin_tensor(I, unit), I));
  return r;
}

Report check_coalgebra(const Coalgebra& c) {
  const auto& delta = c.comult();
  const auto& eps = c.counit();
  LinMap I = id(c.space());
  Report r;
  r.add(equation("coassociativity", lin_tensor(delta, I) * delta, lin_tensor(I, delta) * delta));
  r.add(equation("left counit", lin_tensor(eps, I) * delta, I));
  r.add(equation("right counit", lin_tensor(I, eps) * delta, I));
  return r;
}

Report check_bialgebra(const Bialgebra& b) {
  Report r;
  r.merge(check_algebra(b.alg), "algebra");
  r.merge(check_coalgebra(b.coalg), "coalgebra");
  const auto& mu = b.alg.mult();
  const auto& unit = b.alg.unit();
  const auto& delta = b.coalg.comult();
  const auto& eps = b.coalg.counit();
  ProductSpace B(b.space());
  LinMap I = id(b.space());
  LinMap middle = lin_tensor(lin_tensor(I, lin_flip(B, B)), I);
  r.add(equation("comultiplication is multiplicative", delta * mu,
                 lin_tensor(mu, mu) * middle * lin_tensor(delta, delta)));
  r.add(equation("comultiplication is unital", delta * unit, lin_tensor(unit, unit)));
  r.add(equation("counit is multiplicative", eps * mu, lin_tensor(eps, eps)));
  r.add(equation("counit is unital", eps * unit, LinMap::identity(ProductSpace())));
  return r;
}

Report check_comodule_algebra(const ComoduleAlgebra& ca) {
  const Space& A = ca.alg.space();
  const Space& B = ca.over.space();
  require_shape(ca.coaction, A, ProductSpace(A) * ProductSpace(B), "coaction");
  const auto& rho = ca.coaction;
  LinMap IA = id(A), IB = id(B);
  Report r;
  r.add(equation("coaction coassociativity", lin_tensor(rho, IB) * rho, lin_tensor(IA, ca.over.coalg.comult()) * rho));
  r.add(equation("coaction counit", lin_tensor(IA, ca.over.coalg.counit()) * rho, IA));
  LinMap middle = lin_tensor(lin_tensor(IA, lin_flip(B, A)), IB);
  r.add(equation("coaction is multiplicative", rho * ca.alg.mult(),
                 lin_tensor(ca.alg.mult(), ca.over.alg.mult()) * middle * lin_tensor(rho, rho)));
  r.add(equation("coaction is unital", rho * ca.alg.unit(), lin_tensor(ca.alg.unit(), ca.over.alg.unit())));
  return r;
}

Report check_module_coalgebra(const ModuleCoalgebra& mc) {
  const Space& C = mc.coalg.space();
  const Space& B = mc.over.space();
  require_shape(mc.action, ProductSpace(C) * ProductSpace(B), C, "action");
  const auto& act = mc.action;
  LinMap IC = id(C), IB = id(B);
  Report r;
  r.add(equation("action associativity", act * lin_tensor(act, IB), act * lin_tensor(IC, mc.over.alg.mult())));
  r.add(equation("action unit", act * lin_tensor(IC, mc.over.alg.unit()), IC));
  LinMap middle = lin_tensor(lin_tensor(IC, lin_flip(C, B)), IB);
  r.add(equation("comultiplication is B-linear", mc.coalg.comult() * act,
                 lin_tensor(act, act) * middle * lin_tensor(mc.coalg.comult(), mc.over.coalg.comult())));
  r.add(equation("counit is B-linear", mc.coalg.counit() * act,
                 lin_tensor(mc.coalg.counit(), mc.over.coalg.counit())));
  return r;
}

// ---------------------------------------------------------------- duality

namespace {
std::string toggle_star(const std::string& s) {
  if (!s.empty() && s.back() == '*') return s.substr(0, s.size() - 1);
  return s + "*";
}
}  // namespace

Space dual_space(const Space& v) {
  std::vector<std::string> basis;
  basis.reserve(v.dim());
  for (const auto& b : v.basis) basis.push_back(toggle_star(b));
  return Space(toggle_star(v.label), std::move(basis));
}

ProductSpace dual_space(const ProductSpace& v) {
  std::vector<Space> f;
  for (const auto& s : v.factors()) f.push_back(dual_space(s));
  return ProductSpace(std::move(f));
}

LinMap dual_map(const LinMap& f) { return f.transposed(dual_space(f.codomain()), dual_space(f.domain())); }

Coalgebra dualize_algebra(const Algebra& a) {
  return Coalgebra(dual_space(a.space()), dual_map(a.mult()), dual_map(a.unit()));
}

Algebra dualize_coalgebra(const Coalgebra& c) {
  return Algebra(dual_space(c.space()), dual_map(c.comult()), dual_map(c.counit()));
}

// ------------------------------------------------------------ constructions

Bialgebra group_bialgebra(std::size_t n, const std::string& label, const std::string& prefix) {
  if (n < 1) throw InvalidArgument("group order must be at least 1");
  std::vector<std::string> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(prefix + std::to_string(i));
  Space space(label, basis);
  Tensor3 mult(n * n * n), comult(n * n * n);
  std::vector<ScalarExpr> unit(n), counit(n, ScalarExpr(1));
  unit[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mult[(i * n + j) * n + (i + j) % n] = 1;
    comult[(i * n + i) * n + i] = 1;
  }
  return Bialgebra(Algebra(space, mult, unit), Coalgebra(space, comult, counit));
}

ComoduleAlgebra regular_comodule_algebra(const Bialgebra& b) { return {b.alg, b, b.coalg.comult()}; }

ModuleCoalgebra regular_module_coalgebra(const Bialgebra& b) { return {b.coalg, b, b.alg.mult()}; }

}  // namespace ybsys
