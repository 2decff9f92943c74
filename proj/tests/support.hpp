#pragma once

// Shared fixtures for the test binaries: symbolic parameters, seeded random
// generators, numeric evaluation, and index-loop oracles that recompute
// operators straight from structure constants without the library's
// composition machinery.

#include <random>
#include <string>
#include <vector>

#include "ybsys/gluing.hpp"
#include "ybsys/registry.hpp"

namespace test {

using namespace ybsys;

inline const ScalarExpr R = ScalarExpr::variable(Var::r);
inline const ScalarExpr S = ScalarExpr::variable(Var::s);
inline const ScalarExpr P = ScalarExpr::variable(Var::p);
inline const ScalarExpr T = ScalarExpr::variable(Var::t);
inline const ScalarExpr Q = ScalarExpr::variable(Var::q);

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int range = 5, int max_den = 4) {
  std::uniform_int_distribution<int> num(-range, range), den(1, max_den);
  Rational x(num(rng), den(rng));
  x.canonicalize();
  return x;
}

inline Rational random_nonzero_rational(Rng& rng, int range = 5, int max_den = 4) {
  for (;;) {
    Rational x = random_rational(rng, range, max_den);
    if (x != 0) return x;
  }
}

/// Random polynomial of total degree ≤ 2 in up to two of the five variables.
inline MultiPoly random_poly(Rng& rng) {
  std::uniform_int_distribution<int> var(0, kNumVars - 1), deg(0, 2), terms(1, 3);
  Var a = kAllVars[var(rng)], b = kAllVars[var(rng)];
  std::vector<MultiPoly::Term> out;
  int n = terms(rng);
  for (int i = 0; i < n; ++i) {
    Exponents e{};
    e[static_cast<std::size_t>(a)] += deg(rng);
    e[static_cast<std::size_t>(b)] += deg(rng) / 2;
    out.push_back({e, random_rational(rng, 4, 3)});
  }
  return MultiPoly::from_terms(std::move(out));
}

inline ScalarExpr random_scalar(Rng& rng) {
  MultiPoly num = random_poly(rng), den;
  do {
    den = random_poly(rng);
  } while (den.is_zero());
  return ScalarExpr(num, den);
}

inline ScalarExpr random_nonzero_scalar(Rng& rng) {
  for (;;) {
    ScalarExpr x = random_scalar(rng);
    if (!x.is_zero()) return x;
  }
}

/// Random map with rational entries, about `density` of them nonzero.
inline LinMap random_map(Rng& rng, const ProductSpace& dom, const ProductSpace& cod, double density = 0.5) {
  std::bernoulli_distribution keep(density);
  LinMap m(dom, cod);
  for (std::size_t i = 0; i < dom.dim(); ++i) {
    for (std::size_t j = 0; j < cod.dim(); ++j) {
      if (keep(rng)) m.at(i, j) = random_rational(rng);
    }
  }
  return m;
}

inline LinMap random_invertible(Rng& rng, const ProductSpace& v) {
  for (;;) {
    LinMap m = random_map(rng, v, v, 0.7);
    try {
      lin_invert(m);
      return m;
    } catch (const SingularMap&) {
    }
  }
}

/// Returns `m` with one random entry shifted by a random nonzero rational.
inline LinMap perturb_one(Rng& rng, LinMap m) {
  std::uniform_int_distribution<std::size_t> row(0, m.domain().dim() - 1), col(0, m.codomain().dim() - 1);
  std::size_t i = row(rng), j = col(rng);
  m.at(i, j) += random_nonzero_rational(rng);
  return m;
}

// ---------------------------------------------------------------- numerics

using NumMatrix = std::vector<std::vector<Rational>>;

inline std::map<Var, Rational> random_point(Rng& rng) {
  std::map<Var, Rational> at;
  for (Var v : kAllVars) at[v] = random_nonzero_rational(rng, 7, 5);
  return at;
}

inline NumMatrix evaluate(const LinMap& m, const std::map<Var, Rational>& at) {
  NumMatrix out(m.domain().dim(), std::vector<Rational>(m.codomain().dim()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] = m(i, j).evaluate(at);
  }
  return out;
}

/// Row-per-input product: the matrix of "apply a, then b".
inline NumMatrix then(const NumMatrix& a, const NumMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  NumMatrix out(n, std::vector<Rational>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  }
  return out;
}

/// Acts with a two-leg matrix on legs (x, y) of a three-fold product with
/// dimensions d[0], d[1], d[2]; the remaining leg is untouched.
inline NumMatrix on_legs(const NumMatrix& m, const std::array<std::size_t, 3>& d, int x, int y) {
  std::size_t n = d[0] * d[1] * d[2];
  NumMatrix out(n, std::vector<Rational>(n));
  auto flat = [&](std::array<std::size_t, 3> i) { return (i[0] * d[1] + i[1]) * d[2] + i[2]; };
  for (std::size_t a = 0; a < d[0]; ++a) {
    for (std::size_t b = 0; b < d[1]; ++b) {
      for (std::size_t c = 0; c < d[2]; ++c) {
        std::array<std::size_t, 3> in{a, b, c};
        std::size_t row = in[x] * d[y] + in[y];
        for (std::size_t u = 0; u < d[x]; ++u) {
          for (std::size_t v = 0; v < d[y]; ++v) {
            const Rational& val = m[row][u * d[y] + v];
            if (val == 0) continue;
            auto o = in;
            o[x] = u;
            o[y] = v;
            out[flat(in)][flat(o)] += val;
          }
        }
      }
    }
  }
  return out;
}

/// R₁₂S₁₃T₂₃ − T₂₃S₁₃R₁₂ as composites of maps, evaluated numerically.
inline NumMatrix commutator_oracle(const NumMatrix& r, const NumMatrix& s, const NumMatrix& t,
                                   const std::array<std::size_t, 3>& d) {
  NumMatrix r12 = on_legs(r, d, 0, 1), s13 = on_legs(s, d, 0, 2), t23 = on_legs(t, d, 1, 2);
  NumMatrix lhs = then(then(t23, s13), r12);
  NumMatrix rhs = then(then(r12, s13), t23);
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    for (std::size_t j = 0; j < lhs.size(); ++j) lhs[i][j] -= rhs[i][j];
  }
  return lhs;
}

inline bool is_zero(const NumMatrix& m) {
  for (const auto& row : m) {
    for (const auto& x : row) {
      if (x != 0) return false;
    }
  }
  return true;
}

/// R₁₂R₂₃R₁₂ = R₂₃R₁₂R₂₃ computed numerically.
inline bool braid_oracle(const NumMatrix& r, std::size_t n) {
  std::array<std::size_t, 3> d{n, n, n};
  NumMatrix r12 = on_legs(r, d, 0, 1), r23 = on_legs(r, d, 1, 2);
  return then(then(r12, r23), r12) == then(then(r23, r12), r23);
}

// ------------------------------------------------- structure-constant oracles

/// W(e_i⊗e_j) = s·e_je_i⊗1 + r·1⊗e_je_i − s·e_j⊗e_i from μ and η alone.
inline LinMap w_oracle(const Algebra& a, const ScalarExpr& r, const ScalarExpr& s) {
  const std::size_t n = a.dim();
  ProductSpace aa = ProductSpace(a.space()) * ProductSpace(a.space());
  LinMap w(aa, aa);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const ScalarExpr& c = a.mu(j, i, k);
        if (c.is_zero()) continue;
        for (std::size_t u = 0; u < n; ++u) {
          if (a.eta(u).is_zero()) continue;
          w.at(i * n + j, k * n + u) += s * c * a.eta(u);
          w.at(i * n + j, u * n + k) += r * c * a.eta(u);
        }
      }
      w.at(i * n + j, j * n + i) -= s;
    }
  }
  return w;
}

/// Z(c_i⊗c_j) = t·ε(c_i)Δ(c_j) + p·ε(c_j)Δ(c_i) − p·c_j⊗c_i.
inline LinMap z_oracle(const Coalgebra& c, const ScalarExpr& p, const ScalarExpr& t) {
  const std::size_t n = c.dim();
  ProductSpace cc = ProductSpace(c.space()) * ProductSpace(c.space());
  LinMap z(cc, cc);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          z.at(i * n + j, k * n + l) += t * c.eps(i) * c.delta(j, k, l) + p * c.eps(j) * c.delta(i, k, l);
        }
      }
      z.at(i * n + j, j * n + i) -= p;
    }
  }
  return z;
}

/// The four entwining axioms evaluated entry by entry from ψ's components.
/// ψ(c_i⊗a_j) = Σ psi(i*nA+j, k*nC+l) a_k⊗c_l. Returns true when all hold.
inline bool entwining_oracle(const EntwiningStructure& e) {
  const std::size_t na = e.A.dim(), nc = e.C.dim();
  auto psi = [&](std::size_t c, std::size_t a, std::size_t a2, std::size_t c2) -> const ScalarExpr& {
    return e.psi(c * na + a, a2 * nc + c2);
  };
  // ψ(c⊗ab) = Σ a_α b_β ⊗ c^{αβ}
  for (std::size_t c = 0; c < nc; ++c) {
    for (std::size_t a = 0; a < na; ++a) {
      for (std::size_t b = 0; b < na; ++b) {
        for (std::size_t x = 0; x < na; ++x) {
          for (std::size_t y = 0; y < nc; ++y) {
            ScalarExpr lhs, rhs;
            for (std::size_t m = 0; m < na; ++m) lhs += e.A.mu(a, b, m) * psi(c, m, x, y);
            for (std::size_t c1 = 0; c1 < nc; ++c1) {
              for (std::size_t a1 = 0; a1 < na; ++a1) {
                const ScalarExpr& first = psi(c, a, a1, c1);
                if (first.is_zero()) continue;
                for (std::size_t b1 = 0; b1 < na; ++b1) {
                  const ScalarExpr& second = psi(c1, b, b1, y);
                  if (second.is_zero()) continue;
                  rhs += first * second * e.A.mu(a1, b1, x);
                }
              }
            }
            if (lhs != rhs) return false;
          }
        }
      }
    }
  }
  // Σ a_α ⊗ Δ(c^α) = Σ a_{αβ} ⊗ c₍₁₎^β ⊗ c₍₂₎^α
  for (std::size_t c = 0; c < nc; ++c) {
    for (std::size_t a = 0; a < na; ++a) {
      for (std::size_t x = 0; x < na; ++x) {
        for (std::size_t y = 0; y < nc; ++y) {
          for (std::size_t z = 0; z < nc; ++z) {
            ScalarExpr lhs, rhs;
            for (std::size_t m = 0; m < nc; ++m) lhs += psi(c, a, x, m) * e.C.delta(m, y, z);
            for (std::size_t c1 = 0; c1 < nc; ++c1) {
              for (std::size_t c2 = 0; c2 < nc; ++c2) {
                const ScalarExpr& d = e.C.delta(c, c1, c2);
                if (d.is_zero()) continue;
                for (std::size_t a1 = 0; a1 < na; ++a1) {
                  const ScalarExpr& inner = psi(c2, a, a1, z);
                  if (inner.is_zero()) continue;
                  rhs += d * inner * psi(c1, a1, x, y);
                }
              }
            }
            if (lhs != rhs) return false;
          }
        }
      }
    }
  }
  // ψ(c⊗1) = 1⊗c and ε(c^α)a_α = ε(c)a
  for (std::size_t c = 0; c < nc; ++c) {
    for (std::size_t x = 0; x < na; ++x) {
      for (std::size_t y = 0; y < nc; ++y) {
        ScalarExpr lhs;
        for (std::size_t u = 0; u < na; ++u) lhs += e.A.eta(u) * psi(c, u, x, y);
        if (lhs != e.A.eta(x) * ScalarExpr(c == y ? 1 : 0)) return false;
      }
    }
    for (std::size_t a = 0; a < na; ++a) {
      for (std::size_t x = 0; x < na; ++x) {
        ScalarExpr lhs;
        for (std::size_t y = 0; y < nc; ++y) lhs += psi(c, a, x, y) * e.C.eps(y);
        if (lhs != e.C.eps(c) * ScalarExpr(a == x ? 1 : 0)) return false;
      }
    }
  }
  return true;
}

// ------------------------------------------------------------------ the zoo

struct ZooEntwining {
  std::string name;
  std::map<std::string, std::string> params;
};

/// Entwining structures named by the acceptance criteria.
inline std::vector<ZooEntwining> zoo_entwinings() {
  return {{"flip", {}},
          {"ex28.flip", {}},
          {"ex28.entwining", {}},
          {"ex27.truncated", {{"N", "1"}}},
          {"ex27.truncated", {{"N", "2"}}},
          {"ex27.truncated", {{"N", "3"}}},
          {"group_bialgebra.entwining", {{"n", "2"}}},
          {"group_bialgebra.entwining", {{"n", "3"}}}};
}

inline std::string zoo_label(const ZooEntwining& z) {
  std::string out = z.name;
  for (const auto& [k, v] : z.params) out += " " + k + "=" + v;
  return out;
}

inline EntwiningStructure zoo_get(const ZooEntwining& z) {
  return get_example_as<EntwiningStructure>(z.name, z.params);
}

inline std::vector<Algebra> zoo_algebras() {
  return {get_example_as<Algebra>("group_algebra", {{"n", "1"}}), get_example_as<Algebra>("group_algebra", {{"n", "2"}}),
          get_example_as<Algebra>("group_algebra", {{"n", "3"}}), get_example_as<Algebra>("ex28.algebra"),
          get_example_as<Algebra>("ex27.algebra", {{"N", "1"}}), get_example_as<Algebra>("ex27.algebra", {{"N", "2"}})};
}

inline std::vector<Coalgebra> zoo_coalgebras() {
  return {get_example_as<Coalgebra>("group_coalgebra", {{"n", "1"}}),
          get_example_as<Coalgebra>("group_coalgebra", {{"n", "2"}}),
          get_example_as<Coalgebra>("group_coalgebra", {{"n", "3"}}), get_example_as<Coalgebra>("ex28.coalgebra"),
          get_example_as<Coalgebra>("ex27.coalgebra", {{"N", "1"}}),
          get_example_as<Coalgebra>("ex27.coalgebra", {{"N", "2"}})};
}

/// Transport of structure along an invertible P: A → A.
inline Algebra transport(const Algebra& a, const LinMap& p) {
  LinMap p_inv = lin_invert(p);
  return Algebra(a.space(), p_inv * a.mult() * lin_tensor(p, p), p_inv * a.unit());
}

inline Coalgebra transport(const Coalgebra& c, const LinMap& p) {
  LinMap p_inv = lin_invert(p);
  return Coalgebra(c.space(), lin_tensor(p_inv, p_inv) * c.comult() * p, c.counit() * p);
}

}  // namespace test

namespace test {

/// Upper triangular 2×2 matrices on e11, e12, e22: a noncommutative algebra.
inline Algebra triangular_algebra() {
  Space v("T", {"e11", "e12", "e22"});
  Tensor3 mult(27);
  auto at = [](std::size_t i, std::size_t j, std::size_t k) { return (i * 3 + j) * 3 + k; };
  mult[at(0, 0, 0)] = 1;
  mult[at(0, 1, 1)] = 1;
  mult[at(1, 2, 1)] = 1;
  mult[at(2, 2, 2)] = 1;
  return Algebra(v, mult, {1, 0, 1});
}

/// Doi-Koppinen entwining of k[Z₂] with the dual of the triangular algebra,
/// Z₂ acting by e12 ↦ −e12. The coalgebra is not cocommutative.
inline EntwiningStructure triangular_dk() {
  Bialgebra b = group_bialgebra(2);
  Coalgebra c = dualize_algebra(triangular_algebra());
  ProductSpace cb = ProductSpace(c.space()) * ProductSpace(b.space());
  LinMap act(cb, c.space());
  for (std::size_t i = 0; i < 3; ++i) {
    act.at(i * 2 + 0, i) = 1;
    act.at(i * 2 + 1, i) = i == 1 ? -1 : 1;
  }
  return doi_koppinen_entwining(regular_comodule_algebra(b), ModuleCoalgebra{c, b, act});
}

}  // namespace test
