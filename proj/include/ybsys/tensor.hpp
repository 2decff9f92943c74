#pragma once

// Labeled finite-dimensional spaces, their tensor products, and dense linear
// maps over ScalarExpr.
//
// Matrices use the row-per-input convention: entry (i, j) is the coefficient
// of codomain basis vector j in the image of domain basis vector i. Hence the
// matrix of g∘f is matrix(f)·matrix(g). Product bases are ordered
// lexicographically with the first factor most significant.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ybsys/scalar.hpp"

namespace ybsys {

struct Space {
  std::string label;
  std::vector<std::string> basis;

  /// Validates: nonempty basis, distinct labels.
  Space(std::string label, std::vector<std::string> basis);

  std::size_t dim() const noexcept { return basis.size(); }
  friend bool operator==(const Space&, const Space&) = default;
};

/// Ordered tensor product of spaces. The empty product is the ground field
/// (dimension 1), so k⊗V and V are literally the same ProductSpace.
class ProductSpace {
 public:
  ProductSpace() = default;
  ProductSpace(Space s);  // NOLINT(google-explicit-constructor)
  explicit ProductSpace(std::vector<Space> factors);

  static ProductSpace ground() { return {}; }

  const std::vector<Space>& factors() const noexcept { return factors_; }
  std::size_t arity() const noexcept { return factors_.size(); }
  const Space& factor(std::size_t i) const { return factors_.at(i); }
  std::size_t dim() const noexcept { return dim_; }

  std::vector<std::size_t> multi_index(std::size_t flat) const;
  std::size_t flat_index(std::span<const std::size_t> idx) const;
  /// e.g. "x⊗1"; the ground field's single basis vector is "1".
  std::string basis_label(std::size_t flat) const;
  /// e.g. "A⊗C"; the ground field is "k".
  std::string label() const;

  friend ProductSpace operator*(const ProductSpace& a, const ProductSpace& b);
  friend bool operator==(const ProductSpace& a, const ProductSpace& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<Space> factors_;
  std::size_t dim_ = 1;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  ScalarExpr& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const ScalarExpr& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ScalarExpr> data_;
};

/// Nonzero matrix entry reported as a witness.
struct Entry {
  std::size_t row;
  std::size_t col;
  std::string domain_element;
  std::string codomain_element;
  ScalarExpr value;
};

class LinMap {
 public:
  LinMap(ProductSpace domain, ProductSpace codomain);  // zero map
  LinMap(ProductSpace domain, ProductSpace codomain, Matrix matrix);

  static LinMap identity(const ProductSpace& v);
  /// Builds row by row from nested string entries in the scalar grammar.
  static LinMap from_rows(ProductSpace domain, ProductSpace codomain,
                          const std::vector<std::vector<std::string>>& rows);

  const ProductSpace& domain() const noexcept { return domain_; }
  const ProductSpace& codomain() const noexcept { return codomain_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  const ScalarExpr& operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }
  ScalarExpr& at(std::size_t i, std::size_t j) { return matrix_(i, j); }

  bool is_zero() const;
  bool is_endomorphism() const { return domain_ == codomain_; }
  std::optional<Entry> first_nonzero() const;

  /// Image of a coordinate row vector: v·M.
  std::vector<ScalarExpr> apply(std::span<const ScalarExpr> v) const;
  LinMap transposed(ProductSpace new_domain, ProductSpace new_codomain) const;
  LinMap substitute(const std::map<Var, ScalarExpr>& values) const;

  LinMap operator-() const;
  friend LinMap operator+(const LinMap& a, const LinMap& b);
  friend LinMap operator-(const LinMap& a, const LinMap& b);
  friend LinMap operator*(const ScalarExpr& c, const LinMap& f);
  /// Composition g∘f: apply f, then g.
  friend LinMap operator*(const LinMap& g, const LinMap& f);

  friend bool operator==(const LinMap&, const LinMap&) = default;

  /// Rows of scalar-grammar entries, one row per line.
  std::string to_string() const;

 private:
  ProductSpace domain_;
  ProductSpace codomain_;
  Matrix matrix_;
};

/// Returns g∘f. Throws DimensionMismatch unless codomain(f) = domain(g).
LinMap lin_compose(const LinMap& f, const LinMap& g);
/// f⊗g on domain(f)⊗domain(g).
LinMap lin_tensor(const LinMap& f, const LinMap& g);
/// τ_{V,W}: v⊗w ↦ w⊗v, for arbitrary product spaces V and W.
LinMap lin_flip(const ProductSpace& v, const ProductSpace& w);
/// Exact inverse by Gauss-Jordan elimination. Throws SingularMap.
LinMap lin_invert(const LinMap& f);

/// M⊗I_third for M with two-factor domain and codomain.
LinMap lift12(const LinMap& m, const Space& third);
/// I_first⊗M for M with two-factor domain and codomain.
LinMap lift23(const LinMap& m, const Space& first);
/// M acting on legs 1 and 3 of V⊗middle⊗V'':
/// (I⊗τ_{cod₂,middle})∘(M⊗I_middle)∘(I⊗τ_{middle,dom₂}).
LinMap lift13(const LinMap& m, const Space& middle);

}  // namespace ybsys
