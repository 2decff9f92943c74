#include "ybsys/tensor.hpp"

#include <set>
#include <sstream>

#include "ybsys/error.hpp"

namespace ybsys {

Space::Space(std::string label_, std::vector<std::string> basis_)
    : label(std::move(label_)), basis(std::move(basis_)) {
  if (basis.empty()) throw InvalidArgument("space '" + label + "' must have a nonempty basis");
  std::set<std::string> seen(basis.begin(), basis.end());
  if (seen.size() != basis.size()) throw InvalidArgument("space '" + label + "' has repeated basis labels");
}

// ------------------------------------------------------------- ProductSpace

ProductSpace::ProductSpace(Space s) : dim_(s.dim()) { factors_.push_back(std::move(s)); }

ProductSpace::ProductSpace(std::vector<Space> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_) dim_ *= f.dim();
}

std::vector<std::size_t> ProductSpace::multi_index(std::size_t flat) const {
  std::vector<std::size_t> idx(factors_.size());
  for (std::size_t k = factors_.size(); k-- > 0;) {
    idx[k] = flat % factors_[k].dim();
    flat /= factors_[k].dim();
  }
  return idx;
}

std::size_t ProductSpace::flat_index(std::span<const std::size_t> idx) const {
  if (idx.size() != factors_.size()) throw DimensionMismatch("index arity does not match product arity");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) flat = flat * factors_[k].dim() + idx[k];
  return flat;
}

std::string ProductSpace::basis_label(std::size_t flat) const {
  if (factors_.empty()) return "1";
  auto idx = multi_index(flat);
  std::string out;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) out += "⊗";
    out += factors_[k].basis[idx[k]];
  }
  return out;
}

std::string ProductSpace::label() const {
  if (factors_.empty()) return "k";
  std::string out;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k) out += "⊗";
    out += factors_[k].label;
  }
  return out;
}

ProductSpace operator*(const ProductSpace& a, const ProductSpace& b) {
  std::vector<Space> f = a.factors_;
  f.insert(f.end(), b.factors_.begin(), b.factors_.end());
  return ProductSpace(std::move(f));
}

// ------------------------------------------------------------------ LinMap

LinMap::LinMap(ProductSpace domain, ProductSpace codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(domain_.dim(), codomain_.dim()) {}

LinMap::LinMap(ProductSpace domain, ProductSpace codomain, Matrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != domain_.dim() || matrix_.cols() != codomain_.dim()) {
    throw DimensionMismatch("matrix is " + std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()) +
                            " but the map " + domain_.label() + " -> " + codomain_.label() + " needs " +
                            std::to_string(domain_.dim()) + "x" + std::to_string(codomain_.dim()));
  }
}

LinMap LinMap::identity(const ProductSpace& v) {
  LinMap id(v, v);
  for (std::size_t i = 0; i < v.dim(); ++i) id.matrix_(i, i) = 1;
  return id;
}

LinMap LinMap::from_rows(ProductSpace domain, ProductSpace codomain,
                         const std::vector<std::vector<std::string>>& rows) {
  LinMap m(std::move(domain), std::move(codomain));
  if (rows.size() != m.domain_.dim()) throw DimensionMismatch("wrong number of rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.codomain_.dim()) throw DimensionMismatch("wrong number of columns");
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.matrix_(i, j) = ScalarExpr::parse(rows[i][j]);
  }
  return m;
}

bool LinMap::is_zero() const { return !first_nonzero().has_value(); }

std::optional<Entry> LinMap::first_nonzero() const {
  for (std::size_t i = 0; i < matrix_.rows(); ++i) {
    for (std::size_t j = 0; j < matrix_.cols(); ++j) {
      if (!matrix_(i, j).is_zero()) {
        return Entry{i, j, domain_.basis_label(i), codomain_.basis_label(j), matrix_(i, j)};
      }
    }
  }
  return std::nullopt;
}

std::vector<ScalarExpr> LinMap::apply(std::span<const ScalarExpr> v) const {
  if (v.size() != domain_.dim()) throw DimensionMismatch("vector length does not match domain dimension");
  std::vector<ScalarExpr> out(codomain_.dim());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (!matrix_(i, j).is_zero()) out[j] += v[i] * matrix_(i, j);
    }
  }
  return out;
}

LinMap LinMap::transposed(ProductSpace new_domain, ProductSpace new_codomain) const {
  Matrix t(matrix_.cols(), matrix_.rows());
  for (std::size_t i = 0; i < matrix_.rows(); ++i) {
    for (std::size_t j = 0; j < matrix_.cols(); ++j) t(j, i) = matrix_(i, j);
  }
  return LinMap(std::move(new_domain), std::move(new_codomain), std::move(t));
}

LinMap LinMap::substitute(const std::map<Var, ScalarExpr>& values) const {
  LinMap out = *this;
  for (std::size_t i = 0; i < matrix_.rows(); ++i) {
    for (std::size_t j = 0; j < matrix_.cols(); ++j) {
      if (!matrix_(i, j).is_constant()) out.matrix_(i, j) = matrix_(i, j).substitute(values);
    }
  }
  return out;
}

LinMap LinMap::operator-() const {
  LinMap out = *this;
  for (std::size_t i = 0; i < matrix_.rows(); ++i) {
    for (std::size_t j = 0; j < matrix_.cols(); ++j) out.matrix_(i, j) = -matrix_(i, j);
  }
  return out;
}

namespace {
void require_same_shape(const LinMap& a, const LinMap& b, const char* op) {
  if (!(a.domain() == b.domain()) || !(a.codomain() == b.codomain())) {
    throw DimensionMismatch(std::string("cannot ") + op + " maps " + a.domain().label() + " -> " +
                            a.codomain().label() + " and " + b.domain().label() + " -> " + b.codomain().label());
  }
}
}  // namespace

LinMap operator+(const LinMap& a, const LinMap& b) {
  require_same_shape(a, b, "add");
  LinMap out = a;
  for (std::size_t i = 0; i < a.matrix_.rows(); ++i) {
    for (std::size_t j = 0; j < a.matrix_.cols(); ++j) out.matrix_(i, j) += b.matrix_(i, j);
  }
  return out;
}

LinMap operator-(const LinMap& a, const LinMap& b) {
  require_same_shape(a, b, "subtract");
  LinMap out = a;
  for (std::size_t i = 0; i < a.matrix_.rows(); ++i) {
    for (std::size_t j = 0; j < a.matrix_.cols(); ++j) out.matrix_(i, j) -= b.matrix_(i, j);
  }
  return out;
}

LinMap operator*(const ScalarExpr& c, const LinMap& f) {
  LinMap out = f;
  for (std::size_t i = 0; i < f.matrix_.rows(); ++i) {
    for (std::size_t j = 0; j < f.matrix_.cols(); ++j) {
      if (!f.matrix_(i, j).is_zero()) out.matrix_(i, j) = c * f.matrix_(i, j);
    }
  }
  return out;
}

LinMap operator*(const LinMap& g, const LinMap& f) {
  if (!(f.codomain_ == g.domain_)) {
    throw DimensionMismatch("cannot compose: codomain " + f.codomain_.label() + " differs from domain " +
                            g.domain_.label());
  }
  const std::size_t n = f.matrix_.rows(), m = f.matrix_.cols(), p = g.matrix_.cols();
  Matrix out(n, p);
  std::vector<std::vector<ScalarExpr>> parts(p);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& bucket : parts) bucket.clear();
    for (std::size_t j = 0; j < m; ++j) {
      const ScalarExpr& a = f.matrix_(i, j);
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < p; ++k) {
        const ScalarExpr& b = g.matrix_(j, k);
        if (!b.is_zero()) parts[k].push_back(a * b);
      }
    }
    for (std::size_t k = 0; k < p; ++k) {
      if (!parts[k].empty()) out(i, k) = sum_of(parts[k]);
    }
  }
  return LinMap(f.domain_, g.codomain_, std::move(out));
}

std::string LinMap::to_string() const {
  std::vector<std::vector<std::string>> cells(matrix_.rows(), std::vector<std::string>(matrix_.cols()));
  std::vector<std::size_t> width(matrix_.cols(), 0);
  for (std::size_t i = 0; i < matrix_.rows(); ++i) {
    for (std::size_t j = 0; j < matrix_.cols(); ++j) {
      cells[i][j] = matrix_(i, j).to_string();
      width[j] = std::max(width[j], cells[i][j].size());
    }
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << "  ";
      os << std::string(width[j] - row[j].size(), ' ') << row[j];
    }
    os << '\n';
  }
  return os.str();
}

// --------------------------------------------------------------- operations

LinMap lin_compose(const LinMap& f, const LinMap& g) { return g * f; }

LinMap lin_tensor(const LinMap& f, const LinMap& g) {
  const auto& mf = f.matrix();
  const auto& mg = g.matrix();
  Matrix out(mf.rows() * mg.rows(), mf.cols() * mg.cols());
  for (std::size_t i1 = 0; i1 < mf.rows(); ++i1) {
    for (std::size_t j1 = 0; j1 < mf.cols(); ++j1) {
      const ScalarExpr& a = mf(i1, j1);
      if (a.is_zero()) continue;
      for (std::size_t i2 = 0; i2 < mg.rows(); ++i2) {
        for (std::size_t j2 = 0; j2 < mg.cols(); ++j2) {
          const ScalarExpr& b = mg(i2, j2);
          if (b.is_zero()) continue;
          out(i1 * mg.rows() + i2, j1 * mg.cols() + j2) = a.is_one() ? b : (b.is_one() ? a : a * b);
        }
      }
    }
  }
  return LinMap(f.domain() * g.domain(), f.codomain() * g.codomain(), std::move(out));
}

LinMap lin_flip(const ProductSpace& v, const ProductSpace& w) {
  LinMap tau(v * w, w * v);
  const std::size_t dv = v.dim(), dw = w.dim();
  for (std::size_t i = 0; i < dv; ++i) {
    for (std::size_t j = 0; j < dw; ++j) tau.at(i * dw + j, j * dv + i) = 1;
  }
  return tau;
}

LinMap lin_invert(const LinMap& f) {
  const std::size_t n = f.domain().dim();
  if (n != f.codomain().dim()) throw DimensionMismatch("cannot invert a non-square map");
  Matrix a = f.matrix();
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw SingularMap("map " + f.domain().label() + " -> " + f.codomain().label() + " is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    ScalarExpr scale = a(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (!a(col, j).is_zero()) a(col, j) *= scale;
      if (!inv(col, j).is_zero()) inv(col, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      ScalarExpr factor = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(col, j).is_zero()) a(i, j) -= factor * a(col, j);
        if (!inv(col, j).is_zero()) inv(i, j) -= factor * inv(col, j);
      }
    }
  }
  // Row-per-input: the inverse map sends codomain vectors back to the domain.
  return LinMap(f.codomain(), f.domain(), std::move(inv));
}

namespace {
void require_two_legs(const LinMap& m, const char* op) {
  if (m.domain().arity() != 2 || m.codomain().arity() != 2) {
    throw DimensionMismatch(std::string(op) + " needs a map between two-fold tensor products, got " +
                            m.domain().label() + " -> " + m.codomain().label());
  }
}
}  // namespace

LinMap lift12(const LinMap& m, const Space& third) {
  require_two_legs(m, "lift12");
  return lin_tensor(m, LinMap::identity(third));
}

LinMap lift23(const LinMap& m, const Space& first) {
  require_two_legs(m, "lift23");
  return lin_tensor(LinMap::identity(first), m);
}

LinMap lift13(const LinMap& m, const Space& middle) {
  require_two_legs(m, "lift13");
  ProductSpace mid(middle);
  ProductSpace dom1(m.domain().factor(0)), dom2(m.domain().factor(1));
  ProductSpace cod1(m.codomain().factor(0)), cod2(m.codomain().factor(1));
  LinMap in = lin_tensor(LinMap::identity(dom1), lin_flip(mid, dom2));
  LinMap out = lin_tensor(LinMap::identity(cod1), lin_flip(cod2, mid));
  return out * lin_tensor(m, LinMap::identity(mid)) * in;
}

}  // namespace ybsys
