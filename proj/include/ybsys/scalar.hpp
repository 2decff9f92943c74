#pragma once

// Exact scalars: rationals and rational functions in the fixed parameters
// r, s, p, t, q.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ybsys {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;

/// The closed set of indeterminates. Declaration order is the lex order used
/// for canonical term ordering (r > s > p > t > q).
enum class Var : std::uint8_t { r = 0, s, p, t, q };

inline constexpr std::size_t kNumVars = 5;
inline constexpr std::array<Var, kNumVars> kAllVars = {Var::r, Var::s, Var::p, Var::t, Var::q};

char var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

using Exponents = std::array<std::uint32_t, kNumVars>;

/// True when `a` precedes `b` in descending graded-lex order.
bool grlex_greater(const Exponents& a, const Exponents& b);

/// Polynomial over Q in r, s, p, t, q. Terms are stored in strictly
/// descending graded-lex order with no zero coefficients.
class MultiPoly {
 public:
  using Term = std::pair<Exponents, Rational>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(Var v);
  static MultiPoly monomial(const Exponents& e, const Rational& c);
  /// Builds from arbitrary terms; combines duplicates and drops zeros.
  static MultiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant coefficient; only meaningful when is_constant().
  Rational constant_value() const;
  const Term& leading_term() const { return terms_.front(); }
  const Rational& leading_coeff() const { return terms_.front().second; }

  std::uint32_t degree_in(Var v) const;
  std::uint32_t total_degree() const;
  bool involves(Var v) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const Rational& c) const;
  MultiPoly pow(unsigned n) const;

  /// Quotient of an exact division; throws Error when `d` does not divide.
  MultiPoly divide_exact(const MultiPoly& d) const;
  /// Scales so that the leading coefficient is 1. Zero stays zero.
  MultiPoly monic() const;

  Rational evaluate(const std::array<std::optional<Rational>, kNumVars>& at) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  /// Parseable text: positive terms first, then negative ones, each group in
  /// descending graded-lex order ("1-s", "s+1", "q^2-1").
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Greatest common divisor, normalized monic (1 when coprime, 0 only for gcd(0, 0)).
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

/// Element of Q(r, s, p, t, q) in canonical form: numerator and denominator
/// coprime, denominator monic. Equal values have equal representations.
class ScalarExpr {
 public:
  ScalarExpr() : den_(1) {}
  ScalarExpr(long c) : num_(c), den_(1) {}              // NOLINT(google-explicit-constructor)
  ScalarExpr(const Rational& c) : num_(c), den_(1) {}   // NOLINT(google-explicit-constructor)
  ScalarExpr(const MultiPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// num/den reduced to canonical form; throws DivisionByZero for den = 0.
  ScalarExpr(const MultiPoly& num, const MultiPoly& den);

  static ScalarExpr variable(Var v) { return ScalarExpr(MultiPoly::variable(v)); }
  /// Parses the scalar grammar: integers, r|s|p|t|q, + - * / ^, parentheses, unary minus.
  static ScalarExpr parse(std::string_view text);

  const MultiPoly& num() const noexcept { return num_; }
  const MultiPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }

  ScalarExpr operator-() const;
  friend ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b);
  friend ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b);
  friend ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
  friend ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b);
  ScalarExpr& operator+=(const ScalarExpr& o) { return *this = *this + o; }
  ScalarExpr& operator-=(const ScalarExpr& o) { return *this = *this - o; }
  ScalarExpr& operator*=(const ScalarExpr& o) { return *this = *this * o; }
  ScalarExpr& operator/=(const ScalarExpr& o) { return *this = *this / o; }
  ScalarExpr inverse() const;
  ScalarExpr pow(int n) const;

  /// Evaluates at rational values. Throws InvalidArgument for an unassigned
  /// variable and DivisionByZero when the denominator vanishes.
  Rational evaluate(const std::map<Var, Rational>& assignment) const;
  /// Replaces variables by rational functions; unmentioned variables stay.
  ScalarExpr substitute(const std::map<Var, ScalarExpr>& values) const;

  friend bool operator==(const ScalarExpr& a, const ScalarExpr& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const ScalarExpr& a, const ScalarExpr& b) { return !(a == b); }

  /// "num" when the denominator is 1, otherwise "(num)/(den)".
  std::string to_string() const;

 private:
  struct Reduced {};
  ScalarExpr(MultiPoly num, MultiPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  static ScalarExpr make_canonical(MultiPoly num, MultiPoly den);

  MultiPoly num_;
  MultiPoly den_;
};

/// Sum of many terms; terms sharing a denominator are combined before reduction.
ScalarExpr sum_of(const std::vector<ScalarExpr>& terms);

/// Free-function spellings of the field operations.
inline ScalarExpr scalar_add(const ScalarExpr& a, const ScalarExpr& b) { return a + b; }
inline ScalarExpr scalar_sub(const ScalarExpr& a, const ScalarExpr& b) { return a - b; }
inline ScalarExpr scalar_mul(const ScalarExpr& a, const ScalarExpr& b) { return a * b; }
inline ScalarExpr scalar_div(const ScalarExpr& a, const ScalarExpr& b) { return a / b; }
inline ScalarExpr scalar_parse(std::string_view text) { return ScalarExpr::parse(text); }
inline std::string scalar_print(const ScalarExpr& a) { return a.to_string(); }
inline Rational scalar_eval(const ScalarExpr& a, const std::map<Var, Rational>& at) {
  return a.evaluate(at);
}

/// Parses "name=value,name=value" with scalar-grammar values.
std::map<Var, ScalarExpr> parse_assignments(std::string_view text);

}  // namespace ybsys
