#include "ybsys/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ybsys/error.hpp"

namespace ybsys {

char var_name(Var v) {
  static constexpr char names[] = {'r', 's', 'p', 't', 'q'};
  return names[static_cast<std::size_t>(v)];
}

std::optional<Var> var_from_name(std::string_view name) {
  if (name.size() != 1) return std::nullopt;
  for (Var v : kAllVars) {
    if (var_name(v) == name[0]) return v;
  }
  return std::nullopt;
}

namespace {

std::uint32_t total(const Exponents& e) {
  std::uint32_t d = 0;
  for (auto x : e) d += x;
  return d;
}

bool divides(const Exponents& d, const Exponents& e) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (d[i] > e[i]) return false;
  }
  return true;
}

Exponents add_exp(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (std::size_t i = 0; i < kNumVars; ++i) r[i] = a[i] + b[i];
  return r;
}

Exponents sub_exp(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (std::size_t i = 0; i < kNumVars; ++i) r[i] = a[i] - b[i];
  return r;
}

struct TermGreater {
  bool operator()(const MultiPoly::Term& a, const MultiPoly::Term& b) const {
    return grlex_greater(a.first, b.first);
  }
};

}  // namespace

bool grlex_greater(const Exponents& a, const Exponents& b) {
  auto da = total(a), db = total(b);
  if (da != db) return da > db;
  return a > b;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.emplace_back(Exponents{}, c);
}

MultiPoly MultiPoly::variable(Var v) {
  Exponents e{};
  e[static_cast<std::size_t>(v)] = 1;
  return monomial(e, 1);
}

MultiPoly MultiPoly::monomial(const Exponents& e, const Rational& c) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace_back(e, c);
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), TermGreater{});
  MultiPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool MultiPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && total(terms_.front().first) == 0);
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return 0;
  return terms_.back().first == Exponents{} ? terms_.back().second : Rational(0);
}

std::uint32_t MultiPoly::degree_in(Var v) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(v)]);
  return d;
}

std::uint32_t MultiPoly::total_degree() const { return terms_.empty() ? 0 : total(terms_.front().first); }

bool MultiPoly::involves(Var v) const { return degree_in(v) > 0; }

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

// Merge of two sorted term lists, b scaled by sign.
std::vector<MultiPoly::Term> merge_terms(const std::vector<MultiPoly::Term>& a,
                                         const std::vector<MultiPoly::Term>& b, bool subtract) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].first, b[j].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_greater(b[j].first, a[i].first)) {
      out.emplace_back(b[j].first, subtract ? Rational(-b[j].second) : b[j].second);
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].second - b[j].second) : Rational(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 && total(a.terms_[0].first) == 0) return b.scaled(a.terms_[0].second);
  if (b.terms_.size() == 1 && total(b.terms_[0].first) == 0) return a.scaled(b.terms_[0].second);
  std::vector<MultiPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) prod.emplace_back(add_exp(ea, eb), ca * cb);
  }
  return MultiPoly::from_terms(std::move(prod));
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result(1), base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& d) const {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (d.is_constant()) return scaled(Rational(1) / d.leading_coeff());
  const auto& [ed, cd] = d.leading_term();
  std::vector<Term> quotient;
  MultiPoly rem = *this;
  while (!rem.is_zero()) {
    const auto& [er, cr] = rem.leading_term();
    if (!divides(ed, er)) throw Error("inexact polynomial division");
    MultiPoly t = monomial(sub_exp(er, ed), cr / cd);
    quotient.push_back(t.terms_.front());
    rem -= t * d;
  }
  // Quotient terms are produced in descending order already.
  MultiPoly q;
  q.terms_ = std::move(quotient);
  return q;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  return scaled(Rational(1) / leading_coeff());
}

Rational MultiPoly::evaluate(const std::array<std::optional<Rational>, kNumVars>& at) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (!at[i]) {
        throw InvalidArgument(std::string("no value assigned to variable ") +
                              var_name(static_cast<Var>(i)));
      }
      mpq_class f;
      mpz_pow_ui(f.get_num_mpz_t(), at[i]->get_num_mpz_t(), e[i]);
      mpz_pow_ui(f.get_den_mpz_t(), at[i]->get_den_mpz_t(), e[i]);
      f.canonicalize();
      term *= f;
    }
    sum += term;
  }
  return sum;
}

namespace {

std::string coeff_text(const Rational& c) { return c.get_str(); }

std::string monomial_text(const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(static_cast<Var>(i));
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

std::string term_text(const Exponents& e, const Rational& magnitude) {
  std::string mono = monomial_text(e);
  if (mono.empty()) return coeff_text(magnitude);
  if (magnitude == 1) return mono;
  return coeff_text(magnitude) + "*" + mono;
}

}  // namespace

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  auto emit = [&](const Term& t) {
    bool negative = sgn(t.second) < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    out += term_text(t.first, abs(t.second));
  };
  for (const auto& t : terms_) {
    if (sgn(t.second) > 0) emit(t);
  }
  for (const auto& t : terms_) {
    if (sgn(t.second) < 0) emit(t);
  }
  return out;
}

// ---------------------------------------------------------------- gcd

namespace {

// Coefficients of p viewed as a univariate polynomial in v; index = degree.
std::vector<MultiPoly> to_univariate(const MultiPoly& p, Var v) {
  auto idx = static_cast<std::size_t>(v);
  std::vector<std::vector<MultiPoly::Term>> buckets(p.degree_in(v) + 1);
  for (const auto& [e, c] : p.terms()) {
    Exponents rest = e;
    rest[idx] = 0;
    buckets[e[idx]].emplace_back(rest, c);
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(MultiPoly::from_terms(std::move(b)));
  return out;
}

MultiPoly from_univariate(const std::vector<MultiPoly>& coeffs, Var v) {
  auto idx = static_cast<std::size_t>(v);
  std::vector<MultiPoly::Term> terms;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    for (const auto& [e, c] : coeffs[d].terms()) {
      Exponents full = e;
      full[idx] = static_cast<std::uint32_t>(d);
      terms.emplace_back(full, c);
    }
  }
  return MultiPoly::from_terms(std::move(terms));
}

void trim(std::vector<MultiPoly>& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

MultiPoly content(const std::vector<MultiPoly>& u) {
  MultiPoly g;
  for (const auto& c : u) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return MultiPoly(1);
  }
  return g;
}

std::vector<MultiPoly> primitive_part(std::vector<MultiPoly> u) {
  MultiPoly c = content(u);
  if (c == MultiPoly(1)) return u;
  for (auto& x : u) x = x.divide_exact(c);
  return u;
}

// Pseudo-remainder of f by g (deg f >= deg g), coefficients in the other variables.
std::vector<MultiPoly> pseudo_remainder(std::vector<MultiPoly> f, const std::vector<MultiPoly>& g) {
  const MultiPoly& lg = g.back();
  std::size_t dg = g.size() - 1;
  while (!f.empty() && f.size() - 1 >= dg) {
    MultiPoly lf = f.back();
    std::size_t shift = f.size() - 1 - dg;
    for (auto& c : f) c *= lg;
    for (std::size_t i = 0; i <= dg; ++i) f[i + shift] -= lf * g[i];
    trim(f);
  }
  return f;
}

// Scales so that the leading coefficient of the top coefficient is 1.
void normalize(std::vector<MultiPoly>& u) {
  Rational lc = u.back().leading_coeff();
  if (lc == 1) return;
  Rational inv = 1 / lc;
  for (auto& c : u) c = c.scaled(inv);
}

std::vector<Rational> univariate_image(const std::vector<MultiPoly>& u,
                                       const std::array<std::optional<Rational>, kNumVars>& at) {
  std::vector<Rational> out;
  out.reserve(u.size());
  for (const auto& c : u) out.push_back(c.evaluate(at));
  return out;
}

std::size_t univariate_gcd_degree(std::vector<Rational> f, std::vector<Rational> g) {
  auto strip = [](std::vector<Rational>& x) {
    while (!x.empty() && x.back() == 0) x.pop_back();
  };
  strip(f);
  strip(g);
  if (f.size() < g.size()) std::swap(f, g);
  while (!g.empty()) {
    while (f.size() >= g.size()) {
      Rational factor = f.back() / g.back();
      std::size_t shift = f.size() - g.size();
      for (std::size_t i = 0; i < g.size(); ++i) f[i + shift] -= factor * g[i];
      strip(f);
      if (f.empty()) break;
    }
    std::swap(f, g);
  }
  return f.empty() ? 0 : f.size() - 1;
}

// True when the images of ua and ub at some point with nonvanishing leading
// coefficients are coprime, which bounds the degree of their gcd by zero.
bool coprime_images(const std::vector<MultiPoly>& ua, const std::vector<MultiPoly>& ub) {
  static constexpr long kPoints[][kNumVars] = {
      {2, 3, 5, 7, 11}, {-3, 7, 2, -5, 13}, {17, -2, 9, 4, -7}};
  for (const auto& pt : kPoints) {
    std::array<std::optional<Rational>, kNumVars> at;
    for (std::size_t i = 0; i < kNumVars; ++i) at[i] = Rational(pt[i]);
    auto fa = univariate_image(ua, at), fb = univariate_image(ub, at);
    if (fa.back() == 0 || fb.back() == 0) continue;
    return univariate_gcd_degree(std::move(fa), std::move(fb)) == 0;
  }
  return false;
}

MultiPoly monomial_gcd(const MultiPoly& mono, const MultiPoly& p) {
  Exponents e = mono.leading_term().first;
  for (const auto& [ep, c] : p.terms()) {
    for (std::size_t i = 0; i < kNumVars; ++i) e[i] = std::min(e[i], ep[i]);
  }
  return MultiPoly::monomial(e, 1);
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return MultiPoly(1);
  if (a.terms().size() == 1) return monomial_gcd(a, b);
  if (b.terms().size() == 1) return monomial_gcd(b, a);
  if (a == b) return a.monic();

  // A variable occurring in only one argument is eliminated through the content.
  for (Var v : kAllVars) {
    bool in_a = a.involves(v), in_b = b.involves(v);
    if (in_a && !in_b) return gcd(content(to_univariate(a, v)), b);
    if (in_b && !in_a) return gcd(a, content(to_univariate(b, v)));
  }
  Var v = Var::r;
  std::uint32_t best = 0;
  bool found = false;
  for (Var cand : kAllVars) {
    std::uint32_t d = std::max(a.degree_in(cand), b.degree_in(cand));
    if (d > 0 && (!found || d < best)) {
      v = cand;
      best = d;
      found = true;
    }
  }
  if (!found) return MultiPoly(1);

  auto ua = to_univariate(a, v);
  auto ub = to_univariate(b, v);
  MultiPoly common = gcd(content(ua), content(ub));
  if (coprime_images(ua, ub)) return common.monic();
  auto f = primitive_part(std::move(ua));
  auto g = primitive_part(std::move(ub));
  if (f.size() < g.size()) std::swap(f, g);
  while (true) {
    auto r = pseudo_remainder(f, g);
    if (r.empty()) break;
    if (r.size() == 1) {
      g = {MultiPoly(1)};
      break;
    }
    f = std::move(g);
    g = primitive_part(std::move(r));
    normalize(g);
  }
  return (common * from_univariate(g, v)).monic();
}

// ---------------------------------------------------------------- ScalarExpr

ScalarExpr::ScalarExpr(const MultiPoly& num, const MultiPoly& den) {
  *this = make_canonical(num, den);
}

ScalarExpr ScalarExpr::make_canonical(MultiPoly num, MultiPoly den) {
  if (den.is_zero()) throw DivisionByZero("division by the zero rational function");
  if (num.is_zero()) return ScalarExpr();
  MultiPoly g = gcd(num, den);
  if (g != MultiPoly(1)) {
    num = num.divide_exact(g);
    den = den.divide_exact(g);
  }
  Rational lc = den.leading_coeff();
  if (lc != 1) {
    Rational inv = Rational(1) / lc;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  return ScalarExpr(std::move(num), std::move(den), Reduced{});
}

bool ScalarExpr::is_one() const { return den_ == MultiPoly(1) && num_ == MultiPoly(1); }

ScalarExpr ScalarExpr::operator-() const { return ScalarExpr(-num_, den_, Reduced{}); }

namespace {
bool is_unit(const MultiPoly& p) {
  return p.terms().size() == 1 && p.is_constant() && p.leading_coeff() == 1;
}
}  // namespace

ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (is_unit(a.den_) && is_unit(b.den_)) return ScalarExpr(a.num_ + b.num_, a.den_, ScalarExpr::Reduced{});
  if (a.den_ == b.den_) return ScalarExpr::make_canonical(a.num_ + b.num_, a.den_);
  MultiPoly g = gcd(a.den_, b.den_);
  if (is_unit(g)) {
    // Coprime denominators: the cross sum is already reduced.
    MultiPoly num = a.num_ * b.den_ + b.num_ * a.den_;
    if (num.is_zero()) return ScalarExpr();
    MultiPoly den = a.den_ * b.den_;
    return ScalarExpr(std::move(num), std::move(den), ScalarExpr::Reduced{});
  }
  MultiPoly ad = a.den_.divide_exact(g);
  MultiPoly bd = b.den_.divide_exact(g);
  return ScalarExpr::make_canonical(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b) { return a + (-b); }

ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
  if (a.is_zero() || b.is_zero()) return ScalarExpr();
  if (is_unit(a.den_) && is_unit(b.den_)) return ScalarExpr(a.num_ * b.num_, a.den_, ScalarExpr::Reduced{});
  MultiPoly g1 = gcd(a.num_, b.den_);
  MultiPoly g2 = gcd(b.num_, a.den_);
  MultiPoly n1 = is_unit(g1) ? a.num_ : a.num_.divide_exact(g1);
  MultiPoly d2 = is_unit(g1) ? b.den_ : b.den_.divide_exact(g1);
  MultiPoly n2 = is_unit(g2) ? b.num_ : b.num_.divide_exact(g2);
  MultiPoly d1 = is_unit(g2) ? a.den_ : a.den_.divide_exact(g2);
  MultiPoly den = d1 * d2;
  MultiPoly num = n1 * n2;
  Rational lc = den.leading_coeff();
  if (lc != 1) {
    Rational inv = Rational(1) / lc;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  return ScalarExpr(std::move(num), std::move(den), ScalarExpr::Reduced{});
}

ScalarExpr ScalarExpr::inverse() const {
  if (is_zero()) throw DivisionByZero("division by the zero rational function");
  MultiPoly num = den_, den = num_;
  Rational inv = Rational(1) / den.leading_coeff();
  return ScalarExpr(num.scaled(inv), den.scaled(inv), Reduced{});
}

ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b) { return a * b.inverse(); }

ScalarExpr ScalarExpr::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  auto un = static_cast<unsigned>(n);
  return ScalarExpr(num_.pow(un), den_.pow(un), Reduced{});
}

Rational ScalarExpr::evaluate(const std::map<Var, Rational>& assignment) const {
  std::array<std::optional<Rational>, kNumVars> at;
  for (const auto& [v, value] : assignment) at[static_cast<std::size_t>(v)] = value;
  Rational d = den_.evaluate(at);
  if (d == 0) throw DivisionByZero("denominator " + den_.to_string() + " vanishes at the assignment");
  return num_.evaluate(at) / d;
}

namespace {

ScalarExpr substitute_poly(const MultiPoly& p, const std::map<Var, ScalarExpr>& values) {
  ScalarExpr sum;
  for (const auto& [e, c] : p.terms()) {
    ScalarExpr term(c);
    Exponents kept{};
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      auto it = values.find(static_cast<Var>(i));
      if (it == values.end()) {
        kept[i] = e[i];
      } else {
        term *= it->second.pow(static_cast<int>(e[i]));
      }
    }
    sum += term * ScalarExpr(MultiPoly::monomial(kept, 1));
  }
  return sum;
}

}  // namespace

ScalarExpr ScalarExpr::substitute(const std::map<Var, ScalarExpr>& values) const {
  if (values.empty()) return *this;
  return substitute_poly(num_, values) / substitute_poly(den_, values);
}

std::string ScalarExpr::to_string() const {
  if (is_unit(den_)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

ScalarExpr sum_of(const std::vector<ScalarExpr>& terms) {
  if (terms.empty()) return ScalarExpr();
  if (terms.size() == 1) return terms.front();
  std::vector<std::pair<const MultiPoly*, MultiPoly>> groups;
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return *g.first == t.den(); });
    if (it == groups.end()) {
      groups.emplace_back(&t.den(), t.num());
    } else {
      it->second += t.num();
    }
  }
  ScalarExpr sum;
  for (auto& [den, num] : groups) {
    if (num.is_zero()) continue;
    sum += is_unit(*den) ? ScalarExpr(num) : ScalarExpr(num, *den);
  }
  return sum;
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ScalarExpr parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    ScalarExpr value = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return value;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ScalarExpr expr() {
    ScalarExpr value = term();
    while (true) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  ScalarExpr term() {
    ScalarExpr value = unary();
    while (true) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        ScalarExpr d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        value /= d;
      } else {
        return value;
      }
    }
  }

  ScalarExpr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  ScalarExpr power() {
    ScalarExpr base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      std::string digits = read_digits();
      if (digits.empty()) throw ParseError("expected a nonnegative integer exponent", start);
      if (digits.size() > 6) throw ParseError("exponent too large", start);
      base = base.pow(std::stoi(digits));
    }
    return base;
  }

  ScalarExpr primary() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ScalarExpr inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return ScalarExpr(Rational(mpz_class(read_digits())));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto v = var_from_name(name);
      if (!v) throw ParseError("unknown variable '" + std::string(name) + "'", start);
      return ScalarExpr::variable(*v);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ScalarExpr ScalarExpr::parse(std::string_view text) { return Parser(text).parse(); }

std::map<Var, ScalarExpr> parse_assignments(std::string_view text) {
  std::map<Var, ScalarExpr> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (!item.empty()) {
      std::size_t eq = item.find('=');
      if (eq == std::string_view::npos) throw InvalidArgument("expected name=value, got '" + std::string(item) + "'");
      std::string_view name = item.substr(0, eq);
      while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
      while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
      auto v = var_from_name(name);
      if (!v) throw InvalidArgument("unknown parameter '" + std::string(name) + "'");
      out[*v] = ScalarExpr::parse(item.substr(eq + 1));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace ybsys
