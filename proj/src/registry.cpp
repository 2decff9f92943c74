#include "ybsys/registry.hpp"

#include <algorithm>
#include <functional>

#include "ybsys/error.hpp"

namespace ybsys {

// ------------------------------------------------------------ constructions

Algebra ex28_algebra(const ScalarExpr& s) {
  Space a("A", {"1", "x"});
  Tensor3 mult(8);
  auto at = [](std::size_t i, std::size_t j, std::size_t k) { return (i * 2 + j) * 2 + k; };
  mult[at(0, 0, 0)] = 1;
  mult[at(0, 1, 1)] = 1;
  mult[at(1, 0, 1)] = 1;
  mult[at(1, 1, 0)] = ScalarExpr(1) / (s + 1);
  return Algebra(a, mult, {1, 0});
}

Coalgebra ex28_coalgebra(const ScalarExpr& s) {
  Space c("C", {"e", "f"});
  Tensor3 comult(8);
  auto at = [](std::size_t i, std::size_t j, std::size_t k) { return (i * 2 + j) * 2 + k; };
  comult[at(0, 0, 0)] = 1;
  comult[at(0, 1, 1)] = ScalarExpr(1) / (s + 1);
  comult[at(1, 0, 1)] = 1;
  comult[at(1, 1, 0)] = 1;
  return Coalgebra(c, comult, {1, 0});
}

EntwiningStructure ex28_entwining(const ScalarExpr& s, const ScalarExpr& q) {
  Algebra a = ex28_algebra(s);
  Coalgebra c = ex28_coalgebra(s);
  // rows: e⊗1, e⊗x, f⊗1, f⊗x; columns: 1⊗e, 1⊗f, x⊗e, x⊗f
  LinMap psi(ProductSpace(c.space()) * ProductSpace(a.space()), ProductSpace(a.space()) * ProductSpace(c.space()));
  psi.at(0, 0) = 1;
  psi.at(1, 1) = q;
  psi.at(1, 2) = 1;
  psi.at(2, 1) = 1;
  psi.at(3, 3) = -1;
  return EntwiningStructure(std::move(a), std::move(c), std::move(psi));
}

namespace {
ProductSpace ex28_ac() { return ProductSpace(Space("A", {"1", "x"})) * ProductSpace(Space("C", {"e", "f"})); }
}  // namespace

LinMap ex28_x56(const ScalarExpr&, const ScalarExpr& q) {
  LinMap x(ex28_ac(), ex28_ac());
  x.at(0, 0) = 1;
  x.at(1, 1) = 1;
  x.at(2, 1) = q;
  x.at(2, 2) = 1;
  x.at(3, 3) = -1;
  return x;
}

LinMap ex28_x59(const ScalarExpr& s, const ScalarExpr& q) {
  LinMap x(ex28_ac(), ex28_ac());
  ScalarExpr s_inv = s.inverse();
  x.at(0, 0) = s_inv;
  x.at(0, 3) = q * (1 - s);
  x.at(1, 1) = 1;
  x.at(2, 1) = q;
  x.at(2, 2) = s_inv;
  x.at(3, 3) = -1;
  return x;
}

namespace {

std::vector<std::string> indexed(const std::string& head, const std::string& prefix, std::size_t n) {
  std::vector<std::string> out{head};
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

void require_positive(std::size_t n) {
  if (n < 1) throw InvalidArgument("truncation N must be at least 1");
}

}  // namespace

Algebra ex27_algebra(std::size_t n) {
  require_positive(n);
  Space a("A", indexed("1", "x", n));
  const std::size_t d = n + 1;
  Tensor3 mult(d * d * d);
  for (std::size_t i = 0; i < d; ++i) {
    mult[(0 * d + i) * d + i] = 1;
    mult[(i * d + 0) * d + i] = 1;
  }
  std::vector<ScalarExpr> unit(d);
  unit[0] = 1;
  return Algebra(a, mult, unit);
}

Coalgebra ex27_coalgebra(std::size_t n) {
  require_positive(n);
  Space c("C", indexed("e", "y", n));
  const std::size_t d = n + 1;
  Tensor3 comult(d * d * d);
  comult[0] = 1;
  for (std::size_t j = 1; j < d; ++j) {
    comult[(j * d + 0) * d + j] = 1;
    comult[(j * d + j) * d + 0] = 1;
  }
  std::vector<ScalarExpr> counit(d);
  counit[0] = 1;
  return Coalgebra(c, comult, counit);
}

EntwiningStructure ex27_entwining(std::size_t n) {
  Algebra a = ex27_algebra(n);
  Coalgebra c = ex27_coalgebra(n);
  const std::size_t d = n + 1;
  LinMap psi(ProductSpace(c.space()) * ProductSpace(a.space()), ProductSpace(a.space()) * ProductSpace(c.space()));
  for (std::size_t ci = 0; ci < d; ++ci) {
    for (std::size_t ai = 0; ai < d; ++ai) {
      std::size_t row = ci * d + ai;
      if (ci == 0 || ai == 0) {
        psi.at(row, ai * d + ci) = 1;  // ψ(e⊗a) = a⊗e, ψ(c⊗1) = 1⊗c
      } else {
        std::size_t i = ai - 1, j = ci - 1;
        psi.at(row, (1 + (i + 1) % n) * d + 1 + (j + 1) % n) = 1;
      }
    }
  }
  return EntwiningStructure(std::move(a), std::move(c), std::move(psi));
}

// ----------------------------------------------------------------- registry

namespace {

struct Args {
  std::map<std::string, ScalarExpr> scalars;
  std::map<std::string, std::size_t> ints;

  const ScalarExpr& s(const std::string& n) const { return scalars.at(n); }
  std::size_t i(const std::string& n) const { return ints.at(n); }
};

struct Registered {
  ExampleInfo info;
  std::function<Payload(const Args&)> build;
};

std::vector<ParamSpec> ex28_params() {
  return {{"s", false, "s", "algebra parameter, s != -1"},
          {"q", false, "q", "entwining parameter"},
          {"r", false, "1", "W parameter"},
          {"p", false, "s", "Z parameter"},
          {"t", false, "1", "Z parameter"}};
}

std::vector<ParamSpec> rspt_params() {
  return {{"r", false, "r", ""}, {"s", false, "s", ""}, {"p", false, "p", ""}, {"t", false, "t", ""}};
}

ParamSpec int_param(const std::string& name, const std::string& def, const std::string& doc) {
  return {name, true, def, doc};
}

const std::vector<Registered>& registry() {
  static const std::vector<Registered> entries = [] {
    std::vector<Registered> e;
    e.push_back({{"ex27.algebra", "algebra", "k[x_0..x_{N-1}]/(x_i x_j)", {int_param("N", "3", "truncation")}},
                 [](const Args& a) -> Payload { return ex27_algebra(a.i("N")); }});
    e.push_back({{"ex27.coalgebra", "coalgebra", "e group-like, y_0..y_{N-1} primitive",
                  {int_param("N", "3", "truncation")}},
                 [](const Args& a) -> Payload { return ex27_coalgebra(a.i("N")); }});
    e.push_back({{"ex27.truncated", "entwining", "cyclic shift entwining psi(y_j x x_i) = x_{i+1} x y_{j+1} mod N",
                  {int_param("N", "3", "truncation")}},
                 [](const Args& a) -> Payload { return ex27_entwining(a.i("N")); }});
    {
      auto params = rspt_params();
      params.insert(params.begin(), int_param("N", "3", "truncation"));
      e.push_back({{"ex27.wxz", "wxz", "WXZ-system of the truncated cyclic entwining", params},
                   [](const Args& a) -> Payload {
                     return wxz_from_entwining(ex27_entwining(a.i("N")), a.s("r"), a.s("s"), a.s("p"), a.s("t"));
                   }});
    }
    e.push_back({{"ex28.algebra", "algebra", "{1, x} with x^2 = 1/(s+1)", ex28_params()},
                 [](const Args& a) -> Payload { return ex28_algebra(a.s("s")); }});
    e.push_back({{"ex28.coalgebra", "coalgebra", "{e, f} with D(e) = e x e + 1/(s+1) f x f, D(f) = e x f + f x e",
                  ex28_params()},
                 [](const Args& a) -> Payload { return ex28_coalgebra(a.s("s")); }});
    e.push_back({{"ex28.entwining", "entwining", "psi(e x x) = q 1 x f + x x e, psi(f x x) = -x x f", ex28_params()},
                 [](const Args& a) -> Payload { return ex28_entwining(a.s("s"), a.s("q")); }});
    e.push_back({{"ex28.flip", "entwining", "ordinary twist on the two-dimensional pair", ex28_params()},
                 [](const Args& a) -> Payload { return flip_entwining(ex28_algebra(a.s("s")), ex28_coalgebra(a.s("s"))); }});
    e.push_back({{"ex28.W", "map", "W of the two-dimensional algebra", ex28_params()},
                 [](const Args& a) -> Payload { return build_W(ex28_algebra(a.s("s")), a.s("r"), a.s("s")); }});
    e.push_back({{"ex28.X56", "map", "X of case 56", ex28_params()},
                 [](const Args& a) -> Payload { return ex28_x56(a.s("s"), a.s("q")); }});
    e.push_back({{"ex28.X59", "map", "X of case 59", ex28_params()},
                 [](const Args& a) -> Payload { return ex28_x59(a.s("s"), a.s("q")); }});
    e.push_back({{"ex28.Z", "map", "Z of the two-dimensional coalgebra", ex28_params()},
                 [](const Args& a) -> Payload { return build_Z(ex28_coalgebra(a.s("s")), a.s("p"), a.s("t")); }});
    e.push_back({{"ex28.wxz", "wxz", "W, X of case 56, Z", ex28_params()}, [](const Args& a) -> Payload {
                   return wxz_from_entwining(ex28_entwining(a.s("s"), a.s("q")), a.s("r"), a.s("s"), a.s("p"),
                                             a.s("t"));
                 }});
    e.push_back({{"flip", "entwining", "twist entwining of k[Z_n] with the group coalgebra k[Z_m]",
                  {int_param("n", "2", "group algebra order"), int_param("m", "1", "group coalgebra order")}},
                 [](const Args& a) -> Payload {
                   return flip_entwining(group_bialgebra(a.i("n"), "A", "g").alg,
                                         group_bialgebra(a.i("m"), "C", "h").coalg);
                 }});
    e.push_back({{"group_algebra", "algebra", "k[Z_n]; n = 1 is the ground field",
                  {int_param("n", "2", "group order")}},
                 [](const Args& a) -> Payload { return group_bialgebra(a.i("n"), "A", "g").alg; }});
    e.push_back({{"group_bialgebra", "bialgebra", "k[Z_n] with group-like basis", {int_param("n", "2", "group order")}},
                 [](const Args& a) -> Payload { return group_bialgebra(a.i("n")); }});
    e.push_back({{"group_bialgebra.entwining", "entwining", "Doi-Koppinen entwining of k[Z_n] with A = C = B",
                  {int_param("n", "2", "group order")}},
                 [](const Args& a) -> Payload {
                   Bialgebra b = group_bialgebra(a.i("n"));
                   return doi_koppinen_entwining(regular_comodule_algebra(b), regular_module_coalgebra(b));
                 }});
    e.push_back({{"group_coalgebra", "coalgebra", "k[Z_n] with group-like basis; n = 1 is one group-like",
                  {int_param("n", "2", "group order")}},
                 [](const Args& a) -> Payload { return group_bialgebra(a.i("n"), "C", "h").coalg; }});
    std::sort(e.begin(), e.end(), [](const auto& x, const auto& y) { return x.info.name < y.info.name; });
    return e;
  }();
  return entries;
}

void validate(const Payload& p) {
  Report r = std::visit(
      [](const auto& v) -> Report {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Algebra>) return check_algebra(v);
        if constexpr (std::is_same_v<T, Coalgebra>) return check_coalgebra(v);
        if constexpr (std::is_same_v<T, Bialgebra>) return check_bialgebra(v);
        if constexpr (std::is_same_v<T, EntwiningStructure>) return check_entwining(v);
        if constexpr (std::is_same_v<T, WXZSystem>) return check_wxz(v);
        return Report();
      },
      p);
  if (!r.passed()) throw InvalidArgument("example payload fails its structural check:\n" + r.to_text());
}

}  // namespace

std::vector<ExampleInfo> list_examples() {
  std::vector<ExampleInfo> out;
  for (const auto& r : registry()) out.push_back(r.info);
  return out;
}

std::string payload_kind(const Payload& p) {
  static const char* kinds[] = {"algebra", "coalgebra", "bialgebra", "entwining", "wxz", "map"};
  return kinds[p.index()];
}

ExampleEntry get_example(const std::string& name, const std::map<std::string, std::string>& params) {
  const auto& reg = registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const Registered& r) { return r.info.name == name; });
  if (it == reg.end()) throw InvalidArgument("unknown example '" + name + "'");
  const auto& specs = it->info.params;
  for (const auto& [k, v] : params) {
    if (std::none_of(specs.begin(), specs.end(), [&](const ParamSpec& s) { return s.name == k; })) {
      throw InvalidArgument("example '" + name + "' has no parameter '" + k + "'");
    }
  }
  Args args;
  ExampleEntry entry{name, {}, Payload(std::in_place_index<5>, LinMap(ProductSpace(), ProductSpace()))};
  try {
    // Parameters named after variables are substituted jointly, so "p=s"
    // follows the value given for s.
    std::map<Var, ScalarExpr> values;
    for (const auto& spec : specs) {
      auto given = params.find(spec.name);
      std::string text = given != params.end() ? given->second : spec.default_value;
      if (spec.integer) {
        if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
          throw InvalidArgument("parameter " + spec.name + " must be a nonnegative integer, got '" + text + "'");
        }
        args.ints[spec.name] = std::stoul(text);
        entry.params[spec.name] = text;
      } else {
        args.scalars[spec.name] = ScalarExpr::parse(text);
      }
    }
    for (const auto& [k, v] : args.scalars) {
      if (auto var = var_from_name(k); var && v != ScalarExpr::variable(*var)) values[*var] = v;
    }
    for (auto& [k, v] : args.scalars) {
      if (var_from_name(k)) {
        auto self = *var_from_name(k);
        auto others = values;
        others.erase(self);
        v = v.substitute(others);
      }
      entry.params[k] = v.to_string();
    }
    entry.payload = it->build(args);
  } catch (const DivisionByZero& e) {
    throw InvalidArgument("parameter value excluded for '" + name + "': " + e.what());
  } catch (const ParseError& e) {
    throw InvalidArgument(std::string("bad parameter value: ") + e.what());
  }
  validate(entry.payload);
  return entry;
}

std::map<std::string, std::string> parse_params(std::string_view text) {
  std::map<std::string, std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    if (!item.empty()) {
      std::size_t eq = item.find('=');
      if (eq == std::string_view::npos || eq == 0) {
        throw InvalidArgument("expected name=value, got '" + std::string(item) + "'");
      }
      out[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    }
    start = comma + 1;
  }
  return out;
}

}  // namespace ybsys
