#include "ybsys/structure_file.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "ybsys/error.hpp"

namespace ybsys {

using nlohmann::json;

namespace {

class Reader {
 public:
  explicit Reader(const json& doc) : doc_(doc) {}

  StructureFile read() {
    if (!doc_.is_object()) throw InvalidArgument("structure file must be a JSON object");
    for (const auto& [key, _] : doc_.items()) {
      static const std::set<std::string> known{"scalars", "spaces", "algebra", "coalgebra", "maps"};
      if (!known.count(key)) throw InvalidArgument("unknown top-level key '" + key + "'");
    }
    StructureFile f;
    if (doc_.contains("scalars")) {
      declared_.emplace();
      for (const auto& v : array(doc_["scalars"], "scalars")) {
        auto var = var_from_name(string(v, "scalars entry"));
        if (!var) throw InvalidArgument("unknown scalar '" + v.get<std::string>() + "'; use r, s, p, t or q");
        declared_->insert(*var);
        f.scalars.push_back(*var);
      }
    }
    if (doc_.contains("spaces")) {
      for (const auto& s : array(doc_["spaces"], "spaces")) {
        std::string label = string(field(s, "label", "space"), "space label");
        std::vector<std::string> basis;
        for (const auto& b : array(field(s, "basis", "space"), "basis")) basis.push_back(string(b, "basis label"));
        if (spaces_.count(label)) throw InvalidArgument("space '" + label + "' declared twice");
        try {
          spaces_.emplace(label, Space(label, basis));
        } catch (const Error& e) {
          throw InvalidArgument("space '" + label + "': " + e.what());
        }
        f.spaces.push_back(spaces_.at(label));
      }
    }
    if (doc_.contains("algebra")) f.algebra = read_algebra(doc_["algebra"]);
    if (doc_.contains("coalgebra")) f.coalgebra = read_coalgebra(doc_["coalgebra"]);
    if (doc_.contains("maps")) {
      const json& maps = doc_["maps"];
      if (!maps.is_object()) throw InvalidArgument("'maps' must be an object");
      for (const auto& [name, m] : maps.items()) f.maps.emplace(name, read_map(name, m));
    }
    return f;
  }

 private:
  static const json& array(const json& j, const std::string& what) {
    if (!j.is_array()) throw InvalidArgument("'" + what + "' must be an array");
    return j;
  }

  static const json& field(const json& j, const std::string& key, const std::string& what) {
    if (!j.is_object() || !j.contains(key)) throw InvalidArgument(what + " is missing '" + key + "'");
    return j[key];
  }

  static std::string string(const json& j, const std::string& what) {
    if (!j.is_string()) throw InvalidArgument(what + " must be a string");
    return j.get<std::string>();
  }

  static std::size_t index(const json& j, const std::string& key, std::size_t bound, const std::string& what) {
    const json& v = field(j, key, what);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      throw InvalidArgument(what + " '" + key + "' must be a nonnegative integer");
    }
    auto i = v.get<unsigned long long>();
    if (i >= bound) {
      throw InvalidArgument(what + " '" + key + "' = " + std::to_string(i) + " out of range (dimension " +
                            std::to_string(bound) + ")");
    }
    return static_cast<std::size_t>(i);
  }

  ScalarExpr coeff(const json& j, const std::string& what) const {
    const json& c = field(j, "coeff", what);
    ScalarExpr value;
    if (c.is_number_integer()) {
      value = ScalarExpr(c.get<long>());
    } else if (c.is_string()) {
      value = ScalarExpr::parse(c.get<std::string>());
    } else {
      throw InvalidArgument(what + " coefficient must be a string in the scalar grammar");
    }
    if (declared_) {
      for (Var v : kAllVars) {
        if (!declared_->count(v) && (value.num().involves(v) || value.den().involves(v))) {
          throw InvalidArgument(what + " uses undeclared scalar '" + std::string(1, var_name(v)) + "'");
        }
      }
    }
    return value;
  }

  const Space& space(const json& j, const std::string& what) const {
    std::string label = string(j, what);
    auto it = spaces_.find(label);
    if (it == spaces_.end()) throw InvalidArgument(what + " refers to undeclared space '" + label + "'");
    return it->second;
  }

  ProductSpace product(const json& j, const std::string& what) const {
    std::vector<Space> factors;
    for (const auto& s : array(j, what)) factors.push_back(space(s, what));
    return ProductSpace(std::move(factors));
  }

  // Fills `m` from sparse entries with the given index keys, rejecting duplicates.
  void fill(LinMap& m, const json& entries, const std::string& what, bool triple, std::size_t n) const {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : array(entries, what)) {
      std::size_t row, col;
      if (triple) {
        // Tensor3 data: (i, j, k) with the product index on whichever side is two-fold.
        std::size_t i = index(e, "i", n, what), j = index(e, "j", n, what), k = index(e, "k", n, what);
        if (m.domain().arity() == 2) {
          row = i * n + j;
          col = k;
        } else {
          row = i;
          col = j * n + k;
        }
      } else if (m.domain().arity() == 0) {
        row = 0;
        col = index(e, "i", n, what);
      } else {
        row = index(e, "i", n, what);
        col = 0;
      }
      if (!seen.insert({row, col}).second) throw InvalidArgument(what + " has a duplicate entry");
      m.at(row, col) = coeff(e, what);
    }
  }

  Algebra read_algebra(const json& j) const {
    const Space& a = space(field(j, "space", "algebra"), "algebra space");
    ProductSpace pa(a);
    LinMap mult(pa * pa, pa), unit(ProductSpace(), pa);
    fill(mult, field(j, "mult", "algebra"), "algebra mult", true, a.dim());
    fill(unit, field(j, "unit", "algebra"), "algebra unit", false, a.dim());
    return Algebra(a, std::move(mult), std::move(unit));
  }

  Coalgebra read_coalgebra(const json& j) const {
    const Space& c = space(field(j, "space", "coalgebra"), "coalgebra space");
    ProductSpace pc(c);
    LinMap comult(pc, pc * pc), counit(pc, ProductSpace());
    fill(comult, field(j, "comult", "coalgebra"), "coalgebra comult", true, c.dim());
    fill(counit, field(j, "counit", "coalgebra"), "coalgebra counit", false, c.dim());
    return Coalgebra(c, std::move(comult), std::move(counit));
  }

  LinMap read_map(const std::string& name, const json& j) const {
    const std::string what = "map '" + name + "'";
    LinMap m(product(field(j, "domain", what), what + " domain"), product(field(j, "codomain", what), what + " codomain"));
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : array(field(j, "entries", what), what + " entries")) {
      std::size_t row = index(e, "row", m.domain().dim(), what);
      std::size_t col = index(e, "col", m.codomain().dim(), what);
      if (!seen.insert({row, col}).second) throw InvalidArgument(what + " has a duplicate entry");
      m.at(row, col) = coeff(e, what);
    }
    return m;
  }

  const json& doc_;
  std::map<std::string, Space> spaces_;
  std::optional<std::set<Var>> declared_;
};

class Writer {
 public:
  void add_space(const Space& s) {
    for (const auto& existing : spaces_) {
      if (existing.label == s.label) {
        if (!(existing == s)) throw InvalidArgument("two different spaces share the label '" + s.label + "'");
        return;
      }
    }
    spaces_.push_back(s);
  }

  void note(const ScalarExpr& v) {
    for (Var x : kAllVars) {
      if (v.num().involves(x) || v.den().involves(x)) vars_.insert(x);
    }
  }

  json entry(const ScalarExpr& v) {
    note(v);
    return v.to_string();
  }

  json triples(const LinMap& m, std::size_t n) {
    json out = json::array();
    for (std::size_t row = 0; row < m.domain().dim(); ++row) {
      for (std::size_t col = 0; col < m.codomain().dim(); ++col) {
        const ScalarExpr& v = m(row, col);
        if (v.is_zero()) continue;
        std::size_t i, j, k;
        if (m.domain().arity() == 2) {
          i = row / n, j = row % n, k = col;
        } else {
          i = row, j = col / n, k = col % n;
        }
        out.push_back({{"i", i}, {"j", j}, {"k", k}, {"coeff", entry(v)}});
      }
    }
    return out;
  }

  json vector(const LinMap& m) {
    json out = json::array();
    bool is_unit = m.domain().arity() == 0;
    std::size_t n = is_unit ? m.codomain().dim() : m.domain().dim();
    for (std::size_t i = 0; i < n; ++i) {
      const ScalarExpr& v = is_unit ? m(0, i) : m(i, 0);
      if (!v.is_zero()) out.push_back({{"i", i}, {"coeff", entry(v)}});
    }
    return out;
  }

  json labels(const ProductSpace& p) {
    json out = json::array();
    for (const auto& s : p.factors()) {
      add_space(s);
      out.push_back(s.label);
    }
    return out;
  }

  json map(const LinMap& m) {
    json entries = json::array();
    for (std::size_t row = 0; row < m.domain().dim(); ++row) {
      for (std::size_t col = 0; col < m.codomain().dim(); ++col) {
        if (!m(row, col).is_zero()) entries.push_back({{"row", row}, {"col", col}, {"coeff", entry(m(row, col))}});
      }
    }
    json d = labels(m.domain());
    json c = labels(m.codomain());
    return {{"domain", d}, {"codomain", c}, {"entries", entries}};
  }

  std::string write(const StructureFile& f) {
    for (const auto& s : f.spaces) add_space(s);
    json doc = json::object();
    if (f.algebra) {
      add_space(f.algebra->space());
      doc["algebra"] = {{"space", f.algebra->space().label},
                        {"mult", triples(f.algebra->mult(), f.algebra->dim())},
                        {"unit", vector(f.algebra->unit())}};
    }
    if (f.coalgebra) {
      add_space(f.coalgebra->space());
      doc["coalgebra"] = {{"space", f.coalgebra->space().label},
                          {"comult", triples(f.coalgebra->comult(), f.coalgebra->dim())},
                          {"counit", vector(f.coalgebra->counit())}};
    }
    if (!f.maps.empty()) {
      json maps = json::object();
      for (const auto& [name, m] : f.maps) maps[name] = map(m);
      doc["maps"] = maps;
    }
    for (Var v : f.scalars) vars_.insert(v);
    json scalars = json::array();
    for (Var v : kAllVars) {
      if (vars_.count(v)) scalars.push_back(std::string(1, var_name(v)));
    }
    json spaces = json::array();
    for (const auto& s : spaces_) spaces.push_back({{"label", s.label}, {"basis", s.basis}});
    doc["scalars"] = scalars;
    doc["spaces"] = spaces;
    return doc.dump(2) + "\n";
  }

 private:
  std::vector<Space> spaces_;
  std::set<Var> vars_;
};

}  // namespace

const LinMap& StructureFile::map(const std::string& name) const {
  auto it = maps.find(name);
  if (it == maps.end()) throw InvalidArgument("structure file has no map '" + name + "'");
  return it->second;
}

StructureFile read_structure_file(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  return Reader(doc).read();
}

std::string write_structure_file(const StructureFile& f) { return Writer().write(f); }

StructureFile to_structure_file(const Payload& p, const std::string& map_name) {
  StructureFile f;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Algebra>) {
          f.algebra = v;
        } else if constexpr (std::is_same_v<T, Coalgebra>) {
          f.coalgebra = v;
        } else if constexpr (std::is_same_v<T, Bialgebra>) {
          f.algebra = v.alg;
          f.coalgebra = v.coalg;
        } else if constexpr (std::is_same_v<T, EntwiningStructure>) {
          f.algebra = v.A;
          f.coalgebra = v.C;
          f.maps.emplace("psi", v.psi);
        } else if constexpr (std::is_same_v<T, WXZSystem>) {
          f.spaces = {v.V, v.Vp};
          f.maps.emplace("W", v.W);
          f.maps.emplace("X", v.X);
          f.maps.emplace("Z", v.Z);
        } else {
          f.maps.emplace(map_name, v);
        }
      },
      p);
  // Canonical form: scalars and spaces as the writer derives them.
  return read_structure_file(write_structure_file(f));
}

EntwiningStructure entwining_from_file(const StructureFile& f) {
  if (!f.algebra) throw InvalidArgument("structure file has no algebra");
  if (!f.coalgebra) throw InvalidArgument("structure file has no coalgebra");
  return EntwiningStructure(*f.algebra, *f.coalgebra, f.map("psi"));
}

WXZSystem wxz_from_file(const StructureFile& f) {
  const LinMap& w = f.map("W");
  const LinMap& z = f.map("Z");
  if (w.domain().arity() != 2 || z.domain().arity() != 2) {
    throw DimensionMismatch("W and Z must act on two-fold tensor products");
  }
  return WXZSystem(w.domain().factor(0), z.domain().factor(0), w, f.map("X"), z);
}

}  // namespace ybsys
