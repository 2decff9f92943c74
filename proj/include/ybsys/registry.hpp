#pragma once

// Named, parameterized instances: the worked examples plus small standard
// structures. Names are stable CLI identifiers.

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ybsys/entwining.hpp"
#include "ybsys/error.hpp"

namespace ybsys {

using Payload = std::variant<Algebra, Coalgebra, Bialgebra, EntwiningStructure, WXZSystem, LinMap>;

struct ParamSpec {
  std::string name;
  bool integer = false;
  std::string default_value;
  std::string doc;
};

struct ExampleInfo {
  std::string name;
  std::string kind;  // "algebra", "coalgebra", "bialgebra", "entwining", "wxz", "map"
  std::string description;
  std::vector<ParamSpec> params;
};

struct ExampleEntry {
  std::string name;
  std::map<std::string, std::string> params;  // resolved values, as text
  Payload payload;
};

/// Deterministic (alphabetical) listing.
std::vector<ExampleInfo> list_examples();

/// Builds and validates an entry. Scalar parameters accept the scalar grammar
/// and may refer to other parameters ("p=s"). Throws InvalidArgument for an
/// unknown name or parameter, or a parameter value the entry excludes (for
/// example s = -1 for ex28.*, or N < 1).
ExampleEntry get_example(const std::string& name, const std::map<std::string, std::string>& params = {});

template <class T>
T get_example_as(const std::string& name, const std::map<std::string, std::string>& params = {}) {
  auto entry = get_example(name, params);
  if (auto* p = std::get_if<T>(&entry.payload)) return std::move(*p);
  throw InvalidArgument("example '" + name + "' has a different payload type");
}

/// "name=value,name=value" → map.
std::map<std::string, std::string> parse_params(std::string_view text);

std::string payload_kind(const Payload& p);

// Direct constructors for the worked examples, symbolic in their parameters.

/// {1, x} with x² = 1/(s+1).
Algebra ex28_algebra(const ScalarExpr& s);
/// {e, f} with Δ(e) = e⊗e + 1/(s+1) f⊗f, Δ(f) = e⊗f + f⊗e, ε(e) = 1, ε(f) = 0.
Coalgebra ex28_coalgebra(const ScalarExpr& s);
/// ψ(e⊗x) = q·1⊗f + x⊗e, ψ(f⊗x) = −x⊗f, ψ(c⊗1) = 1⊗c.
EntwiningStructure ex28_entwining(const ScalarExpr& s, const ScalarExpr& q);
LinMap ex28_x56(const ScalarExpr& s, const ScalarExpr& q);
LinMap ex28_x59(const ScalarExpr& s, const ScalarExpr& q);

/// A = k[x₀..x_{N-1}]/(x_i x_j), C = span{e, y₀..y_{N-1}} with e group-like and
/// y_j primitive; ψ(y_j⊗x_i) = x_{i+1}⊗y_{j+1} with indices mod N.
Algebra ex27_algebra(std::size_t n);
Coalgebra ex27_coalgebra(std::size_t n);
EntwiningStructure ex27_entwining(std::size_t n);

}  // namespace ybsys
