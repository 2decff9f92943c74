#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ybsys/tensor.hpp"

namespace ybsys {

/// One tensor identity lhs = rhs, kept as the full difference lhs - rhs.
/// The identity holds iff the difference is the zero map.
struct AxiomCheck {
  std::string name;
  LinMap difference;

  bool holds() const { return difference.is_zero(); }
  /// First nonzero entry of the difference, if any.
  std::optional<Entry> witness() const { return difference.first_nonzero(); }
};

class Report {
 public:
  Report() = default;
  explicit Report(std::vector<AxiomCheck> checks) : checks_(std::move(checks)) {}

  void add(std::string name, LinMap difference) { checks_.push_back({std::move(name), std::move(difference)}); }
  void add(const AxiomCheck& c) { checks_.push_back(c); }
  /// Appends every check of `other`, prefixing names with "prefix.".
  void merge(const Report& other, const std::string& prefix = "");

  const std::vector<AxiomCheck>& checks() const noexcept { return checks_; }
  bool passed() const;
  std::vector<const AxiomCheck*> failures() const;
  /// Throws InvalidArgument when no check has that name.
  const AxiomCheck& at(const std::string& name) const;

  /// One line per check: "PASS name" or "FAIL name: at x⊗y -> z, difference d".
  std::string to_text() const;

 private:
  std::vector<AxiomCheck> checks_;
};

/// The check lhs = rhs as an AxiomCheck.
AxiomCheck equation(std::string name, const LinMap& lhs, const LinMap& rhs);

}  // namespace ybsys
