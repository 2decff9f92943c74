#include "ybsys/report.hpp"

#include <sstream>

#include "ybsys/error.hpp"

namespace ybsys {

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks_) {
    checks_.push_back({prefix.empty() ? c.name : prefix + "." + c.name, c.difference});
  }
}

bool Report::passed() const {
  for (const auto& c : checks_) {
    if (!c.holds()) return false;
  }
  return true;
}

std::vector<const AxiomCheck*> Report::failures() const {
  std::vector<const AxiomCheck*> out;
  for (const auto& c : checks_) {
    if (!c.holds()) out.push_back(&c);
  }
  return out;
}

const AxiomCheck& Report::at(const std::string& name) const {
  for (const auto& c : checks_) {
    if (c.name == name) return c;
  }
  throw InvalidArgument("report has no check named '" + name + "'");
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks_) {
    auto w = c.witness();
    if (!w) {
      os << "PASS " << c.name << '\n';
    } else {
      os << "FAIL " << c.name << ": at " << w->domain_element << " -> " << w->codomain_element << ", difference "
         << w->value.to_string() << '\n';
    }
  }
  return os.str();
}

AxiomCheck equation(std::string name, const LinMap& lhs, const LinMap& rhs) {
  return {std::move(name), lhs - rhs};
}

}  // namespace ybsys
