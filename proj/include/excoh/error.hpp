#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace excoh {

// A computed result contradicted a structural invariant. Carries enough
// context for the CLI failure report.
class InvariantViolation : public std::runtime_error {
 public:
  InvariantViolation(std::string module, std::string operation, std::string invariant,
                     std::string detail, std::optional<int> degree = std::nullopt);

  const std::string& module() const { return module_; }
  const std::string& operation() const { return operation_; }
  const std::string& invariant() const { return invariant_; }
  const std::string& detail() const { return detail_; }
  std::optional<int> degree() const { return degree_; }

 private:
  std::string module_, operation_, invariant_, detail_;
  std::optional<int> degree_;
};

}  // namespace excoh
