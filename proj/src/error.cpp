#include "excoh/error.hpp"

namespace excoh {

namespace {
std::string compose(const std::string& module, const std::string& operation,
                    const std::string& invariant, const std::string& detail,
                    std::optional<int> degree) {
  std::string s = module + "::" + operation + ": " + invariant;
  if (degree) s += " (degree " + std::to_string(*degree) + ")";
  if (!detail.empty()) s += ": " + detail;
  return s;
}
}  // namespace

InvariantViolation::InvariantViolation(std::string module, std::string operation,
                                       std::string invariant, std::string detail,
                                       std::optional<int> degree)
    : std::runtime_error(compose(module, operation, invariant, detail, degree)),
      module_(std::move(module)),
      operation_(std::move(operation)),
      invariant_(std::move(invariant)),
      detail_(std::move(detail)),
      degree_(degree) {}

}  // namespace excoh
