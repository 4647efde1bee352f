#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "excoh/gradedalg.hpp"
#include "json.hpp"

namespace excoh {

// Commutative polynomial ring on named symbols over Z or F_p. Used to hold
// relation strings of presentations. A monomial is read as the ordered
// product of its factors in symbol order when evaluated in a graded algebra.
class FreePolyRing {
 public:
  using Element = std::map<std::vector<int>, Coeff>;

  FreePolyRing(int characteristic, std::vector<std::string> names, std::vector<int> degrees);

  int characteristic() const { return p_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& degrees() const { return degrees_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  Element zero() const { return {}; }
  Element integer(long long v) const;
  Element symbol(std::string_view name) const;
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element scale(const Element& a, const Coeff& c) const;

  // Nonzero homogeneous elements only.
  std::optional<int> degree(const Element& a) const;
  Element parse(std::string_view text) const;
  std::string render(const Element& a) const;

  // Generators matched by name; every generator of `source` must be a symbol here.
  Element from_algebra(const Polynomial& a, const GradedAlgebra& source) const;
  // images[i] is the value of symbol i in `target`.
  Polynomial evaluate(const Element& a, const GradedAlgebra& target,
                      const std::vector<Polynomial>& images) const;

 private:
  Coeff reduce(const Coeff& c) const;
  int p_;
  std::vector<std::string> names_;
  std::vector<int> degrees_;
};

struct PresentationGenerator {
  std::string name;
  int degree = 0;
  int order = 0;  // additive order: 0 (free) or p
};

struct RingPresentation {
  std::string group;
  int coefficient = 0;  // 0 for Z, p for F_p
  // Quotient of the positive-degree part (torsion ideals) rather than the whole ring.
  bool augmentation_ideal = false;
  std::vector<PresentationGenerator> generators;
  std::vector<std::string> relations;
  // Generators of a tensor factor Delta(...) / Lambda(...) with no further relations.
  std::vector<std::string> simple_system;
  GradedDims graded_dims;

  bool empty() const { return generators.empty(); }
  FreePolyRing ring() const;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

nlohmann::ordered_json dims_to_json(const GradedDims& d);

}  // namespace excoh
