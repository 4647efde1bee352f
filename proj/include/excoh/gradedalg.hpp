#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace excoh {

using Coeff = boost::multiprecision::cpp_int;

struct Even {
  int truncation = 1;  // y^truncation = 0
};
struct Odd {
  std::string square;  // expression in the even generators; empty means 0
};

struct GeneratorSpec {
  std::string name;
  int degree = 0;
  std::variant<Even, Odd> kind;

  bool is_odd() const { return std::holds_alternative<Odd>(kind); }
  int truncation() const { return is_odd() ? 2 : std::get<Even>(kind).truncation; }

  static GeneratorSpec even(std::string name, int degree, int truncation) {
    return {std::move(name), degree, Even{truncation}};
  }
  static GeneratorSpec odd(std::string name, int degree, std::string square = {}) {
    return {std::move(name), degree, Odd{std::move(square)}};
  }
};

struct Monomial {
  std::vector<std::uint16_t> exponents;
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

struct Polynomial {
  int characteristic = 0;
  std::map<Monomial, Coeff> terms;  // no zero coefficients

  bool is_zero() const { return terms.empty(); }
  bool operator==(const Polynomial&) const = default;
};

// Finitely supported degree -> count.
class GradedDims {
 public:
  GradedDims() = default;
  explicit GradedDims(const std::map<int, std::int64_t>& counts);

  std::int64_t operator[](int degree) const;
  void add(int degree, std::int64_t n);
  std::int64_t total() const;
  int top_degree() const;  // -1 when empty
  const std::map<int, std::int64_t>& counts() const { return counts_; }
  GradedDims tensor(const GradedDims& other) const;
  GradedDims shifted(int by) const;
  std::string to_string() const;  // "{0:1, 3:1}"

  bool operator==(const GradedDims&) const = default;

 private:
  std::map<int, std::int64_t> counts_;
};

// Finite-dimensional graded-commutative algebra: even generators truncated at
// y^k, odd generators with a prescribed square. Generators are kept sorted by
// (degree, declaration index); monomials compare lexicographically on that order.
class GradedAlgebra {
 public:
  GradedAlgebra() : GradedAlgebra(0, {}) {}
  GradedAlgebra(int characteristic, std::vector<GeneratorSpec> generators);

  int characteristic() const { return p_; }
  const std::vector<GeneratorSpec>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;
  int top_degree() const { return top_; }
  std::uint64_t dimension() const;
  const Polynomial& square_of(std::size_t odd_index) const { return squares_[odd_index]; }

  int degree(const Monomial& m) const;
  // Degree of a nonzero homogeneous element; nullopt for 0 or inhomogeneous input.
  std::optional<int> degree(const Polynomial& a) const;
  bool admissible(const Monomial& m) const;

  std::vector<Monomial> basis_in_degree(int d) const;
  // bases()[d] == basis_in_degree(d) for 0 <= d <= top_degree.
  std::vector<std::vector<Monomial>> bases() const;
  GradedDims poincare() const;

  Polynomial zero() const { return Polynomial{p_, {}}; }
  Polynomial one() const;
  Polynomial constant(const Coeff& c) const;
  Polynomial generator(std::string_view name) const;
  Polynomial monomial(const Monomial& m, const Coeff& c = 1) const;
  Monomial unit_monomial() const { return Monomial{std::vector<std::uint16_t>(gens_.size(), 0)}; }

  Coeff reduce(const Coeff& c) const;
  Polynomial normalize(const Polynomial& a) const;
  Polynomial add(const Polynomial& a, const Polynomial& b) const;
  Polynomial sub(const Polynomial& a, const Polynomial& b) const;
  Polynomial negate(const Polynomial& a) const;
  Polynomial scale(const Polynomial& a, const Coeff& c) const;
  Polynomial multiply(const Polynomial& a, const Polynomial& b) const;
  Polynomial multiply(const Monomial& a, const Monomial& b) const;
  Polynomial power(const Polynomial& a, int e) const;

  std::string render(const Polynomial& a) const;
  Polynomial parse(std::string_view text) const;

  // Maps a polynomial over `source` into this algebra, generators matched by name.
  Polynomial embed(const Polynomial& a, const GradedAlgebra& source) const;

 private:
  void accumulate(Polynomial& acc, const Monomial& a, const Monomial& b, const Coeff& c) const;

  int p_ = 0;
  std::vector<GeneratorSpec> gens_;
  std::vector<Polynomial> squares_;  // indexed like gens_, zero for even generators
  std::unordered_map<std::string, std::size_t> index_;
  int top_ = 0;
};

namespace detail {
// Shared canonical rendering: terms in descending monomial order, factors in
// generator order, "name^e" for e > 1, joined by " + " / " - ".
std::string render_terms(const std::map<std::vector<int>, Coeff>& terms,
                         const std::vector<std::string>& names, int characteristic);
}  // namespace detail

}  // namespace excoh
