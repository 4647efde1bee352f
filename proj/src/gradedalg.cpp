#include "excoh/gradedalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "excoh/detail/expr.hpp"

namespace excoh {

// ---- GradedDims ----

GradedDims::GradedDims(const std::map<int, std::int64_t>& counts) {
  for (auto [d, n] : counts) add(d, n);
}

std::int64_t GradedDims::operator[](int degree) const {
  auto it = counts_.find(degree);
  return it == counts_.end() ? 0 : it->second;
}

void GradedDims::add(int degree, std::int64_t n) {
  if (n == 0) return;
  auto& slot = counts_[degree];
  slot += n;
  if (slot < 0) throw std::logic_error("GradedDims: negative count");
  if (slot == 0) counts_.erase(degree);
}

std::int64_t GradedDims::total() const {
  std::int64_t s = 0;
  for (auto [d, n] : counts_) s += n;
  return s;
}

int GradedDims::top_degree() const { return counts_.empty() ? -1 : counts_.rbegin()->first; }

GradedDims GradedDims::tensor(const GradedDims& other) const {
  GradedDims out;
  for (auto [a, n] : counts_)
    for (auto [b, m] : other.counts_) out.add(a + b, n * m);
  return out;
}

GradedDims GradedDims::shifted(int by) const {
  GradedDims out;
  for (auto [d, n] : counts_) out.add(d + by, n);
  return out;
}

std::string GradedDims::to_string() const {
  std::string s = "{";
  bool first = true;
  for (auto [d, n] : counts_) {
    if (!first) s += ", ";
    s += std::to_string(d) + ":" + std::to_string(n);
    first = false;
  }
  return s + "}";
}

// ---- rendering ----

namespace detail {

std::string render_terms(const std::map<std::vector<int>, Coeff>& terms,
                         const std::vector<std::string>& names, int characteristic) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [exps, c] = *it;
    bool neg = characteristic == 0 && c < 0;
    Coeff a = neg ? Coeff(-c) : c;
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    std::string mono;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (exps[i] > 1) mono += "^" + std::to_string(exps[i]);
    }
    if (mono.empty()) out += a.str();
    else if (a == 1) out += mono;
    else out += a.str() + "*" + mono;
    first = false;
  }
  return out;
}

}  // namespace detail

// ---- GradedAlgebra ----

GradedAlgebra::GradedAlgebra(int characteristic, std::vector<GeneratorSpec> generators)
    : p_(characteristic) {
  if (p_ < 0 || p_ == 1) throw std::invalid_argument("characteristic must be 0 or a prime");
  for (int d = 2; d * d <= p_; ++d)
    if (p_ % d == 0) throw std::invalid_argument("characteristic must be 0 or a prime");
  std::vector<std::size_t> order(generators.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return generators[a].degree < generators[b].degree;
  });
  for (std::size_t i : order) gens_.push_back(generators[i]);

  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const auto& g = gens_[i];
    if (g.name.empty()) throw std::invalid_argument("generator with empty name");
    if (!index_.emplace(g.name, i).second)
      throw std::invalid_argument("duplicate generator name: " + g.name);
    if (g.degree <= 0) throw std::invalid_argument("generator degree must be positive: " + g.name);
    if (g.is_odd() != (g.degree % 2 == 1))
      throw std::invalid_argument("generator parity does not match its degree: " + g.name);
    if (!g.is_odd() && g.truncation() < 1)
      throw std::invalid_argument("truncation must be >= 1: " + g.name);
    if (g.truncation() > 60000) throw std::invalid_argument("truncation too large: " + g.name);
    top_ += (g.truncation() - 1) * g.degree;
  }

  squares_.assign(gens_.size(), zero());
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (!gens_[i].is_odd()) continue;
    const std::string& sq = std::get<Odd>(gens_[i].kind).square;
    if (sq.empty()) continue;
    Polynomial s = parse(sq);
    if (s.is_zero()) continue;
    if (p_ != 2)
      throw std::invalid_argument("nonzero square of odd generator " + gens_[i].name +
                                  " requires characteristic 2");
    for (const auto& [m, c] : s.terms)
      for (std::size_t j = 0; j < gens_.size(); ++j)
        if (gens_[j].is_odd() && m.exponents[j] != 0)
          throw std::invalid_argument("square of " + gens_[i].name +
                                      " must lie in the even generators");
    auto d = degree(s);
    if (!d || *d != 2 * gens_[i].degree)
      throw std::invalid_argument("square of " + gens_[i].name + " must be homogeneous of degree " +
                                  std::to_string(2 * gens_[i].degree));
    squares_[i] = s;
  }
}

std::optional<std::size_t> GradedAlgebra::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GradedAlgebra::require_index(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw std::invalid_argument("unknown generator: " + std::string(name));
  return *i;
}

std::uint64_t GradedAlgebra::dimension() const {
  std::uint64_t d = 1;
  for (const auto& g : gens_) d *= static_cast<std::uint64_t>(g.truncation());
  return d;
}

int GradedAlgebra::degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < gens_.size(); ++i) d += m.exponents[i] * gens_[i].degree;
  return d;
}

std::optional<int> GradedAlgebra::degree(const Polynomial& a) const {
  std::optional<int> d;
  for (const auto& [m, c] : a.terms) {
    int e = degree(m);
    if (d && *d != e) return std::nullopt;
    d = e;
  }
  return d;
}

bool GradedAlgebra::admissible(const Monomial& m) const {
  if (m.exponents.size() != gens_.size()) return false;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (m.exponents[i] >= gens_[i].truncation()) return false;
  return true;
}

std::vector<Monomial> GradedAlgebra::basis_in_degree(int d) const {
  std::vector<Monomial> out;
  if (d < 0 || d > top_) return out;
  const std::size_t n = gens_.size();
  // suffix_max[i]: largest degree reachable using generators i..n-1
  std::vector<int> suffix_max(n + 1, 0);
  for (std::size_t i = n; i-- > 0;)
    suffix_max[i] = suffix_max[i + 1] + (gens_[i].truncation() - 1) * gens_[i].degree;
  Monomial cur = unit_monomial();
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == n) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    if (remaining > suffix_max[i]) return;
    for (int e = 0; e < gens_[i].truncation() && e * gens_[i].degree <= remaining; ++e) {
      cur.exponents[i] = static_cast<std::uint16_t>(e);
      self(self, i + 1, remaining - e * gens_[i].degree);
    }
    cur.exponents[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

std::vector<std::vector<Monomial>> GradedAlgebra::bases() const {
  std::vector<std::vector<Monomial>> out(static_cast<std::size_t>(top_) + 1);
  Monomial cur = unit_monomial();
  const std::size_t n = gens_.size();
  while (true) {
    out[static_cast<std::size_t>(degree(cur))].push_back(cur);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (cur.exponents[i] + 1 < gens_[i].truncation()) {
        ++cur.exponents[i];
        break;
      }
      cur.exponents[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

GradedDims GradedAlgebra::poincare() const {
  std::vector<std::int64_t> poly{1};
  for (const auto& g : gens_) {
    std::vector<std::int64_t> next(poly.size() + (g.truncation() - 1) * g.degree, 0);
    for (std::size_t d = 0; d < poly.size(); ++d)
      for (int e = 0; e < g.truncation(); ++e) next[d + e * g.degree] += poly[d];
    poly = std::move(next);
  }
  GradedDims out;
  for (std::size_t d = 0; d < poly.size(); ++d) out.add(static_cast<int>(d), poly[d]);
  return out;
}

Coeff GradedAlgebra::reduce(const Coeff& c) const {
  if (p_ == 0) return c;
  Coeff r = c % p_;
  if (r < 0) r += p_;
  return r;
}

Polynomial GradedAlgebra::one() const { return constant(1); }

Polynomial GradedAlgebra::constant(const Coeff& c) const { return monomial(unit_monomial(), c); }

Polynomial GradedAlgebra::monomial(const Monomial& m, const Coeff& c) const {
  Polynomial out = zero();
  if (admissible(m)) {
    Coeff r = reduce(c);
    if (r != 0) out.terms.emplace(m, r);
    return out;
  }
  return normalize(Polynomial{p_, {{m, c}}});
}

Polynomial GradedAlgebra::generator(std::string_view name) const {
  Monomial m = unit_monomial();
  m.exponents[require_index(name)] = 1;
  return monomial(m);
}

Polynomial GradedAlgebra::normalize(const Polynomial& a) const {
  Polynomial out = zero();
  for (const auto& [m, c] : a.terms) {
    if (m.exponents.size() != gens_.size())
      throw std::invalid_argument("monomial does not match the algebra");
    Coeff r = reduce(c);
    if (r == 0) continue;
    if (admissible(m)) {
      Coeff& slot = out.terms[m];
      slot = reduce(slot + r);
      if (slot == 0) out.terms.erase(m);
      continue;
    }
    // Rebuild as an ordered product of generator powers.
    Polynomial prod = constant(r);
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (m.exponents[i] == 0) continue;
      Monomial g = unit_monomial();
      g.exponents[i] = 1;
      prod = multiply(prod, power(Polynomial{p_, {{g, 1}}}, m.exponents[i]));
    }
    out = add(out, prod);
  }
  return out;
}

Polynomial GradedAlgebra::add(const Polynomial& a, const Polynomial& b) const {
  Polynomial out = a;
  out.characteristic = p_;
  for (const auto& [m, c] : b.terms) {
    Coeff& slot = out.terms[m];
    slot = reduce(slot + c);
    if (slot == 0) out.terms.erase(m);
  }
  return out;
}

Polynomial GradedAlgebra::negate(const Polynomial& a) const { return scale(a, -1); }

Polynomial GradedAlgebra::sub(const Polynomial& a, const Polynomial& b) const {
  return add(a, negate(b));
}

Polynomial GradedAlgebra::scale(const Polynomial& a, const Coeff& c) const {
  Polynomial out = zero();
  for (const auto& [m, x] : a.terms) {
    Coeff r = reduce(x * c);
    if (r != 0) out.terms.emplace(m, r);
  }
  return out;
}

void GradedAlgebra::accumulate(Polynomial& acc, const Monomial& a, const Monomial& b,
                               const Coeff& c) const {
  const std::size_t n = gens_.size();
  Monomial m = unit_monomial();
  bool negative = false;
  std::vector<std::size_t> overlaps;
  std::size_t odd_in_a_after = 0;  // odd generators of a at positions > current, scanned backwards
  // Sign: each pair (odd i in a, odd j in b) with i > j is one transposition.
  if (p_ != 2) {
    for (std::size_t k = n; k-- > 0;) {
      if (!gens_[k].is_odd()) continue;
      if (b.exponents[k]) negative ^= (odd_in_a_after & 1U) != 0;
      if (a.exponents[k]) ++odd_in_a_after;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    int e = a.exponents[k] + b.exponents[k];
    if (gens_[k].is_odd()) {
      if (e == 2) {
        if (squares_[k].is_zero()) return;
        overlaps.push_back(k);
        e = 0;
      }
    } else if (e >= gens_[k].truncation()) {
      return;
    }
    m.exponents[k] = static_cast<std::uint16_t>(e);
  }
  Coeff coeff = negative ? Coeff(-c) : c;
  if (overlaps.empty()) {
    Coeff& slot = acc.terms[m];
    slot = reduce(slot + coeff);
    if (slot == 0) acc.terms.erase(m);
    return;
  }
  Polynomial cur = Polynomial{p_, {{m, reduce(coeff)}}};
  for (std::size_t k : overlaps) cur = multiply(cur, squares_[k]);
  for (const auto& [mm, cc] : cur.terms) {
    Coeff& slot = acc.terms[mm];
    slot = reduce(slot + cc);
    if (slot == 0) acc.terms.erase(mm);
  }
}

Polynomial GradedAlgebra::multiply(const Monomial& a, const Monomial& b) const {
  Polynomial out = zero();
  accumulate(out, a, b, 1);
  return out;
}

Polynomial GradedAlgebra::multiply(const Polynomial& a, const Polynomial& b) const {
  Polynomial out = zero();
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) accumulate(out, ma, mb, ca * cb);
  return out;
}

Polynomial GradedAlgebra::power(const Polynomial& a, int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Polynomial out = one();
  for (int i = 0; i < e; ++i) out = multiply(out, a);
  return out;
}

std::string GradedAlgebra::render(const Polynomial& a) const {
  std::map<std::vector<int>, Coeff> terms;
  for (const auto& [m, c] : a.terms) terms.emplace(std::vector<int>(m.exponents.begin(), m.exponents.end()), c);
  std::vector<std::string> names;
  for (const auto& g : gens_) names.push_back(g.name);
  return detail::render_terms(terms, names, p_);
}

namespace {
struct AlgebraOps {
  const GradedAlgebra& alg;
  Polynomial zero() { return alg.zero(); }
  Polynomial integer(long long v) { return alg.constant(v); }
  Polynomial symbol(std::string_view s) { return alg.generator(s); }
  Polynomial add(const Polynomial& a, const Polynomial& b) { return alg.add(a, b); }
  Polynomial sub(const Polynomial& a, const Polynomial& b) { return alg.sub(a, b); }
  Polynomial mul(const Polynomial& a, const Polynomial& b) { return alg.multiply(a, b); }
};
}  // namespace

Polynomial GradedAlgebra::parse(std::string_view text) const {
  AlgebraOps ops{*this};
  return detail::parse_expression(text, ops);
}

Polynomial GradedAlgebra::embed(const Polynomial& a, const GradedAlgebra& source) const {
  std::vector<std::size_t> map;
  for (const auto& g : source.generators()) map.push_back(require_index(g.name));
  Polynomial out = zero();
  for (const auto& [m, c] : a.terms) {
    Polynomial prod = constant(c);
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      if (m.exponents[i] == 0) continue;
      Monomial g = unit_monomial();
      g.exponents[map[i]] = 1;
      prod = multiply(prod, power(Polynomial{p_, {{g, 1}}}, m.exponents[i]));
    }
    out = add(out, prod);
  }
  return out;
}

}  // namespace excoh
