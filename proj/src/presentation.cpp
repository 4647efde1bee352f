#include "excoh/presentation.hpp"

#include <stdexcept>

#include "excoh/detail/expr.hpp"

namespace excoh {

FreePolyRing::FreePolyRing(int characteristic, std::vector<std::string> names,
                           std::vector<int> degrees)
    : p_(characteristic), names_(std::move(names)), degrees_(std::move(degrees)) {
  if (names_.size() != degrees_.size())
    throw std::invalid_argument("FreePolyRing: names and degrees differ in length");
}

std::optional<std::size_t> FreePolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Coeff FreePolyRing::reduce(const Coeff& c) const {
  if (p_ == 0) return c;
  Coeff r = c % p_;
  if (r < 0) r += p_;
  return r;
}

FreePolyRing::Element FreePolyRing::integer(long long v) const {
  Element e;
  Coeff c = reduce(v);
  if (c != 0) e.emplace(std::vector<int>(names_.size(), 0), c);
  return e;
}

FreePolyRing::Element FreePolyRing::symbol(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw std::invalid_argument("unknown symbol: " + std::string(name));
  std::vector<int> m(names_.size(), 0);
  m[*i] = 1;
  return Element{{m, reduce(1)}};
}

FreePolyRing::Element FreePolyRing::add(const Element& a, const Element& b) const {
  Element out = a;
  for (const auto& [m, c] : b) {
    Coeff& slot = out[m];
    slot = reduce(slot + c);
    if (slot == 0) out.erase(m);
  }
  return out;
}

FreePolyRing::Element FreePolyRing::scale(const Element& a, const Coeff& c) const {
  Element out;
  for (const auto& [m, x] : a) {
    Coeff r = reduce(x * c);
    if (r != 0) out.emplace(m, r);
  }
  return out;
}

FreePolyRing::Element FreePolyRing::sub(const Element& a, const Element& b) const {
  return add(a, scale(b, -1));
}

FreePolyRing::Element FreePolyRing::mul(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      std::vector<int> m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      Coeff& slot = out[m];
      slot = reduce(slot + ca * cb);
      if (slot == 0) out.erase(m);
    }
  return out;
}

std::optional<int> FreePolyRing::degree(const Element& a) const {
  std::optional<int> d;
  for (const auto& [m, c] : a) {
    int e = 0;
    for (std::size_t i = 0; i < m.size(); ++i) e += m[i] * degrees_[i];
    if (d && *d != e) return std::nullopt;
    d = e;
  }
  return d;
}

namespace {
struct RingOps {
  const FreePolyRing& r;
  FreePolyRing::Element zero() { return r.zero(); }
  FreePolyRing::Element integer(long long v) { return r.integer(v); }
  FreePolyRing::Element symbol(std::string_view s) { return r.symbol(s); }
  FreePolyRing::Element add(const FreePolyRing::Element& a, const FreePolyRing::Element& b) {
    return r.add(a, b);
  }
  FreePolyRing::Element sub(const FreePolyRing::Element& a, const FreePolyRing::Element& b) {
    return r.sub(a, b);
  }
  FreePolyRing::Element mul(const FreePolyRing::Element& a, const FreePolyRing::Element& b) {
    return r.mul(a, b);
  }
};
}  // namespace

FreePolyRing::Element FreePolyRing::parse(std::string_view text) const {
  RingOps ops{*this};
  return detail::parse_expression(text, ops);
}

std::string FreePolyRing::render(const Element& a) const {
  return detail::render_terms(a, names_, p_);
}

FreePolyRing::Element FreePolyRing::from_algebra(const Polynomial& a,
                                                 const GradedAlgebra& source) const {
  std::vector<std::size_t> map;
  for (const auto& g : source.generators()) {
    auto i = index_of(g.name);
    if (!i) throw std::invalid_argument("symbol missing from ring: " + g.name);
    map.push_back(*i);
  }
  Element out;
  for (const auto& [m, c] : a.terms) {
    std::vector<int> e(names_.size(), 0);
    for (std::size_t i = 0; i < m.exponents.size(); ++i) e[map[i]] += m.exponents[i];
    out = add(out, Element{{e, reduce(c)}});
  }
  return out;
}

Polynomial FreePolyRing::evaluate(const Element& a, const GradedAlgebra& target,
                                  const std::vector<Polynomial>& images) const {
  if (images.size() != names_.size())
    throw std::invalid_argument("evaluate: one image per symbol required");
  Polynomial out = target.zero();
  for (const auto& [m, c] : a) {
    Polynomial prod = target.constant(c);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int k = 0; k < m[i]; ++k) prod = target.multiply(prod, images[i]);
    out = target.add(out, prod);
  }
  return out;
}

FreePolyRing RingPresentation::ring() const {
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (const auto& g : generators) {
    names.push_back(g.name);
    degrees.push_back(g.degree);
  }
  return FreePolyRing(coefficient, names, degrees);
}

nlohmann::ordered_json dims_to_json(const GradedDims& d) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (auto [deg, n] : d.counts()) j[std::to_string(deg)] = n;
  return j;
}

nlohmann::ordered_json RingPresentation::to_json() const {
  nlohmann::ordered_json j;
  j["group"] = group;
  j["coefficient"] = coefficient;
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const auto& g : generators)
    gens.push_back({{"name", g.name}, {"degree", g.degree}, {"order", g.order}});
  j["generators"] = gens;
  j["relations"] = relations;
  j["graded_dims"] = dims_to_json(graded_dims);
  j["simple_system"] = simple_system;
  return j;
}

std::string RingPresentation::to_text() const {
  std::vector<std::string> poly_gens;
  for (const auto& g : generators) {
    bool simple = false;
    for (const auto& s : simple_system) simple |= s == g.name;
    if (!simple) poly_gens.push_back(g.name);
  }
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s;
  };
  std::string ring = coefficient == 0 ? "Z" : "F_" + std::to_string(coefficient);
  std::string out;
  if (poly_gens.empty() && simple_system.empty()) {
    out = augmentation_ideal ? "0" : ring;
  } else {
    if (!poly_gens.empty() || simple_system.empty()) {
      out = ring + "[" + join(poly_gens) + "]";
      if (augmentation_ideal) out += "^+";
      if (!relations.empty()) {
        std::string rels;
        for (std::size_t i = 0; i < relations.size(); ++i) rels += (i ? ", " : "") + relations[i];
        out += "/<" + rels + ">";
      }
    }
    if (!simple_system.empty()) {
      if (!out.empty()) out += " (x) ";
      out += "Delta(" + join(simple_system) + ")";
    }
  }
  return out;
}

}  // namespace excoh
