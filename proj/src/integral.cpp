#include "excoh/integral.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "excoh/error.hpp"

namespace excoh {

std::string rho_name(int degree) { return "rho" + std::to_string(degree); }

namespace {

std::vector<int> c_labels(const std::string& name) {
  std::vector<int> out;
  std::stringstream ss(name.substr(1));
  std::string part;
  while (std::getline(ss, part, '_')) out.push_back(std::stoi(part));
  return out;
}

std::string c_symbol(const std::vector<int>& I) {
  if (I.size() == 1) return ModPModel::xbar_name(I[0]);
  std::string s = "C";
  for (std::size_t i = 0; i < I.size(); ++i) s += (i ? "_" : "") + std::to_string(I[i]);
  return s;
}

void require_assemblable(const LieGroupData& g) {
  if (g.family == Family::Spin)
    throw std::invalid_argument("integral assembly for Spin(n) is not supported");
}

}  // namespace

RingPresentation chow_ring(const LieGroupData& g) {
  RingPresentation pres;
  pres.group = g.name;
  pres.coefficient = 0;
  for (const auto& s : g.special_classes)
    pres.generators.push_back({ModPModel::xbar_name(s.degree), s.degree, s.torsion_index});
  FreePolyRing ring = pres.ring();
  for (const auto& s : g.special_classes)
    pres.relations.push_back(
        ring.render(ring.scale(ring.symbol(ModPModel::xbar_name(s.degree)), s.torsion_index)));
  for (const auto& s : g.special_classes) {
    FreePolyRing::Element e = ring.integer(1);
    for (int i = 0; i < s.cup_length; ++i) e = ring.mul(e, ring.symbol(ModPModel::xbar_name(s.degree)));
    pres.relations.push_back(ring.render(e));
  }
  // Monomials mixing different primes vanish; within one prime they are a basis of Z/p's.
  pres.graded_dims.add(0, 1);
  for (int p : {2, 3, 5}) {
    std::vector<GeneratorSpec> gens;
    for (const auto& s : g.special_classes)
      if (s.torsion_index == p)
        gens.push_back(GeneratorSpec::even(ModPModel::xbar_name(s.degree), s.degree, s.cup_length));
    if (gens.empty()) continue;
    GradedDims d = GradedAlgebra(p, gens).poincare();
    for (auto [deg, n] : d.counts())
      if (deg > 0) pres.graded_dims.add(deg, n);
  }
  return pres;
}

FreePart free_part(const LieGroupData& g) {
  std::vector<GeneratorSpec> gens;
  for (int l : g.degrees_q) {
    std::string name = rho_name(2 * l - 1);
    for (const auto& existing : gens)
      if (existing.name == name) name += "b";
    gens.push_back(GeneratorSpec::odd(name, 2 * l - 1));
  }
  FreePart fp{GradedAlgebra(0, gens), {}};
  if (is_exceptional(g.family)) {
    DegreePartition part = degree_partition(g, 2);
    auto squares = zeta_square_table(g, 2);
    for (int m : part.d2) {
      auto it = squares.find(m - 1);
      if (it == squares.end()) continue;
      std::string s;
      for (auto [t, e] : it->second) {
        if (!s.empty()) s += "*";
        s += ModPModel::xbar_name(t) + (e > 1 ? "^" + std::to_string(e) : "");
      }
      fp.squares.push_back({rho_name(m - 1), s});
    }
  }
  return fp;
}

RingPresentation FreePart::presentation(const std::string& group) const {
  RingPresentation pres;
  pres.group = group;
  pres.coefficient = 0;
  for (const auto& g : algebra.generators()) {
    pres.generators.push_back({g.name, g.degree, 0});
    pres.simple_system.push_back(g.name);
  }
  pres.graded_dims = algebra.poincare();
  return pres;
}

RingPresentation torsion_presentation(const LieGroupData& g, int p) {
  ModPModel m = build_model(g, p);
  RingPresentation pres;
  pres.coefficient = p;
  pres.augmentation_ideal = true;
  if (!m.partition().d1.empty()) {
    pres = image_presentation(m.core());
    GradedDims delta_factor;
    delta_factor.add(0, 1);
    for (int d : m.partition().d2) {
      pres.generators.push_back({rho_name(d - 1), d - 1, 0});
      pres.simple_system.push_back(rho_name(d - 1));
      GradedDims f;
      f.add(0, 1);
      f.add(d - 1, 1);
      delta_factor = delta_factor.tensor(f);
    }
    pres.graded_dims = pres.graded_dims.tensor(delta_factor);
  }
  pres.group = g.name;
  return pres;
}

GradedDims torsion_dims(const LieGroupData& g, int p) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  return cached_bockstein_dims(g, p).image;
}

ActionRelation action_relation(const LieGroupData& g, int p, int t, const std::vector<int>& K) {
  const std::vector<int> D1 = d1(g, p);
  if (std::find(D1.begin(), D1.end(), t) == D1.end())
    throw std::invalid_argument("degree " + std::to_string(t) + " is not p-special for " + g.name);
  std::vector<int> k = K;
  std::sort(k.begin(), k.end());
  if (k.empty() || std::adjacent_find(k.begin(), k.end()) != k.end())
    throw std::invalid_argument("K must be a nonempty set");
  for (int s : k)
    if (std::find(D1.begin(), D1.end(), s) == D1.end())
      throw std::invalid_argument("K must lie in D_1");

  const int r = g.special_class(t).cup_length;
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (int s : D1) {
    names.push_back(ModPModel::xbar_name(s));
    degrees.push_back(s);
  }
  for (std::size_t mask = 1; mask < (1U << D1.size()); ++mask) {
    std::vector<int> I;
    int deg = 1;
    for (std::size_t i = 0; i < D1.size(); ++i)
      if (mask & (1U << i)) {
        I.push_back(D1[i]);
        deg += D1[i] - 1;
      }
    if (I.size() >= 2) {
      names.push_back(c_symbol(I));
      degrees.push_back(deg);
    }
  }
  FreePolyRing ring(p, names, degrees);
  auto C = [&](const std::vector<int>& I) {
    return I.empty() ? ring.zero() : ring.symbol(c_symbol(I));
  };
  FreePolyRing::Element xr = ring.integer(1);
  for (int i = 0; i + 1 < r; ++i) xr = ring.mul(xr, ring.symbol(ModPModel::xbar_name(t)));

  ActionRelation rel;
  rel.t = t;
  rel.K = k;
  rel.rho_degree = t * r - 1;
  rel.lhs = rho_name(rel.rho_degree) + "*" + c_symbol(k);
  FreePolyRing::Element rhs;
  if (std::find(k.begin(), k.end(), t) == k.end()) {
    std::vector<int> kt = k;
    kt.push_back(t);
    std::sort(kt.begin(), kt.end());
    rhs = ring.mul(xr, C(kt));
  } else if (p != 2) {
    rhs = ring.zero();
  } else {
    std::vector<int> rest;
    for (int s : k)
      if (s != t) rest.push_back(s);
    auto squares = zeta_square_table(g, 2);
    auto it = squares.find(t - 1);
    if (it != squares.end()) {
      FreePolyRing::Element b = ring.integer(1);
      for (auto [deg, e] : it->second)
        for (int i = 0; i < e; ++i) b = ring.mul(b, ring.symbol(ModPModel::xbar_name(deg)));
      rhs = ring.mul(ring.mul(xr, b), C(rest));
    }
  }
  rel.rhs = ring.render(rhs);
  return rel;
}

std::vector<ActionRelation> action_relations(const LieGroupData& g, int p) {
  const std::vector<int> D1 = d1(g, p);
  std::vector<ActionRelation> out;
  for (int t : D1)
    for (std::size_t mask = 1; mask < (1U << D1.size()); ++mask) {
      std::vector<int> K;
      for (std::size_t i = 0; i < D1.size(); ++i)
        if (mask & (1U << i)) K.push_back(D1[i]);
      out.push_back(action_relation(g, p, t, K));
    }
  return out;
}

CohomologyGroupTable assemble(const LieGroupData& g) {
  require_assemblable(g);
  CohomologyGroupTable table;
  table.group = g.name;
  table.dim = g.dim;
  table.rows.resize(static_cast<std::size_t>(g.dim) + 1);
  GradedDims free = free_part(g).algebra.poincare();
  for (auto [d, n] : free.counts()) {
    if (d > g.dim) throw InvariantViolation("integral", "assemble", "free part below dim G", g.name, d);
    table.rows[static_cast<std::size_t>(d)].free = n;
  }
  for (int p : {2, 3, 5}) {
    const GradedDims tor = torsion_dims(g, p);
    for (auto [d, n] : tor.counts()) {
      if (d > g.dim) throw InvariantViolation("integral", "assemble", "torsion below dim G", g.name, d);
      table.rows[static_cast<std::size_t>(d)].torsion[p] = n;
    }
  }
  const auto& bottom = table.rows.front();
  const auto& top = table.rows.back();
  if (bottom.free != 1 || !bottom.torsion.empty())
    throw InvariantViolation("integral", "assemble", "H^0(G) = Z", g.name, 0);
  if (top.free != 1 || !top.torsion.empty())
    throw InvariantViolation("integral", "assemble", "H^dim(G) = Z", g.name, g.dim);
  return table;
}

nlohmann::ordered_json CohomologyGroupTable::to_json() const {
  nlohmann::ordered_json j;
  j["group"] = group;
  j["dim"] = dim;
  nlohmann::ordered_json degrees = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json e = nlohmann::ordered_json::object();
    if (row.free) e["free"] = row.free;
    for (auto [p, n] : row.torsion)
      if (n) e["tor" + std::to_string(p)] = n;
    degrees.push_back(e);
  }
  j["degrees"] = degrees;
  return j;
}

std::string CohomologyGroupTable::to_text() const {
  std::string out = "H^*(" + group + "), dim " + std::to_string(dim) + "\n";
  for (std::size_t d = 0; d < rows.size(); ++d) {
    const auto& row = rows[d];
    std::vector<std::string> parts;
    if (row.free) parts.push_back(row.free == 1 ? "Z" : "Z^" + std::to_string(row.free));
    for (auto [p, n] : row.torsion) {
      if (!n) continue;
      std::string zp = "Z/" + std::to_string(p);
      parts.push_back(n == 1 ? zp : "(" + zp + ")^" + std::to_string(n));
    }
    if (parts.empty()) continue;
    out += std::to_string(d) + ": ";
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
    out += "\n";
  }
  return out;
}

std::vector<UctFailure> uct_check(const LieGroupData& g, int p) {
  ModPModel m = build_model(g, p);
  GradedDims P = m.algebra().poincare();
  CohomologyGroupTable t = assemble(g);
  auto mp = [&](int d) -> std::int64_t {
    if (d < 0 || d > g.dim) return 0;
    auto it = t.rows[static_cast<std::size_t>(d)].torsion.find(p);
    return it == t.rows[static_cast<std::size_t>(d)].torsion.end() ? 0 : it->second;
  };
  std::vector<UctFailure> failures;
  for (int d = 0; d <= g.dim; ++d) {
    UctFailure f{d, P[d], t.rows[static_cast<std::size_t>(d)].free, mp(d), mp(d + 1)};
    if (f.lhs != f.free + f.m_d + f.m_d1) failures.push_back(f);
  }
  return failures;
}

TorsionEmbedding torsion_embedding(const ModPModel& m, const RingPresentation& torsion) {
  TorsionEmbedding emb{torsion.ring(), {}};
  const GradedAlgebra& A = m.algebra();
  for (const auto& g : torsion.generators) {
    if (g.name.rfind("rho", 0) == 0) {
      emb.images.push_back(A.generator(ModPModel::zeta_name(std::stoi(g.name.substr(3)))));
    } else if (g.name[0] == 'C') {
      Polynomial theta = A.one();
      for (int t : c_labels(g.name))
        theta = A.multiply(theta, A.generator(ModPModel::zeta_name(t - 1)));
      emb.images.push_back(bockstein_apply(m, theta));
    } else {
      emb.images.push_back(A.generator(g.name));
    }
  }
  return emb;
}

EmbeddingReport verify_presentation_embedding(const LieGroupData& g, int p) {
  ModPModel m = build_model(g, p);
  if (m.partition().d1.empty())
    throw std::invalid_argument("embedding check requires p-special classes");
  const GradedAlgebra& A = m.algebra();
  RingPresentation pres = torsion_presentation(g, p);
  TorsionEmbedding emb = torsion_embedding(m, pres);
  EmbeddingReport report;
  for (const auto& rel : pres.relations) {
    Polynomial v = emb.ring.evaluate(emb.ring.parse(rel), A, emb.images);
    ++report.relations_checked;
    if (!v.is_zero()) report.failures.push_back(rel + " evaluates to " + A.render(v));
  }
  for (const auto& rel : action_relations(g, p)) {
    const int r = g.special_class(rel.t).cup_length;
    // rho_{tr-1} reduces to -xbar_t^{r-1} zeta_{t-1} up to a unit.
    Polynomial rho = A.negate(A.multiply(A.power(A.generator(ModPModel::xbar_name(rel.t)), r - 1),
                                         A.generator(ModPModel::zeta_name(rel.t - 1))));
    Polynomial ck = emb.ring.evaluate(emb.ring.parse(c_symbol(rel.K)), A, emb.images);
    Polynomial lhs = A.multiply(rho, ck);
    Polynomial rhs = emb.ring.evaluate(emb.ring.parse(rel.rhs), A, emb.images);
    ++report.action_relations_checked;
    bool ok = lhs.is_zero() && rhs.is_zero();
    for (int c = 1; c < p && !ok; ++c) ok = !lhs.is_zero() && lhs == A.scale(rhs, c);
    if (!ok)
      report.failures.push_back(rel.text() + ": lhs " + A.render(lhs) + ", rhs " + A.render(rhs));
  }
  report.dims_match = pres.graded_dims == torsion_dims(g, p);
  if (!report.dims_match)
    report.failures.push_back("presentation dims " + pres.graded_dims.to_string() +
                              " differ from Im delta_p dims " + torsion_dims(g, p).to_string());
  return report;
}

}  // namespace excoh
