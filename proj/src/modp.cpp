#include "excoh/modp.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "excoh/error.hpp"

namespace excoh {

ModPModel::ModPModel(LieGroupData group, int p, DegreePartition partition, KoszulComplex complex,
                     KoszulComplex core)
    : group_(std::move(group)),
      p_(p),
      partition_(std::move(partition)),
      complex_(std::move(complex)),
      core_(std::move(core)) {}

namespace {

std::string render_xbar(const XbarMonomial& m) {
  std::string s;
  for (auto [t, e] : m) {
    if (!s.empty()) s += "*";
    s += ModPModel::xbar_name(t);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

void check_model(const ModPModel& m) {
  const auto fail = [&](const std::string& inv, std::optional<int> degree = std::nullopt) {
    throw InvariantViolation("modp", "build_model", inv,
                             m.group().name + ", p=" + std::to_string(m.prime()), degree);
  };
  const GradedAlgebra& A = m.algebra();
  std::uint64_t expected = 1ULL << m.partition().full.size();
  for (int t : m.partition().d1) expected *= static_cast<std::uint64_t>(m.group().special_class(t).cup_length);
  if (A.dimension() != expected) fail("total dimension 2^|D| * prod r_t");
  GradedDims P = A.poincare();
  if (P.top_degree() != m.group().dim || P[m.group().dim] != 1)
    fail("top degree is dim G with dimension 1");
  std::int64_t euler = 0;
  for (auto [d, n] : P.counts()) {
    if (P[m.group().dim - d] != n) fail("Poincare duality about dim G / 2", d);
    euler += (d % 2 == 0) ? n : -n;
  }
  if (euler != 0) fail("Euler characteristic 0");
}

}  // namespace

ModPModel build_model(const LieGroupData& g, int p) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  if (g.family == Family::Spin)
    throw std::invalid_argument(
        "mod-p model for Spin(n) is not supported (cup lengths rest on an interpreted table)");
  DegreePartition part = degree_partition(g, p);
  std::map<int, XbarMonomial> squares;
  if (is_exceptional(g.family)) squares = zeta_square_table(g, p);

  std::vector<GeneratorSpec> xbars;
  for (int t : part.d1)
    xbars.push_back(GeneratorSpec::even(ModPModel::xbar_name(t), t, g.special_class(t).cup_length));
  GradedAlgebra base(p, xbars);

  auto square_of = [&](int index) {
    auto it = squares.find(index);
    return it == squares.end() ? std::string() : render_xbar(it->second);
  };

  KoszulSpec core_spec{base, {}, {}, {}, {}, {}};
  KoszulSpec full_spec{base, {}, {}, {}, {}, {}};
  for (int t : part.d1) {
    for (KoszulSpec* s : {&core_spec, &full_spec}) {
      s->z.push_back(base.generator(ModPModel::xbar_name(t)));
      s->theta_degrees.push_back(t - 1);
      s->theta_names.push_back(ModPModel::zeta_name(t - 1));
      s->squares.push_back(square_of(t - 1));
      s->labels.push_back(t);
    }
  }
  for (int m : part.d2) {
    full_spec.z.push_back(base.zero());
    full_spec.theta_degrees.push_back(m - 1);
    full_spec.theta_names.push_back(ModPModel::zeta_name(m - 1));
    full_spec.squares.push_back(square_of(m - 1));
    full_spec.labels.push_back(m);
  }
  ModPModel model(g, p, part, KoszulComplex(std::move(full_spec)), KoszulComplex(std::move(core_spec)));
  check_model(model);
  return model;
}

Polynomial bockstein_apply(const ModPModel& m, const Polynomial& a) {
  return m.complex().delta(a);
}

BocksteinDims bockstein_dims(const ModPModel& m, Exec exec) {
  DeltaRanks r = delta_ranks(m.complex(), exec);
  BocksteinDims out;
  for (std::size_t d = 0; d < r.dims.size(); ++d) {
    out.cohomology.add(static_cast<int>(d), r.dims[d] - r.ranks[d] - (d > 0 ? r.ranks[d - 1] : 0));
    if (d > 0) out.image.add(static_cast<int>(d), r.ranks[d - 1]);
  }
  return out;
}

GradedDims bockstein_cohomology_dims(const ModPModel& m, Exec exec) {
  return bockstein_dims(m, exec).cohomology;
}

GradedDims im_delta_dims(const ModPModel& m, Exec exec) { return bockstein_dims(m, exec).image; }

const BocksteinDims& cached_bockstein_dims(const LieGroupData& g, int p) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, std::shared_ptr<const BocksteinDims>> cache;
  const auto key = std::make_pair(g.name, p);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto value = std::make_shared<const BocksteinDims>(bockstein_dims(build_model(g, p)));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, value);
  return *it->second;
}

RingPresentation im_delta_presentation(const ModPModel& m) {
  RingPresentation pres;
  pres.group = m.group().name;
  pres.coefficient = m.prime();
  pres.augmentation_ideal = true;
  if (m.partition().d1.empty()) return pres;
  pres = image_presentation(m.core());
  pres.group = m.group().name;
  GradedDims delta_factor;
  delta_factor.add(0, 1);
  for (int d : m.partition().d2) {
    std::string name = ModPModel::zeta_name(d - 1);
    pres.generators.push_back({name, d - 1, m.prime()});
    pres.simple_system.push_back(name);
    GradedDims f;
    f.add(0, 1);
    f.add(d - 1, 1);
    delta_factor = delta_factor.tensor(f);
  }
  pres.graded_dims = pres.graded_dims.tensor(delta_factor);
  return pres;
}

}  // namespace excoh
