#include "excoh/koszul.hpp"

#include <algorithm>
#include <stdexcept>

#include "excoh/error.hpp"

namespace excoh {

namespace {

long long to_ll(const Coeff& c) { return c.convert_to<long long>(); }

MultiIndex without(const MultiIndex& I, std::size_t s) {
  MultiIndex out = I;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(s));
  return out;
}

MultiIndex intersection(const MultiIndex& A, const MultiIndex& B) {
  MultiIndex out;
  std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(out));
  return out;
}

MultiIndex symmetric_difference(const MultiIndex& A, const MultiIndex& B) {
  MultiIndex out;
  std::set_symmetric_difference(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(out));
  return out;
}

void require_shape(const KoszulComplex& c, const char* op) {
  if (!c.truncated_shape())
    throw std::invalid_argument(std::string(op) +
                                ": complex is not K(A; y_1..y_r) over a truncated polynomial algebra");
}

}  // namespace

KoszulComplex::KoszulComplex(KoszulSpec spec) : base_(std::move(spec.base)) {
  for (const auto& g : base_.generators())
    if (g.is_odd()) throw std::invalid_argument("Koszul base must have even generators only");
  const std::size_t k = spec.z.size();
  if (!spec.theta_degrees.empty() && spec.theta_degrees.size() != k)
    throw std::invalid_argument("theta_degrees must match z in length");
  if (!spec.theta_names.empty() && spec.theta_names.size() != k)
    throw std::invalid_argument("theta_names must match z in length");
  if (!spec.squares.empty() && spec.squares.size() != k)
    throw std::invalid_argument("squares must match z in length");
  if (!spec.labels.empty() && spec.labels.size() != k)
    throw std::invalid_argument("labels must match z in length");

  std::vector<GeneratorSpec> gens = base_.generators();
  for (std::size_t t = 0; t < k; ++t) {
    Polynomial zt = base_.normalize(spec.z[t]);
    auto d = base_.degree(zt);
    if (!zt.is_zero() && !d) throw std::invalid_argument("z_" + std::to_string(t + 1) + " is not homogeneous");
    int theta_deg = 0;
    if (!spec.theta_degrees.empty()) {
      theta_deg = spec.theta_degrees[t];
      if (d && *d != theta_deg + 1)
        throw std::invalid_argument("theta degree does not match deg z - 1");
    } else {
      if (!d) throw std::invalid_argument("z_" + std::to_string(t + 1) + " is zero; its degree must be given");
      theta_deg = *d - 1;
    }
    if (theta_deg % 2 == 0 || theta_deg < 1)
      throw std::invalid_argument("z_" + std::to_string(t + 1) + " must have even positive degree");
    std::string name = spec.theta_names.empty() ? "t" + std::to_string(t + 1) : spec.theta_names[t];
    std::string square = spec.squares.empty() ? std::string() : spec.squares[t];
    gens.push_back(GeneratorSpec::odd(name, theta_deg, square));
    b_base_.push_back(square.empty() ? base_.zero() : base_.parse(square));
    labels_.push_back(spec.labels.empty() ? static_cast<int>(t + 1) : spec.labels[t]);
    z_.push_back(zt);
  }
  total_ = GradedAlgebra(base_.characteristic(), gens);
  theta_of_pos_.assign(total_.size(), -1);
  for (std::size_t t = 0; t < k; ++t) {
    std::size_t pos = total_.require_index(gens[base_.size() + t].name);
    theta_pos_.push_back(pos);
    theta_of_pos_[pos] = static_cast<std::ptrdiff_t>(t);
    z_[t] = total_.embed(z_[t], base_);
    b_.push_back(total_.square_of(pos));
  }

  const auto bases = total_.bases();
  for (std::size_t d = 0; d < bases.size(); ++d)
    for (const auto& m : bases[d])
      if (!delta(delta(total_.monomial(m))).is_zero())
        throw InvariantViolation("koszul", "build_koszul", "delta o delta = 0",
                                 "fails on " + total_.render(total_.monomial(m)),
                                 static_cast<int>(d));
}

bool KoszulComplex::has_algebra_structure() const {
  return std::any_of(b_.begin(), b_.end(), [](const Polynomial& b) { return !b.is_zero(); });
}

Polynomial KoszulComplex::delta(const Polynomial& a) const {
  Polynomial out = total_.zero();
  const bool signs = total_.characteristic() != 2;
  for (const auto& [m, c] : a.terms) {
    int seen = 0;
    for (std::size_t pos = 0; pos < m.exponents.size(); ++pos) {
      std::ptrdiff_t t = theta_of_pos_[pos];
      if (t < 0 || m.exponents[pos] == 0) continue;
      const Polynomial& zt = z_[static_cast<std::size_t>(t)];
      if (!zt.is_zero()) {
        Monomial rest = m;
        rest.exponents[pos] = 0;
        Coeff coeff = (signs && (seen & 1)) ? Coeff(-c) : c;
        for (const auto& [zm, zc] : zt.terms)
          out = total_.add(out, total_.scale(total_.multiply(zm, rest), coeff * zc));
      }
      ++seen;
    }
  }
  return out;
}

bool KoszulComplex::truncated_shape() const {
  if (base_.size() != num_thetas()) return false;
  for (std::size_t t = 0; t < num_thetas(); ++t) {
    const auto& y = base_.generators()[t];
    if (total_.generators()[theta_pos_[t]].degree != y.degree - 1) return false;
    if (z_[t] != total_.embed(base_.generator(y.name), base_)) return false;
  }
  return true;
}

std::string KoszulComplex::c_name(const MultiIndex& I) const {
  std::string s = "C";
  for (std::size_t i = 0; i < I.size(); ++i) s += (i ? "_" : "") + std::to_string(labels_[I[i]]);
  return s;
}

KoszulComplex build_koszul(KoszulSpec spec) { return KoszulComplex(std::move(spec)); }

KoszulComplex build_koszul(const GradedAlgebra& A) {
  std::vector<Polynomial> z;
  std::vector<int> degs;
  for (const auto& g : A.generators()) {
    z.push_back(A.generator(g.name));
    degs.push_back(g.degree - 1);
  }
  KoszulSpec spec{A, z, degs, {}, {}, {}};
  return KoszulComplex(std::move(spec));
}

KoszulComplex build_koszul(const GradedAlgebra& A, std::vector<Polynomial> z) {
  KoszulSpec spec{A, std::move(z), {}, {}, {}, {}};
  return KoszulComplex(std::move(spec));
}

MatrixFp delta_matrix(const KoszulComplex& c, const std::vector<Monomial>& source,
                      const std::vector<Monomial>& target) {
  const int p = c.total().characteristic();
  if (p == 0) throw std::invalid_argument("delta_matrix requires characteristic p > 0");
  MatrixFp m(static_cast<std::uint32_t>(p), target.size(), source.size());
  for (std::size_t j = 0; j < source.size(); ++j) {
    Polynomial img = c.delta(c.total().monomial(source[j]));
    for (const auto& [mono, coeff] : img.terms) {
      auto it = std::lower_bound(target.begin(), target.end(), mono);
      if (it == target.end() || *it != mono)
        throw InvariantViolation("koszul", "delta_matrix", "delta has degree 1",
                                 "image term outside the target basis");
      m.set(static_cast<std::size_t>(it - target.begin()), j, to_ll(coeff));
    }
  }
  return m;
}

namespace {

DeltaRanks ranks_up_to(const KoszulComplex& c, int up_to, Exec exec) {
  if (c.total().characteristic() == 0)
    throw std::invalid_argument("brute-force cohomology requires characteristic p > 0");
  const auto bases = c.total().bases();
  const int top = static_cast<int>(bases.size()) - 1;
  const int last = up_to < 0 ? top : std::min(up_to, top);
  DeltaRanks out;
  out.dims.resize(bases.size());
  out.ranks.assign(bases.size(), 0);
  for (std::size_t d = 0; d < bases.size(); ++d) out.dims[d] = static_cast<std::int64_t>(bases[d].size());
  // rank of delta^d is needed for d <= last (cohomology at last uses delta^last)
  const int n = std::min(last, top - 1) + 1;
  auto one = [&](int d) {
    const auto& src = bases[static_cast<std::size_t>(d)];
    const auto& dst = bases[static_cast<std::size_t>(d) + 1];
    if (src.empty() || dst.empty()) return;
    out.ranks[static_cast<std::size_t>(d)] =
        static_cast<std::int64_t>(serial::row_reduce(delta_matrix(c, src, dst)).rank);
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int d = 0; d < n; ++d) one(d);
  } else {
    for (int d = 0; d < n; ++d) one(d);
  }
  return out;
}

}  // namespace

DeltaRanks delta_ranks(const KoszulComplex& c, Exec exec) { return ranks_up_to(c, -1, exec); }

GradedDims cohomology_dims_bruteforce(const KoszulComplex& c, int up_to, Exec exec) {
  DeltaRanks r = ranks_up_to(c, up_to, exec);
  const int top = static_cast<int>(r.dims.size()) - 1;
  const int last = up_to < 0 ? top : std::min(up_to, top);
  GradedDims out;
  for (int d = 0; d <= last; ++d) {
    std::int64_t h = r.dims[static_cast<std::size_t>(d)] - r.ranks[static_cast<std::size_t>(d)] -
                     (d > 0 ? r.ranks[static_cast<std::size_t>(d) - 1] : 0);
    out.add(d, h);
  }
  return out;
}

GradedDims image_dims_bruteforce(const KoszulComplex& c, int up_to, Exec exec) {
  DeltaRanks r = ranks_up_to(c, up_to < 0 ? -1 : up_to - 1, exec);
  const int top = static_cast<int>(r.dims.size()) - 1;
  const int last = up_to < 0 ? top : std::min(up_to, top);
  GradedDims out;
  for (int d = 1; d <= last; ++d) out.add(d, r.ranks[static_cast<std::size_t>(d) - 1]);
  return out;
}

GradedAlgebra closed_form_cohomology(const KoszulComplex& c) {
  require_shape(c, "closed_form_cohomology");
  std::vector<GeneratorSpec> gens;
  for (std::size_t t = 0; t < c.num_thetas(); ++t) {
    const auto& y = c.base().generators()[t];
    gens.push_back(GeneratorSpec::odd("g" + std::to_string(c.labels()[t]),
                                      y.truncation() * y.degree - 1));
  }
  return GradedAlgebra(c.total().characteristic(), gens);
}

Polynomial theta_element(const KoszulComplex& c, const MultiIndex& I) {
  const GradedAlgebra& T = c.total();
  Polynomial out = T.one();
  for (std::size_t t : I) out = T.multiply(out, T.generator(c.theta_name(t)));
  return out;
}

Polynomial c_element(const KoszulComplex& c, const MultiIndex& I) {
  const GradedAlgebra& T = c.total();
  if (I.empty()) return T.zero();
  if (I.size() == 1) return c.z(I[0]);
  Polynomial out = T.zero();
  for (std::size_t s = 0; s < I.size(); ++s) {
    Polynomial term = T.multiply(c.z(I[s]), theta_element(c, without(I, s)));
    out = (s % 2 == 0) ? T.add(out, term) : T.sub(out, term);
  }
  return out;
}

namespace {
Polynomial top_powers(const KoszulComplex& c, const MultiIndex& I) {
  const GradedAlgebra& T = c.total();
  Polynomial out = T.one();
  for (std::size_t t : I)
    out = T.multiply(out, T.power(c.z(t), c.base().generators()[t].truncation() - 1));
  return out;
}
}  // namespace

Polynomial g_element(const KoszulComplex& c, const MultiIndex& I) {
  require_shape(c, "g_element");
  return c.total().multiply(top_powers(c, I), theta_element(c, I));
}

Polynomial r_element(const KoszulComplex& c, const MultiIndex& I) {
  require_shape(c, "r_element");
  return c.total().multiply(top_powers(c, I), c_element(c, I));
}

Polynomial d_element(const KoszulComplex& c, const MultiIndex& I) {
  const GradedAlgebra& T = c.total();
  Polynomial out = T.zero();
  for (std::size_t s = 0; s < I.size(); ++s) {
    Polynomial term = T.multiply(c.z(I[s]), c_element(c, without(I, s)));
    out = (s % 2 == 0) ? T.add(out, term) : T.sub(out, term);
  }
  return out;
}

int theta_merge_sign(const MultiIndex& A, const MultiIndex& B) {
  std::size_t inversions = 0;
  for (std::size_t a : A)
    for (std::size_t b : B)
      if (a > b) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

namespace {
// sign_s of the s-th term (0-based s) in the product expansion.
int expansion_sign(const MultiIndex& H, const MultiIndex& L, std::size_t s) {
  int sign = (s % 2 == 0) ? 1 : -1;
  if ((H.size() - 1) % 2 == 1) sign = -sign;
  return sign * theta_merge_sign(without(H, s), L);
}
}  // namespace

Polynomial product_expansion(const KoszulComplex& c, const MultiIndex& H, const MultiIndex& L) {
  const GradedAlgebra& T = c.total();
  Polynomial out = T.zero();
  for (std::size_t s = 0; s < H.size(); ++s) {
    MultiIndex Hs = without(H, s);
    Polynomial b = T.one();
    for (std::size_t t : intersection(Hs, L)) b = T.multiply(b, c.theta_square(t));
    if (b.is_zero()) continue;
    Polynomial term =
        T.multiply(T.multiply(c.z(H[s]), b), c_element(c, symmetric_difference(Hs, L)));
    out = T.add(out, T.scale(term, expansion_sign(H, L, s)));
  }
  return out;
}

Polynomial s_hl(const KoszulComplex& c, const MultiIndex& H, const MultiIndex& L) {
  const GradedAlgebra& T = c.total();
  return T.sub(T.multiply(c_element(c, H), c_element(c, L)), product_expansion(c, H, L));
}

std::vector<MultiIndex> subsets_of_size_at_least(std::size_t n, std::size_t k) {
  std::vector<MultiIndex> out;
  if (n > 20) throw std::invalid_argument("too many indices");
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    MultiIndex I;
    for (std::size_t t = 0; t < n; ++t)
      if (mask & (1U << t)) I.push_back(t);
    if (I.size() >= k) out.push_back(I);
  }
  std::stable_sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<ImageNormalForm> image_normal_forms(const KoszulComplex& c) {
  require_shape(c, "image_normal_forms");
  const GradedAlgebra& A = c.base();
  const std::size_t r = c.num_thetas();
  std::vector<ImageNormalForm> out;
  const auto bases = A.bases();
  for (const auto& bucket : bases) {
    for (const Monomial& alpha : bucket) {
      for (std::uint32_t mask = 1; mask < (1U << r); ++mask) {
        bool ok = false;
        for (std::size_t t = 0; t < r; ++t) {
          const bool in_I = (mask >> t) & 1U;
          const int top = A.generators()[t].truncation() - 1;
          const bool saturated = in_I ? alpha.exponents[t] == top : alpha.exponents[t] == 0;
          if (saturated) continue;
          ok = in_I;
          break;
        }
        if (!ok) continue;
        ImageNormalForm nf;
        nf.alpha = alpha;
        int deg = A.degree(alpha) + 1;
        for (std::size_t t = 0; t < r; ++t)
          if ((mask >> t) & 1U) {
            nf.I.push_back(t);
            deg += A.generators()[t].degree - 1;
          }
        nf.degree = deg;
        out.push_back(std::move(nf));
      }
    }
  }
  return out;
}

Polynomial normal_form_element(const KoszulComplex& c, const ImageNormalForm& nf) {
  const GradedAlgebra& T = c.total();
  return T.multiply(T.embed(c.base().monomial(nf.alpha), c.base()), c_element(c, nf.I));
}

GradedDims closed_form_image_dims(const KoszulComplex& c) {
  GradedDims out;
  for (const auto& nf : image_normal_forms(c)) out.add(nf.degree, 1);
  return out;
}

RingPresentation image_presentation(const KoszulComplex& c) {
  require_shape(c, "image_presentation");
  const GradedAlgebra& A = c.base();
  const int p = A.characteristic();
  const std::size_t r = c.num_thetas();
  RingPresentation pres;
  pres.coefficient = p;
  pres.augmentation_ideal = true;

  const auto c_indices = subsets_of_size_at_least(r, 2);
  auto c_degree = [&](const MultiIndex& I) {
    int d = 1;
    for (std::size_t t : I) d += A.generators()[t].degree - 1;
    return d;
  };
  for (const auto& g : A.generators()) pres.generators.push_back({g.name, g.degree, p});
  for (const auto& I : c_indices) pres.generators.push_back({c.c_name(I), c_degree(I), p});
  FreePolyRing ring = pres.ring();

  auto y = [&](std::size_t t) { return ring.symbol(A.generators()[t].name); };
  auto C = [&](const MultiIndex& I) {
    if (I.empty()) return ring.zero();
    if (I.size() == 1) return y(I[0]);
    return ring.symbol(c.c_name(I));
  };
  auto push = [&](const FreePolyRing::Element& e) {
    if (!e.empty()) pres.relations.push_back(ring.render(e));
  };
  auto top_powers_sym = [&](const MultiIndex& I) {
    FreePolyRing::Element e = ring.integer(1);
    for (std::size_t t : I)
      for (int i = 0; i + 1 < A.generators()[t].truncation(); ++i) e = ring.mul(e, y(t));
    return e;
  };

  for (std::size_t t = 0; t < r; ++t) {
    FreePolyRing::Element e = ring.integer(1);
    for (int i = 0; i < A.generators()[t].truncation(); ++i) e = ring.mul(e, y(t));
    push(e);
  }
  for (const auto& J : c_indices) push(ring.mul(top_powers_sym(J), C(J)));
  for (const auto& K : c_indices) {
    if (K.size() < 3) continue;
    FreePolyRing::Element e;
    for (std::size_t s = 0; s < K.size(); ++s) {
      auto term = ring.mul(y(K[s]), C(without(K, s)));
      e = (s % 2 == 0) ? ring.add(e, term) : ring.sub(e, term);
    }
    push(e);
  }
  for (std::size_t i = 0; i < c_indices.size(); ++i) {
    for (std::size_t j = i; j < c_indices.size(); ++j) {
      const MultiIndex& H = c_indices[i];
      const MultiIndex& L = c_indices[j];
      FreePolyRing::Element e = ring.mul(C(H), C(L));
      for (std::size_t s = 0; s < H.size(); ++s) {
        MultiIndex Hs = without(H, s);
        Polynomial b = A.one();
        for (std::size_t t : intersection(Hs, L)) b = A.multiply(b, c.theta_square_in_base(t));
        if (b.is_zero()) continue;
        auto term = ring.mul(ring.mul(y(H[s]), ring.from_algebra(b, A)),
                             C(symmetric_difference(Hs, L)));
        e = ring.sub(e, ring.scale(term, expansion_sign(H, L, s)));
      }
      push(e);
    }
  }
  pres.graded_dims = closed_form_image_dims(c);
  return pres;
}

}  // namespace excoh
