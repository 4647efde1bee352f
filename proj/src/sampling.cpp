#include "excoh/sampling.hpp"

namespace excoh {

Polynomial random_element(const GradedAlgebra& alg, int d, Rng& rng) {
  Polynomial out = alg.zero();
  const int p = alg.characteristic() == 0 ? 7 : alg.characteristic();
  std::uniform_int_distribution<int> coeff(0, p - 1);
  for (const auto& m : alg.basis_in_degree(d)) {
    int c = coeff(rng);
    if (alg.characteristic() == 0) c -= p / 2;
    if (c != 0) out = alg.add(out, alg.monomial(m, c));
  }
  return out;
}

KoszulComplex random_truncated_complex(Rng& rng, const RandomComplexOptions& opts) {
  static const int primes[] = {2, 3, 5};
  static const int degrees[] = {2, 4, 6, 8};
  const int p = primes[std::uniform_int_distribution<int>(0, 2)(rng)];
  const int r = std::uniform_int_distribution<int>(1, opts.max_generators)(rng);
  std::vector<GeneratorSpec> gens;
  for (int i = 0; i < r; ++i) {
    int deg = degrees[std::uniform_int_distribution<int>(0, 3)(rng)];
    int k = std::uniform_int_distribution<int>(1, opts.max_truncation)(rng);
    gens.push_back(GeneratorSpec::even("y" + std::to_string(i + 1), deg, k));
  }
  GradedAlgebra A(p, gens);
  KoszulSpec spec{A, {}, {}, {}, {}, {}};
  for (const auto& g : A.generators()) {
    spec.z.push_back(A.generator(g.name));
    spec.theta_degrees.push_back(g.degree - 1);
    std::string sq;
    if (p == 2 && opts.with_squares) {
      Polynomial b = random_element(A, 2 * (g.degree - 1), rng);
      if (!b.is_zero()) sq = A.render(b);
    }
    spec.squares.push_back(sq);
  }
  return KoszulComplex(std::move(spec));
}

}  // namespace excoh
