#pragma once

#include <cstdint>
#include <random>

#include "excoh/gradedalg.hpp"
#include "excoh/koszul.hpp"

namespace excoh {

using Rng = std::mt19937_64;

struct RandomComplexOptions {
  int max_generators = 4;  // r
  int max_truncation = 4;  // k_i
  bool with_squares = true;  // random theta squares in characteristic 2
};

// K(A; y_1..y_r) with A = F_p[y]/<y^k>, deg y_i in {2,4,6,8}, p in {2,3,5}.
KoszulComplex random_truncated_complex(Rng& rng, const RandomComplexOptions& opts = {});

// Uniform random element of alg in degree d (possibly zero).
Polynomial random_element(const GradedAlgebra& alg, int d, Rng& rng);

}  // namespace excoh
