#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "excoh/gradedalg.hpp"
#include "excoh/koszul.hpp"
#include "excoh/liedata.hpp"
#include "excoh/modp.hpp"
#include "excoh/presentation.hpp"
#include "json.hpp"

namespace excoh {

// Z[x_t]/<p_t x_t, x_t^{r_t}>; graded_dims counts Z/p summands (and Z in degree 0).
RingPresentation chow_ring(const LieGroupData& g);

struct SquareAnnotation {
  std::string generator;  // "rho23"
  std::string square;     // "x6^6*x10", an element of the Chow ring
};

// Delta(rho_{2l-1})_{l in q(G)}: ranks from the exterior basis; the nonzero
// squares (all 2-torsion) are recorded separately.
struct FreePart {
  GradedAlgebra algebra;  // characteristic 0, odd generators "rho<2l-1>"
  std::vector<SquareAnnotation> squares;
  RingPresentation presentation(const std::string& group) const;
};
FreePart free_part(const LieGroupData& g);

std::string rho_name(int degree);

// F_p[x_t, C_I]^+/<x^r, R_J, D_K, S_{H,L}> (x) Delta(rho_{m-1})_{m in D_2}.
RingPresentation torsion_presentation(const LieGroupData& g, int p);
GradedDims torsion_dims(const LieGroupData& g, int p);

// rho_{t r - 1} * C_K, K nonempty subset of D_1 (singleton C_{s} = x_s).
struct ActionRelation {
  int t = 0;
  std::vector<int> K;
  int rho_degree = 0;
  std::string lhs;  // "rho23*x20"
  std::string rhs;  // "x8^2*C8_20", or "0"
  std::string text() const { return lhs + " = " + rhs; }
};
ActionRelation action_relation(const LieGroupData& g, int p, int t, const std::vector<int>& K);
std::vector<ActionRelation> action_relations(const LieGroupData& g, int p);

struct CohomologyRow {
  std::int64_t free = 0;
  std::map<int, std::int64_t> torsion;  // p -> number of Z/p summands
};

struct CohomologyGroupTable {
  std::string group;
  int dim = 0;
  std::vector<CohomologyRow> rows;  // degrees 0..dim
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

// Exceptional groups and SU(n)/Sp(n).
CohomologyGroupTable assemble(const LieGroupData& g);

struct UctFailure {
  int degree = 0;
  std::int64_t lhs = 0, free = 0, m_d = 0, m_d1 = 0;
};
// dim H^d(G;F_p) = free(d) + m_p(d) + m_p(d+1) for every degree; returns the failures.
std::vector<UctFailure> uct_check(const LieGroupData& g, int p);

struct EmbeddingReport {
  std::size_t relations_checked = 0;
  std::size_t action_relations_checked = 0;
  std::vector<std::string> failures;
  bool dims_match = false;
  bool ok() const { return failures.empty() && dims_match; }
};
// Substitutes x_t -> xbar_t, C_I -> delta_p(theta_I), rho_{m-1} -> zeta_{m-1} and
// evaluates every torsion relation and action relation in the mod-p model.
EmbeddingReport verify_presentation_embedding(const LieGroupData& g, int p);

// Symbol images used by the embedding (exposed for tests).
struct TorsionEmbedding {
  FreePolyRing ring;
  std::vector<Polynomial> images;
};
TorsionEmbedding torsion_embedding(const ModPModel& m, const RingPresentation& torsion);

}  // namespace excoh
