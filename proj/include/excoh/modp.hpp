#pragma once

#include <string>

#include "excoh/exec.hpp"
#include "excoh/gradedalg.hpp"
#include "excoh/koszul.hpp"
#include "excoh/liedata.hpp"
#include "excoh/presentation.hpp"

namespace excoh {

// H*(G;F_p) = F_p[xbar_t]/<xbar_t^{r_t}> (x) Delta(zeta_{m-1})_{m in D(G,p)} with the
// Bockstein delta_p(zeta_{t-1}) = xbar_t for t in D_1, zero on all other generators.
// Generators are named "x<t>" and "z<m-1>".
class ModPModel {
 public:
  ModPModel(LieGroupData group, int p, DegreePartition partition, KoszulComplex complex,
            KoszulComplex core);

  const LieGroupData& group() const { return group_; }
  int prime() const { return p_; }
  const DegreePartition& partition() const { return partition_; }
  // Whole model with the Bockstein as its Koszul differential.
  const KoszulComplex& complex() const { return complex_; }
  // K(Im pi_p^*): xbar_t and zeta_{t-1} for t in D_1 only.
  const KoszulComplex& core() const { return core_; }
  const GradedAlgebra& algebra() const { return complex_.total(); }

  static std::string xbar_name(int t) { return "x" + std::to_string(t); }
  static std::string zeta_name(int index) { return "z" + std::to_string(index); }

 private:
  LieGroupData group_;
  int p_;
  DegreePartition partition_;
  KoszulComplex complex_;
  KoszulComplex core_;
};

// Exceptional groups, and SU(n)/Sp(n) (no special classes). Spin(n) is refused.
ModPModel build_model(const LieGroupData& g, int p);

Polynomial bockstein_apply(const ModPModel& m, const Polynomial& a);

struct BocksteinDims {
  GradedDims cohomology;  // H_beta
  GradedDims image;       // Im delta_p
};
BocksteinDims bockstein_dims(const ModPModel& m, Exec exec = Exec::Parallel);
GradedDims bockstein_cohomology_dims(const ModPModel& m, Exec exec = Exec::Parallel);
GradedDims im_delta_dims(const ModPModel& m, Exec exec = Exec::Parallel);

// Memoized per (group, p); thread-safe.
const BocksteinDims& cached_bockstein_dims(const LieGroupData& g, int p);

// Im delta_core presentation tensored with Delta(zeta_{m-1})_{m in D_2}; empty when D_1 is.
RingPresentation im_delta_presentation(const ModPModel& m);

}  // namespace excoh
