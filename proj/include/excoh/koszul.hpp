#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "excoh/exec.hpp"
#include "excoh/fplinalg.hpp"
#include "excoh/gradedalg.hpp"
#include "excoh/presentation.hpp"

namespace excoh {

// Sorted, duplicate-free indices into the theta list (0-based).
using MultiIndex = std::vector<std::size_t>;

struct KoszulSpec {
  GradedAlgebra base;                    // even generators only
  std::vector<Polynomial> z;             // delta(theta_t) = z_t, elements of base
  std::vector<int> theta_degrees;        // optional; required where z_t = 0
  std::vector<std::string> theta_names;  // default "t1", "t2", ...
  std::vector<std::string> squares;      // theta_t^2 in base generators; empty = 0
  std::vector<int> labels;               // index labels used in C names; default 1..k
};

// C = A (x) Delta(theta_1..theta_k) with the degree-1 antiderivation delta.
class KoszulComplex {
 public:
  explicit KoszulComplex(KoszulSpec spec);

  const GradedAlgebra& base() const { return base_; }
  const GradedAlgebra& total() const { return total_; }
  std::size_t num_thetas() const { return theta_pos_.size(); }
  const std::vector<int>& labels() const { return labels_; }
  std::size_t theta_position(std::size_t t) const { return theta_pos_[t]; }
  const std::string& theta_name(std::size_t t) const { return total_.generators()[theta_pos_[t]].name; }
  const Polynomial& z(std::size_t t) const { return z_[t]; }             // in total()
  const Polynomial& theta_square(std::size_t t) const { return b_[t]; }  // in total()
  const Polynomial& theta_square_in_base(std::size_t t) const { return b_base_[t]; }
  bool has_algebra_structure() const;

  Polynomial delta(const Polynomial& a) const;
  // z_t is the t-th generator of the base: the truncated polynomial shape.
  bool truncated_shape() const;
  std::string c_name(const MultiIndex& I) const;  // "C6_10"

 private:
  GradedAlgebra base_;
  GradedAlgebra total_;
  std::vector<std::size_t> theta_pos_;
  std::vector<std::ptrdiff_t> theta_of_pos_;  // -1 for base generators
  std::vector<Polynomial> z_, b_, b_base_;
  std::vector<int> labels_;
};

KoszulComplex build_koszul(KoszulSpec spec);
// Truncated shape with zero squares: z_t = y_t for every base generator.
KoszulComplex build_koszul(const GradedAlgebra& A);
KoszulComplex build_koszul(const GradedAlgebra& A, std::vector<Polynomial> z);

// Matrix of delta: C^d -> C^{d+1} in the canonical monomial bases.
MatrixFp delta_matrix(const KoszulComplex& c, const std::vector<Monomial>& source,
                      const std::vector<Monomial>& target);

struct DeltaRanks {
  std::vector<std::int64_t> dims;   // dim C^d, d = 0..top
  std::vector<std::int64_t> ranks;  // rank of delta: C^d -> C^{d+1}
};
DeltaRanks delta_ranks(const KoszulComplex& c, Exec exec = Exec::Parallel);

GradedDims cohomology_dims_bruteforce(const KoszulComplex& c, int up_to = -1,
                                      Exec exec = Exec::Parallel);
GradedDims image_dims_bruteforce(const KoszulComplex& c, int up_to = -1,
                                 Exec exec = Exec::Parallel);

// Delta(g_1..g_r), deg g_i = k_i deg y_i - 1. Throws std::invalid_argument off-shape.
GradedAlgebra closed_form_cohomology(const KoszulComplex& c);

// Element families in C. Singleton C_{t} is y_t and C_{} is 0.
Polynomial theta_element(const KoszulComplex& c, const MultiIndex& I);
Polynomial c_element(const KoszulComplex& c, const MultiIndex& I);
Polynomial g_element(const KoszulComplex& c, const MultiIndex& I);
Polynomial r_element(const KoszulComplex& c, const MultiIndex& I);
Polynomial d_element(const KoszulComplex& c, const MultiIndex& I);
// Right side of the product rule C_H C_L = sum_s sign_s y_{h_s} b_{H_s cap L} C_{H_s xor L}.
Polynomial product_expansion(const KoszulComplex& c, const MultiIndex& H, const MultiIndex& L);
// S_{H,L} = C_H C_L - product_expansion(H, L); zero in C.
Polynomial s_hl(const KoszulComplex& c, const MultiIndex& H, const MultiIndex& L);

// Sign of theta_A theta_B = sign * b_{A cap B} theta_{A xor B} (1 in characteristic 2).
int theta_merge_sign(const MultiIndex& A, const MultiIndex& B);

// Basis of Im delta: elements y^alpha C_I, I nonempty, whose first factor
// (in generator order) that is not "saturated" is an index of I with
// alpha below its top exponent. Saturated: alpha_t = 0 off I, alpha_t = k_t - 1 on I.
struct ImageNormalForm {
  Monomial alpha;  // over base()
  MultiIndex I;
  int degree = 0;
};
std::vector<ImageNormalForm> image_normal_forms(const KoszulComplex& c);
Polynomial normal_form_element(const KoszulComplex& c, const ImageNormalForm& nf);
GradedDims closed_form_image_dims(const KoszulComplex& c);

std::vector<MultiIndex> subsets_of_size_at_least(std::size_t n, std::size_t k);

// Generators y_i, C_I (|I| >= 2); relations y^k, R_J, D_K, S_{H,L}.
RingPresentation image_presentation(const KoszulComplex& c);

}  // namespace excoh
