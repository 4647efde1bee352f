#include "excoh/verify.hpp"

#include <stdexcept>

#include "excoh/error.hpp"
#include "excoh/integral.hpp"
#include "excoh/koszul.hpp"
#include "excoh/liedata.hpp"
#include "excoh/modp.hpp"
#include "excoh/sampling.hpp"
#include "excoh/weyl.hpp"

namespace excoh {

namespace {

using Results = std::vector<CheckResult>;

template <class F>
void check(Results& out, const std::string& suite, const std::string& name,
           const std::string& invariant, F&& f) {
  CheckResult r{suite, name, invariant, false, {}};
  try {
    r.detail = f();
    r.ok = r.detail.empty();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  out.push_back(std::move(r));
}

std::vector<std::string> all_groups() {
  std::vector<std::string> g = exceptional_group_names();
  for (int n = 2; n <= 5; ++n) g.push_back("SU(" + std::to_string(n) + ")");
  for (int n = 1; n <= 5; ++n) g.push_back("Sp(" + std::to_string(n) + ")");
  for (int n = 7; n <= 12; ++n) g.push_back("Spin(" + std::to_string(n) + ")");
  return g;
}

Results liedata_suite() {
  Results out;
  for (const auto& name : all_groups()) {
    check(out, "liedata", name, "sum of (2l-1) over q(G) equals dim G", [&]() -> std::string {
      LieGroupData g = group_data(name);
      int s = 0;
      for (int l : g.degrees_q) s += 2 * l - 1;
      return s == g.dim ? "" : std::to_string(s) + " != " + std::to_string(g.dim);
    });
    for (int p : {2, 3, 5, 7}) {
      check(out, "liedata", name + " p=" + std::to_string(p), "D(G,p) has rank-many degrees",
            [&]() -> std::string {
              LieGroupData g = group_data(name);
              DegreePartition d = degree_partition(g, p);
              return static_cast<int>(d.full.size()) == g.rank ? "" : "wrong size";
            });
    }
  }
  return out;
}

Results koszul_suite(std::uint64_t seed, int trials) {
  Results out;
  Rng rng(seed);
  for (int i = 0; i < trials; ++i) {
    KoszulComplex c = random_truncated_complex(rng);
    const std::string name = "trial " + std::to_string(i);
    check(out, "koszul", name, "closed-form cohomology equals brute force", [&]() -> std::string {
      GradedDims closed = closed_form_cohomology(c).poincare();
      GradedDims brute = cohomology_dims_bruteforce(c);
      return closed == brute ? "" : closed.to_string() + " vs " + brute.to_string();
    });
    check(out, "koszul", name, "image normal forms count Im delta", [&]() -> std::string {
      GradedDims closed = closed_form_image_dims(c);
      GradedDims brute = image_dims_bruteforce(c);
      return closed == brute ? "" : closed.to_string() + " vs " + brute.to_string();
    });
    check(out, "koszul", name, "C_H C_L equals its product expansion", [&]() -> std::string {
      for (const auto& H : subsets_of_size_at_least(c.num_thetas(), 1))
        for (const auto& L : subsets_of_size_at_least(c.num_thetas(), 1))
          if (!s_hl(c, H, L).is_zero()) return "fails for " + c.c_name(H) + ", " + c.c_name(L);
      return "";
    });
  }
  return out;
}

Results modp_suite() {
  Results out;
  for (const auto& name : exceptional_group_names()) {
    for (int p : {2, 3, 5, 7}) {
      const std::string label = name + " p=" + std::to_string(p);
      LieGroupData g = group_data(name);
      check(out, "modp", label, "Bockstein cohomology has total dimension 2^rank", [&]() -> std::string {
        auto h = cached_bockstein_dims(g, p).cohomology.total();
        return h == (std::int64_t{1} << g.rank) ? "" : "total " + std::to_string(h);
      });
      check(out, "modp", label, "Borel-Hirzebruch: P(H) = P(H_beta) + (1 + 1/t) P(Im delta_p)",
            [&]() -> std::string {
              ModPModel m = build_model(g, p);
              GradedDims P = m.algebra().poincare();
              const auto& b = cached_bockstein_dims(g, p);
              for (int d = 0; d <= g.dim; ++d)
                if (P[d] != b.cohomology[d] + b.image[d] + b.image[d + 1])
                  return "degree " + std::to_string(d);
              return "";
            });
      check(out, "modp", label, "Im delta_p presentation dims equal brute force", [&]() -> std::string {
        RingPresentation pres = im_delta_presentation(build_model(g, p));
        const auto& b = cached_bockstein_dims(g, p);
        return pres.graded_dims == b.image ? "" : pres.graded_dims.to_string();
      });
    }
  }
  return out;
}

Results integral_suite() {
  Results out;
  for (const auto& name : exceptional_group_names()) {
    LieGroupData g = group_data(name);
    for (int p : {2, 3, 5}) {
      const std::string label = name + " p=" + std::to_string(p);
      check(out, "integral", label,
            "universal coefficients: dim H^d(G;F_p) = free(d) + m_p(d) + m_p(d+1)",
            [&]() -> std::string {
              auto f = uct_check(g, p);
              return f.empty() ? "" : "first failure in degree " + std::to_string(f.front().degree);
            });
      if (d1(g, p).empty()) continue;
      check(out, "integral", label, "torsion relations vanish in the mod-p model",
            [&]() -> std::string {
              auto rep = verify_presentation_embedding(g, p);
              return rep.ok() ? "" : rep.failures.front();
            });
    }
  }
  for (const std::string fam : {"SU", "Sp"}) {
    for (int n = (fam == "SU" ? 2 : 1); n <= 5; ++n) {
      const std::string name = fam + "(" + std::to_string(n) + ")";
      check(out, "integral", name, "classical groups are torsion-free exterior algebras",
            [&]() -> std::string {
              LieGroupData g = group_data(name);
              CohomologyGroupTable t = assemble(g);
              GradedDims ext;
              ext.add(0, 1);
              for (int l : g.degrees_q) {
                GradedDims f;
                f.add(0, 1);
                f.add(2 * l - 1, 1);
                ext = ext.tensor(f);
              }
              for (int d = 0; d <= g.dim; ++d) {
                const auto& row = t.rows[static_cast<std::size_t>(d)];
                if (!row.torsion.empty() || row.free != ext[d]) return "degree " + std::to_string(d);
              }
              return "";
            });
    }
  }
  return out;
}

Results weyl_suite() {
  Results out;
  for (const auto& name : default_weyl_catalog()) {
    check(out, "weyl", name, "length histogram equals the flag manifold Poincare polynomial",
          [&]() -> std::string {
            RootSystemData r = root_system(name);
            LengthHistogram h = enumerate_weyl(r);
            LieGroupData g = group_data(r.group);
            auto fp = flag_poincare(g);
            for (std::size_t i = 0; i < fp.size(); ++i) {
              std::int64_t expect = (i % 2 == 0 && i / 2 < h.counts.size()) ? h.counts[i / 2] : 0;
              if (fp[i] != expect) return "coefficient of t^" + std::to_string(i);
            }
            if (fp.size() != 2 * h.counts.size() - 1) return "length mismatch";
            if (2 * h.max_length() != g.dim - g.rank) return "max length != (dim - rank)/2";
            if (!h.palindromic()) return "not palindromic";
            return "";
          });
  }
  return out;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"liedata", "koszul", "modp", "integral", "weyl"};
}

std::vector<CheckResult> run_verify_suite(const std::string& suite, std::uint64_t seed, int trials) {
  if (suite == "all") {
    Results all;
    for (const auto& s : verify_suite_names()) {
      Results r = run_verify_suite(s, seed, trials);
      all.insert(all.end(), r.begin(), r.end());
    }
    return all;
  }
  if (suite == "liedata") return liedata_suite();
  if (suite == "koszul") return koszul_suite(seed, trials);
  if (suite == "modp") return modp_suite();
  if (suite == "integral") return integral_suite();
  if (suite == "weyl") return weyl_suite();
  throw std::invalid_argument("unknown verify suite: " + suite);
}

}  // namespace excoh
