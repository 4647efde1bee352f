#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "excoh/exec.hpp"
#include "excoh/liedata.hpp"

namespace excoh {

struct RootSystemData {
  std::string name;   // "A3", "G2", ...
  int rank = 0;
  std::vector<std::vector<int>> cartan;
  std::string group;  // compact group with this Weyl group, e.g. "SU(4)"
};

// A1..A8, B2..B6, C2..C6, D4..D6, G2, F4, E6, E7, E8.
RootSystemData root_system(std::string_view name);
// Systems checked by default: A1..A4, B2..B4, C3, D4, G2, F4.
std::vector<std::string> default_weyl_catalog();

struct LengthHistogram {
  std::vector<std::int64_t> counts;  // counts[l] = #{w : length(w) = l}
  std::int64_t order() const;
  int max_length() const { return static_cast<int>(counts.size()) - 1; }
  bool palindromic() const;
  bool operator==(const LengthHistogram&) const = default;
};

constexpr std::int64_t kDefaultWeylCap = 1'000'000;

namespace serial {
LengthHistogram enumerate_weyl(const RootSystemData& r, std::int64_t cap = kDefaultWeylCap);
}
namespace parallel {
LengthHistogram enumerate_weyl(const RootSystemData& r, std::int64_t cap = kDefaultWeylCap);
}

// Level-by-level orbit of a strictly dominant weight; the level is the length.
// Throws std::length_error if |W| (known from the group degrees) exceeds cap.
LengthHistogram enumerate_weyl(const RootSystemData& r, std::int64_t cap = kDefaultWeylCap,
                               Exec exec = Exec::Parallel);

// Coefficients of prod_i (1 - t^{2 l_i}) / (1 - t^2)^n, indexed by the power of t.
std::vector<std::int64_t> flag_poincare(const LieGroupData& g);

}  // namespace excoh
