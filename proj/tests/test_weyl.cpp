#include "doctest.h"
#include "excoh/weyl.hpp"

using namespace excoh;

namespace {

// prod_i (1 + t + ... + t^{l_i - 1}), coefficients in powers of t.
std::vector<std::int64_t> qproduct(const std::vector<int>& degrees) {
  std::vector<std::int64_t> out{1};
  for (int l : degrees) {
    std::vector<std::int64_t> next(out.size() + static_cast<std::size_t>(l) - 1, 0);
    for (std::size_t i = 0; i < out.size(); ++i)
      for (int j = 0; j < l; ++j) next[i + static_cast<std::size_t>(j)] += out[i];
    out.swap(next);
  }
  return out;
}

}  // namespace

TEST_CASE("Cartan matrices") {
  RootSystemData g2 = root_system("G2");
  CHECK(g2.cartan == std::vector<std::vector<int>>{{2, -1}, {-3, 2}});
  CHECK(root_system("A3").group == "SU(4)");
  CHECK(root_system("B2").group == "Sp(2)");
  CHECK(root_system("B3").group == "Spin(7)");
  CHECK(root_system("D5").group == "Spin(10)");
  CHECK(root_system("E8").rank == 8);
  CHECK_THROWS_AS(root_system("A0"), std::invalid_argument);
  CHECK_THROWS_AS(root_system("X3"), std::invalid_argument);
  CHECK_THROWS_AS(root_system("D3"), std::invalid_argument);
}

TEST_CASE("orders and length distributions") {
  for (const auto& name : default_weyl_catalog()) {
    RootSystemData r = root_system(name);
    LieGroupData g = group_data(r.group);
    LengthHistogram h = enumerate_weyl(r);
    CHECK_MESSAGE(h.counts == qproduct(g.degrees_q), name);
    CHECK(h.palindromic());
    std::int64_t order = 1, roots = 0;
    for (int l : g.degrees_q) {
      order *= l;
      roots += l - 1;
    }
    CHECK(h.order() == order);
    CHECK(h.max_length() == roots);
    CHECK(serial::enumerate_weyl(r) == parallel::enumerate_weyl(r));
  }
  CHECK(enumerate_weyl(root_system("F4")).order() == 1152);
  CHECK(enumerate_weyl(root_system("G2")).counts == std::vector<std::int64_t>{1, 2, 2, 2, 2, 2, 1});
}

TEST_CASE("flag Poincare polynomial") {
  // SU(3)/T: (1 + t^2)(1 + t^2 + t^4)
  CHECK(flag_poincare(group_data("SU(3)")) == std::vector<std::int64_t>{1, 0, 2, 0, 2, 0, 1});
  for (const auto& name : default_weyl_catalog()) {
    RootSystemData r = root_system(name);
    auto f = flag_poincare(group_data(r.group));
    auto h = enumerate_weyl(r).counts;
    REQUIRE(f.size() == 2 * h.size() - 1);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(f[i] == (i % 2 ? 0 : h[i / 2]));
  }
}

TEST_CASE("cap") {
  CHECK_THROWS_AS(enumerate_weyl(root_system("E8")), std::length_error);
  CHECK_THROWS_AS(enumerate_weyl(root_system("F4"), 1000), std::length_error);
  CHECK(enumerate_weyl(root_system("F4"), 1152).order() == 1152);
}
