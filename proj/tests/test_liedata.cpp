#include "doctest.h"
#include "excoh/error.hpp"
#include "excoh/liedata.hpp"

using namespace excoh;

TEST_CASE("exceptional rows") {
  LieGroupData g2 = group_data("G2");
  CHECK(g2.rank == 2);
  CHECK(g2.dim == 14);
  CHECK(g2.degrees_q == std::vector<int>{2, 6});
  REQUIRE(g2.special_classes.size() == 1);
  CHECK(g2.special_classes[0] == SpecialClass{6, 2, 2});

  LieGroupData e8 = group_data("E8");
  CHECK(e8.rank == 8);
  CHECK(e8.dim == 248);
  CHECK(e8.degrees_q == std::vector<int>{2, 8, 12, 14, 18, 20, 24, 30});
  std::vector<int> deg, tor, cl;
  for (const auto& s : e8.special_classes) {
    deg.push_back(s.degree);
    tor.push_back(s.torsion_index);
    cl.push_back(s.cup_length);
  }
  CHECK(deg == std::vector<int>{6, 8, 10, 12, 18, 20, 30});
  CHECK(tor == std::vector<int>{2, 3, 2, 5, 2, 3, 2});
  CHECK(cl == std::vector<int>{8, 3, 4, 5, 2, 3, 2});
}

TEST_CASE("classical rows") {
  LieGroupData su4 = group_data("SU(4)");
  CHECK(su4.rank == 3);
  CHECK(su4.dim == 15);
  CHECK(su4.degrees_q == std::vector<int>{2, 3, 4});
  CHECK(su4.special_classes.empty());

  LieGroupData sp3 = group_data("Sp(3)");
  CHECK(sp3.degrees_q == std::vector<int>{2, 4, 6});
  CHECK(sp3.dim == 21);

  LieGroupData spin8 = group_data("Spin(8)");
  CHECK(spin8.degrees_q == std::vector<int>{2, 4, 4, 6});
  CHECK(spin8.interpreted_cup_lengths);

  // Spin(15): rank 7, classes in degrees 6, 10, 14; x6 has cup length 4.
  LieGroupData spin15 = group_data("Spin(15)");
  REQUIRE(spin15.special_classes.size() == 3);
  CHECK(spin15.special_classes[0] == SpecialClass{6, 2, 4});
  CHECK(spin15.special_classes[1] == SpecialClass{10, 2, 2});
  CHECK(spin15.special_classes[2] == SpecialClass{14, 2, 2});
}

TEST_CASE("dimension identity for every catalogued row") {
  std::vector<std::string> names = exceptional_group_names();
  for (int n = 2; n <= 12; ++n) names.push_back("SU(" + std::to_string(n) + ")");
  for (int n = 1; n <= 10; ++n) names.push_back("Sp(" + std::to_string(n) + ")");
  for (int n = 7; n <= 30; ++n) names.push_back("Spin(" + std::to_string(n) + ")");
  for (const auto& name : names) {
    LieGroupData g = group_data(name);
    int s = 0;
    for (int l : g.degrees_q) s += 2 * l - 1;
    CHECK_MESSAGE(s == g.dim, name);
    CHECK(static_cast<int>(g.degrees_q.size()) == g.rank);
    for (int p : {2, 3, 5, 7, 11}) {
      DegreePartition d = degree_partition(g, p);
      CHECK(static_cast<int>(d.full.size()) == g.rank);
    }
  }
}

TEST_CASE("bad names") {
  CHECK_THROWS_AS(group_data("E9"), std::invalid_argument);
  CHECK_THROWS_AS(group_data("SU(1)"), std::invalid_argument);
  CHECK_THROWS_AS(group_data("Sp(0)"), std::invalid_argument);
  CHECK_THROWS_AS(group_data("Spin(6)"), std::invalid_argument);
  CHECK_THROWS_AS(group_data("SU(x)"), std::invalid_argument);
  CHECK_THROWS_AS(group_data(""), std::invalid_argument);
}

TEST_CASE("d1") {
  CHECK(d1(group_data("E7"), 2) == std::vector<int>{6, 10, 18});
  CHECK(d1(group_data("E8"), 3) == std::vector<int>{8, 20});
  CHECK(d1(group_data("G2"), 7).empty());
}

TEST_CASE("partitions") {
  LieGroupData e8 = group_data("E8");
  DegreePartition p2 = degree_partition(e8, 2);
  CHECK(p2.d1 == std::vector<int>{6, 10, 18, 30});
  CHECK(p2.d2 == std::vector<int>{4, 16, 24, 28});
  DegreePartition p3 = degree_partition(e8, 3);
  CHECK(p3.d1 == std::vector<int>{8, 20});
  CHECK(p3.d2 == std::vector<int>{4, 16, 28, 36, 40, 48});
  DegreePartition p5 = degree_partition(e8, 5);
  CHECK(p5.d1 == std::vector<int>{12});
  CHECK(p5.d2 == std::vector<int>{4, 16, 24, 28, 36, 40, 48});

  DegreePartition e7 = degree_partition(group_data("E7"), 2);
  CHECK(e7.d1 == std::vector<int>{6, 10, 18});
  CHECK(e7.d2 == std::vector<int>{4, 16, 24, 28});

  CHECK(degree_partition(group_data("F4"), 2).d2 == std::vector<int>{4, 16, 24});
  CHECK(degree_partition(group_data("G2"), 2).d2 == std::vector<int>{4});

  // Primes without special classes leave 2q(G) untouched.
  for (const auto& name : exceptional_group_names()) {
    LieGroupData g = group_data(name);
    DegreePartition d = degree_partition(g, 7);
    CHECK(d.d1.empty());
    std::vector<int> doubled;
    for (int l : g.degrees_q) doubled.push_back(2 * l);
    CHECK(d.d2 == doubled);
  }
  CHECK_THROWS_AS(degree_partition(e8, 4), std::invalid_argument);
}

TEST_CASE("zeta squares") {
  LieGroupData e8 = group_data("E8");
  auto sq = zeta_square_table(e8, 2);
  CHECK(sq.at(3) == XbarMonomial{{6, 1}});
  CHECK(sq.at(5) == XbarMonomial{{10, 1}});
  CHECK(sq.at(9) == XbarMonomial{{18, 1}});
  CHECK(sq.at(15) == XbarMonomial{{30, 1}});
  CHECK(sq.at(23) == XbarMonomial{{6, 6}, {10, 1}});
  CHECK(sq.count(29) == 0);
  CHECK(sq.size() == 5);
  CHECK(zeta_square_table(group_data("F4"), 3).empty());
  auto f4 = zeta_square_table(group_data("F4"), 2);
  CHECK(f4.size() == 1);
  CHECK(f4.count(5) == 0);
  auto e7 = zeta_square_table(group_data("E7"), 2);
  CHECK(e7.size() == 3);
  CHECK(e7.count(15) == 0);
  CHECK_THROWS(zeta_square_table(group_data("SU(3)"), 2));
}

TEST_CASE("frozen exceptional table") {
  // Guards the literal table against accidental edits.
  CHECK(exceptional_table_checksum() == 3751502242740029179ULL);
}

TEST_CASE("tables json") {
  auto j = tables_json();
  CHECK(j["exceptional"].size() == 5);
  CHECK(j["exceptional"][4]["name"] == "E8");
  CHECK(j["exceptional"][4]["partitions"]["2"]["d2"] == std::vector<int>{4, 16, 24, 28});
}
