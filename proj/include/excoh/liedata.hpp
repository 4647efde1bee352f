#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace excoh {

enum class Family { SU, Sp, Spin, G2, F4, E6, E7, E8 };

bool is_exceptional(Family f);
bool is_prime(int p);

struct SpecialClass {
  int degree = 0;         // t_i, even
  int torsion_index = 0;  // p_i in {2,3,5}
  int cup_length = 0;     // r_i >= 2
  bool operator==(const SpecialClass&) const = default;
};

struct LieGroupData {
  std::string name;
  Family family = Family::G2;
  int param = 0;  // n for SU(n), Sp(n), Spin(n); 0 otherwise
  int rank = 0;
  int dim = 0;
  // Sorted. Strictly increasing except Spin(4k), whose row repeats the degree n.
  std::vector<int> degrees_q;
  std::vector<SpecialClass> special_classes;
  // Spin cup lengths read the table's "ln" as log base 2.
  bool interpreted_cup_lengths = false;

  const SpecialClass& special_class(int degree) const;  // throws if absent
};

// Accepts G2, F4, E6, E7, E8, SU(n) n>=2, Sp(n) n>=1, Spin(n) n>=7.
// Throws std::invalid_argument on unknown names or out-of-range n.
LieGroupData group_data(std::string_view name);

std::vector<std::string> exceptional_group_names();

struct DegreePartition {
  std::vector<int> d1;
  std::vector<int> d2;
  std::vector<int> full;  // sorted union
};

// Degrees of the special classes with torsion index p.
std::vector<int> d1(const LieGroupData& g, int p);

// d2 = 2q(G) with one occurrence of t*cl(t) removed per t in d1.
// Throws InvariantViolation when the result does not have rank-many elements.
DegreePartition degree_partition(const LieGroupData& g, int p);

// x-bar degree -> exponent.
using XbarMonomial = std::map<int, int>;

// Nonzero squares of the odd generators zeta_{m-1}, keyed by m-1. Absent keys square to 0.
std::map<int, XbarMonomial> zeta_square_table(const LieGroupData& g, int p);

// Tables 1 and 2 as audited JSON (exceptional rows literally, classical rows
// generated for small n).
nlohmann::ordered_json tables_json();

// FNV-1a over the literal exceptional table, for the frozen-data test.
std::uint64_t exceptional_table_checksum();

}  // namespace excoh
