#include "excoh/liedata.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "excoh/error.hpp"

namespace excoh {

namespace {

struct ExceptionalRow {
  const char* name;
  Family family;
  int rank;
  int dim;
  std::vector<int> q;
  std::vector<SpecialClass> special;  // {degree, torsion index, cup length}
};

// Tables 1 and 2, exceptional columns.
const std::vector<ExceptionalRow>& exceptional_rows() {
  static const std::vector<ExceptionalRow> rows = {
      {"G2", Family::G2, 2, 14, {2, 6}, {{6, 2, 2}}},
      {"F4", Family::F4, 4, 52, {2, 6, 8, 12}, {{6, 2, 2}, {8, 3, 3}}},
      {"E6", Family::E6, 6, 78, {2, 5, 6, 8, 9, 12}, {{6, 2, 2}, {8, 3, 3}}},
      {"E7", Family::E7, 7, 133, {2, 6, 8, 10, 12, 14, 18},
       {{6, 2, 2}, {8, 3, 3}, {10, 2, 2}, {18, 2, 2}}},
      {"E8", Family::E8, 8, 248, {2, 8, 12, 14, 18, 20, 24, 30},
       {{6, 2, 8}, {8, 3, 3}, {10, 2, 4}, {12, 5, 5}, {18, 2, 2}, {20, 3, 3}, {30, 2, 2}}},
  };
  return rows;
}

// floor(log2(num/den)) for num >= den > 0
int floor_log2_ratio(int num, int den) {
  int e = 0;
  while (static_cast<long long>(den) << (e + 1) <= num) ++e;
  return e;
}

void check_invariants(const LieGroupData& g) {
  const auto fail = [&](const std::string& inv) {
    throw InvariantViolation("liedata", "group_data", inv, g.name);
  };
  if (static_cast<int>(g.degrees_q.size()) != g.rank) fail("|q(G)| = rank");
  int sum = 0;
  for (int l : g.degrees_q) sum += 2 * l - 1;
  if (sum != g.dim) fail("sum of (2l-1) over q(G) equals dim G");
  if (!std::is_sorted(g.degrees_q.begin(), g.degrees_q.end())) fail("q(G) sorted");
  bool repeats = std::adjacent_find(g.degrees_q.begin(), g.degrees_q.end()) != g.degrees_q.end();
  if (repeats && !(g.family == Family::Spin && g.param % 4 == 0))
    fail("q(G) strictly increasing");
  for (std::size_t i = 0; i < g.special_classes.size(); ++i) {
    const auto& s = g.special_classes[i];
    if (s.degree % 2 != 0) fail("special class degrees even");
    if (s.torsion_index != 2 && s.torsion_index != 3 && s.torsion_index != 5)
      fail("torsion index in {2,3,5}");
    if (s.cup_length < 2) fail("cup length >= 2");
    if (i > 0 && g.special_classes[i - 1].degree >= s.degree)
      fail("special class degrees strictly increasing");
  }
}

LieGroupData classical(Family f, int n) {
  LieGroupData g;
  g.family = f;
  g.param = n;
  switch (f) {
    case Family::SU:
      if (n < 2) throw std::invalid_argument("SU(n) requires n >= 2");
      g.name = "SU(" + std::to_string(n) + ")";
      g.rank = n - 1;
      g.dim = n * n - 1;
      for (int l = 2; l <= n; ++l) g.degrees_q.push_back(l);
      break;
    case Family::Sp:
      if (n < 1) throw std::invalid_argument("Sp(n) requires n >= 1");
      g.name = "Sp(" + std::to_string(n) + ")";
      g.rank = n;
      g.dim = n * (2 * n + 1);
      for (int l = 1; l <= n; ++l) g.degrees_q.push_back(2 * l);
      break;
    case Family::Spin: {
      if (n < 7) throw std::invalid_argument("Spin(n) requires n >= 7");
      g.name = "Spin(" + std::to_string(n) + ")";
      g.dim = n * (n - 1) / 2;
      g.interpreted_cup_lengths = true;
      const int m = n / 2;
      g.rank = m;
      int k = 0;
      if (n % 2 == 1) {
        for (int l = 1; l <= m; ++l) g.degrees_q.push_back(2 * l);
        k = (m - 1) / 2;
        for (int i = 1; i <= k; ++i)
          g.special_classes.push_back({4 * i + 2, 2, 1 << (floor_log2_ratio(m, 2 * i + 1) + 1)});
      } else {
        for (int l = 1; l <= m - 1; ++l) g.degrees_q.push_back(2 * l);
        g.degrees_q.push_back(m);
        std::sort(g.degrees_q.begin(), g.degrees_q.end());
        k = (m - 2) / 2;
        for (int i = 1; i <= k; ++i)
          g.special_classes.push_back(
              {4 * i + 2, 2, 1 << (floor_log2_ratio(m - 1, 2 * i + 1) + 1)});
      }
      break;
    }
    default:
      throw std::logic_error("not a classical family");
  }
  return g;
}

int parse_param(std::string_view body, std::string_view full) {
  int n = 0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), n);
  if (ec != std::errc() || ptr != body.data() + body.size())
    throw std::invalid_argument("malformed group name: " + std::string(full));
  return n;
}

}  // namespace

bool is_exceptional(Family f) {
  return f == Family::G2 || f == Family::F4 || f == Family::E6 || f == Family::E7 ||
         f == Family::E8;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

const SpecialClass& LieGroupData::special_class(int degree) const {
  for (const auto& s : special_classes)
    if (s.degree == degree) return s;
  throw std::invalid_argument(name + " has no special class in degree " + std::to_string(degree));
}

LieGroupData group_data(std::string_view name) {
  for (const auto& row : exceptional_rows()) {
    if (name == row.name) {
      LieGroupData g{row.name, row.family, 0, row.rank, row.dim, row.q, row.special, false};
      check_invariants(g);
      return g;
    }
  }
  static const std::array<std::pair<std::string_view, Family>, 3> prefixes = {
      {{"SU(", Family::SU}, {"Sp(", Family::Sp}, {"Spin(", Family::Spin}}};
  for (const auto& [prefix, fam] : prefixes) {
    if (name.size() > prefix.size() + 1 && name.substr(0, prefix.size()) == prefix &&
        name.back() == ')') {
      int n = parse_param(name.substr(prefix.size(), name.size() - prefix.size() - 1), name);
      if (n > 200) throw std::invalid_argument("group parameter too large: " + std::string(name));
      LieGroupData g = classical(fam, n);
      check_invariants(g);
      return g;
    }
  }
  throw std::invalid_argument("unknown group: " + std::string(name));
}

std::vector<std::string> exceptional_group_names() { return {"G2", "F4", "E6", "E7", "E8"}; }

std::vector<int> d1(const LieGroupData& g, int p) {
  std::vector<int> out;
  for (const auto& s : g.special_classes)
    if (s.torsion_index == p) out.push_back(s.degree);
  return out;
}

DegreePartition degree_partition(const LieGroupData& g, int p) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  DegreePartition part;
  part.d1 = d1(g, p);
  std::vector<int> doubled;
  for (int l : g.degrees_q) doubled.push_back(2 * l);
  for (int t : part.d1) {
    int removed = t * g.special_class(t).cup_length;
    auto it = std::find(doubled.begin(), doubled.end(), removed);
    if (it == doubled.end())
      throw InvariantViolation("liedata", "degree_partition",
                               "t*cl(t) lies in 2q(G) for every p-special degree t",
                               g.name + ", p=" + std::to_string(p) + ", t*cl=" +
                                   std::to_string(removed));
    doubled.erase(it);
  }
  part.d2 = doubled;
  part.full = part.d1;
  part.full.insert(part.full.end(), part.d2.begin(), part.d2.end());
  std::sort(part.full.begin(), part.full.end());
  bool overlap = std::any_of(part.d1.begin(), part.d1.end(), [&](int t) {
    return std::find(part.d2.begin(), part.d2.end(), t) != part.d2.end();
  });
  if (static_cast<int>(part.full.size()) != g.rank || overlap)
    throw InvariantViolation("liedata", "degree_partition",
                             "D(G,p) is a disjoint union of rank-many degrees",
                             g.name + ", p=" + std::to_string(p));
  return part;
}

std::map<int, XbarMonomial> zeta_square_table(const LieGroupData& g, int p) {
  if (!is_exceptional(g.family))
    throw std::invalid_argument("zeta squares are tabulated for exceptional groups only");
  std::map<int, XbarMonomial> out;
  if (p != 2) return out;
  out[3] = {{6, 1}};
  if (g.family == Family::E7 || g.family == Family::E8) {
    out[5] = {{10, 1}};
    out[9] = {{18, 1}};
  }
  if (g.family == Family::E8) {
    out[15] = {{30, 1}};
    out[23] = {{6, 6}, {10, 1}};
  }
  return out;
}

nlohmann::ordered_json tables_json() {
  using nlohmann::ordered_json;
  auto row = [](const LieGroupData& g) {
    ordered_json j;
    j["name"] = g.name;
    j["rank"] = g.rank;
    j["dim"] = g.dim;
    j["q"] = g.degrees_q;
    ordered_json sc = ordered_json::array();
    for (const auto& s : g.special_classes)
      sc.push_back({{"degree", s.degree}, {"torsion_index", s.torsion_index},
                    {"cup_length", s.cup_length}});
    j["special_classes"] = sc;
    if (g.interpreted_cup_lengths) j["interpreted_cup_lengths"] = "log base 2";
    return j;
  };
  ordered_json out;
  ordered_json exc = ordered_json::array();
  for (const auto& n : exceptional_group_names()) {
    LieGroupData g = group_data(n);
    ordered_json j = row(g);
    ordered_json parts;
    for (int p : {2, 3, 5}) {
      DegreePartition dp = degree_partition(g, p);
      parts[std::to_string(p)] = {{"d1", dp.d1}, {"d2", dp.d2}};
    }
    j["partitions"] = parts;
    exc.push_back(j);
  }
  out["exceptional"] = exc;
  ordered_json cls = ordered_json::array();
  for (int n = 2; n <= 6; ++n) cls.push_back(row(group_data("SU(" + std::to_string(n) + ")")));
  for (int n = 1; n <= 5; ++n) cls.push_back(row(group_data("Sp(" + std::to_string(n) + ")")));
  for (int n = 7; n <= 12; ++n) cls.push_back(row(group_data("Spin(" + std::to_string(n) + ")")));
  out["classical"] = cls;
  out["checksum"] = exceptional_table_checksum();
  return out;
}

std::uint64_t exceptional_table_checksum() {
  std::string s;
  for (const auto& r : exceptional_rows()) {
    s += r.name;
    s += '|' + std::to_string(r.rank) + '|' + std::to_string(r.dim) + '|';
    for (int l : r.q) s += std::to_string(l) + ',';
    s += '|';
    for (const auto& c : r.special)
      s += std::to_string(c.degree) + ':' + std::to_string(c.torsion_index) + ':' +
           std::to_string(c.cup_length) + ';';
    s += '\n';
  }
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace excoh
