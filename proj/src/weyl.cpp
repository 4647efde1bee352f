#include "excoh/weyl.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "excoh/error.hpp"

namespace excoh {

namespace {

using Weight = std::vector<std::int64_t>;

std::vector<std::vector<int>> chain(int n) {
  std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return a;
}

std::int64_t checked_sub_mul(std::int64_t a, std::int64_t b, std::int64_t c) {
  std::int64_t prod = 0, out = 0;
  if (__builtin_mul_overflow(b, c, &prod) || __builtin_sub_overflow(a, prod, &out))
    throw std::overflow_error("Weyl orbit coordinate overflow");
  return out;
}

std::int64_t expected_order(const RootSystemData& r) {
  LieGroupData g = group_data(r.group);
  std::int64_t n = 1;
  for (int l : g.degrees_q) n *= l;
  return n;
}

void successors(const RootSystemData& r, const Weight& mu, std::vector<Weight>& out) {
  const int n = r.rank;
  for (int i = 0; i < n; ++i) {
    if (mu[i] <= 0) continue;
    Weight next = mu;
    for (int j = 0; j < n; ++j)
      if (r.cartan[i][j] != 0) next[j] = checked_sub_mul(mu[j], mu[i], r.cartan[i][j]);
    out.push_back(std::move(next));
  }
}

template <bool Parallel>
LengthHistogram bfs(const RootSystemData& r, std::int64_t cap, const Weight& start) {
  LengthHistogram h;
  std::vector<Weight> level{start};
  std::int64_t total = 0;
  while (!level.empty()) {
    h.counts.push_back(static_cast<std::int64_t>(level.size()));
    total += static_cast<std::int64_t>(level.size());
    if (total > cap) throw std::length_error("Weyl group enumeration exceeded the cap");
    std::vector<Weight> next;
    if constexpr (Parallel) {
      const long long m = static_cast<long long>(level.size());
#pragma omp parallel
      {
        std::vector<Weight> local;
#pragma omp for schedule(static) nowait
        for (long long k = 0; k < m; ++k) successors(r, level[static_cast<std::size_t>(k)], local);
#pragma omp critical
        next.insert(next.end(), std::make_move_iterator(local.begin()),
                    std::make_move_iterator(local.end()));
      }
    } else {
      for (const auto& mu : level) successors(r, mu, next);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  return h;
}

template <bool Parallel>
LengthHistogram enumerate(const RootSystemData& r, std::int64_t cap) {
  const std::int64_t expected = expected_order(r);
  if (expected > cap)
    throw std::length_error("|W(" + r.name + ")| = " + std::to_string(expected) +
                            " exceeds the cap " + std::to_string(cap));
  // A strictly dominant start is always regular; the second pattern is a
  // deterministic fallback should the orbit size ever disagree.
  for (std::int64_t base : {2, 3}) {
    Weight start(static_cast<std::size_t>(r.rank));
    std::int64_t v = 1;
    for (auto& x : start) {
      x = v;
      v *= base;
    }
    LengthHistogram h = bfs<Parallel>(r, cap, start);
    if (h.order() == expected) return h;
  }
  throw InvariantViolation("weyl", "enumerate_weyl", "orbit of a regular weight has |W| elements",
                           r.name);
}

}  // namespace

std::int64_t LengthHistogram::order() const {
  std::int64_t s = 0;
  for (auto c : counts) s += c;
  return s;
}

bool LengthHistogram::palindromic() const {
  return std::equal(counts.begin(), counts.end(), counts.rbegin());
}

RootSystemData root_system(std::string_view name) {
  if (name.size() < 2) throw std::invalid_argument("unknown root system: " + std::string(name));
  int n = 0;
  auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
  if (ec != std::errc() || ptr != name.data() + name.size())
    throw std::invalid_argument("unknown root system: " + std::string(name));
  RootSystemData r;
  r.name = std::string(name);
  r.rank = n;
  switch (name[0]) {
    case 'A':
      if (n < 1 || n > 8) break;
      r.cartan = chain(n);
      r.group = "SU(" + std::to_string(n + 1) + ")";
      return r;
    case 'B':
    case 'C':
      if (n < 2 || n > 6) break;
      r.cartan = chain(n);
      if (name[0] == 'B') r.cartan[n - 1][n - 2] = -2;
      else r.cartan[n - 2][n - 1] = -2;
      // B_n and C_n share a Weyl group; Sp(n) carries the same degrees and avoids small Spin.
      r.group = (name[0] == 'B' && 2 * n + 1 >= 7) ? "Spin(" + std::to_string(2 * n + 1) + ")"
                                                   : "Sp(" + std::to_string(n) + ")";
      return r;
    case 'D':
      if (n < 4 || n > 6) break;
      r.cartan = chain(n);
      r.cartan[n - 2][n - 1] = r.cartan[n - 1][n - 2] = 0;
      r.cartan[n - 3][n - 1] = r.cartan[n - 1][n - 3] = -1;
      r.group = "Spin(" + std::to_string(2 * n) + ")";
      return r;
    case 'G':
      if (n != 2) break;
      r.cartan = {{2, -1}, {-3, 2}};
      r.group = "G2";
      return r;
    case 'F':
      if (n != 4) break;
      r.cartan = {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
      r.group = "F4";
      return r;
    case 'E': {
      if (n < 6 || n > 8) break;
      r.cartan.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
      for (int i = 0; i < n; ++i) r.cartan[i][i] = 2;
      auto edge = [&](int a, int b) { r.cartan[a][b] = r.cartan[b][a] = -1; };
      edge(0, 2);
      edge(1, 3);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
      r.group = "E" + std::to_string(n);
      return r;
    }
    default:
      break;
  }
  throw std::invalid_argument("unknown root system: " + std::string(name));
}

std::vector<std::string> default_weyl_catalog() {
  return {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "D4", "G2", "F4"};
}

namespace serial {
LengthHistogram enumerate_weyl(const RootSystemData& r, std::int64_t cap) {
  return enumerate<false>(r, cap);
}
}  // namespace serial
namespace parallel {
LengthHistogram enumerate_weyl(const RootSystemData& r, std::int64_t cap) {
  return enumerate<true>(r, cap);
}
}  // namespace parallel

LengthHistogram enumerate_weyl(const RootSystemData& r, std::int64_t cap, Exec exec) {
  return exec == Exec::Parallel ? parallel::enumerate_weyl(r, cap) : serial::enumerate_weyl(r, cap);
}

std::vector<std::int64_t> flag_poincare(const LieGroupData& g) {
  std::vector<std::int64_t> num{1};
  for (int l : g.degrees_q) {
    std::vector<std::int64_t> next(num.size() + static_cast<std::size_t>(2 * l), 0);
    for (std::size_t i = 0; i < num.size(); ++i) {
      next[i] += num[i];
      next[i + static_cast<std::size_t>(2 * l)] -= num[i];
    }
    num = std::move(next);
  }
  // Divide by (1 - t^2) once per generator: q_i = n_i + q_{i-2}.
  for (std::size_t k = 0; k < g.degrees_q.size(); ++k) {
    std::vector<std::int64_t> q(num.size(), 0);
    for (std::size_t i = 0; i < num.size(); ++i) q[i] = num[i] + (i >= 2 ? q[i - 2] : 0);
    if (num.size() < 2 || q[num.size() - 1] != 0 || q[num.size() - 2] != 0)
      throw InvariantViolation("weyl", "flag_poincare", "(1 - t^2)^n divides prod (1 - t^{2l})",
                               g.name);
    q.resize(num.size() - 2);
    num = std::move(q);
  }
  while (num.size() > 1 && num.back() == 0) num.pop_back();
  return num;
}

}  // namespace excoh
