#include "excoh/fplinalg.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

#include <omp.h>

namespace excoh {

int configure_threads_from_env() {
  if (const char* s = std::getenv("EXCOH_THREADS")) {
    int n = std::atoi(s);
    if (n > 0) omp_set_num_threads(n);
  }
  return omp_get_max_threads();
}

MatrixFp::MatrixFp(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (p < 2 || p > (1U << 31)) throw std::invalid_argument("MatrixFp: modulus out of range");
}

MatrixFp MatrixFp::from_rows(std::uint32_t p, const std::vector<std::vector<long long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  MatrixFp m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("MatrixFp: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void MatrixFp::set(std::size_t r, std::size_t c, long long v) {
  long long x = v % static_cast<long long>(p_);
  if (x < 0) x += p_;
  (*this)(r, c) = static_cast<std::uint32_t>(x);
}

FpVector MatrixFp::apply(const FpVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("MatrixFp::apply: dimension mismatch");
  FpVector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      acc = (acc + static_cast<std::uint64_t>((*this)(r, c)) * v[c]) % p_;
    out[r] = static_cast<std::uint32_t>(acc);
  }
  return out;
}

MatrixFp MatrixFp::permuted(const std::vector<std::size_t>& row_perm,
                            const std::vector<std::size_t>& col_perm) const {
  MatrixFp out(p_, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(row_perm[r], col_perm[c]);
  return out;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  long long t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    long long q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  if (r != 1) throw std::invalid_argument("inverse_mod: not invertible");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

namespace {

// row[c..] -= f * pivot[c..]
inline void eliminate(std::uint32_t* row, const std::uint32_t* pivot, std::size_t from,
                      std::size_t cols, std::uint32_t f, std::uint32_t p) {
  const std::uint64_t neg = p - f;
  for (std::size_t c = from; c < cols; ++c)
    if (pivot[c]) row[c] = static_cast<std::uint32_t>((row[c] + neg * pivot[c]) % p);
}

template <bool Parallel>
RowReduction reduce_impl(MatrixFp m) {
  const std::uint32_t p = m.modulus();
  const std::size_t rows = m.rows(), cols = m.cols();
  RowReduction out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(piv, k), m(r, k));
    const std::uint64_t inv = inverse_mod(m(r, c), p);
    std::uint32_t* prow = m.row(r);
    for (std::size_t k = c; k < cols; ++k)
      prow[k] = static_cast<std::uint32_t>((prow[k] * inv) % p);
    if constexpr (Parallel) {
      const long long n = static_cast<long long>(rows);
#pragma omp parallel for schedule(static) if (rows * (cols - c) > 16384)
      for (long long i = 0; i < n; ++i) {
        std::size_t ri = static_cast<std::size_t>(i);
        if (ri == r) continue;
        std::uint32_t f = m(ri, c);
        if (f) eliminate(m.row(ri), prow, c, cols, f, p);
      }
    } else {
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == r) continue;
        std::uint32_t f = m(i, c);
        if (f) eliminate(m.row(i), prow, c, cols, f, p);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.rref = std::move(m);
  return out;
}

}  // namespace

namespace serial {
RowReduction row_reduce(MatrixFp m) { return reduce_impl<false>(std::move(m)); }
}  // namespace serial
namespace parallel {
RowReduction row_reduce(MatrixFp m) { return reduce_impl<true>(std::move(m)); }
}  // namespace parallel

RowReduction row_reduce(const MatrixFp& m, Exec exec) {
  return exec == Exec::Parallel ? parallel::row_reduce(m) : serial::row_reduce(m);
}

std::size_t rank(const MatrixFp& m, Exec exec) { return row_reduce(m, exec).rank; }

std::vector<FpVector> kernel_basis(const MatrixFp& m, Exec exec) {
  RowReduction rr = row_reduce(m, exec);
  const std::uint32_t p = m.modulus();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;
  std::vector<FpVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    FpVector v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < rr.rank; ++i) {
      std::uint32_t e = rr.rref(i, f);
      v[rr.pivots[i]] = e == 0 ? 0 : p - e;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<FpVector> image_membership(const MatrixFp& m, const FpVector& v, Exec exec) {
  if (v.size() != m.rows())
    throw std::invalid_argument("image_membership: vector has " + std::to_string(v.size()) +
                                " entries, matrix has " + std::to_string(m.rows()) + " rows");
  MatrixFp aug(m.modulus(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug.set(r, m.cols(), v[r]);
  }
  RowReduction rr = row_reduce(aug, exec);
  if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
  FpVector x(m.cols(), 0);
  for (std::size_t i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = rr.rref(i, m.cols());
  return x;
}

}  // namespace excoh
