#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "excoh/exec.hpp"

namespace excoh {

using FpVector = std::vector<std::uint32_t>;

// Dense row-major matrix over F_p, entries in [0, p).
class MatrixFp {
 public:
  MatrixFp() = default;
  MatrixFp(std::uint32_t p, std::size_t rows, std::size_t cols);
  static MatrixFp from_rows(std::uint32_t p, const std::vector<std::vector<long long>>& rows);

  std::uint32_t modulus() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, long long v);  // reduces v mod p
  std::uint32_t* row(std::size_t r) { return data_.data() + r * cols_; }
  const std::uint32_t* row(std::size_t r) const { return data_.data() + r * cols_; }

  FpVector apply(const FpVector& v) const;  // m * v
  MatrixFp permuted(const std::vector<std::size_t>& row_perm,
                    const std::vector<std::size_t>& col_perm) const;
  bool operator==(const MatrixFp&) const = default;

 private:
  std::uint32_t p_ = 2;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> data_;
};

struct RowReduction {
  std::size_t rank = 0;
  MatrixFp rref;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero rref row
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

namespace serial {
RowReduction row_reduce(MatrixFp m);
}
namespace parallel {
RowReduction row_reduce(MatrixFp m);
}

RowReduction row_reduce(const MatrixFp& m, Exec exec = Exec::Serial);
std::size_t rank(const MatrixFp& m, Exec exec = Exec::Serial);
std::vector<FpVector> kernel_basis(const MatrixFp& m, Exec exec = Exec::Serial);
// Witness x with m * x = v when v lies in the column span. Throws
// std::invalid_argument if v.size() != m.rows().
std::optional<FpVector> image_membership(const MatrixFp& m, const FpVector& v,
                                         Exec exec = Exec::Serial);

}  // namespace excoh
