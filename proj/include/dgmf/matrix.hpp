#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dgmf/poly.hpp"

namespace dgmf {

// Dense row-major matrix of polynomials. Columns are images of source basis
// vectors, so a map A : F^c -> F^r is an r x c matrix.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

  static PolyMatrix identity(const RingPtr& ring, std::size_t n);
  static PolyMatrix scalar(const RingPtr& ring, std::size_t n, const Poly& p);
  static PolyMatrix column(const std::vector<Poly>& entries);
  static PolyMatrix row(const std::vector<Poly>& entries);
  // Columns must share a ring and length; `rows` fixes the height when empty.
  static PolyMatrix from_columns(const RingPtr& ring, std::size_t rows,
                                 const std::vector<std::vector<Poly>>& cols);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Poly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Poly> col(std::size_t c) const;
  void set_col(std::size_t c, const std::vector<Poly>& v);

  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator-() const;
  PolyMatrix scaled(const Poly& p) const;
  std::vector<Poly> apply(const std::vector<Poly>& v) const;

  PolyMatrix transpose() const;
  PolyMatrix select_cols(const std::vector<std::size_t>& idx) const;
  PolyMatrix select_rows(const std::vector<std::size_t>& idx) const;
  PolyMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  PolyMatrix hstack(const PolyMatrix& o) const;
  PolyMatrix vstack(const PolyMatrix& o) const;

  bool is_zero() const;
  bool is_constant() const;
  bool operator==(const PolyMatrix& o) const;
  bool operator!=(const PolyMatrix& o) const { return !(*this == o); }
  bool same_shape(const PolyMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  std::string shape_string() const;
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Poly> data_;
};

// Assembles a matrix from a grid of blocks; unset blocks are zero.
class BlockMatrix {
 public:
  BlockMatrix(RingPtr ring, std::vector<std::size_t> row_sizes,
              std::vector<std::size_t> col_sizes);
  BlockMatrix& set(std::size_t i, std::size_t j, const PolyMatrix& m);
  PolyMatrix build() const;

 private:
  RingPtr ring_;
  std::vector<std::size_t> rs_, cs_;
  std::vector<std::vector<std::optional<PolyMatrix>>> blocks_;
};

// Extracts block (i, j) of a matrix partitioned by the given sizes.
PolyMatrix block_of(const PolyMatrix& m, const std::vector<std::size_t>& row_sizes,
                    const std::vector<std::size_t>& col_sizes, std::size_t i, std::size_t j);

// First entry where a and b differ, as "(r,c): lhs vs rhs"; empty if equal.
std::string first_difference(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace dgmf

namespace dgmf {

// Kronecker product with row and column index a*rows(B)+b, a*cols(B)+b.
PolyMatrix kron(const PolyMatrix& A, const PolyMatrix& B);

}  // namespace dgmf
