#include "dgmf/matrix.hpp"

#include "dgmf/errors.hpp"

namespace dgmf {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, Poly(ring_)) {}

PolyMatrix PolyMatrix::identity(const RingPtr& ring, std::size_t n) {
  return scalar(ring, n, Poly::from_int(ring, 1));
}

PolyMatrix PolyMatrix::scalar(const RingPtr& ring, std::size_t n, const Poly& p) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = p;
  return m;
}

PolyMatrix PolyMatrix::column(const std::vector<Poly>& entries) {
  if (entries.empty()) throw ShapeMismatch("column from empty entry list");
  PolyMatrix m(entries[0].ring(), entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
  return m;
}

PolyMatrix PolyMatrix::row(const std::vector<Poly>& entries) {
  if (entries.empty()) throw ShapeMismatch("row from empty entry list");
  PolyMatrix m(entries[0].ring(), 1, entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(0, i) = entries[i];
  return m;
}

PolyMatrix PolyMatrix::from_columns(const RingPtr& ring, std::size_t rows,
                                    const std::vector<std::vector<Poly>>& cols) {
  PolyMatrix m(ring, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_col(c, cols[c]);
  return m;
}

std::vector<Poly> PolyMatrix::col(std::size_t c) const {
  std::vector<Poly> v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void PolyMatrix::set_col(std::size_t c, const std::vector<Poly>& v) {
  if (v.size() != rows_) throw ShapeMismatch("column length " + std::to_string(v.size()) +
                                             " for matrix " + shape_string());
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (!same_shape(o)) throw ShapeMismatch("sum of " + shape_string() + " and " + o.shape_string());
  PolyMatrix m(ring_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + o.data_[i];
  return m;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  if (!same_shape(o))
    throw ShapeMismatch("difference of " + shape_string() + " and " + o.shape_string());
  PolyMatrix m(ring_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - o.data_[i];
  return m;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix m(ring_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = -data_[i];
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_)
    throw ShapeMismatch("product of " + shape_string() + " and " + o.shape_string());
  PolyMatrix m(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Poly& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Poly& b = o(k, j);
        if (b.is_zero()) continue;
        m(i, j) += a * b;
      }
    }
  }
  return m;
}

PolyMatrix PolyMatrix::scaled(const Poly& p) const {
  PolyMatrix m(ring_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * p;
  return m;
}

std::vector<Poly> PolyMatrix::apply(const std::vector<Poly>& v) const {
  if (v.size() != cols_)
    throw ShapeMismatch("vector of length " + std::to_string(v.size()) + " for " + shape_string());
  std::vector<Poly> out(rows_, Poly(ring_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (!v[k].is_zero() && !(*this)(i, k).is_zero()) out[i] += (*this)(i, k) * v[k];
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix m(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

PolyMatrix PolyMatrix::select_cols(const std::vector<std::size_t>& idx) const {
  PolyMatrix m(ring_, rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] >= cols_) throw ShapeMismatch("column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) m(i, j) = (*this)(i, idx[j]);
  }
  return m;
}

PolyMatrix PolyMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  PolyMatrix m(ring_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= rows_) throw ShapeMismatch("row index out of range");
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
  }
  return m;
}

PolyMatrix PolyMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeMismatch("block out of range");
  PolyMatrix m(ring_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

PolyMatrix PolyMatrix::hstack(const PolyMatrix& o) const {
  if (rows_ != o.rows_) throw ShapeMismatch("hstack of " + shape_string() + " and " + o.shape_string());
  PolyMatrix m(ring_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) m(i, cols_ + j) = o(i, j);
  }
  return m;
}

PolyMatrix PolyMatrix::vstack(const PolyMatrix& o) const {
  if (cols_ != o.cols_) throw ShapeMismatch("vstack of " + shape_string() + " and " + o.shape_string());
  PolyMatrix m(ring_, rows_ + o.rows_, cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 0; i < rows_; ++i) m(i, j) = (*this)(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i) m(rows_ + i, j) = o(i, j);
  }
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : data_)
    if (!p.is_zero()) return false;
  return true;
}

bool PolyMatrix::is_constant() const {
  for (const auto& p : data_)
    if (!p.is_constant()) return false;
  return true;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return same_shape(o) && data_ == o.data_;
}

std::string PolyMatrix::shape_string() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

std::string PolyMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i ? "; " : "";
    for (std::size_t j = 0; j < cols_; ++j) out += (j ? ", " : "") + (*this)(i, j).to_string();
  }
  return out + "]";
}

BlockMatrix::BlockMatrix(RingPtr ring, std::vector<std::size_t> row_sizes,
                         std::vector<std::size_t> col_sizes)
    : ring_(std::move(ring)),
      rs_(std::move(row_sizes)),
      cs_(std::move(col_sizes)),
      blocks_(rs_.size(), std::vector<std::optional<PolyMatrix>>(cs_.size())) {}

BlockMatrix& BlockMatrix::set(std::size_t i, std::size_t j, const PolyMatrix& m) {
  if (i >= rs_.size() || j >= cs_.size()) throw ShapeMismatch("block index out of range");
  if (m.rows() != rs_[i] || m.cols() != cs_[j])
    throw ShapeMismatch("block (" + std::to_string(i) + "," + std::to_string(j) + ") expects " +
                        std::to_string(rs_[i]) + "x" + std::to_string(cs_[j]) + ", got " +
                        m.shape_string());
  blocks_[i][j] = m;
  return *this;
}

PolyMatrix BlockMatrix::build() const {
  std::size_t R = 0, C = 0;
  for (auto r : rs_) R += r;
  for (auto c : cs_) C += c;
  PolyMatrix out(ring_, R, C);
  std::size_t r0 = 0;
  for (std::size_t i = 0; i < rs_.size(); ++i) {
    std::size_t c0 = 0;
    for (std::size_t j = 0; j < cs_.size(); ++j) {
      if (const auto& b = blocks_[i][j]) {
        for (std::size_t a = 0; a < rs_[i]; ++a)
          for (std::size_t c = 0; c < cs_[j]; ++c) out(r0 + a, c0 + c) = (*b)(a, c);
      }
      c0 += cs_[j];
    }
    r0 += rs_[i];
  }
  return out;
}

PolyMatrix block_of(const PolyMatrix& m, const std::vector<std::size_t>& row_sizes,
                    const std::vector<std::size_t>& col_sizes, std::size_t i, std::size_t j) {
  std::size_t r0 = 0, c0 = 0;
  for (std::size_t k = 0; k < i; ++k) r0 += row_sizes[k];
  for (std::size_t k = 0; k < j; ++k) c0 += col_sizes[k];
  return m.block(r0, c0, row_sizes[i], col_sizes[j]);
}

std::string first_difference(const PolyMatrix& a, const PolyMatrix& b) {
  if (!a.same_shape(b)) return "shape " + a.shape_string() + " vs " + b.shape_string();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j))
        return "(" + std::to_string(i) + "," + std::to_string(j) + "): " + a(i, j).to_string() +
               " vs " + b(i, j).to_string();
  return "";
}

}  // namespace dgmf

namespace dgmf {

PolyMatrix kron(const PolyMatrix& A, const PolyMatrix& B) {
  PolyMatrix out(A.ring(), A.rows() * B.rows(), A.cols() * B.cols());
  for (std::size_t a1 = 0; a1 < A.rows(); ++a1)
    for (std::size_t a2 = 0; a2 < A.cols(); ++a2) {
      if (A(a1, a2).is_zero()) continue;
      for (std::size_t b1 = 0; b1 < B.rows(); ++b1)
        for (std::size_t b2 = 0; b2 < B.cols(); ++b2)
          if (!B(b1, b2).is_zero())
            out(a1 * B.rows() + b1, a2 * B.cols() + b2) = A(a1, a2) * B(b1, b2);
    }
  return out;
}

}  // namespace dgmf
