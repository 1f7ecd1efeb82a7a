#include "dgmf/linear_algebra.hpp"

#include "dgmf/errors.hpp"

namespace dgmf {

LinearSolution solve_linear_system(const Field& F, std::vector<std::vector<Coeff>> A,
                                   std::vector<Coeff> b, std::size_t n) {
  const std::size_t m = A.size();
  if (b.size() != m) throw ShapeMismatch("right-hand side length differs from row count");
  for (const auto& row : A)
    if (row.size() != n) throw ShapeMismatch("ragged linear system");

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = m;
    for (std::size_t i = r; i < m; ++i)
      if (!F.is_zero(A[i][c])) {
        piv = i;
        break;
      }
    if (piv == m) continue;
    std::swap(A[piv], A[r]);
    std::swap(b[piv], b[r]);
    Coeff inv = F.inv(A[r][c]);
    for (std::size_t j = c; j < n; ++j) A[r][j] = F.mul(A[r][j], inv);
    b[r] = F.mul(b[r], inv);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || F.is_zero(A[i][c])) continue;
      Coeff factor = A[i][c];
      for (std::size_t j = c; j < n; ++j) A[i][j] = F.sub(A[i][j], F.mul(factor, A[r][j]));
      b[i] = F.sub(b[i], F.mul(factor, b[r]));
    }
    pivot_cols.push_back(c);
    ++r;
  }

  LinearSolution sol;
  for (std::size_t i = r; i < m; ++i)
    if (!F.is_zero(b[i])) return sol;
  sol.consistent = true;
  sol.particular.assign(n, F.zero());
  for (std::size_t i = 0; i < r; ++i) sol.particular[pivot_cols[i]] = b[i];

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Coeff> v(n, F.zero());
    v[f] = F.one();
    for (std::size_t i = 0; i < r; ++i) v[pivot_cols[i]] = F.neg(A[i][f]);
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

}  // namespace dgmf
