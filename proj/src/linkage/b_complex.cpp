#include "dgmf/errors.hpp"
#include "dgmf/linkage.hpp"

namespace dgmf {

namespace {

std::size_t pair_index(const std::vector<std::pair<std::size_t, std::size_t>>& basis, std::size_t a,
                       std::size_t b) {
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (basis[k].first == a && basis[k].second == b) return k;
  throw ShapeMismatch("pair not in basis");
}

}  // namespace

BComplexData build_B_and_c(const DgaBundle& M, const KoszulAlgebra& K, const AlphaBeta& ab) {
  const RingPtr& R = M.ring();
  const DgaBundle& KB = K.bundle;
  const std::size_t r1 = M.rank(1), r2 = M.rank(2);
  const PolyMatrix m1 = M.d(1), m2 = M.d(2);

  BComplexData bc{FreeComplex(R, {1}, {}), {}, {}, {}, {}};
  for (std::size_t s = 0; s < r1; ++s)
    for (std::size_t t = s + 1; t < r1; ++t) bc.wedge_basis.push_back({s, t});
  for (std::size_t q = 0; q < r2; ++q)
    for (std::size_t p = q; p < r2; ++p) bc.d2_basis.push_back({q, p});
  const std::size_t nw = bc.wedge_basis.size(), nd = bc.d2_basis.size();
  std::vector<std::size_t> ranks{1, r1, nw + r2, r1 * r2, nd};

  // b_s ^ b_k as a signed wedge basis coordinate.
  auto add_wedge = [&](PolyMatrix& out, std::size_t col, std::size_t s, std::size_t k, const Poly& c) {
    if (s == k || c.is_zero()) return;
    if (s < k)
      out(pair_index(bc.wedge_basis, s, k), col) += c;
    else
      out(pair_index(bc.wedge_basis, k, s), col) -= c;
  };

  PolyMatrix b1 = m1;
  PolyMatrix b2(R, ranks[1], ranks[2]);
  for (std::size_t w = 0; w < nw; ++w) {
    auto [s, t] = bc.wedge_basis[w];
    for (std::size_t k = 0; k < r1; ++k) {
      if (k == t) b2(k, w) += m1(0, s);
      if (k == s) b2(k, w) -= m1(0, t);
    }
  }
  for (std::size_t q = 0; q < r2; ++q)
    for (std::size_t k = 0; k < r1; ++k) b2(k, nw + q) = m2(k, q);

  PolyMatrix b3(R, ranks[2], ranks[3]);
  for (std::size_t s = 0; s < r1; ++s)
    for (std::size_t t = 0; t < r2; ++t) {
      std::size_t col = s * r2 + t;
      for (std::size_t k = 0; k < r1; ++k) add_wedge(b3, col, s, k, -m2(k, t));
      b3(nw + t, col) = m1(0, s);
    }

  PolyMatrix b4(R, ranks[3], ranks[4]);
  for (std::size_t e = 0; e < nd; ++e) {
    auto [q, p] = bc.d2_basis[e];
    for (std::size_t s = 0; s < r1; ++s) {
      b4(s * r2 + p, e) += m2(s, q);
      if (q != p) b4(s * r2 + q, e) += m2(s, p);
    }
  }
  bc.B = FreeComplex(R, ranks, {b1, b2, b3, b4});
  if (auto bad = complex_defect(bc.B))
    throw InternalCheckFailed("B is not a complex in degree " + std::to_string(*bad));

  const Poly& b0 = ab.beta0;
  const PolyMatrix &be1 = ab.beta[1], &be2 = ab.beta[2], &be3 = ab.beta[3], &be4 = ab.beta[4];

  PolyMatrix c2(R, KB.rank(2), ranks[2]);
  for (std::size_t w = 0; w < nw; ++w) {
    auto [s, t] = bc.wedge_basis[w];
    std::vector<Poly> prod = be2.apply(M.mu(1, 1).col(s * r1 + t));
    std::vector<Poly> wedge = multiply(KB, 1, 1, be1.col(s), be1.col(t));
    for (std::size_t k = 0; k < prod.size(); ++k) c2(k, w) = b0 * prod[k] - wedge[k];
  }

  PolyMatrix c3(R, KB.rank(3), ranks[3]);
  for (std::size_t s = 0; s < r1; ++s)
    for (std::size_t t = 0; t < r2; ++t) {
      std::vector<Poly> prod = be3.apply(M.mu(1, 2).col(s * r2 + t));
      std::vector<Poly> wedge = multiply(KB, 1, 2, be1.col(s), be2.col(t));
      for (std::size_t k = 0; k < prod.size(); ++k) c3(k, s * r2 + t) = b0 * prod[k] - wedge[k];
    }

  PolyMatrix c4(R, 1, ranks[4]);
  for (std::size_t e = 0; e < nd; ++e) {
    auto [q, p] = bc.d2_basis[e];
    if (q == p)
      c4(0, e) = b0 * be4(0, 0) * M.sq2[q] - divided_square(KB, be2.col(q));
    else
      c4(0, e) = b0 * be4(0, 0) * M.mu(2, 2)(0, q * r2 + p) -
                 multiply(KB, 2, 2, be2.col(q), be2.col(p))[0];
  }

  bc.c = {PolyMatrix(R, 1, 1), PolyMatrix(R, KB.rank(1), ranks[1]), c2, c3, c4};
  ChainMap cm(bc.B, KB.complex, bc.c);
  if (auto bad = chain_map_defect(cm))
    throw InternalCheckFailed("c is not a chain map in degree " + std::to_string(*bad));
  return bc;
}

void build_B_homotopy(BComplexData& bc, const KoszulAlgebra& K) {
  ChainMap cm(bc.B, K.bundle.complex, bc.c);
  std::vector<std::size_t> m2cols;
  for (std::size_t q = bc.wedge_basis.size(); q < bc.B.rank(2); ++q) m2cols.push_back(q);
  bc.h = build_homotopy(cm, {zero_prescription(cm, 0), zero_prescription(cm, 1),
                             zero_prescription(cm, 2, m2cols)});
}

}  // namespace dgmf
