#include "dgmf/errors.hpp"
#include "dgmf/groebner.hpp"
#include "dgmf/linkage.hpp"

namespace dgmf {

void linkage_prechecks(const DgaBundle& M) {
  std::size_t r1 = M.rank(1), r2 = M.rank(2), r3 = M.rank(3);
  if (M.rank(0) != 1 || M.rank(4) != 1)
    throw PrecheckFailed("M_0 and M_4 must have rank one");
  if (r1 < 4) throw PrecheckFailed("rank M_1 = " + std::to_string(r1) + " is below 4");
  if (r2 + 2 != 2 * r1)
    throw PrecheckFailed("rank M_2 = " + std::to_string(r2) + " but 2 rank M_1 - 2 = " +
                         std::to_string(2 * r1 - 2));
  if (r3 != r1)
    throw PrecheckFailed("rank M_3 = " + std::to_string(r3) + " differs from rank M_1 = " +
                         std::to_string(r1));
  if (M.split11.size() != 4)
    throw PrecheckFailed("M_{1,1} must have rank 4, got " + std::to_string(M.split11.size()));
  if (M.split12.size() != r1 - 4)
    throw PrecheckFailed("rank M_{3,2} = rank M_{1,2} must equal rank M_1 - 4");
}

PolyMatrix embed_M12(const DgaBundle& M) {
  PolyMatrix E(M.ring(), M.rank(1), M.split12.size());
  for (std::size_t j = 0; j < M.split12.size(); ++j) E(M.split12[j], j) = Poly::from_int(M.ring(), 1);
  return E;
}

PolyMatrix alpha_from_alpha1(const DgaBundle& M, const KoszulAlgebra& K, const PolyMatrix& alpha1,
                             int i) {
  const RingPtr& R = M.ring();
  const auto& subsets = K.subsets[static_cast<std::size_t>(i)];
  PolyMatrix out(R, M.rank(i), subsets.size());
  for (std::size_t c = 0; c < subsets.size(); ++c) {
    const auto& S = subsets[c];
    if (S.empty()) {
      out(0, c) = Poly::from_int(R, 1);
      continue;
    }
    std::vector<Poly> acc = alpha1.col(static_cast<std::size_t>(S[0]));
    for (std::size_t k = 1; k < S.size(); ++k)
      acc = multiply(M, static_cast<int>(k), 1, acc, alpha1.col(static_cast<std::size_t>(S[k])));
    out.set_col(c, acc);
  }
  return out;
}

AlphaBeta build_alpha_beta(const LinkageInput& in, const KoszulAlgebra& K) {
  const DgaBundle& M = in.M;
  const RingPtr& R = M.ring();
  AlphaBeta ab{{}, {}, Poly(R), PolyMatrix(R, 0, 0), PolyMatrix(R, 0, 0)};

  PolyMatrix m1_11 = M.d(1).select_cols(M.split11);
  PolyMatrix k1 = K.bundle.d(1);
  try {
    ab.change = solve_lift(m1_11, k1);
    ab.change_inv = invert_unimodular(ab.change);
  } catch (const NotInImage& e) {
    throw SplitNotAligned(std::string("a is not in the image of m_1 on M_{1,1}: ") + e.what());
  } catch (const NotUnimodular& e) {
    throw SplitNotAligned(std::string("change of basis on M_{1,1} is not invertible: ") + e.what());
  }

  PolyMatrix alpha1(R, M.rank(1), 4);
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t k = 0; k < 4; ++k) alpha1(M.split11[k], j) = ab.change(k, j);
  for (int i = 0; i <= 4; ++i)
    ab.alpha.push_back(i == 1 ? alpha1 : alpha_from_alpha1(M, K, alpha1, i));

  // [beta_i(theta) ^ phi]_K = [theta * alpha_{4-i}(phi)]_M.
  for (int i = 0; i <= 4; ++i) {
    std::size_t ri = M.rank(i), rk = K.bundle.rank(4 - i);
    PolyMatrix rhs(R, ri, rk);
    PolyMatrix prod = M.mu(i, 4 - i) * kron(PolyMatrix::identity(R, ri), ab.alpha[4 - i]);
    for (std::size_t q = 0; q < ri; ++q)
      for (std::size_t t = 0; t < rk; ++t) rhs(q, t) = prod(0, q * rk + t) * M.orientation;
    PolyMatrix GKt = raw_gram(K.bundle, i).transpose();
    ab.beta.push_back(invert_unimodular(GKt) * rhs.transpose());
  }
  ab.beta0 = ab.beta[0](0, 0);

  const FreeComplex& Kc = K.bundle.complex;
  for (int i = 1; i <= 4; ++i) {
    if (M.d(i) * ab.alpha[i] != ab.alpha[i - 1] * Kc.d(i))
      throw ChainMapCheckFailed("alpha fails to commute with the differential in degree " +
                                std::to_string(i));
    if (Kc.d(i) * ab.beta[i] != ab.beta[i - 1] * M.d(i))
      throw ChainMapCheckFailed("beta fails to commute with the differential in degree " +
                                std::to_string(i));
  }
  for (int i = 0; i <= 4; ++i)
    if (ab.beta[i] * ab.alpha[i] != PolyMatrix::scalar(R, Kc.rank(i), ab.beta0))
      throw ChainMapCheckFailed("beta_" + std::to_string(i) + " alpha_" + std::to_string(i) +
                                " is not beta_0(1) times the identity");
  return ab;
}

Report check_alpha_divided_powers(const DgaBundle& M, const KoszulAlgebra& K, const AlphaBeta& ab) {
  Report rep;
  const RingPtr& R = M.ring();
  const PolyMatrix& a2 = ab.alpha[2];
  const PolyMatrix& a4 = ab.alpha[4];
  std::size_t n = a2.cols();
  std::string bad;
  for (std::size_t q = 0; q < n && bad.empty(); ++q)
    for (std::size_t p = q; p < n && bad.empty(); ++p) {
      std::vector<Poly> phi(n, Poly(R));
      phi[q] += Poly::from_int(R, 1);
      phi[p] += Poly::from_int(R, 1);
      Poly lhs = a4(0, 0) * divided_square(K.bundle, phi);
      Poly rhs = divided_square(M, a2.apply(phi));
      if (lhs != rhs) bad = "phi = e" + std::to_string(q) + " + e" + std::to_string(p);
    }
  rep.add("alpha_preserves_divided_squares", bad.empty(), bad);
  return rep;
}

}  // namespace dgmf
