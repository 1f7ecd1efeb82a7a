#include "dgmf/errors.hpp"
#include "dgmf/groebner.hpp"
#include "dgmf/linkage.hpp"

namespace dgmf {

PolyMatrix build_X0(const BComplexData& bc, const AlphaBeta& ab, const DgaBundle& M) {
  const RingPtr& R = M.ring();
  const std::size_t r1 = M.rank(1), r2 = M.rank(2);
  const Poly& b4 = ab.beta[4](0, 0);
  if (!b4.is_unit()) throw InternalCheckFailed("beta_4 is not a unit: " + b4.to_string());
  Poly b4inv = Poly::constant(R, R->field().inv(b4.constant_term()));
  const PolyMatrix& h3 = bc.h.maps.at(3);

  // H(s, q) = beta_4^{-1} h_3(b_s (x) d_q), the form X(b_s) . d_q.
  PolyMatrix H(R, r1, r2);
  for (std::size_t s = 0; s < r1; ++s)
    for (std::size_t q = 0; q < r2; ++q) H(s, q) = b4inv * h3(0, s * r2 + q);
  PolyMatrix G22t = raw_gram(M, 2).transpose();
  PolyMatrix X(R, 0, 0);
  try {
    X = invert_unimodular(G22t) * H.transpose();
  } catch (const NotUnimodular& e) {
    throw NotPerfectPairing(std::string("M_2 pairing is not perfect: ") + e.what());
  }

  const Poly& b0 = ab.beta0;
  if (M.d(2) * X != PolyMatrix::scalar(R, r1, b0) - ab.alpha[1] * ab.beta[1])
    throw InternalCheckFailed("m_2 X differs from beta_0(1) - alpha_1 beta_1");
  if (X * M.d(2) + M.d(3) * dagger(M, X) != PolyMatrix::scalar(R, r2, b0) - ab.alpha[2] * ab.beta[2])
    throw InternalCheckFailed("X m_2 + m_3 X^dagger differs from beta_0(1) - alpha_2 beta_2");
  return X;
}

XData correct_X(const PolyMatrix& X0, const DgaBundle& M, const KoszulAlgebra& K,
                const AlphaBeta& ab) {
  const RingPtr& R = M.ring();
  const std::size_t r1 = M.rank(1), r3 = M.rank(3);
  const PolyMatrix& alpha1 = ab.alpha[1];
  XData xd{X0, PolyMatrix(R, 0, 0), PolyMatrix(R, 0, 0), PolyMatrix(R, 0, 0),
           PolyMatrix(R, 0, 0), PolyMatrix(R, 0, 0), PolyMatrix(R, 0, 0)};

  try {
    xd.u = solve_lift(M.d(3), X0 * alpha1);
  } catch (const NotInImage& e) {
    throw LiftFailed(std::string("X alpha_1 is not in the image of m_3: ") + e.what());
  }

  // v(e_i) = (u(e_i) . alpha_1(e_i)) / a_i.
  xd.v = PolyMatrix(R, 1, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    Poly num = multiply(M, 3, 1, xd.u.col(i), alpha1.col(i))[0];
    xd.v(0, i) = poly_divide_exact(num, K.generators[i]);
  }
  xd.u_prime = xd.u + M.d(4) * xd.v;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) {
      Poly s = multiply(M, 3, 1, xd.u_prime.col(i), alpha1.col(j))[0] +
               (i == j ? Poly(R) : multiply(M, 3, 1, xd.u_prime.col(j), alpha1.col(i))[0]);
      if (!s.is_zero())
        throw InternalCheckFailed("u' is not alternating on e_" + std::to_string(i) + ", e_" +
                                  std::to_string(j));
    }

  xd.U = PolyMatrix(R, r3, r1);
  PolyMatrix uc = xd.u_prime * ab.change_inv;
  for (std::size_t j = 0; j < M.split11.size(); ++j) xd.U.set_col(M.split11[j], uc.col(j));
  if (!M.split12.empty()) {
    // U(b_t) . b_s = -U(b_s) . b_t on M_{1,1} and 0 on M_{1,2}.
    PolyMatrix target(R, r1, M.split12.size());
    for (std::size_t k = 0; k < M.split12.size(); ++k) {
      std::vector<Poly> et(r1, Poly(R));
      et[M.split12[k]] = Poly::from_int(R, 1);
      for (std::size_t s : M.split11) target(s, k) = -multiply(M, 3, 1, xd.U.col(s), et)[0];
    }
    PolyMatrix cols = invert_unimodular(raw_gram(M, 3).transpose()) * target;
    for (std::size_t k = 0; k < M.split12.size(); ++k) xd.U.set_col(M.split12[k], cols.col(k));
  }
  for (std::size_t s = 0; s < r1; ++s)
    for (std::size_t t = s; t < r1; ++t) {
      std::vector<Poly> es(r1, Poly(R)), et(r1, Poly(R));
      es[s] = Poly::from_int(R, 1);
      et[t] = Poly::from_int(R, 1);
      Poly v = multiply(M, 3, 1, xd.U.col(s), et)[0] + multiply(M, 3, 1, xd.U.col(t), es)[0];
      if (s == t) v = multiply(M, 3, 1, xd.U.col(s), es)[0];
      if (!v.is_zero())
        throw InternalCheckFailed("U is not alternating on b_" + std::to_string(s) + ", b_" +
                                  std::to_string(t));
    }

  xd.X = X0 - M.d(3) * xd.U;
  xd.Xdag = dagger(M, xd.X);
  return xd;
}

Report verify_hypotheses(const DgaBundle& M, const AlphaBeta& ab, const PolyMatrix& X,
                         const PolyMatrix& Xdag) {
  const RingPtr& R = M.ring();
  const Poly& b0 = ab.beta0;
  Report rep;
  rep.expect_zero("X_alpha1_zero", X * ab.alpha[1]);
  rep.expect_equal("m2_X", M.d(2) * X, PolyMatrix::scalar(R, M.rank(1), b0) - ab.alpha[1] * ab.beta[1]);
  rep.expect_equal("X_m2_plus_m3_Xdag", X * M.d(2) + M.d(3) * Xdag,
                   PolyMatrix::scalar(R, M.rank(2), b0) - ab.alpha[2] * ab.beta[2]);
  rep.expect_zero("Xdag_X_zero", Xdag * X);
  rep.expect_zero("Xdag_alpha2_zero", Xdag * ab.alpha[2]);
  return rep;
}

}  // namespace dgmf
