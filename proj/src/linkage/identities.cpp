#include "dgmf/errors.hpp"
#include "dgmf/groebner.hpp"
#include "dgmf/linkage.hpp"

namespace dgmf {

namespace {

std::string deg(int i) { return "_deg" + std::to_string(i); }

PolyMatrix scalar(const RingPtr& R, std::size_t n, const Poly& p) { return PolyMatrix::scalar(R, n, p); }

// z_i or w_i, zero outside 0..3.
PolyMatrix sigma_map(const std::vector<PolyMatrix>& maps, const FreeComplex& C, int i) {
  if (i >= 0 && i <= 3) return maps[static_cast<std::size_t>(i)];
  return PolyMatrix(C.ring(), C.rank(i + 1), C.rank(i));
}

// Nonzero generators of the kernel of A, mapped through B.
bool kernel_meets_trivially(const PolyMatrix& A, const PolyMatrix& image_of_kernel_map) {
  for (const ModuleVector& s : syzygy_module(A)) {
    std::vector<Poly> v = image_of_kernel_map.apply(s);
    for (const Poly& p : v)
      if (!p.is_zero()) return false;
  }
  return true;
}

}  // namespace

Report verify_identity_suite(const PipelineState& st) {
  const DgaBundle& M = st.input.M;
  const DgaBundle& KB = st.K.bundle;
  const FreeComplex& Mc = M.complex;
  const FreeComplex& Kc = KB.complex;
  const RingPtr& R = M.ring();
  const AlphaBeta& ab = st.ab;
  const SigmaData& sd = st.sd;
  const M3Split& sp = st.split;
  const Poly& b0 = ab.beta0;
  const Poly& f = st.input.f;
  const Poly& r = sd.r;
  const PolyMatrix& X = st.xd.X;
  const PolyMatrix& Xd = st.xd.Xdag;
  const auto& al = ab.alpha;
  const auto& be = ab.beta;
  const std::size_t r1 = M.rank(1), r2 = M.rank(2), r3 = M.rank(3);
  const PolyMatrix E12 = embed_M12(M);
  const PolyMatrix E12t = E12.transpose();
  const PolyMatrix proj12 = E12 * E12t;
  const Poly ks = Kc.d(1).apply(sd.sigma)[0];
  Report rep;

  for (int i = 1; i <= 4; ++i) {
    rep.expect_equal("beta_chain_map" + deg(i), Kc.d(i) * be[i], be[i - 1] * Mc.d(i));
    rep.expect_equal("alpha_chain_map" + deg(i), Mc.d(i) * al[i], al[i - 1] * Kc.d(i));
  }
  for (int i = 0; i <= 4; ++i)
    rep.expect_equal("beta_alpha_scalar" + deg(i), be[i] * al[i], scalar(R, Kc.rank(i), b0));
  rep.expect_equal("beta4_orientation", be[4], scalar(R, 1, M.orientation));

  for (int i = 0; i <= 4; ++i) {
    int j = 4 - i;
    PolyMatrix lhs = M.mu(i, j) * kron(PolyMatrix::identity(R, M.rank(i)), al[j] * be[j]);
    PolyMatrix rhs = M.mu(i, j) * kron(al[i] * be[i], PolyMatrix::identity(R, M.rank(j)));
    rep.expect_equal("pairing_symmetry" + deg(i), lhs, rhs);
  }
  {
    std::string bad;
    for (int i = 0; i <= 4 && bad.empty(); ++i)
      for (int j = 0; j <= i && bad.empty(); ++j) {
        PolyMatrix lhs = be[i] * M.mu(j, i - j) * kron(PolyMatrix::identity(R, M.rank(j)), al[i - j]);
        PolyMatrix rhs = KB.mu(j, i - j) * kron(be[j], PolyMatrix::identity(R, Kc.rank(i - j)));
        if (lhs != rhs) bad = "(" + std::to_string(i) + "," + std::to_string(j) + ") " + first_difference(lhs, rhs);
      }
    rep.add("beta_of_products", bad.empty(), bad);
  }
  rep.expect_zero("beta3_vanishes_on_M32", be[3] * sp.basis32);
  PolyMatrix b31inv = invert_unimodular(be[3] * sp.basis31);
  rep.expect_equal("beta3_inverse_projects_to_M31", b31inv * be[3], sp.coord31);
  rep.expect_zero("w3_kills_beta3_inverse_z2", sd.w[3] * sp.basis31 * b31inv * sd.z[2]);

  rep.add("sigma_decomposes_f", r * b0 + ks == f);
  for (int i = 1; i <= 3; ++i) {
    rep.expect_zero("z_squares_zero" + deg(i), sd.z[i] * sd.z[i - 1]);
    rep.expect_zero("w_squares_zero" + deg(i), sd.w[i] * sd.w[i - 1]);
  }
  for (int i = 0; i <= 3; ++i) {
    rep.expect_equal("alpha_intertwines_z_w" + deg(i), al[i + 1] * sd.z[i], sd.w[i] * al[i]);
    rep.expect_equal("beta_intertwines_w_z" + deg(i), be[i + 1] * sd.w[i], sd.z[i] * be[i]);
  }
  for (int i = 0; i <= 4; ++i) {
    Poly sign = (i % 2 == 1) ? ks : -ks;
    rep.expect_equal("z_koszul_homotopy" + deg(i),
                     sigma_map(sd.z, Kc, i - 1) * Kc.d(i) - Kc.d(i + 1) * sigma_map(sd.z, Kc, i),
                     scalar(R, Kc.rank(i), sign));
    rep.expect_equal("w_homotopy" + deg(i),
                     sigma_map(sd.w, Mc, i - 1) * Mc.d(i) - Mc.d(i + 1) * sigma_map(sd.w, Mc, i),
                     scalar(R, Mc.rank(i), sign));
  }

  rep.expect_zero("beta3_Xdag_zero", be[3] * Xd);
  rep.expect_zero("beta2_X_zero", be[2] * X);
  rep.expect_zero("w3_Xdag_zero", sd.w[3] * Xd);
  rep.expect_zero("Xdag_image_in_M32", sp.coord31 * Xd);
  rep.expect_equal("Xdag_m3_plus_alpha3_beta3", Xd * Mc.d(3) + al[3] * be[3], scalar(R, r3, b0));

  const PolyMatrix& w1 = sd.w[1];
  const PolyMatrix& w2 = sd.w[2];
  const PolyMatrix& Y = sd.Y;
  const PolyMatrix& W = sd.W;
  const PolyMatrix m2 = Mc.d(2), m3 = Mc.d(3), m4 = Mc.d(4);
  rep.expect_equal("w2_X_equals_Xdag_w1", w2 * X, Xd * w1);
  rep.expect_zero("Y_w1_zero_on_M12", Y * w1 * E12);
  rep.expect_zero("beta2_w1_plus_Y_X_zero_on_M12", (be[2] * w1 + Y * X) * E12);
  rep.expect_equal("w1_proj12_m2_plus_alpha2_Y", w1 * proj12 * m2 + al[2] * Y, w1 * m2);
  rep.expect_equal("W_beta2_plus_m3_proj32_w2", W * be[2] + m3 * sp.proj32 * w2, m3 * w2);
  rep.expect_zero("proj32_w2_W_zero", sp.proj32 * w2 * W);
  rep.expect_zero("proj32_Xdag_W_plus_w2_alpha2_zero", sp.proj32 * (Xd * W + w2 * al[2]));
  rep.expect_equal("beta2_W_minus_Y_alpha2", be[2] * W - Y * al[2], scalar(R, Kc.rank(2), ks));

  PolyMatrix rX = X.scaled(r) - w1;
  PolyMatrix rXd = Xd.scaled(r) + w2;
  PolyMatrix rB2 = be[2].scaled(r) - Y;
  rep.expect_equal("factor_identity_K2", rB2 * al[2] + Kc.d(3) * sd.z[2], scalar(R, Kc.rank(2), f));
  rep.expect_equal("factor_identity_M12", E12t * m2 * rX * E12, scalar(R, E12.cols(), f));
  rep.expect_equal("factor_identity_M4", -(sd.w[3] * m4) + (al[4] * be[4]).scaled(r), scalar(R, 1, f));
  rep.expect_equal("factor_identity_M2", rX * proj12 * m2 + al[2] * rB2 + m3 * rXd, scalar(R, r2, f));

  if (st.input.options.kernel_checks) {
    rep.add("ker_m3_meets_ker_beta3_trivially",
            kernel_meets_trivially(m3.vstack(be[3]), PolyMatrix::identity(R, r3)));
    rep.add("ker_m3_meets_im_Xdag_trivially", kernel_meets_trivially(m3 * Xd, Xd));
  }
  (void)r1;
  return rep;
}

Report verify_expansions(const PipelineState& st) {
  const DgaBundle& M = st.input.M;
  const FreeComplex& Mc = M.complex;
  const RingPtr& R = M.ring();
  const AlphaBeta& ab = st.ab;
  const Poly& b0 = ab.beta0;
  const PolyMatrix& X = st.xd.X;
  const PolyMatrix& Xd = st.xd.Xdag;
  const std::size_t r1 = M.rank(1), r2 = M.rank(2);
  Report rep;

  // Null homotopy with h_0 = h_3 = 0, h_1 = X, h_2 = X^dagger.
  std::vector<PolyMatrix> h{PolyMatrix(R, r1, 1), X, Xd, PolyMatrix(R, 1, M.rank(3))};
  auto hm = [&](int i) {
    if (i < 0 || i > 3) return PolyMatrix(R, Mc.rank(i + 1), Mc.rank(i));
    return h[static_cast<std::size_t>(i)];
  };
  for (int i = 0; i <= 4; ++i)
    rep.expect_equal("null_homotopy" + deg(i), Mc.d(i + 1) * hm(i) + hm(i - 1) * Mc.d(i),
                     scalar(R, Mc.rank(i), b0) - ab.alpha[i] * ab.beta[i]);

  std::vector<std::vector<Poly>> a(4);
  for (std::size_t k = 0; k < 4; ++k) a[k] = ab.alpha[1].col(k);
  auto top = [&](const std::vector<Poly>& v) { return v[0] * M.orientation; };
  auto p11 = [&](std::size_t i, std::size_t j) { return multiply(M, 1, 1, a[i], a[j]); };
  // [theta_1 a_i a_j a_k] for theta_1 in M_1.
  auto t1 = [&](const std::vector<Poly>& th, std::size_t i, std::size_t j, std::size_t k) {
    return top(multiply(M, 3, 1, multiply(M, 2, 1, multiply(M, 1, 1, th, a[i]), a[j]), a[k]));
  };
  Poly vol = top(multiply(M, 3, 1, multiply(M, 2, 1, p11(0, 1), a[2]), a[3]));

  PolyMatrix first(R, r1, r1);
  for (std::size_t s = 0; s < r1; ++s) {
    std::vector<Poly> th(r1, Poly(R));
    th[s] = Poly::from_int(R, 1);
    std::vector<Poly> out(r1, Poly(R));
    const Poly c[4] = {-t1(th, 1, 2, 3), t1(th, 0, 2, 3), -t1(th, 0, 1, 3), t1(th, 0, 1, 2)};
    for (std::size_t k = 0; k < r1; ++k) {
      out[k] = vol * th[k];
      for (std::size_t m = 0; m < 4; ++m) out[k] += c[m] * a[m][k];
    }
    first.set_col(s, out);
  }
  rep.expect_equal("m2_X_expansion", Mc.d(2) * X, first);

  // [theta_2 a_i a_j] and [a_i a_j theta_2'] for theta_2 in M_2.
  auto t2 = [&](const std::vector<Poly>& th, std::size_t i, std::size_t j) {
    return top(multiply(M, 3, 1, multiply(M, 2, 1, th, a[i]), a[j]));
  };
  auto t2r = [&](std::size_t i, std::size_t j, const std::vector<Poly>& th) {
    return top(multiply(M, 2, 2, p11(i, j), th));
  };
  PolyMatrix XM = X * Mc.d(2);
  std::string bad;
  for (std::size_t q = 0; q < r2 && bad.empty(); ++q)
    for (std::size_t p = q; p < r2 && bad.empty(); ++p) {
      std::vector<Poly> u(r2, Poly(R)), v(r2, Poly(R));
      u[q] = Poly::from_int(R, 1);
      v[p] = Poly::from_int(R, 1);
      Poly lhs = top(multiply(M, 2, 2, XM.col(q), v)) + top(multiply(M, 2, 2, XM.col(p), u));
      Poly rhs = -t2(u, 2, 3) * t2r(0, 1, v) + t2(u, 1, 3) * t2r(0, 2, v) - t2(u, 1, 2) * t2r(0, 3, v) -
                 t2(u, 0, 1) * t2r(2, 3, v) + t2(u, 0, 2) * t2r(1, 3, v) - t2(u, 0, 3) * t2r(1, 2, v) +
                 vol * top(multiply(M, 2, 2, u, v));
      if (lhs != rhs) bad = "(" + std::to_string(q) + "," + std::to_string(p) + ")";
    }
  rep.add("X_m2_symmetrized_expansion", bad.empty(), bad);
  return rep;
}

}  // namespace dgmf
