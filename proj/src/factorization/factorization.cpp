#include "dgmf/factorization.hpp"

#include "dgmf/errors.hpp"
#include "dgmf/groebner.hpp"

namespace dgmf {

namespace {

struct Pieces {
  PolyMatrix E12, E12t;
  PolyMatrix rX_w1;    // (r X - w_1)|M12
  PolyMatrix rXd_w2;   // r X^dagger + w_2
  PolyMatrix rB2_Y;    // r beta_2 - Y
  PolyMatrix proj_m2;  // proj_{M12} m_2 in M12 coordinates
};

Pieces pieces(const PipelineState& st) {
  const DgaBundle& M = st.input.M;
  const Poly& r = st.sd.r;
  PolyMatrix E12 = embed_M12(M);
  PolyMatrix E12t = E12.transpose();
  return Pieces{E12,
                E12t,
                (st.xd.X.scaled(r) - st.sd.w[1]) * E12,
                st.xd.Xdag.scaled(r) + st.sd.w[2],
                st.ab.beta[2].scaled(r) - st.sd.Y,
                E12t * M.d(2)};
}

std::string label(const char* kind, int i) { return std::string(kind) + std::to_string(i); }

void check_blocks(Report& rep, const std::string& name, const PolyMatrix& got, const PolyMatrix& want,
                  const std::vector<std::size_t>& sizes, const std::vector<std::string>& labels) {
  std::string bad;
  for (std::size_t p = 0; p < sizes.size() && bad.empty(); ++p)
    for (std::size_t q = 0; q < sizes.size() && bad.empty(); ++q) {
      if (sizes[p] == 0 || sizes[q] == 0) continue;
      PolyMatrix a = block_of(got, sizes, sizes, p, q), b = block_of(want, sizes, sizes, p, q);
      if (a != b) bad = "block (" + labels[p] + "<-" + labels[q] + ") " + first_difference(a, b);
    }
  rep.add(name, bad.empty(), bad);
}

}  // namespace

MatrixFactorization build_mf(const PipelineState& st, MfVariant variant) {
  const DgaBundle& M = st.input.M;
  const DgaBundle& KB = st.K.bundle;
  const RingPtr& R = M.ring();
  const Poly& r = st.sd.r;
  const auto& al = st.ab.alpha;
  const auto& be = st.ab.beta;
  const Pieces P = pieces(st);
  const std::size_t n12 = M.split12.size();
  MatrixFactorization mf{PolyMatrix(R, 0, 0), PolyMatrix(R, 0, 0), st.input.f, {}, {}, {}, {}};

  if (variant == MfVariant::MF1) {
    mf.even_labels = {"M12", "K2", "M3", "K4"};
    mf.odd_labels = {"M2", "K3", "M4"};
    mf.even_ranks = {n12, KB.rank(2), M.rank(3), 1};
    mf.odd_ranks = {M.rank(2), KB.rank(3), 1};
    mf.g_even = BlockMatrix(R, mf.odd_ranks, mf.even_ranks)
                    .set(0, 0, P.rX_w1)
                    .set(0, 1, al[2])
                    .set(0, 2, M.d(3))
                    .set(1, 1, -st.sd.z[2])
                    .set(1, 2, be[3].scaled(r))
                    .set(1, 3, -KB.d(4))
                    .set(2, 2, -st.sd.w[3])
                    .set(2, 3, al[4])
                    .build();
    mf.g_odd = BlockMatrix(R, mf.even_ranks, mf.odd_ranks)
                   .set(0, 0, P.proj_m2)
                   .set(1, 0, P.rB2_Y)
                   .set(1, 1, -KB.d(3))
                   .set(2, 0, P.rXd_w2)
                   .set(2, 1, al[3])
                   .set(2, 2, M.d(4))
                   .set(3, 1, st.sd.z[3])
                   .set(3, 2, be[4].scaled(r))
                   .build();
    return mf;
  }

  if (!r.is_unit()) throw RNotUnit("r = " + r.to_string() + " is not a unit");
  Poly rinv = Poly::constant(R, R->field().inv(r.constant_term()));
  mf.even_labels = {"M12", "K2", "M32"};
  mf.odd_labels = {"M2"};
  mf.even_ranks = {n12, KB.rank(2), st.split.basis32.cols()};
  mf.odd_ranks = {M.rank(2)};
  mf.g_even = BlockMatrix(R, mf.odd_ranks, mf.even_ranks)
                  .set(0, 0, P.rX_w1)
                  .set(0, 1, al[2] + st.sd.W.scaled(rinv))
                  .set(0, 2, M.d(3) * st.split.basis32)
                  .build();
  mf.g_odd = BlockMatrix(R, mf.even_ranks, mf.odd_ranks)
                 .set(0, 0, P.proj_m2)
                 .set(1, 0, P.rB2_Y)
                 .set(2, 0, st.split.coord32 * P.rXd_w2)
                 .build();
  return mf;
}

Report verify_mf_report(const MatrixFactorization& mf) {
  const RingPtr& R = mf.f.ring();
  Report rep;
  std::size_t ne = mf.g_even.cols(), no = mf.g_odd.cols();
  rep.add("mf_square_equal_rank", ne == no && mf.g_even.rows() == no && mf.g_odd.rows() == ne);
  if (!rep.all_passed()) return rep;
  check_blocks(rep, "g_odd_g_even", mf.g_odd * mf.g_even, PolyMatrix::scalar(R, ne, mf.f),
               mf.even_ranks, mf.even_labels);
  check_blocks(rep, "g_even_g_odd", mf.g_even * mf.g_odd, PolyMatrix::scalar(R, no, mf.f),
               mf.odd_ranks, mf.odd_labels);
  return rep;
}

bool verify_mf(const MatrixFactorization& mf) { return verify_mf_report(mf).all_passed(); }

ConeData build_cone_L_rho(const PipelineState& st) {
  const DgaBundle& M = st.input.M;
  const DgaBundle& KB = st.K.bundle;
  const RingPtr& R = M.ring();
  const Poly& r = st.sd.r;
  const Poly& f = st.input.f;
  const auto& al = st.ab.alpha;
  const auto& be = st.ab.beta;
  const auto& z = st.sd.z;
  const auto& w = st.sd.w;
  ConeData cd{{}, FreeComplex(R, {1}, {}), {}, {}};

  cd.beta_prime.push_back(be[0].scaled(r) + M.d(1) * w[0]);
  cd.beta_prime.push_back(be[1].scaled(r) + z[0] * M.d(1));
  for (int i = 2; i <= 4; ++i) cd.beta_prime.push_back(be[i].scaled(r));
  cd.report.add("beta_prime0_is_f", cd.beta_prime[0](0, 0) == f, cd.beta_prime[0](0, 0).to_string());

  ChainMap bp(M.complex, KB.complex, cd.beta_prime);
  cd.report.add("beta_prime_chain_map", check_chain_map(bp));
  cd.L = mapping_cone(bp);

  auto sizes = [&](int i) { return std::vector<std::size_t>{M.rank(i - 1), KB.rank(i)}; };
  auto names = [&](int i) { return std::vector<std::string>{label("M", i - 1), label("K", i)}; };
  PolyMatrix rX = st.xd.X.scaled(r) - w[1];
  PolyMatrix rXd = st.xd.Xdag.scaled(r) + w[2];
  cd.rho.push_back(BlockMatrix(R, sizes(1), sizes(0)).set(0, 1, al[0]).build());
  cd.rho.push_back(BlockMatrix(R, sizes(2), sizes(1)).set(0, 1, -al[1]).set(1, 1, -z[1]).build());
  cd.rho.push_back(BlockMatrix(R, sizes(3), sizes(2)).set(0, 0, rX).set(0, 1, al[2]).set(1, 1, -z[2]).build());
  cd.rho.push_back(
      BlockMatrix(R, sizes(4), sizes(3)).set(0, 0, -rXd).set(0, 1, -al[3]).set(1, 1, -z[3]).build());
  cd.rho.push_back(BlockMatrix(R, sizes(5), sizes(4)).set(0, 0, -w[3]).set(0, 1, al[4]).build());

  auto rho = [&](int i) {
    if (i < 0 || i > 4) return PolyMatrix(R, cd.L.rank(i + 1), cd.L.rank(i));
    return cd.rho[static_cast<std::size_t>(i)];
  };
  for (int i = 0; i <= 5; ++i) {
    PolyMatrix got = rho(i - 1) * cd.L.d(i) - cd.L.d(i + 1) * rho(i);
    PolyMatrix want = PolyMatrix::scalar(R, cd.L.rank(i), i % 2 == 1 ? f : -f);
    auto sz = sizes(i);
    auto nm = names(i);
    for (std::size_t p = 0; p < 2; ++p)
      for (std::size_t q = 0; q < 2; ++q) {
        if (sz[p] == 0 || sz[q] == 0) continue;
        cd.report.expect_equal("cone_deg" + std::to_string(i) + "[" + nm[p] + "<-" + nm[q] + "]",
                               block_of(got, sz, sz, p, q), block_of(want, sz, sz, p, q));
      }
  }
  for (int i = 0; i <= 3; ++i) {
    PolyMatrix prod = rho(i + 1) * rho(i);
    auto rs = sizes(i + 2), cs = sizes(i);
    auto rn = names(i + 2), cn = names(i);
    for (std::size_t p = 0; p < 2; ++p)
      for (std::size_t q = 0; q < 2; ++q) {
        if (rs[p] == 0 || cs[q] == 0) continue;
        cd.report.expect_zero("rho_square_deg" + std::to_string(i) + "[" + rn[p] + "<-" + cn[q] + "]",
                              block_of(prod, rs, cs, p, q));
      }
  }
  return cd;
}

PolyMatrix PeriodicResolution::differential(std::size_t i) const {
  if (i == 0) throw ShapeMismatch("differentials start at index 1");
  if (i < first_periodic) return head.at(i - 1);
  return (i - first_periodic) % 2 == 0 ? (first_periodic % 2 == 0 ? even : odd)
                                       : (first_periodic % 2 == 0 ? odd : even);
}

PeriodicResolution build_resolution_N(const PipelineState& st, ResolutionVariant variant,
                                      std::size_t check_len) {
  if (check_len < 6) throw InputError("check_len must be at least 6");
  const DgaBundle& M = st.input.M;
  const DgaBundle& KB = st.K.bundle;
  const RingPtr& R = M.ring();
  const Poly& r = st.sd.r;
  const Poly& f = st.input.f;
  const Pieces P = pieces(st);
  const std::size_t n12 = M.split12.size();

  PeriodicResolution res{{}, PolyMatrix(R, 0, 0), PolyMatrix(R, 0, 0), 0, {}, {}};
  PolyMatrix n1 = -KB.d(1);
  PolyMatrix n2 = ((st.ab.beta[1].scaled(r) + st.sd.z[0] * M.d(1)) * P.E12).hstack(-KB.d(2));
  res.head = {n1, n2};
  if (variant == ResolutionVariant::N) {
    MatrixFactorization mf = build_mf(st, MfVariant::MF1);
    PolyMatrix n3 = BlockMatrix(R, {n12, KB.rank(2)}, {M.rank(2), KB.rank(3)})
                        .set(0, 0, P.proj_m2)
                        .set(1, 0, P.rB2_Y)
                        .set(1, 1, -KB.d(3))
                        .build();
    PolyMatrix n4 = mf.g_even.block(0, 0, M.rank(2) + KB.rank(3), mf.g_even.cols());
    res.head.push_back(n3);
    res.head.push_back(n4);
    res.odd = mf.g_odd;
    res.even = mf.g_even;
    res.first_periodic = 5;
  } else {
    MatrixFactorization mf = build_mf(st, MfVariant::MF2);
    PolyMatrix n3 = P.proj_m2.vstack(P.rB2_Y);
    res.head.push_back(n3);
    res.odd = mf.g_odd;
    res.even = mf.g_even;
    res.first_periodic = 4;
  }

  res.ranks.push_back(1);
  for (std::size_t i = 1; i <= check_len; ++i) res.ranks.push_back(res.differential(i).cols());
  for (std::size_t i = 1; i < check_len; ++i) {
    PolyMatrix a = res.differential(i), b = res.differential(i + 1);
    if (a.cols() != b.rows()) {
      res.report.add("n_composable_" + std::to_string(i), false, a.shape_string() + " " + b.shape_string());
      continue;
    }
    res.report.expect_zero("n_square_mod_f_" + std::to_string(i), reduce_mod_f(a * b, f));
  }
  return res;
}

}  // namespace dgmf
