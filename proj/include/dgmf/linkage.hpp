#pragma once

#include <cstddef>
#include <vector>

#include "dgmf/complexes.hpp"
#include "dgmf/dga.hpp"
#include "dgmf/report.hpp"

namespace dgmf {

struct LinkageOptions {
  bool skip_regularity_check = false;
  // Attempts granted to the multiplication solver when it is used.
  int retry_budget = 4;
  // Runs the kernel-intersection checks, which need syzygies.
  bool kernel_checks = false;
};

struct LinkageInput {
  RingPtr ring;
  std::vector<Poly> a;
  Poly f;
  DgaBundle M;
  LinkageOptions options;
};

struct AlphaBeta {
  std::vector<PolyMatrix> alpha;  // alpha[i] : K_i -> M_i
  std::vector<PolyMatrix> beta;   // beta[i] : M_i -> K_i
  Poly beta0;                     // beta_0(1)
  PolyMatrix change, change_inv;  // m_1|M11 * change = (a_1 .. a_4)
};

struct SigmaData {
  Poly r;
  std::vector<Poly> sigma;     // in K_1
  std::vector<PolyMatrix> z;   // z[i] : K_i -> K_{i+1}, i = 0..3
  std::vector<PolyMatrix> w;   // w[i] : M_i -> M_{i+1}, i = 0..3
  PolyMatrix Y;                // M_2 -> K_2
  PolyMatrix W;                // K_2 -> M_2
};

// Basis of D_2 M_2: pairs (q, p) with q <= p, lexicographic; (q, q) is a
// divided square and (q, p) the product b_q b_p.
struct BComplexData {
  FreeComplex B;
  std::vector<PolyMatrix> c;  // c[i] : B_i -> K_i
  Homotopy h;
  std::vector<std::pair<std::size_t, std::size_t>> d2_basis;
  std::vector<std::pair<std::size_t, std::size_t>> wedge_basis;
};

struct XData {
  PolyMatrix X0;
  PolyMatrix u, v, u_prime, U;
  PolyMatrix X, Xdag;
};

struct PipelineState {
  LinkageInput input;
  KoszulAlgebra K;
  M3Split split;
  AlphaBeta ab;
  SigmaData sd;
  BComplexData bc;
  XData xd;
  Report log;
};

// Rank relations required by the construction; throws PrecheckFailed.
void linkage_prechecks(const DgaBundle& M);

AlphaBeta build_alpha_beta(const LinkageInput& in, const KoszulAlgebra& K);
// alpha_4 against divided squares of alpha_2, on basis elements and pairs.
Report check_alpha_divided_powers(const DgaBundle& M, const KoszulAlgebra& K, const AlphaBeta& ab);

SigmaData solve_r_sigma(const LinkageInput& in, const KoszulAlgebra& K, const AlphaBeta& ab,
                        const M3Split& split);

BComplexData build_B_and_c(const DgaBundle& M, const KoszulAlgebra& K, const AlphaBeta& ab);
void build_B_homotopy(BComplexData& bc, const KoszulAlgebra& K);

PolyMatrix build_X0(const BComplexData& bc, const AlphaBeta& ab, const DgaBundle& M);
XData correct_X(const PolyMatrix& X0, const DgaBundle& M, const KoszulAlgebra& K,
                const AlphaBeta& ab);

Report verify_hypotheses(const DgaBundle& M, const AlphaBeta& ab, const PolyMatrix& X,
                         const PolyMatrix& Xdag);
Report verify_identity_suite(const PipelineState& st);
// Koszul-coordinate expansions of m_2 X and X m_2, and (X, X^dagger) as a
// null homotopy of beta_0(1) - alpha beta.
Report verify_expansions(const PipelineState& st);

// Runs every stage and records each stage's checks in `log`.
PipelineState run_pipeline(const LinkageInput& in);

// Identity columns of the M_{1,2} summand inside M_1.
PolyMatrix embed_M12(const DgaBundle& M);
// Product of the M_{1,1} generators, one per Koszul index, in M_i.
PolyMatrix alpha_from_alpha1(const DgaBundle& M, const KoszulAlgebra& K, const PolyMatrix& alpha1,
                             int i);

}  // namespace dgmf
