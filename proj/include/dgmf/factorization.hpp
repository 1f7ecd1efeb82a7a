#pragma once

#include <string>
#include <vector>

#include "dgmf/linkage.hpp"

namespace dgmf {

enum class MfVariant { MF1, MF2 };

struct MatrixFactorization {
  PolyMatrix g_even;  // G_even -> G_odd
  PolyMatrix g_odd;   // G_odd -> G_even
  Poly f;
  std::vector<std::string> even_labels, odd_labels;
  std::vector<std::size_t> even_ranks, odd_ranks;
};

// MF2 throws RNotUnit unless r is a nonzero constant.
MatrixFactorization build_mf(const PipelineState& st, MfVariant variant);
// Both products against f*I over P, block by block.
Report verify_mf_report(const MatrixFactorization& mf);
bool verify_mf(const MatrixFactorization& mf);

struct ConeData {
  std::vector<PolyMatrix> beta_prime;  // M_i -> K_i
  FreeComplex L;
  std::vector<PolyMatrix> rho;         // rho_i : L_i -> L_{i+1}, i = 0..4
  Report report;
};

ConeData build_cone_L_rho(const PipelineState& st);

enum class ResolutionVariant { N, Acute };

struct PeriodicResolution {
  std::vector<PolyMatrix> head;  // head[i-1] is the i-th differential, over P
  PolyMatrix odd, even;          // tail differentials, over P
  std::size_t first_periodic;    // index of the first tail differential
  std::vector<std::size_t> ranks;  // ranks up to check_len
  Report report;

  PolyMatrix differential(std::size_t i) const;
};

PeriodicResolution build_resolution_N(const PipelineState& st, ResolutionVariant variant,
                                      std::size_t check_len = 10);

}  // namespace dgmf
