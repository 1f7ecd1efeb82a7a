#pragma once

#include <cstdint>
#include <vector>

#include "dgmf/dga.hpp"

namespace dgmf {

struct SolverConfig {
  // Extra attempts with resampled correction terms after the first.
  int retry_budget = 4;
  // Derive (j,i) tables from (i,j) by graded commutativity.
  bool symmetrize = true;
  std::uint64_t seed = 20240611;
};

// Seed from DGMF_SEED when set and numeric, else `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback);

// Builds a multiplication on a length-four resolution with rank-one ends by
// Leibniz lifts, then corrects associativity with constant terms. Returns
// only bundles that pass validate_dga; throws SolverGaveUp otherwise.
DgaBundle complete_multiplication(const FreeComplex& C, const Poly& orientation,
                                  std::vector<std::size_t> split11, std::vector<std::size_t> split12,
                                  const SolverConfig& cfg = {});

}  // namespace dgmf
