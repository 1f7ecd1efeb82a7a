#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgmf/matrix.hpp"

namespace dgmf {

// 0 <- C_0 <- C_1 <- ... <- C_len with d_i : C_i -> C_{i-1}.
class FreeComplex {
 public:
  // diffs[i-1] is d_i, for i = 1..len. Throws ShapeMismatch.
  FreeComplex(RingPtr ring, std::vector<std::size_t> ranks, std::vector<PolyMatrix> diffs);

  const RingPtr& ring() const { return ring_; }
  int length() const { return static_cast<int>(ranks_.size()) - 1; }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  // Zero outside 0..length.
  std::size_t rank(int i) const;
  // d_i : C_i -> C_{i-1}; a zero matrix outside 1..length.
  PolyMatrix d(int i) const;

 private:
  RingPtr ring_;
  std::vector<std::size_t> ranks_;
  std::vector<PolyMatrix> diffs_;
};

// maps[i] : C_i -> D_{i+shift}.
class ChainMap {
 public:
  ChainMap(FreeComplex source, FreeComplex target, std::vector<PolyMatrix> maps, int shift = 0);

  const FreeComplex& source() const { return source_; }
  const FreeComplex& target() const { return target_; }
  int shift() const { return shift_; }
  // Zero outside the stored range.
  PolyMatrix map(int i) const;

 private:
  FreeComplex source_, target_;
  std::vector<PolyMatrix> maps_;
  int shift_;
};

// h_i : C_i -> D_{i+1}.
struct Homotopy {
  std::vector<PolyMatrix> maps;
};

// Fixes the listed columns of h_degree to the matching columns of `value`.
struct HomotopyPrescription {
  int degree;
  std::vector<std::size_t> columns;
  PolyMatrix value;
};

// Prescribes the listed columns of h_degree to vanish.
HomotopyPrescription zero_prescription(const ChainMap& c, int degree,
                                       std::vector<std::size_t> columns);
HomotopyPrescription zero_prescription(const ChainMap& c, int degree);

bool check_complex(const FreeComplex& C);
// Lowest degree i with d_i d_{i+1} != 0.
std::optional<int> complex_defect(const FreeComplex& C);

bool check_chain_map(const ChainMap& F);
// Lowest degree where target_d F != F source_d.
std::optional<int> chain_map_defect(const ChainMap& F);

// Solves c_i = h_{i-1} b_i + d_{i+1} h_i degree by degree from the bottom.
Homotopy build_homotopy(const ChainMap& c, const std::vector<HomotopyPrescription>& prescribed = {});

// Residual c_i - h_{i-1} b_i - d_{i+1} h_i in degree i.
PolyMatrix homotopy_residual(const ChainMap& c, const Homotopy& h, int i);

// L_i = C_{i-1} + D_i, l_i = [[c_{i-1}, 0], [F_{i-1}, -d_i]].
FreeComplex mapping_cone(const ChainMap& F);

PolyMatrix reduce_mod_f(const PolyMatrix& A, const Poly& f);
Poly reduce_mod_f(const Poly& p, const Poly& f);

}  // namespace dgmf
