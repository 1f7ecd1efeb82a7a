#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dgmf/complexes.hpp"
#include "dgmf/report.hpp"

namespace dgmf {

// A length-four free resolution with a graded-commutative multiplication,
// divided squares on degree two, an orientation of the top module and a
// splitting of the degree-one module.
struct DgaBundle {
  FreeComplex complex;
  // mult[{i,j}] : M_i (x) M_j -> M_{i+j}; column s*rank(j)+t is b_s * b_t.
  std::map<std::pair<int, int>, PolyMatrix> mult;
  // Divided square of each degree-two basis element, as its top coordinate.
  std::vector<Poly> sq2;
  // Top coordinate times this unit is the orientation of M_4.
  Poly orientation;
  std::vector<std::size_t> split11;
  std::vector<std::size_t> split12;
  bool sq2_autofilled = false;

  const RingPtr& ring() const { return complex.ring(); }
  std::size_t rank(int i) const { return complex.rank(i); }
  PolyMatrix d(int i) const { return complex.d(i); }
  const PolyMatrix& mu(int i, int j) const;
  PolyMatrix& mu(int i, int j);
};

// Zero multiplication tables except for the unit, zero divided squares.
DgaBundle empty_bundle(const FreeComplex& complex, const Poly& orientation,
                       std::vector<std::size_t> split11, std::vector<std::size_t> split12);

// Fills sq2 by b^(2) = (b*b)/2; requires characteristic != 2.
void autofill_divided_squares(DgaBundle& B);

// Sets the (j,i) tables from the (i,j) tables by graded commutativity, i < j.
void symmetrize_products(DgaBundle& B);

std::vector<Poly> multiply(const DgaBundle& B, int i, int j, const std::vector<Poly>& x,
                           const std::vector<Poly>& y);
// y -> x*y as a map M_j -> M_{i+j}.
PolyMatrix left_multiplication(const DgaBundle& B, int i, int j, const std::vector<Poly>& x);
// x -> x*y as a map M_i -> M_{i+j}.
PolyMatrix right_multiplication(const DgaBundle& B, int i, int j, const std::vector<Poly>& y);
// theta^(2) for theta in M_2, as the top coordinate.
Poly divided_square(const DgaBundle& B, const std::vector<Poly>& theta);

struct KoszulAlgebra {
  DgaBundle bundle;
  std::vector<Poly> generators;
  // subsets[i]: the degree-i basis as sorted index lists, in lexicographic order.
  std::vector<std::vector<std::vector<int>>> subsets;

  std::size_t index_of(const std::vector<int>& subset) const;
};

KoszulAlgebra build_koszul(const std::vector<Poly>& a);

// Exact axiom checks; never throws. When `ideal` is given, the M_{1,1}
// columns of m_1 must generate it.
Report validate_dga(const DgaBundle& B, const std::optional<std::vector<Poly>>& ideal = std::nullopt);

// G[s][t] = mult(b_s, b'_t) in M_4, without the orientation unit.
PolyMatrix raw_gram(const DgaBundle& B, int i);
// Oriented Gram matrix; throws NotPerfectPairing unless unimodular.
PolyMatrix pairing_gram(const DgaBundle& B, int i);

// Adjoint of h : M_1 -> M_2 under the pairings, a map M_2 -> M_3.
PolyMatrix dagger(const DgaBundle& B, const PolyMatrix& h);

struct M3Split {
  PolyMatrix basis31, basis32;  // columns span the summands
  PolyMatrix coord31, coord32;  // coordinates in those bases
  PolyMatrix proj31, proj32;    // idempotents on M_3
};

M3Split split_M3(const DgaBundle& B);

}  // namespace dgmf
