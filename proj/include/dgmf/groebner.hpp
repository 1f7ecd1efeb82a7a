#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dgmf/matrix.hpp"
#include "dgmf/poly.hpp"

namespace dgmf {

using ModuleVector = std::vector<Poly>;

// Module Groebner basis for position-over-term order (lower position wins)
// refined by grevlex. Each member remembers how it was built from the
// original generators.
class GroebnerBasis {
 public:
  struct Reduction {
    ModuleVector remainder;
    std::vector<Poly> quotients;  // one per basis member
  };

  GroebnerBasis(RingPtr ring, std::size_t rank, std::vector<ModuleVector> gens);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  std::size_t num_generators() const { return gens_.size(); }
  const std::vector<ModuleVector>& generators() const { return gens_; }
  std::size_t size() const { return members_.size(); }
  const ModuleVector& member(std::size_t i) const { return members_[i].vec; }
  // Coefficients over the original generators reproducing member(i).
  const std::vector<Poly>& lift_record(std::size_t i) const { return members_[i].lift; }

  Reduction reduce(const ModuleVector& v) const;
  ModuleVector normal_form(const ModuleVector& v) const { return reduce(v).remainder; }
  bool contains(const ModuleVector& v) const;
  // Coefficients over the original generators, or empty optional when v is
  // outside the submodule.
  std::optional<std::vector<Poly>> lift(const ModuleVector& v) const;
  // Generators of the module of relations among the original generators.
  std::vector<ModuleVector> syzygies() const;

 private:
  struct Member {
    ModuleVector vec;
    std::vector<Poly> lift;
    std::size_t pos;
    Monomial lm;
  };

  void buchberger();
  std::vector<Poly> combine_lifts(const std::vector<Poly>& quotients) const;

  RingPtr ring_;
  std::size_t rank_;
  std::vector<ModuleVector> gens_;
  std::vector<Member> members_;
};

GroebnerBasis groebner_basis(const RingPtr& ring, std::vector<ModuleVector> gens, std::size_t rank);

// Column Groebner basis of a matrix; reusable for many right-hand sides.
class Lifter {
 public:
  explicit Lifter(const PolyMatrix& A);
  // Z with A*Z = Y; throws NotInImage.
  PolyMatrix solve(const PolyMatrix& Y) const;
  std::vector<Poly> solve_vector(const std::vector<Poly>& y) const;
  const GroebnerBasis& basis() const { return gb_; }

 private:
  PolyMatrix A_;
  GroebnerBasis gb_;
};

PolyMatrix solve_lift(const PolyMatrix& A, const PolyMatrix& Y);
std::vector<ModuleVector> syzygy_module(const PolyMatrix& A);

Poly determinant(const PolyMatrix& A);
// Throws NotUnimodular when det(A) is not a nonzero constant.
PolyMatrix invert_unimodular(const PolyMatrix& A);

// Whether the four polynomials form a regular sequence, judged by the
// dimension of the quotient ring.
bool check_regular_sequence(const std::vector<Poly>& gens);
// Krull dimension of P/I computed from the leading-term ideal; -1 for the unit ideal.
int krull_dimension(const RingPtr& ring, const std::vector<Poly>& gens);

}  // namespace dgmf
