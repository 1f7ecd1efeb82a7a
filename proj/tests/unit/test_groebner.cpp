#include <gtest/gtest.h>

#include <random>

#include "dgmf/errors.hpp"
#include "dgmf/groebner.hpp"
#include "oracles.hpp"

using namespace dgmf;

namespace {

RingPtr ring4() { return make_ring(Field::prime(101), {"x", "y", "z", "w"}); }

PolyMatrix mat(const RingPtr& R, std::size_t r, std::size_t c, std::vector<std::string> e) {
  PolyMatrix m(R, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = parse_poly(e[i * c + j], R);
  return m;
}

ModuleVector vec(const RingPtr& R, std::vector<std::string> e) {
  ModuleVector v;
  for (auto& s : e) v.push_back(parse_poly(s, R));
  return v;
}

// Every S-pair of the basis reduces to zero and lift records multiply back.
void expect_buchberger_closed(const GroebnerBasis& gb) {
  const RingPtr& R = gb.ring();
  for (std::size_t i = 0; i < gb.size(); ++i) {
    ModuleVector back(gb.rank(), Poly(R));
    for (std::size_t t = 0; t < gb.num_generators(); ++t)
      for (std::size_t r = 0; r < gb.rank(); ++r) back[r] += gb.lift_record(i)[t] * gb.generators()[t][r];
    EXPECT_EQ(back, gb.member(i));
  }
  auto lead = [&](const ModuleVector& v) {
    for (std::size_t r = 0; r < v.size(); ++r)
      if (!v[r].is_zero()) return r;
    return v.size();
  };
  for (std::size_t i = 0; i < gb.size(); ++i)
    for (std::size_t j = i + 1; j < gb.size(); ++j) {
      std::size_t p = lead(gb.member(i));
      if (p != lead(gb.member(j))) continue;
      const Term& a = gb.member(i)[p].leading();
      const Term& b = gb.member(j)[p].leading();
      Monomial L = Monomial::lcm(a.mono, b.mono);
      ModuleVector s(gb.rank(), Poly(R));
      for (std::size_t r = 0; r < gb.rank(); ++r)
        s[r] = gb.member(i)[r].times_term(L / a.mono, R->field().inv(a.coeff)) -
               gb.member(j)[r].times_term(L / b.mono, R->field().inv(b.coeff));
      EXPECT_TRUE(gb.contains(s));
    }
  for (const auto& g : gb.generators()) EXPECT_TRUE(gb.contains(g));
}

}  // namespace

TEST(Groebner, MonomialsAreABasis) {
  auto R = ring4();
  GroebnerBasis gb = groebner_basis(R, {vec(R, {"x"}), vec(R, {"y"})}, 1);
  ASSERT_EQ(gb.size(), 2u);
  EXPECT_EQ(gb.member(0)[0].to_string(), "x");
  EXPECT_EQ(gb.member(1)[0].to_string(), "y");
}

TEST(Groebner, HandRunProducesCube) {
  auto R = ring4();
  GroebnerBasis gb = groebner_basis(R, {vec(R, {"x^2"}), vec(R, {"x*y + y^2"})}, 1);
  bool found = false;
  for (std::size_t i = 0; i < gb.size(); ++i) found = found || gb.member(i)[0] == parse_poly("y^3", R);
  EXPECT_TRUE(found);
  expect_buchberger_closed(gb);
}

TEST(Groebner, DistinctPositions) {
  auto R = ring4();
  GroebnerBasis gb = groebner_basis(R, {vec(R, {"x", "0"}), vec(R, {"0", "x"})}, 2);
  ASSERT_EQ(gb.size(), 2u);
  EXPECT_EQ(gb.member(0), vec(R, {"x", "0"}));
  EXPECT_EQ(gb.member(1), vec(R, {"0", "x"}));
}

TEST(Groebner, EmptyInput) {
  auto R = ring4();
  GroebnerBasis gb = groebner_basis(R, {}, 3);
  EXPECT_EQ(gb.size(), 0u);
  EXPECT_FALSE(gb.contains(vec(R, {"1", "0", "0"})));
  EXPECT_TRUE(gb.contains(vec(R, {"0", "0", "0"})));
}

TEST(Groebner, RandomMembershipRoundTrip) {
  std::mt19937_64 rng(5);
  auto R = ring4();
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<ModuleVector> gens;
    for (int g = 0; g < 3; ++g)
      gens.push_back({oracle::random_poly(R, rng, 3, 2), oracle::random_poly(R, rng, 3, 2)});
    GroebnerBasis gb = groebner_basis(R, gens, 2);
    expect_buchberger_closed(gb);
    for (int k = 0; k < 4; ++k) {
      ModuleVector v(2, Poly(R));
      std::vector<Poly> coeffs;
      for (int g = 0; g < 3; ++g) {
        coeffs.push_back(oracle::random_poly(R, rng, 2, 2));
        for (int r = 0; r < 2; ++r) v[r] += coeffs.back() * gens[g][r];
      }
      auto z = gb.lift(v);
      ASSERT_TRUE(z.has_value());
      ModuleVector back(2, Poly(R));
      for (int g = 0; g < 3; ++g)
        for (int r = 0; r < 2; ++r) back[r] += (*z)[g] * gens[g][r];
      EXPECT_EQ(back, v);
    }
  }
}

TEST(Groebner, Deterministic) {
  std::mt19937_64 rng(11);
  auto R = ring4();
  std::vector<ModuleVector> gens;
  for (int g = 0; g < 4; ++g) gens.push_back({oracle::random_poly(R, rng, 4, 3)});
  GroebnerBasis a = groebner_basis(R, gens, 1), b = groebner_basis(R, gens, 1);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a.member(i), b.member(i));
    EXPECT_EQ(a.lift_record(i), b.lift_record(i));
  }
}

TEST(SolveLift, Termwise) {
  auto R = ring4();
  PolyMatrix A = mat(R, 1, 2, {"x", "y"});
  PolyMatrix Z = solve_lift(A, mat(R, 1, 1, {"x^2 + y^2"}));
  EXPECT_EQ(Z, mat(R, 2, 1, {"x", "y"}));
}

TEST(SolveLift, ConstantNotInImage) {
  auto R = ring4();
  try {
    solve_lift(mat(R, 1, 2, {"x", "y"}), mat(R, 1, 2, {"x", "1"}));
    FAIL();
  } catch (const NotInImage& e) {
    EXPECT_EQ(e.column(), 1u);
    EXPECT_EQ(e.residual(), "(1)");
  }
}

TEST(SolveLift, MultiplyBack) {
  auto R = ring4();
  PolyMatrix A = mat(R, 1, 2, {"x", "y"});
  PolyMatrix Y = mat(R, 1, 1, {"x*y"});
  EXPECT_EQ(A * solve_lift(A, Y), Y);
}

TEST(SolveLift, ZeroColumnsAndZeroRows) {
  auto R = ring4();
  PolyMatrix A(R, 2, 0);
  EXPECT_EQ(solve_lift(A, PolyMatrix(R, 2, 3)).rows(), 0u);
  EXPECT_THROW(solve_lift(A, mat(R, 2, 1, {"x", "0"})), NotInImage);
  PolyMatrix B(R, 0, 3);
  EXPECT_EQ(solve_lift(B, PolyMatrix(R, 0, 2)), PolyMatrix(R, 3, 2));
}

TEST(Syzygy, KoszulPair) {
  auto R = ring4();
  auto syz = syzygy_module(mat(R, 1, 2, {"x", "y"}));
  ASSERT_FALSE(syz.empty());
  GroebnerBasis span = groebner_basis(R, syz, 2);
  EXPECT_TRUE(span.contains(vec(R, {"y", "-x"})));
  GroebnerBasis koszul = groebner_basis(R, {vec(R, {"y", "-x"})}, 2);
  for (const auto& s : syz) {
    EXPECT_TRUE((s[0] * parse_poly("x", R) + s[1] * parse_poly("y", R)).is_zero());
    EXPECT_TRUE(koszul.contains(s));
  }
}

TEST(Syzygy, IdentityHasNone) {
  auto R = ring4();
  EXPECT_TRUE(syzygy_module(PolyMatrix::identity(R, 3)).empty());
}

TEST(Syzygy, EqualColumns) {
  auto R = ring4();
  auto syz = syzygy_module(mat(R, 1, 2, {"x", "x"}));
  GroebnerBasis span = groebner_basis(R, syz, 2);
  EXPECT_TRUE(span.contains(vec(R, {"1", "-1"})));
  GroebnerBasis expected = groebner_basis(R, {vec(R, {"1", "-1"})}, 2);
  for (const auto& s : syz) EXPECT_TRUE(expected.contains(s));
}

TEST(Syzygy, MatchesDegreeBoundedKernel) {
  std::mt19937_64 rng(31337);
  auto R = make_ring(Field::prime(101), {"x", "y", "z"});
  for (int trial = 0; trial < 12; ++trial) {
    unsigned d = 1 + trial % 2;
    std::size_t c = 2 + trial % 2;
    std::vector<Poly> row;
    for (std::size_t k = 0; k < c; ++k) row.push_back(oracle::random_form(R, rng, d));
    PolyMatrix A(R, 1, c);
    for (std::size_t k = 0; k < c; ++k) A(0, k) = row[k];
    auto syz = syzygy_module(A);
    for (const auto& s : syz) EXPECT_TRUE(A.apply(s)[0].is_zero());
    for (unsigned D = 0; D <= 4; ++D)
      EXPECT_EQ(oracle::span_dimension(R, syz, c, D), oracle::kernel_dimension(row, D))
          << "trial " << trial << " degree " << D;
  }
}

TEST(Syzygy, MatrixKernel) {
  auto R = ring4();
  PolyMatrix A = mat(R, 2, 3, {"x", "y", "0", "0", "z", "w"});
  auto syz = syzygy_module(A);
  for (const auto& s : syz) {
    auto image = A.apply(s);
    EXPECT_TRUE(image[0].is_zero() && image[1].is_zero());
  }
  EXPECT_TRUE(groebner_basis(R, syz, 3).contains(vec(R, {"y*w", "-x*w", "x*z"})));
}

TEST(Unimodular, ElementaryInverse) {
  auto R = ring4();
  EXPECT_EQ(invert_unimodular(mat(R, 2, 2, {"1", "x", "0", "1"})), mat(R, 2, 2, {"1", "-x", "0", "1"}));
}

TEST(Unimodular, NonConstantDeterminant) {
  auto R = ring4();
  try {
    invert_unimodular(mat(R, 2, 2, {"x", "0", "0", "1"}));
    FAIL();
  } catch (const NotUnimodular& e) {
    EXPECT_EQ(e.determinant(), "x");
  }
  EXPECT_THROW(invert_unimodular(mat(R, 2, 2, {"x", "y", "x", "y"})), NotUnimodular);
}

TEST(Unimodular, NeedsPolynomialPivoting) {
  auto R = ring4();
  PolyMatrix A = mat(R, 3, 3, {"x", "1", "0", "1", "0", "0", "y", "z", "2"});
  PolyMatrix B = invert_unimodular(A);
  EXPECT_EQ(A * B, PolyMatrix::identity(R, 3));
  EXPECT_EQ(determinant(A).to_string(), "-2");
}

TEST(Unimodular, RandomProductsOfElementaries) {
  std::mt19937_64 rng(2);
  auto R = ring4();
  for (int trial = 0; trial < 10; ++trial) {
    PolyMatrix A = PolyMatrix::identity(R, 4);
    for (int k = 0; k < 6; ++k) {
      PolyMatrix E = PolyMatrix::identity(R, 4);
      std::size_t i = rng() % 4, j = (i + 1 + rng() % 3) % 4;
      E(i, j) = oracle::random_poly(R, rng, 2, 1);
      A = A * E;
    }
    PolyMatrix B = invert_unimodular(A);
    EXPECT_EQ(A * B, PolyMatrix::identity(R, 4));
    EXPECT_EQ(B * A, PolyMatrix::identity(R, 4));
  }
}

TEST(RegularSequence, Examples) {
  auto R = ring4();
  auto p = [&](const char* s) { return parse_poly(s, R); };
  EXPECT_TRUE(check_regular_sequence({p("x"), p("y"), p("z"), p("w")}));
  EXPECT_FALSE(check_regular_sequence({p("x"), p("x"), p("y"), p("z")}));
  EXPECT_TRUE(check_regular_sequence({p("x+y"), p("x-y"), p("z^2"), p("w")}));
  EXPECT_TRUE(check_regular_sequence({p("x^2"), p("y^2"), p("z^2"), p("w^2")}));
  EXPECT_FALSE(check_regular_sequence({p("x*y"), p("x*z"), p("z"), p("w")}));
  EXPECT_FALSE(check_regular_sequence({p("1 + x"), p("x"), p("z"), p("w")}));
  EXPECT_THROW(check_regular_sequence({p("x"), p("y")}), WrongLength);
}
