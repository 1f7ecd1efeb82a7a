#include <gtest/gtest.h>

#include <random>

#include "dgmf/dga.hpp"
#include "dgmf/errors.hpp"
#include "dgmf/groebner.hpp"
#include "oracles.hpp"

using namespace dgmf;

namespace {

RingPtr ring4(std::uint64_t p = 101) { return make_ring(Field::prime(p), {"x", "y", "z", "w"}); }

std::vector<Poly> vars(const RingPtr& R) {
  std::vector<Poly> v;
  for (std::size_t i = 0; i < 4; ++i) v.push_back(Poly::variable(R, i));
  return v;
}

std::vector<Poly> unit_vec(const RingPtr& R, std::size_t n, std::size_t k) {
  std::vector<Poly> v(n, Poly(R));
  v[k] = Poly::from_int(R, 1);
  return v;
}

}  // namespace

TEST(Koszul, DifferentialsAndValidation) {
  auto R = ring4();
  auto K = build_koszul(vars(R));
  EXPECT_EQ(K.bundle.complex.ranks(), (std::vector<std::size_t>{1, 4, 6, 4, 1}));
  EXPECT_EQ(K.bundle.d(1).to_string(), PolyMatrix::row(vars(R)).to_string());
  Report rep = validate_dga(K.bundle, vars(R));
  EXPECT_TRUE(rep.all_passed()) << rep.summary();
  EXPECT_TRUE(check_complex(K.bundle.complex));
}

TEST(Koszul, TopDifferentialSignPattern) {
  auto R = ring4();
  auto K = build_koszul(vars(R));
  PolyMatrix k4 = K.bundle.d(4);
  // Removing the generator at position p from e_{0123} carries (-1)^p.
  for (int p = 0; p < 4; ++p) {
    std::vector<int> rest;
    for (int v = 0; v < 4; ++v)
      if (v != p) rest.push_back(v);
    Poly expect = Poly::variable(R, static_cast<std::size_t>(p));
    if (p % 2) expect = -expect;
    EXPECT_EQ(k4(K.index_of(rest), 0), expect);
  }
}

TEST(Koszul, GramMatricesMatchWedgeOracle) {
  auto R = ring4();
  auto K = build_koszul(vars(R));
  for (int i = 0; i <= 4; ++i) {
    PolyMatrix G = pairing_gram(K.bundle, i);
    for (std::size_t s = 0; s < G.rows(); ++s)
      for (std::size_t t = 0; t < G.cols(); ++t) {
        std::vector<int> seq = K.subsets[i][s];
        const auto& T = K.subsets[4 - i][t];
        seq.insert(seq.end(), T.begin(), T.end());
        EXPECT_EQ(G(s, t), Poly::from_int(R, oracle::permutation_sign(seq)));
      }
  }
  PolyMatrix G1 = pairing_gram(K.bundle, 1);
  EXPECT_EQ(G1(0, 3), Poly::from_int(R, 1));
  EXPECT_EQ(G1(1, 2), Poly::from_int(R, -1));
  EXPECT_EQ(G1(2, 1), Poly::from_int(R, 1));
  EXPECT_EQ(G1(3, 0), Poly::from_int(R, -1));
  EXPECT_EQ(pairing_gram(K.bundle, 0).to_string(), PolyMatrix::identity(R, 1).to_string());
}

TEST(Koszul, DividedSquareOfSplitForm) {
  auto R = ring4();
  auto K = build_koszul(vars(R));
  std::vector<Poly> phi(6, Poly(R));
  phi[K.index_of({0, 1})] = Poly::from_int(R, 1);
  phi[K.index_of({2, 3})] = Poly::from_int(R, 1);
  EXPECT_EQ(divided_square(K.bundle, phi), Poly::from_int(R, 1));
  // 2 phi^(2) = phi * phi in odd characteristic.
  auto sq = multiply(K.bundle, 2, 2, phi, phi);
  EXPECT_EQ(sq[0], divided_square(K.bundle, phi) + divided_square(K.bundle, phi));
}

TEST(Koszul, DividedSquareInCharacteristicTwo) {
  auto R = ring4(2);
  auto K = build_koszul(vars(R));
  std::vector<Poly> phi(6, Poly(R));
  phi[K.index_of({0, 1})] = Poly::from_int(R, 1);
  phi[K.index_of({2, 3})] = Poly::from_int(R, 1);
  EXPECT_EQ(divided_square(K.bundle, phi), Poly::from_int(R, 1));
  EXPECT_TRUE(validate_dga(K.bundle).all_passed());
  EXPECT_THROW(autofill_divided_squares(K.bundle), CharTwoNeedsTables);
}

TEST(Koszul, DividedSquareRuleOnRandomElements) {
  auto R = ring4();
  auto K = build_koszul(vars(R));
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Poly> a, b;
    for (int k = 0; k < 6; ++k) {
      a.push_back(oracle::random_poly(R, rng, 2, 1));
      b.push_back(oracle::random_poly(R, rng, 2, 1));
    }
    Poly p = oracle::random_poly(R, rng, 2, 1);
    std::vector<Poly> pa, sum;
    for (int k = 0; k < 6; ++k) {
      pa.push_back(p * a[k]);
      sum.push_back(a[k] + b[k]);
    }
    EXPECT_EQ(divided_square(K.bundle, pa), p * p * divided_square(K.bundle, a));
    EXPECT_EQ(divided_square(K.bundle, sum), divided_square(K.bundle, a) +
                                                 multiply(K.bundle, 2, 2, a, b)[0] +
                                                 divided_square(K.bundle, b));
  }
}

TEST(Koszul, RandomRegularSequencesValidate) {
  auto R = ring4();
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Poly> a;
    for (std::size_t i = 0; i < 4; ++i)
      a.push_back(Poly::variable(R, i).pow(1 + trial % 2) + oracle::random_form(R, rng, 1 + trial % 2));
    if (!check_regular_sequence(a)) continue;
    auto K = build_koszul(a);
    Report rep = validate_dga(K.bundle, a);
    EXPECT_TRUE(rep.all_passed()) << rep.summary();
  }
}

TEST(Validator, FlippedSignIsLocalized) {
  auto R = ring4();
  auto K = build_koszul(vars(R));
  DgaBundle B = K.bundle;
  std::size_t row = K.index_of({0, 1});
  B.mu(1, 1)(row, 0 * 4 + 1) = -B.mu(1, 1)(row, 0 * 4 + 1);
  Report rep = validate_dga(B);
  ASSERT_NE(rep.find("commutativity"), nullptr);
  EXPECT_FALSE(rep.passed("commutativity"));
  EXPECT_EQ(rep.find("commutativity")->detail, "(1,1):(0,1)");
  EXPECT_TRUE(rep.passed("unit"));
}

TEST(Validator, PerturbedDividedSquareFailsBoundary) {
  auto R = ring4();
  auto K = build_koszul(vars(R));
  DgaBundle B = K.bundle;
  B.sq2[2] += Poly::from_int(R, 1);
  Report rep = validate_dga(B);
  EXPECT_FALSE(rep.passed("divided_square_boundary"));
  EXPECT_EQ(rep.find("divided_square_boundary")->detail, "b_2");
  EXPECT_TRUE(rep.passed("leibniz"));
}

TEST(Validator, WrongIdealIsReported) {
  auto R = ring4();
  auto K = build_koszul(vars(R));
  std::vector<Poly> other = vars(R);
  other[3] = other[3] * other[3];
  Report rep = validate_dga(K.bundle, other);
  EXPECT_FALSE(rep.passed("split_generates_ideal"));
}

TEST(Validator, NonUnitOrientationFails) {
  auto R = ring4();
  auto K = build_koszul(vars(R));
  DgaBundle B = K.bundle;
  B.orientation = Poly::variable(R, 0);
  Report rep = validate_dga(B);
  EXPECT_FALSE(rep.passed("orientation_unit"));
  EXPECT_FALSE(rep.passed("poincare_duality_1"));
}

TEST(Dagger, ZeroAndLinearity) {
  auto R = ring4();
  auto K = build_koszul(vars(R));
  EXPECT_TRUE(dagger(K.bundle, PolyMatrix(R, 6, 4)).is_zero());
  std::mt19937_64 rng(8);
  PolyMatrix h(R, 6, 4), g(R, 6, 4);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      h(r, c) = oracle::random_poly(R, rng, 2, 1);
      g(r, c) = oracle::random_poly(R, rng, 2, 1);
    }
  EXPECT_EQ(dagger(K.bundle, h + g), dagger(K.bundle, h) + dagger(K.bundle, g));
  // <h' t2, t1> = <t2, h t1> on every basis pair.
  PolyMatrix hd = dagger(K.bundle, h);
  for (std::size_t p = 0; p < 6; ++p)
    for (std::size_t t = 0; t < 4; ++t) {
      auto lhs = multiply(K.bundle, 3, 1, hd.col(p), unit_vec(R, 4, t));
      auto rhs = multiply(K.bundle, 2, 2, unit_vec(R, 6, p), h.col(t));
      EXPECT_EQ(lhs, rhs);
    }
}

TEST(Dagger, HandExample) {
  auto R = ring4();
  auto K = build_koszul(vars(R));
  PolyMatrix h(R, 6, 4);
  h(K.index_of({0, 1}), 2) = Poly::from_int(R, 1);
  PolyMatrix hd = dagger(K.bundle, h);
  std::vector<Poly> expect(4, Poly(R));
  expect[K.index_of({0, 1, 3})] = Poly::from_int(R, -1);
  EXPECT_EQ(hd.col(K.index_of({2, 3})), expect);
}

TEST(SplitM3, KoszulHasTrivialSecondSummand) {
  auto R = ring4();
  auto K = build_koszul(vars(R));
  M3Split S = split_M3(K.bundle);
  EXPECT_EQ(S.basis31.cols(), 4u);
  EXPECT_EQ(S.basis32.cols(), 0u);
  EXPECT_EQ(S.proj31, PolyMatrix::identity(R, 4));
  EXPECT_TRUE(S.proj32.is_zero());
  EXPECT_EQ(S.proj31 * S.proj31, S.proj31);
}

TEST(Bundle, EmptyBundleHasUnit) {
  auto R = ring4();
  auto K = build_koszul(vars(R));
  DgaBundle B = empty_bundle(K.bundle.complex, Poly::from_int(R, 1), {0, 1, 2, 3}, {});
  Report rep = validate_dga(B);
  EXPECT_TRUE(rep.passed("unit"));
  EXPECT_FALSE(rep.passed("leibniz"));
}

TEST(Bundle, SymmetrizeRestoresKoszulTables) {
  auto R = ring4();
  auto K = build_koszul(vars(R));
  DgaBundle B = K.bundle;
  B.mu(2, 1) = PolyMatrix(R, 4, 24);
  B.mu(3, 1) = PolyMatrix(R, 1, 16);
  symmetrize_products(B);
  EXPECT_EQ(B.mu(2, 1), K.bundle.mu(2, 1));
  EXPECT_EQ(B.mu(3, 1), K.bundle.mu(3, 1));
}

TEST(Bundle, AutofillMatchesKoszulSquares) {
  auto R = ring4();
  auto K = build_koszul(vars(R));
  DgaBundle B = K.bundle;
  autofill_divided_squares(B);
  EXPECT_EQ(B.sq2, K.bundle.sq2);
  Report rep = validate_dga(B);
  EXPECT_TRUE(rep.all_passed()) << rep.summary();
  EXPECT_TRUE(rep.passed("divided_square_table"));
}
