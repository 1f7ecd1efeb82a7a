#include "dgmf/examples.hpp"

#include "dgmf/errors.hpp"
#include "dgmf/groebner.hpp"

namespace dgmf {

DgaBundle change_basis(const DgaBundle& B, int degree, const PolyMatrix& P) {
  const RingPtr& R = B.ring();
  if (P.rows() != B.rank(degree) || P.cols() != B.rank(degree))
    throw ShapeMismatch("change of basis has shape " + P.shape_string());
  PolyMatrix Pinv = invert_unimodular(P);
  auto Q = [&](int k) { return k == degree ? P : PolyMatrix::identity(R, B.rank(k)); };
  auto Qinv = [&](int k) { return k == degree ? Pinv : PolyMatrix::identity(R, B.rank(k)); };

  std::vector<std::size_t> ranks;
  std::vector<PolyMatrix> diffs;
  for (int i = 0; i <= 4; ++i) ranks.push_back(B.rank(i));
  for (int i = 1; i <= 4; ++i) diffs.push_back(Qinv(i - 1) * B.d(i) * Q(i));

  DgaBundle out = B;
  out.complex = FreeComplex(R, ranks, diffs);
  for (auto& [key, mu] : out.mult) mu = Qinv(key.first + key.second) * mu * kron(Q(key.first), Q(key.second));
  if (degree == 2)
    for (std::size_t q = 0; q < B.rank(2); ++q) out.sq2[q] = divided_square(B, P.col(q));
  return out;
}

DgaBundle koszul_bundle(const std::vector<Poly>& a) { return build_koszul(a).bundle; }

DgaBundle strand_bundle(const std::vector<Poly>& b, const std::vector<Poly>& c) {
  if (b.size() != 4 || c.size() != 4) throw WrongLength("strand bundle needs four b and four c");
  const RingPtr& R = b[0].ring();
  KoszulAlgebra K = build_koszul(b);
  const DgaBundle& KB = K.bundle;
  const Poly one = Poly::from_int(R, 1);

  // Degree 1: e_0..e_3, s_0..s_3. Degree 2: e_ab, t_0..t_3, u_0..u_3.
  // Degree 3: e_abc, v_0..v_3.
  const std::size_t k2 = KB.rank(2), k3 = KB.rank(3);
  std::vector<std::size_t> ranks{1, 8, k2 + 8, k3 + 4, 1};
  auto s = [](std::size_t j) { return 4 + j; };
  auto t = [&](std::size_t j) { return k2 + j; };
  auto u = [&](std::size_t j) { return k2 + 4 + j; };
  auto v = [&](std::size_t j) { return k3 + j; };

  std::vector<PolyMatrix> diffs;
  for (int i = 1; i <= 4; ++i) {
    PolyMatrix d(R, ranks[static_cast<std::size_t>(i - 1)], ranks[static_cast<std::size_t>(i)]);
    PolyMatrix kd = KB.d(i);
    for (std::size_t r = 0; r < kd.rows(); ++r)
      for (std::size_t q = 0; q < kd.cols(); ++q) d(r, q) = kd(r, q);
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == 2) d(s(j), t(j)) = one;
      if (i == 3) d(u(j), v(j)) = one;
    }
    diffs.push_back(std::move(d));
  }
  DgaBundle B = empty_bundle(FreeComplex(R, ranks, diffs), one, {4, 5, 6, 7}, {0, 1, 2, 3});

  for (int i = 1; i <= 3; ++i)
    for (int j = i; i + j <= 4; ++j) {
      const PolyMatrix& km = KB.mu(i, j);
      PolyMatrix& mu = B.mu(i, j);
      for (std::size_t a = 0; a < KB.rank(i); ++a)
        for (std::size_t q = 0; q < KB.rank(j); ++q)
          for (std::size_t r = 0; r < km.rows(); ++r) mu(r, a * ranks[j] + q) = km(r, a * KB.rank(j) + q);
    }
  const PolyMatrix k4 = KB.d(4);
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t a = 0; a < 4; ++a) {
      B.mu(1, 1)(t(j), a * 8 + s(j)) = b[a];
      B.mu(1, 1)(t(j), s(j) * 8 + a) = -b[a];
      B.mu(1, 2)(v(j), a * ranks[2] + u(j)) = b[a];
    }
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t r = 0; r < k3; ++r) B.mu(1, 2)(r, s(j) * ranks[2] + u(j)) = -k4(r, 0);
    B.mu(2, 2)(0, t(j) * ranks[2] + u(j)) = -one;
    B.mu(2, 2)(0, u(j) * ranks[2] + t(j)) = -one;
    B.mu(1, 3)(0, s(j) * ranks[3] + v(j)) = one;
  }
  symmetrize_products(B);

  PolyMatrix P = PolyMatrix::identity(R, 8);
  for (std::size_t j = 0; j < 4; ++j) P(j, s(j)) = c[j];
  return change_basis(B, 1, P);
}

namespace {

LinkageInput make_input(const RingPtr& R, std::vector<Poly> a, Poly f, DgaBundle M) {
  return LinkageInput{R, std::move(a), std::move(f), std::move(M), {}};
}

std::vector<Poly> vars(const RingPtr& R, std::size_t n) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Poly::variable(R, i));
  return out;
}

}  // namespace

LinkageInput example_E1() {
  RingPtr R = make_ring(Field::prime(101), {"x", "y", "z", "w"});
  std::vector<Poly> a = vars(R, 4);
  return make_input(R, a, parse_poly("1+x", R), koszul_bundle(a));
}

LinkageInput example_E2() {
  RingPtr R = make_ring(Field::prime(101), {"x", "y", "z", "w", "u"});
  std::vector<Poly> a = vars(R, 4);
  return make_input(R, a, parse_poly("u", R), koszul_bundle(a));
}

LinkageInput example_E3() {
  RingPtr R = make_ring(Field::prime(101), {"x", "y", "z", "w"});
  std::vector<Poly> b = vars(R, 4);
  std::vector<Poly> a;
  for (const Poly& p : b) a.push_back(p * p);
  return make_input(R, a, parse_poly("x*y*z*w", R), strand_bundle(b, b));
}

LinkageInput example_by_name(const std::string& name) {
  if (name == "E1") return example_E1();
  if (name == "E2") return example_E2();
  if (name == "E3") return example_E3();
  throw InputError("unknown example '" + name + "'");
}

}  // namespace dgmf
