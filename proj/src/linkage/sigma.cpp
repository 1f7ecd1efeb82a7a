#include <functional>

#include "dgmf/errors.hpp"
#include "dgmf/groebner.hpp"
#include "dgmf/linear_algebra.hpp"
#include "dgmf/linkage.hpp"

namespace dgmf {

namespace {

std::vector<Monomial> monomials_up_to(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  Monomial m;
  std::function<void(std::size_t, int)> rec = [&](std::size_t var, int left) {
    if (var == nvars) {
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m.exp[var] = static_cast<std::uint16_t>(e);
      m.degree += static_cast<std::uint32_t>(e);
      rec(var + 1, left - e);
      m.degree -= static_cast<std::uint32_t>(e);
    }
    m.exp[var] = 0;
  };
  rec(0, degree);
  return out;
}

std::size_t row_of(std::vector<Monomial>& rows, const Monomial& m) {
  for (std::size_t k = 0; k < rows.size(); ++k)
    if (rows[k] == m) return k;
  rows.push_back(m);
  return rows.size() - 1;
}

// Lowest-degree r of degree <= bound with f - r*b0 in the ideal, if any.
std::optional<Poly> minimal_r(const GroebnerBasis& gb, const Poly& f, const Poly& b0, int bound) {
  const RingPtr& R = f.ring();
  const Field& F = R->field();
  Poly nf_f = gb.normal_form({f})[0];
  for (int d = 0; d <= bound; ++d) {
    std::vector<Monomial> unknowns = monomials_up_to(R->num_vars(), d);
    std::vector<Poly> images;
    for (const Monomial& m : unknowns)
      images.push_back(gb.normal_form({Poly::term(R, m, F.one()) * b0})[0]);
    std::vector<Monomial> rows;
    for (const Poly& p : images)
      for (const Term& t : p.terms()) row_of(rows, t.mono);
    for (const Term& t : nf_f.terms()) row_of(rows, t.mono);
    std::vector<std::vector<Coeff>> A(rows.size(), std::vector<Coeff>(unknowns.size(), F.zero()));
    std::vector<Coeff> b(rows.size(), F.zero());
    for (std::size_t c = 0; c < images.size(); ++c)
      for (const Term& t : images[c].terms()) A[row_of(rows, t.mono)][c] = t.coeff;
    for (const Term& t : nf_f.terms()) b[row_of(rows, t.mono)] = t.coeff;
    LinearSolution sol = solve_linear_system(F, A, b, unknowns.size());
    if (!sol.consistent) continue;
    std::vector<Term> terms;
    for (std::size_t c = 0; c < unknowns.size(); ++c) terms.push_back({unknowns[c], sol.particular[c]});
    return Poly::from_terms(R, terms);
  }
  return std::nullopt;
}

}  // namespace

SigmaData solve_r_sigma(const LinkageInput& in, const KoszulAlgebra& K, const AlphaBeta& ab,
                        const M3Split& split) {
  const DgaBundle& M = in.M;
  const RingPtr& R = M.ring();
  const Poly& f = in.f;

  std::vector<Poly> row{ab.beta0};
  row.insert(row.end(), in.a.begin(), in.a.end());
  std::vector<Poly> stage1;
  try {
    stage1 = solve_lift(PolyMatrix::row(row), PolyMatrix::column({f})).col(0);
  } catch (const NotInImage&) {
    throw NoDecomposition("f = " + f.to_string() + " is not in (beta_0(1)) + K");
  }

  SigmaData sd{stage1[0], {}, {}, {}, PolyMatrix(R, 0, 0), PolyMatrix(R, 0, 0)};
  GroebnerBasis gb = groebner_basis(R, [&] {
    std::vector<ModuleVector> g;
    for (const Poly& p : in.a) g.push_back({p});
    return g;
  }(), 1);
  if (auto r = minimal_r(gb, f, ab.beta0, stage1[0].total_degree())) sd.r = *r;

  PolyMatrix k1 = K.bundle.d(1);
  Poly rest = f - sd.r * ab.beta0;
  sd.sigma = solve_lift(k1, PolyMatrix::column({rest})).col(0);
  if (sd.r * ab.beta0 + k1.apply(sd.sigma)[0] != f)
    throw InternalCheckFailed("f != r beta_0(1) + k_1(sigma)");

  std::vector<Poly> ws = ab.alpha[1].apply(sd.sigma);
  for (int i = 0; i <= 3; ++i) {
    sd.z.push_back(right_multiplication(K.bundle, i, 1, sd.sigma));
    sd.w.push_back(right_multiplication(M, i, 1, ws));
  }

  // Y = z_1 (proj_{M11} alpha_1)^{-1} proj_{M11} m_2.
  sd.Y = sd.z[1] * ab.change_inv * M.d(2).select_rows(M.split11);
  // W = m_3 (beta_3 |M31)^{-1} z_2.
  PolyMatrix b31 = ab.beta[3] * split.basis31;
  PolyMatrix b31inv(R, 0, 0);
  try {
    b31inv = invert_unimodular(b31);
  } catch (const NotUnimodular& e) {
    throw InternalCheckFailed(std::string("beta_3 restricted to M_{3,1} is not invertible: ") + e.what());
  }
  sd.W = M.d(3) * split.basis31 * b31inv * sd.z[2];
  return sd;
}

}  // namespace dgmf
