#include "oracles.hpp"

#include <algorithm>

#include "dgmf/linear_algebra.hpp"

namespace oracle {

using dgmf::Coeff;
using dgmf::Monomial;
using dgmf::Poly;

Poly binomial_expansion(const dgmf::RingPtr& R, std::size_t i, std::size_t j, unsigned n) {
  std::vector<dgmf::Term> terms;
  std::int64_t c = 1;
  for (unsigned k = 0; k <= n; ++k) {
    Monomial m = Monomial::variable(i, static_cast<std::uint16_t>(k)) *
                 Monomial::variable(j, static_cast<std::uint16_t>(n - k));
    terms.push_back({m, R->field().from_int(c)});
    c = c * (n - k) / (k + 1);
  }
  return Poly::from_terms(R, terms);
}

int permutation_sign(std::vector<int> seq) {
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return 0;
      if (seq[i] > seq[j]) sign = -sign;
    }
  return sign;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out;
  std::vector<unsigned> e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t v, unsigned left) -> void {
    if (v + 1 == nvars) {
      e[v] = left;
      Monomial m;
      for (std::size_t k = 0; k < nvars; ++k) {
        m.exp[k] = static_cast<std::uint16_t>(e[k]);
        m.degree += e[k];
      }
      out.push_back(m);
      return;
    }
    for (unsigned a = 0; a <= left; ++a) {
      e[v] = a;
      self(self, v + 1, left - a);
    }
  };
  rec(rec, 0, d);
  return out;
}

namespace {

std::size_t index_of(const std::vector<Monomial>& basis, const Monomial& m) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == m) return i;
  return basis.size();
}

std::size_t rank_of(const dgmf::Field& F, std::vector<std::vector<Coeff>> rows, std::size_t ncols) {
  std::vector<Coeff> rhs(rows.size(), F.zero());
  auto sol = dgmf::solve_linear_system(F, std::move(rows), rhs, ncols);
  return ncols - sol.nullspace.size();
}

}  // namespace

std::size_t kernel_dimension(const std::vector<Poly>& row, unsigned D) {
  const dgmf::RingPtr& R = row[0].ring();
  const dgmf::Field& F = R->field();
  unsigned d = static_cast<unsigned>(std::max(0, row[0].total_degree()));
  auto src = monomials_of_degree(R->num_vars(), D);
  auto dst = monomials_of_degree(R->num_vars(), D + d);
  std::size_t n = src.size() * row.size();
  // Columns are unknowns, rows are target monomials.
  std::vector<std::vector<Coeff>> M(dst.size(), std::vector<Coeff>(n, F.zero()));
  for (std::size_t c = 0; c < row.size(); ++c)
    for (std::size_t s = 0; s < src.size(); ++s)
      for (const auto& t : row[c].terms()) {
        std::size_t r = index_of(dst, t.mono * src[s]);
        M[r][c * src.size() + s] = F.add(M[r][c * src.size() + s], t.coeff);
      }
  return n - rank_of(F, M, n);
}

std::size_t span_dimension(const dgmf::RingPtr& R, const std::vector<dgmf::ModuleVector>& gens,
                           std::size_t rank, unsigned D) {
  const dgmf::Field& F = R->field();
  auto basis = monomials_of_degree(R->num_vars(), D);
  std::size_t ncols = basis.size() * rank;
  std::vector<std::vector<Coeff>> rows;
  for (const auto& g : gens) {
    int e = -1;
    for (const auto& p : g) e = std::max(e, p.total_degree());
    if (e < 0 || static_cast<unsigned>(e) > D) continue;
    for (const auto& m : monomials_of_degree(R->num_vars(), D - static_cast<unsigned>(e))) {
      std::vector<Coeff> row(ncols, F.zero());
      for (std::size_t c = 0; c < rank; ++c)
        for (const auto& t : g[c].terms()) {
          std::size_t k = index_of(basis, t.mono * m);
          row[c * basis.size() + k] = F.add(row[c * basis.size() + k], t.coeff);
        }
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return 0;
  // Row rank equals column rank; transpose so unknowns are the generators.
  std::vector<std::vector<Coeff>> T(ncols, std::vector<Coeff>(rows.size(), F.zero()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j) T[j][i] = rows[i][j];
  return rank_of(F, T, rows.size());
}

Poly random_poly(const dgmf::RingPtr& R, std::mt19937_64& rng, unsigned terms, unsigned deg) {
  std::vector<dgmf::Term> ts;
  std::uniform_int_distribution<int> coef(-20, 20);
  std::uniform_int_distribution<unsigned> nt(0, terms);
  unsigned k = nt(rng);
  for (unsigned t = 0; t < k; ++t) {
    Monomial m;
    std::uniform_int_distribution<unsigned> dd(0, deg);
    unsigned total = dd(rng);
    std::uniform_int_distribution<std::size_t> var(0, R->num_vars() - 1);
    for (unsigned a = 0; a < total; ++a) {
      std::size_t v = var(rng);
      m.exp[v]++;
      m.degree++;
    }
    ts.push_back({m, R->field().from_int(coef(rng))});
  }
  return Poly::from_terms(R, ts);
}

Poly random_form(const dgmf::RingPtr& R, std::mt19937_64& rng, unsigned d) {
  std::vector<dgmf::Term> ts;
  std::uniform_int_distribution<int> coef(-5, 5);
  for (const auto& m : monomials_of_degree(R->num_vars(), d)) ts.push_back({m, R->field().from_int(coef(rng))});
  return Poly::from_terms(R, ts);
}

}  // namespace oracle
