#include "dgmf/dg_solver.hpp"

#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <tuple>

#include "dgmf/errors.hpp"
#include "dgmf/groebner.hpp"
#include "dgmf/linear_algebra.hpp"

namespace dgmf {

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* s = std::getenv("DGMF_SEED");
  if (!s || !*s) return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  return (end && *end == '\0') ? static_cast<std::uint64_t>(v) : fallback;
}

namespace {

std::vector<Poly> unit_vector(const RingPtr& R, std::size_t n, std::size_t k) {
  std::vector<Poly> e(n, Poly(R));
  e[k] = Poly::from_int(R, 1);
  return e;
}

class Builder {
 public:
  Builder(const FreeComplex& C, Poly orientation, std::vector<std::size_t> s11,
          std::vector<std::size_t> s12, bool symmetrize)
      : C_(C), R_(C.ring()), orientation_(std::move(orientation)), s11_(std::move(s11)),
        s12_(std::move(s12)), symmetrize_(symmetrize), n1_(C.rank(1)), n2_(C.rank(2)),
        n3_(C.rank(3)), l4_(C.d(4)) {}

  // Leibniz lifts of the degree (1,1) and (1,2) tables.
  std::pair<PolyMatrix, PolyMatrix> initial_tables() const {
    const PolyMatrix m1 = C_.d(1), m2 = C_.d(2);
    PolyMatrix m11(R_, n2_, n1_ * n1_);
    Lifter l2(m2);
    for (std::size_t s = 0; s < n1_; ++s)
      for (std::size_t t = symmetrize_ ? s + 1 : 0; t < n1_; ++t) {
        std::vector<Poly> rhs(n1_, Poly(R_));
        rhs[t] += m1(0, s);
        rhs[s] -= m1(0, t);
        std::vector<Poly> sol = l2.solve_vector(rhs);
        m11.set_col(s * n1_ + t, sol);
        if (symmetrize_) {
          for (Poly& p : sol) p = -p;
          m11.set_col(t * n1_ + s, sol);
        }
      }
    PolyMatrix m12(R_, n3_, n1_ * n2_);
    Lifter l3(C_.d(3));
    for (std::size_t s = 0; s < n1_; ++s)
      for (std::size_t q = 0; q < n2_; ++q) {
        std::vector<Poly> rhs = product(m11, n1_, unit_vector(R_, n1_, s), m2.col(q));
        for (Poly& p : rhs) p = -p;
        rhs[q] += m1(0, s);
        m12.set_col(s * n2_ + q, l3.solve_vector(rhs));
      }
    return {m11, m12};
  }

  // Bundle with the given (1,1), (1,2) tables and everything above them
  // forced by Leibniz through the injective m_4.
  DgaBundle complete(const PolyMatrix& m11, const PolyMatrix& m12, bool upper) const {
    DgaBundle B = empty_bundle(C_, orientation_, s11_, s12_);
    B.mu(1, 1) = m11;
    B.mu(1, 2) = m12;
    fill_21(B);
    if (!upper) return B;
    const PolyMatrix m1 = C_.d(1), m2 = C_.d(2), m3 = C_.d(3);
    PolyMatrix rhs13(R_, n3_, n1_ * n3_);
    for (std::size_t s = 0; s < n1_; ++s)
      for (std::size_t v = 0; v < n3_; ++v) {
        std::vector<Poly> r = multiply(B, 1, 2, unit_vector(R_, n1_, s), m3.col(v));
        for (Poly& p : r) p = -p;
        r[v] += m1(0, s);
        rhs13.set_col(s * n3_ + v, r);
      }
    B.mu(1, 3) = l4_.solve(rhs13);
    PolyMatrix rhs22(R_, n3_, n2_ * n2_);
    for (std::size_t q = 0; q < n2_; ++q)
      for (std::size_t p = 0; p < n2_; ++p) {
        std::vector<Poly> a = multiply(B, 1, 2, m2.col(q), unit_vector(R_, n2_, p));
        std::vector<Poly> b = multiply(B, 1, 2, m2.col(p), unit_vector(R_, n2_, q));
        for (std::size_t k = 0; k < n3_; ++k) a[k] += b[k];
        rhs22.set_col(q * n2_ + p, a);
      }
    B.mu(2, 2) = l4_.solve(rhs22);
    for (std::size_t s = 0; s < n1_; ++s)
      for (std::size_t v = 0; v < n3_; ++v) B.mu(3, 1)(0, v * n1_ + s) = -B.mu(1, 3)(0, s * n3_ + v);
    if (R_->field().characteristic() != 2) autofill_divided_squares(B);
    return B;
  }

  std::size_t n1() const { return n1_; }
  std::size_t n2() const { return n2_; }
  std::size_t n3() const { return n3_; }
  const FreeComplex& complex() const { return C_; }

 private:
  static std::vector<Poly> product(const PolyMatrix& mu, std::size_t rj, const std::vector<Poly>& x,
                                   const std::vector<Poly>& y) {
    std::vector<Poly> out(mu.rows(), Poly(mu.ring()));
    for (std::size_t s = 0; s < x.size(); ++s) {
      if (x[s].is_zero()) continue;
      for (std::size_t t = 0; t < y.size(); ++t) {
        if (y[t].is_zero()) continue;
        Poly c = x[s] * y[t];
        for (std::size_t k = 0; k < mu.rows(); ++k)
          if (!mu(k, s * rj + t).is_zero()) out[k] += c * mu(k, s * rj + t);
      }
    }
    return out;
  }

  void fill_21(DgaBundle& B) const {
    for (std::size_t s = 0; s < n1_; ++s)
      for (std::size_t q = 0; q < n2_; ++q)
        for (std::size_t k = 0; k < n3_; ++k) B.mu(2, 1)(k, q * n1_ + s) = B.mu(1, 2)(k, s * n2_ + q);
  }

  FreeComplex C_;
  RingPtr R_;
  Poly orientation_;
  std::vector<std::size_t> s11_, s12_;
  bool symmetrize_;
  std::size_t n1_, n2_, n3_;
  Lifter l4_;
};

// Entries of (xy)z - x(yz) over basis triples of the given degrees.
std::vector<Poly> associators(const DgaBundle& B, int i, int j, int k) {
  const RingPtr& R = B.ring();
  std::vector<Poly> out;
  for (std::size_t a = 0; a < B.rank(i); ++a)
    for (std::size_t b = 0; b < B.rank(j); ++b) {
      std::vector<Poly> ea = unit_vector(R, B.rank(i), a), eb = unit_vector(R, B.rank(j), b);
      std::vector<Poly> ab = multiply(B, i, j, ea, eb);
      for (std::size_t c = 0; c < B.rank(k); ++c) {
        std::vector<Poly> ec = unit_vector(R, B.rank(k), c);
        std::vector<Poly> lhs = multiply(B, i + j, k, ab, ec);
        std::vector<Poly> rhs = multiply(B, i, j + k, ea, multiply(B, j, k, eb, ec));
        for (std::size_t r = 0; r < lhs.size(); ++r) out.push_back(lhs[r] - rhs[r]);
      }
    }
  return out;
}

bool all_zero(const std::vector<Poly>& v) {
  for (const Poly& p : v)
    if (!p.is_zero()) return false;
  return true;
}

// Solves F(x) = 0 for F affine in the unknowns, sampled at 0 and unit vectors.
std::optional<LinearSolution> solve_affine(const Field& F, std::size_t n,
                                           const std::function<std::vector<Poly>(const std::vector<Coeff>&)>& eval) {
  std::vector<Coeff> x(n, F.zero());
  std::vector<Poly> f0 = eval(x);
  std::vector<std::vector<Poly>> cols;
  for (std::size_t k = 0; k < n; ++k) {
    x[k] = F.one();
    std::vector<Poly> fk = eval(x);
    x[k] = F.zero();
    for (std::size_t r = 0; r < fk.size(); ++r) fk[r] -= f0[r];
    cols.push_back(std::move(fk));
  }
  // One row per (entry, monomial) pair that occurs anywhere.
  std::vector<std::vector<Coeff>> A;
  std::vector<Coeff> b;
  for (std::size_t r = 0; r < f0.size(); ++r) {
    std::vector<Monomial> monos;
    auto note = [&](const Poly& p) {
      for (const Term& t : p.terms()) {
        bool seen = false;
        for (const Monomial& m : monos) seen = seen || m == t.mono;
        if (!seen) monos.push_back(t.mono);
      }
    };
    note(f0[r]);
    for (const auto& c : cols) note(c[r]);
    for (const Monomial& m : monos) {
      std::vector<Coeff> row;
      for (const auto& c : cols) row.push_back(c[r].coeff_of(m));
      A.push_back(std::move(row));
      b.push_back(F.neg(f0[r].coeff_of(m)));
    }
  }
  LinearSolution sol = solve_linear_system(F, std::move(A), std::move(b), n);
  if (!sol.consistent) return std::nullopt;
  return sol;
}

std::vector<Coeff> sample(const Field& F, const LinearSolution& sol, std::mt19937_64& rng, bool randomize) {
  std::vector<Coeff> x = sol.particular;
  if (!randomize) return x;
  for (const auto& v : sol.nullspace) {
    Coeff c = F.from_int(static_cast<std::int64_t>(rng() % 97) + 1);
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = F.add(x[k], F.mul(c, v[k]));
  }
  return x;
}

}  // namespace

DgaBundle complete_multiplication(const FreeComplex& C, const Poly& orientation,
                                  std::vector<std::size_t> split11, std::vector<std::size_t> split12,
                                  const SolverConfig& cfg) {
  if (cfg.retry_budget < 0) throw InputError("retry budget must be non-negative");
  if (C.length() != 4 || C.rank(0) != 1 || C.rank(4) != 1)
    throw ShapeMismatch("solver needs a length-four complex with rank-one ends");
  const RingPtr& R = C.ring();
  const Field& F = R->field();
  if (F.characteristic() == 2)
    throw CharTwoNeedsTables("divided squares must be supplied in characteristic 2");

  Builder bld(C, orientation, std::move(split11), std::move(split12), cfg.symmetrize);
  const std::size_t n1 = bld.n1(), n2 = bld.n2(), n3 = bld.n3();
  const PolyMatrix m2 = C.d(2), m3 = C.d(3), m4 = C.d(4);
  auto [m11_0, m12_0] = bld.initial_tables();

  // Degree-three corrections psi_{st} (s < t) to b_s b_t, with the matching
  // change of b_s d_q that keeps the Leibniz rule.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t s = 0; s < n1; ++s)
    for (std::size_t t = s + 1; t < n1; ++t) pairs.push_back({s, t});
  auto apply_psi = [&](const std::vector<Coeff>& psi) {
    PolyMatrix m11 = m11_0, m12 = m12_0;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      auto [s, t] = pairs[p];
      std::vector<Poly> v(n3, Poly(R));
      bool any = false;
      for (std::size_t k = 0; k < n3; ++k) {
        v[k] = Poly::constant(R, psi[p * n3 + k]);
        any = any || !v[k].is_zero();
      }
      if (!any) continue;
      std::vector<Poly> img = m3.apply(v);
      for (std::size_t r = 0; r < n2; ++r) {
        m11(r, s * n1 + t) += img[r];
        m11(r, t * n1 + s) -= img[r];
      }
      for (std::size_t q = 0; q < n2; ++q)
        for (std::size_t k = 0; k < n3; ++k) {
          m12(k, s * n2 + q) -= m2(t, q) * v[k];
          m12(k, t * n2 + q) += m2(s, q) * v[k];
        }
    }
    return std::pair{m11, m12};
  };
  // Top-degree corrections chi_{sq} to b_s d_q.
  auto apply_chi = [&](PolyMatrix m12, const std::vector<Coeff>& chi) {
    for (std::size_t s = 0; s < n1; ++s)
      for (std::size_t q = 0; q < n2; ++q) {
        const Coeff& c = chi[s * n2 + q];
        if (F.is_zero(c)) continue;
        for (std::size_t k = 0; k < n3; ++k) m12(k, s * n2 + q) += m4(k, 0).scaled(c);
      }
    return m12;
  };

  std::mt19937_64 rng(cfg.seed);
  std::string last = "no attempt made";
  auto stageA = solve_affine(F, pairs.size() * n3, [&](const std::vector<Coeff>& psi) {
    auto [m11, m12] = apply_psi(psi);
    return associators(bld.complete(m11, m12, false), 1, 1, 1);
  });
  if (!stageA) throw SolverGaveUp("no constant correction makes (1,1,1) products associative", "associativity (1,1,1)");

  // psi stays at the particular solution: resampling it would only move
  // b_s b_t by boundaries that the chi stage cannot see.
  auto [m11, m12] = apply_psi(stageA->particular);
  if (!all_zero(associators(bld.complete(m11, m12, false), 1, 1, 1)))
    throw SolverGaveUp("associativity (1,1,1) is not affine in the corrections", "associativity (1,1,1)");

  auto top = [&](const std::vector<Coeff>& chi) {
    DgaBundle B = bld.complete(m11, apply_chi(m12, chi), true);
    std::vector<Poly> out = associators(B, 1, 1, 2);
    for (auto [i, j, k] : {std::tuple{1, 2, 1}, std::tuple{2, 1, 1}}) {
      std::vector<Poly> more = associators(B, i, j, k);
      out.insert(out.end(), more.begin(), more.end());
    }
    return std::pair{out, B};
  };
  std::vector<Coeff> zero(n1 * n2, F.zero());
  DgaBundle base = top(zero).second;
  const PolyMatrix g1 = raw_gram(base, 1), g2 = raw_gram(base, 2);
  // Preferred space: corrections that leave the non-constant part of the
  // degree-one and degree-two pairings untouched.
  auto preferred = [&](const std::vector<Coeff>& chi) {
    auto [out, B] = top(chi);
    for (auto [G0, G] : {std::pair{g1, raw_gram(B, 1)}, std::pair{g2, raw_gram(B, 2)}})
      for (std::size_t r = 0; r < G.rows(); ++r)
        for (std::size_t c = 0; c < G.cols(); ++c) {
          std::vector<Term> terms;
          const Poly diff = G(r, c) - G0(r, c);
          for (const Term& t : diff.terms())
            if (!t.mono.is_one()) terms.push_back(t);
          out.push_back(Poly::from_terms(R, terms));
        }
    return out;
  };
  auto stageB = solve_affine(F, n1 * n2, preferred);
  if (!stageB) stageB = solve_affine(F, n1 * n2, [&](const std::vector<Coeff>& chi) { return top(chi).first; });
  if (!stageB)
    throw SolverGaveUp("no constant correction makes degree-four products associative",
                       "associativity (1,1,2)");

  for (int attempt = 0; attempt <= cfg.retry_budget; ++attempt) {
    std::vector<Coeff> chi = sample(F, *stageB, rng, attempt > 0);
    DgaBundle B = bld.complete(m11, apply_chi(m12, chi), true);
    Report rep = validate_dga(B);
    if (rep.all_passed()) return B;
    last = rep.failures().front().name + " " + rep.failures().front().detail;
  }
  throw SolverGaveUp("solver exhausted its retry budget: " + last, last);
}

}  // namespace dgmf
