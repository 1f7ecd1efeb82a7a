#include "dgmf/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "dgmf/errors.hpp"

namespace dgmf {

namespace {

std::size_t leading_pos(const ModuleVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return i;
  return v.size();
}

bool is_zero_vector(const ModuleVector& v) { return leading_pos(v) == v.size(); }

ModuleVector zero_vector(const RingPtr& ring, std::size_t n) { return ModuleVector(n, Poly(ring)); }

// v - c*m*g, touching positions from `from` on (g vanishes before that).
void sub_multiple(ModuleVector& v, std::size_t from, const Monomial& m, const Coeff& c,
                  const ModuleVector& g) {
  for (std::size_t i = from; i < v.size(); ++i)
    if (!g[i].is_zero()) v[i] = v[i].minus_term_times(m, c, g[i]);
}

void add_term_times(std::vector<Poly>& v, const Monomial& m, const Coeff& c,
                    const std::vector<Poly>& g) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!g[i].is_zero()) v[i] += g[i].times_term(m, c);
}

}  // namespace

GroebnerBasis::GroebnerBasis(RingPtr ring, std::size_t rank, std::vector<ModuleVector> gens)
    : ring_(std::move(ring)), rank_(rank), gens_(std::move(gens)) {
  for (const auto& g : gens_)
    if (g.size() != rank_)
      throw ShapeMismatch("generator of rank " + std::to_string(g.size()) + ", expected " +
                          std::to_string(rank_));
  buchberger();
}

GroebnerBasis groebner_basis(const RingPtr& ring, std::vector<ModuleVector> gens, std::size_t rank) {
  return GroebnerBasis(ring, rank, std::move(gens));
}

GroebnerBasis::Reduction GroebnerBasis::reduce(const ModuleVector& v) const {
  Reduction red{zero_vector(ring_, rank_), std::vector<Poly>(members_.size(), Poly(ring_))};
  ModuleVector p = v;
  std::vector<Term> rem_terms;
  for (std::size_t pos = 0; pos < rank_; ++pos) {
    rem_terms.clear();
    while (!p[pos].is_zero()) {
      const Term lt = p[pos].leading();
      const Member* div = nullptr;
      std::size_t idx = 0;
      for (std::size_t k = 0; k < members_.size(); ++k) {
        if (members_[k].pos == pos && members_[k].lm.divides(lt.mono)) {
          div = &members_[k];
          idx = k;
          break;
        }
      }
      if (div) {
        Monomial m = lt.mono / div->lm;
        sub_multiple(p, pos, m, lt.coeff, div->vec);
        red.quotients[idx] += Poly::term(ring_, m, lt.coeff);
      } else {
        rem_terms.push_back(lt);
        p[pos] = p[pos] - Poly::term(ring_, lt.mono, lt.coeff);
      }
    }
    red.remainder[pos] = Poly::from_terms(ring_, rem_terms);
  }
  return red;
}

bool GroebnerBasis::contains(const ModuleVector& v) const {
  return is_zero_vector(normal_form(v));
}

std::vector<Poly> GroebnerBasis::combine_lifts(const std::vector<Poly>& quotients) const {
  std::vector<Poly> out(gens_.size(), Poly(ring_));
  for (std::size_t l = 0; l < members_.size(); ++l) {
    if (quotients[l].is_zero()) continue;
    for (std::size_t t = 0; t < gens_.size(); ++t)
      if (!members_[l].lift[t].is_zero()) out[t] += quotients[l] * members_[l].lift[t];
  }
  return out;
}

std::optional<std::vector<Poly>> GroebnerBasis::lift(const ModuleVector& v) const {
  Reduction red = reduce(v);
  if (!is_zero_vector(red.remainder)) return std::nullopt;
  return combine_lifts(red.quotients);
}

void GroebnerBasis::buchberger() {
  const Field& F = ring_->field();
  const std::size_t n = gens_.size();

  auto make_monic = [&](Member& m) {
    Coeff inv = F.inv(m.vec[m.pos].leading().coeff);
    if (F.is_one(inv)) return;
    for (auto& p : m.vec) p = p.scaled(inv);
    for (auto& p : m.lift) p = p.scaled(inv);
  };

  // Pending pairs keyed by (lcm degree, j, i) for a deterministic normal strategy.
  std::set<std::tuple<std::uint32_t, std::size_t, std::size_t>> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add_member = [&](Member m) {
    make_monic(m);
    std::size_t j = members_.size();
    for (std::size_t i = 0; i < j; ++i) {
      if (members_[i].pos != m.pos) continue;
      Monomial L = Monomial::lcm(members_[i].lm, m.lm);
      queue.insert({L.degree, j, i});
      pending.insert({i, j});
    }
    members_.push_back(std::move(m));
  };

  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pos = leading_pos(gens_[t]);
    if (pos == rank_) continue;
    Member m{gens_[t], std::vector<Poly>(n, Poly(ring_)), pos, gens_[t][pos].leading().mono};
    m.lift[t] = Poly::from_int(ring_, 1);
    add_member(std::move(m));
  }

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!queue.empty()) {
    auto [deg, j, i] = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({i, j});
    const Monomial L = Monomial::lcm(members_[i].lm, members_[j].lm);

    bool skip = false;
    for (std::size_t k = 0; k < members_.size() && !skip; ++k) {
      if (k == i || k == j || members_[k].pos != members_[i].pos) continue;
      if (members_[k].lm.divides(L) && !is_pending(i, k) && !is_pending(j, k)) skip = true;
    }
    if (skip) continue;

    const Member& a = members_[i];
    const Member& b = members_[j];
    Monomial ma = L / a.lm, mb = L / b.lm;
    ModuleVector s = zero_vector(ring_, rank_);
    std::vector<Poly> slift(n, Poly(ring_));
    Coeff one = F.one(), mone = F.neg(F.one());
    for (std::size_t r = 0; r < rank_; ++r)
      s[r] = a.vec[r].times_term(ma, one) - b.vec[r].times_term(mb, one);
    add_term_times(slift, ma, one, a.lift);
    add_term_times(slift, mb, mone, b.lift);

    Reduction red = reduce(s);
    std::size_t pos = leading_pos(red.remainder);
    if (pos == rank_) continue;
    std::vector<Poly> sub = combine_lifts(red.quotients);
    for (std::size_t t = 0; t < n; ++t) slift[t] -= sub[t];
    Member m{std::move(red.remainder), std::move(slift), pos, Monomial{}};
    m.lm = m.vec[pos].leading().mono;
    add_member(std::move(m));
  }

  // Minimize: drop members whose leading monomial is a multiple of another's.
  std::vector<bool> redundant(members_.size(), false);
  for (std::size_t i = 0; i < members_.size(); ++i) {
    for (std::size_t k = 0; k < members_.size() && !redundant[i]; ++k) {
      if (k == i || members_[k].pos != members_[i].pos) continue;
      if (!members_[k].lm.divides(members_[i].lm)) continue;
      redundant[i] = !(members_[k].lm == members_[i].lm) || k < i;
    }
  }
  std::vector<Member> kept;
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (!redundant[i]) kept.push_back(std::move(members_[i]));
  members_ = std::move(kept);

  // Tail-reduce each member against the others.
  for (std::size_t i = 0; i < members_.size(); ++i) {
    Member self = std::move(members_[i]);
    members_.erase(members_.begin() + static_cast<std::ptrdiff_t>(i));
    Reduction red = reduce(self.vec);
    // The leading term survives because no other leading monomial divides it.
    std::vector<Poly> sub = combine_lifts(red.quotients);
    for (std::size_t t = 0; t < n; ++t) self.lift[t] -= sub[t];
    self.vec = std::move(red.remainder);
    members_.insert(members_.begin() + static_cast<std::ptrdiff_t>(i), std::move(self));
  }
}

std::vector<ModuleVector> GroebnerBasis::syzygies() const {
  const Field& F = ring_->field();
  const std::size_t n = gens_.size();
  const std::size_t m = members_.size();
  std::vector<ModuleVector> out;
  auto push_unique = [&](ModuleVector v) {
    if (is_zero_vector(v)) return;
    for (const auto& w : out)
      if (w == v) return;
    out.push_back(std::move(v));
  };

  // Relations among basis members from S-pairs, pulled back to the originals.
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (members_[i].pos != members_[j].pos) continue;
      const Member& a = members_[i];
      const Member& b = members_[j];
      Monomial L = Monomial::lcm(a.lm, b.lm);
      Monomial ma = L / a.lm, mb = L / b.lm;
      ModuleVector s = zero_vector(ring_, rank_);
      for (std::size_t r = 0; r < rank_; ++r)
        s[r] = a.vec[r].times_term(ma, F.one()) - b.vec[r].times_term(mb, F.one());
      Reduction red = reduce(s);
      if (!is_zero_vector(red.remainder))
        throw InternalCheckFailed("S-pair of a Groebner basis has a nonzero normal form");
      std::vector<Poly> coeffs(m, Poly(ring_));
      for (std::size_t l = 0; l < m; ++l) coeffs[l] = -red.quotients[l];
      coeffs[i] += Poly::term(ring_, ma, F.one());
      coeffs[j] -= Poly::term(ring_, mb, F.one());
      push_unique(combine_lifts(coeffs));
    }
  }
  // Each original minus its rewrite through the basis.
  for (std::size_t t = 0; t < n; ++t) {
    Reduction red = reduce(gens_[t]);
    std::vector<Poly> v = combine_lifts(red.quotients);
    for (auto& p : v) p = -p;
    v[t] += Poly::from_int(ring_, 1);
    push_unique(std::move(v));
  }
  return out;
}

Lifter::Lifter(const PolyMatrix& A) : A_(A), gb_(A.ring(), A.rows(), [&] {
  std::vector<ModuleVector> cols;
  for (std::size_t c = 0; c < A.cols(); ++c) cols.push_back(A.col(c));
  return cols;
}()) {}

std::vector<Poly> Lifter::solve_vector(const std::vector<Poly>& y) const {
  auto z = gb_.lift(y);
  if (!z) {
    ModuleVector rem = gb_.normal_form(y);
    std::string s = "(";
    for (std::size_t i = 0; i < rem.size(); ++i) s += (i ? ", " : "") + rem[i].to_string();
    throw NotInImage(0, s + ")");
  }
  return *z;
}

PolyMatrix Lifter::solve(const PolyMatrix& Y) const {
  if (Y.rows() != A_.rows())
    throw ShapeMismatch("lift target " + Y.shape_string() + " for map " + A_.shape_string());
  PolyMatrix Z(A_.ring(), A_.cols(), Y.cols());
  for (std::size_t k = 0; k < Y.cols(); ++k) {
    ModuleVector y = Y.col(k);
    auto z = gb_.lift(y);
    if (!z) {
      ModuleVector rem = gb_.normal_form(y);
      std::string s = "(";
      for (std::size_t i = 0; i < rem.size(); ++i) s += (i ? ", " : "") + rem[i].to_string();
      throw NotInImage(k, s + ")");
    }
    Z.set_col(k, *z);
  }
  if (A_ * Z != Y) throw InternalCheckFailed("lift does not multiply back");
  return Z;
}

PolyMatrix solve_lift(const PolyMatrix& A, const PolyMatrix& Y) { return Lifter(A).solve(Y); }

std::vector<ModuleVector> syzygy_module(const PolyMatrix& A) {
  return Lifter(A).basis().syzygies();
}

namespace {

// Fraction-free Gauss-Jordan on [A | B]; returns the final common pivot d.
// On return the left block is d*I and the right block is d*A^{-1}*B.
Poly fraction_free_gauss_jordan(PolyMatrix& M, std::size_t n, bool& singular) {
  const RingPtr& R = M.ring();
  Poly prev = Poly::from_int(R, 1);
  singular = false;
  bool negated = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t r = k; r < n; ++r) {
      if (M(r, k).is_zero()) continue;
      if (piv == n || (M(r, k).is_constant() && !M(piv, k).is_constant()) ||
          (M(r, k).is_constant() == M(piv, k).is_constant() && M(r, k).size() < M(piv, k).size()))
        piv = r;
    }
    if (piv == n) {
      singular = true;
      return Poly(R);
    }
    if (piv != k) {
      negated = !negated;
      for (std::size_t c = 0; c < M.cols(); ++c) std::swap(M(piv, c), M(k, c));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      Poly mik = M(i, k);
      for (std::size_t c = 0; c < M.cols(); ++c) {
        if (c == k) continue;
        Poly num = M(k, k) * M(i, c) - mik * M(k, c);
        M(i, c) = poly_divide_exact(num, prev);
      }
      M(i, k) = Poly(R);
    }
    // Rows already processed keep a diagonal equal to the latest pivot.
    prev = M(k, k);
  }
  return negated ? -prev : prev;
}

}  // namespace

Poly determinant(const PolyMatrix& A) {
  if (A.rows() != A.cols()) throw ShapeMismatch("determinant of non-square " + A.shape_string());
  if (A.rows() == 0) return Poly::from_int(A.ring(), 1);
  PolyMatrix M = A;
  bool singular = false;
  Poly d = fraction_free_gauss_jordan(M, A.rows(), singular);
  return singular ? Poly(A.ring()) : d;
}

PolyMatrix invert_unimodular(const PolyMatrix& A) {
  if (A.rows() != A.cols()) throw ShapeMismatch("inverse of non-square " + A.shape_string());
  const std::size_t n = A.rows();
  const RingPtr& R = A.ring();
  if (n == 0) return PolyMatrix(R, 0, 0);
  PolyMatrix M = A.hstack(PolyMatrix::identity(R, n));
  bool singular = false;
  Poly det = fraction_free_gauss_jordan(M, n, singular);
  if (singular) throw NotUnimodular("0");
  if (!det.is_unit()) throw NotUnimodular(det.to_string());
  // Every diagonal entry of the left block is the last pivot.
  PolyMatrix B(R, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Coeff di = R->field().inv(M(i, i).leading().coeff);
    for (std::size_t j = 0; j < n; ++j) B(i, j) = M(i, n + j).scaled(di);
  }
  PolyMatrix I = PolyMatrix::identity(R, n);
  if (A * B != I || B * A != I) throw InternalCheckFailed("unimodular inverse check failed");
  return B;
}

int krull_dimension(const RingPtr& ring, const std::vector<Poly>& gens) {
  std::vector<ModuleVector> vs;
  for (const auto& g : gens) vs.push_back({g});
  GroebnerBasis gb(ring, 1, vs);
  std::vector<Monomial> lms;
  for (std::size_t i = 0; i < gb.size(); ++i) {
    const Poly& p = gb.member(i)[0];
    if (p.is_unit()) return -1;
    lms.push_back(p.leading().mono);
  }
  const std::size_t nv = ring->num_vars();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << nv); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& m : lms) {
      bool inside = true;
      for (std::size_t v = 0; v < nv && inside; ++v)
        if (m.exp[v] > 0 && !(mask & (1u << v))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

bool check_regular_sequence(const std::vector<Poly>& gens) {
  if (gens.size() != 4) throw WrongLength("expected 4 generators, got " + std::to_string(gens.size()));
  for (const auto& g : gens)
    if (g.is_zero()) return false;
  const RingPtr& R = gens[0].ring();
  return krull_dimension(R, gens) == static_cast<int>(R->num_vars()) - 4;
}

}  // namespace dgmf
