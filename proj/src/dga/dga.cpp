#include "dgmf/dga.hpp"

#include <algorithm>
#include <functional>

#include "dgmf/errors.hpp"
#include "dgmf/groebner.hpp"

namespace dgmf {

const PolyMatrix& DgaBundle::mu(int i, int j) const {
  auto it = mult.find({i, j});
  if (it == mult.end())
    throw ShapeMismatch("no multiplication table (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return it->second;
}

PolyMatrix& DgaBundle::mu(int i, int j) {
  auto it = mult.find({i, j});
  if (it == mult.end())
    throw ShapeMismatch("no multiplication table (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return it->second;
}

DgaBundle empty_bundle(const FreeComplex& complex, const Poly& orientation,
                       std::vector<std::size_t> split11, std::vector<std::size_t> split12) {
  if (complex.length() != 4) throw ShapeMismatch("bundle complex must have length 4");
  const RingPtr& R = complex.ring();
  DgaBundle B{complex, {}, std::vector<Poly>(complex.rank(2), Poly(R)), orientation,
              std::move(split11), std::move(split12), false};
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j)
      B.mult.emplace(std::make_pair(i, j),
                     PolyMatrix(R, complex.rank(i + j), complex.rank(i) * complex.rank(j)));
  // M_0 is free of rank one on the unit.
  if (complex.rank(0) == 1) {
    for (int j = 0; j <= 4; ++j) {
      std::size_t r = complex.rank(j);
      for (std::size_t t = 0; t < r; ++t) {
        B.mu(0, j)(t, t) = Poly::from_int(R, 1);
        B.mu(j, 0)(t, t) = Poly::from_int(R, 1);
      }
    }
  }
  return B;
}

void autofill_divided_squares(DgaBundle& B) {
  const Field& F = B.ring()->field();
  if (F.characteristic() == 2)
    throw CharTwoNeedsTables("divided squares cannot be derived from b*b in characteristic 2");
  Coeff half = F.inv(F.from_int(2));
  std::size_t r2 = B.rank(2);
  for (std::size_t q = 0; q < r2; ++q) B.sq2[q] = B.mu(2, 2)(0, q * r2 + q).scaled(half);
  B.sq2_autofilled = true;
}

void symmetrize_products(DgaBundle& B) {
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; i + j <= 4; ++j) {
      std::size_t ri = B.rank(i), rj = B.rank(j);
      bool odd = (i * j) % 2 == 1;
      const PolyMatrix src = B.mu(i, j);
      PolyMatrix& dst = B.mu(j, i);
      for (std::size_t s = 0; s < ri; ++s)
        for (std::size_t t = 0; t < rj; ++t)
          for (std::size_t k = 0; k < src.rows(); ++k)
            dst(k, t * ri + s) = odd ? -src(k, s * rj + t) : src(k, s * rj + t);
    }
}

std::vector<Poly> multiply(const DgaBundle& B, int i, int j, const std::vector<Poly>& x,
                           const std::vector<Poly>& y) {
  const PolyMatrix& mu = B.mu(i, j);
  std::size_t rj = B.rank(j);
  std::vector<Poly> out(mu.rows(), Poly(B.ring()));
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

PolyMatrix left_multiplication(const DgaBundle& B, int i, int j, const std::vector<Poly>& x) {
  const RingPtr& R = B.ring();
  PolyMatrix out(R, B.rank(i + j), B.rank(j));
  for (std::size_t t = 0; t < B.rank(j); ++t) {
    std::vector<Poly> e(B.rank(j), Poly(R));
    e[t] = Poly::from_int(R, 1);
    out.set_col(t, multiply(B, i, j, x, e));
  }
  return out;
}

PolyMatrix right_multiplication(const DgaBundle& B, int i, int j, const std::vector<Poly>& y) {
  const RingPtr& R = B.ring();
  PolyMatrix out(R, B.rank(i + j), B.rank(i));
  for (std::size_t s = 0; s < B.rank(i); ++s) {
    std::vector<Poly> e(B.rank(i), Poly(R));
    e[s] = Poly::from_int(R, 1);
    out.set_col(s, multiply(B, i, j, e, y));
  }
  return out;
}

Poly divided_square(const DgaBundle& B, const std::vector<Poly>& theta) {
  const PolyMatrix& mu = B.mu(2, 2);
  std::size_t r2 = B.rank(2);
  Poly out(B.ring());
  for (std::size_t q = 0; q < r2; ++q) {
    if (theta[q].is_zero()) continue;
    out += theta[q] * theta[q] * B.sq2[q];
    for (std::size_t p = q + 1; p < r2; ++p)
      if (!theta[p].is_zero()) out += theta[q] * theta[p] * mu(0, q * r2 + p);
  }
  return out;
}

std::size_t KoszulAlgebra::index_of(const std::vector<int>& subset) const {
  const auto& list = subsets.at(subset.size());
  for (std::size_t k = 0; k < list.size(); ++k)
    if (list[k] == subset) return k;
  throw ShapeMismatch("subset not in the Koszul basis");
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// Sign of the shuffle putting S followed by T in increasing order; 0 if they meet.
int shuffle_sign(const std::vector<int>& S, const std::vector<int>& T) {
  int sign = 1;
  for (int s : S)
    for (int t : T) {
      if (s == t) return 0;
      if (s > t) sign = -sign;
    }
  return sign;
}

}  // namespace

KoszulAlgebra build_koszul(const std::vector<Poly>& a) {
  if (a.size() != 4) throw WrongLength("Koszul algebra needs 4 generators");
  const RingPtr& R = a[0].ring();
  KoszulAlgebra K{DgaBundle{FreeComplex(R, {1}, {}), {}, {}, Poly(R), {}, {}, false}, a, {}};
  for (int k = 0; k <= 4; ++k) K.subsets.push_back(subsets_of_size(4, k));

  std::vector<std::size_t> ranks;
  for (int k = 0; k <= 4; ++k) ranks.push_back(K.subsets[k].size());
  std::vector<PolyMatrix> diffs;
  for (int k = 1; k <= 4; ++k) {
    PolyMatrix d(R, ranks[k - 1], ranks[k]);
    for (std::size_t c = 0; c < ranks[k]; ++c) {
      const auto& S = K.subsets[k][c];
      for (std::size_t pos = 0; pos < S.size(); ++pos) {
        std::vector<int> rest = S;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
        Poly v = a[static_cast<std::size_t>(S[pos])];
        d(K.index_of(rest), c) = pos % 2 ? -v : v;
      }
    }
    diffs.push_back(std::move(d));
  }
  FreeComplex C(R, ranks, diffs);
  K.bundle = empty_bundle(C, Poly::from_int(R, 1), {0, 1, 2, 3}, {});
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; i + j <= 4; ++j) {
      PolyMatrix& mu = K.bundle.mu(i, j);
      for (std::size_t s = 0; s < ranks[i]; ++s)
        for (std::size_t t = 0; t < ranks[j]; ++t) {
          const auto& S = K.subsets[i][s];
          const auto& T = K.subsets[j][t];
          int sign = shuffle_sign(S, T);
          if (sign == 0) continue;
          std::vector<int> U = S;
          U.insert(U.end(), T.begin(), T.end());
          std::sort(U.begin(), U.end());
          mu(K.index_of(U), s * ranks[j] + t) = Poly::from_int(R, sign);
        }
    }
  // Basis wedges in degree two have zero divided square; general elements
  // follow from the cross-term rule.
  return K;
}

PolyMatrix raw_gram(const DgaBundle& B, int i) {
  const RingPtr& R = B.ring();
  std::size_t ri = B.rank(i), rj = B.rank(4 - i);
  const PolyMatrix& mu = B.mu(i, 4 - i);
  PolyMatrix G(R, ri, rj);
  for (std::size_t s = 0; s < ri; ++s)
    for (std::size_t t = 0; t < rj; ++t) G(s, t) = mu(0, s * rj + t);
  return G;
}

PolyMatrix pairing_gram(const DgaBundle& B, int i) {
  if (i < 0 || i > 4) throw ShapeMismatch("pairing degree out of range");
  PolyMatrix G = raw_gram(B, i).scaled(B.orientation);
  try {
    invert_unimodular(G);
  } catch (const NotUnimodular& e) {
    throw NotPerfectPairing("pairing in degree " + std::to_string(i) + " is not perfect: " + e.what());
  } catch (const ShapeMismatch& e) {
    throw NotPerfectPairing("pairing in degree " + std::to_string(i) + " is not square: " + e.what());
  }
  return G;
}

namespace {

PolyMatrix invert_pairing(const PolyMatrix& G, const std::string& what) {
  try {
    return invert_unimodular(G);
  } catch (const NotUnimodular& e) {
    throw NotPerfectPairing(what + " pairing is not perfect: " + e.what());
  } catch (const ShapeMismatch& e) {
    throw NotPerfectPairing(what + " pairing is not square: " + e.what());
  }
}

}  // namespace

PolyMatrix dagger(const DgaBundle& B, const PolyMatrix& h) {
  if (h.rows() != B.rank(2) || h.cols() != B.rank(1))
    throw ShapeMismatch("dagger expects a map M_1 -> M_2, got " + h.shape_string());
  PolyMatrix inv = invert_pairing(raw_gram(B, 3).transpose(), "M_3 x M_1");
  return inv * h.transpose() * raw_gram(B, 2).transpose();
}

M3Split split_M3(const DgaBundle& B) {
  PolyMatrix G31t = raw_gram(B, 3).transpose();
  PolyMatrix dual = invert_pairing(G31t, "M_3 x M_1");
  M3Split S{dual.select_cols(B.split11), dual.select_cols(B.split12), G31t.select_rows(B.split11),
            G31t.select_rows(B.split12), PolyMatrix(B.ring(), 0, 0), PolyMatrix(B.ring(), 0, 0)};
  S.proj31 = S.basis31 * S.coord31;
  S.proj32 = S.basis32 * S.coord32;
  const std::size_t r3 = B.rank(3);
  if (S.proj31 + S.proj32 != PolyMatrix::identity(B.ring(), r3))
    throw InternalCheckFailed("M_3 projections do not sum to the identity");
  // Annihilation: M_{3,1} kills M_{1,2} and M_{3,2} kills M_{1,1}.
  if (!(G31t.select_rows(B.split12) * S.basis31).is_zero() ||
      !(G31t.select_rows(B.split11) * S.basis32).is_zero())
    throw InternalCheckFailed("M_3 summands fail the annihilation conditions");
  invert_pairing(S.coord31 * S.basis31, "M_{3,1} x M_{1,1}");
  invert_pairing(S.coord32 * S.basis32, "M_{3,2} x M_{1,2}");
  return S;
}

namespace {

// Decodes a column index of an iterated tensor product into basis indices.
std::string tensor_label(std::size_t col, const std::vector<std::size_t>& ranks) {
  std::vector<std::size_t> idx(ranks.size());
  for (std::size_t k = ranks.size(); k-- > 0;) {
    idx[k] = col % ranks[k];
    col /= ranks[k];
  }
  std::string s;
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(idx[k]);
  return s;
}

std::vector<std::size_t> differing_columns(const PolyMatrix& a, const PolyMatrix& b) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < a.cols(); ++c)
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (a(r, c) != b(r, c)) {
        out.push_back(c);
        break;
      }
  return out;
}

void add_family(Report& rep, const std::string& name, const std::vector<std::string>& failures) {
  std::string detail;
  for (std::size_t k = 0; k < failures.size() && k < 8; ++k) detail += (k ? "; " : "") + failures[k];
  if (failures.size() > 8) detail += "; ...";
  rep.add(name, failures.empty(), detail);
}

std::string deg_label(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

Report validate_dga(const DgaBundle& B, const std::optional<std::vector<Poly>>& ideal) {
  Report rep;
  const RingPtr& R = B.ring();
  auto r = [&](int i) { return B.rank(i); };

  // Shapes first: nothing else is meaningful without them.
  std::vector<std::string> shape_errors;
  if (B.complex.length() != 4) shape_errors.push_back("complex length " + std::to_string(B.complex.length()));
  for (int i = 0; i <= 4 && shape_errors.empty(); ++i)
    for (int j = 0; i + j <= 4; ++j) {
      auto it = B.mult.find({i, j});
      if (it == B.mult.end()) {
        shape_errors.push_back("missing table " + deg_label(i, j));
      } else if (it->second.rows() != r(i + j) || it->second.cols() != r(i) * r(j)) {
        shape_errors.push_back("table " + deg_label(i, j) + " has shape " + it->second.shape_string());
      }
    }
  if (B.sq2.size() != r(2)) shape_errors.push_back("divided-square table has wrong length");
  for (auto s : B.split11)
    if (s >= r(1)) shape_errors.push_back("split index out of range");
  for (auto s : B.split12)
    if (s >= r(1)) shape_errors.push_back("split index out of range");
  add_family(rep, "shapes", shape_errors);
  if (!shape_errors.empty()) return rep;

  {
    auto bad = complex_defect(B.complex);
    rep.add("complex", !bad, bad ? "d_" + std::to_string(*bad) + " d_" + std::to_string(*bad + 1) + " != 0" : "");
  }
  rep.add("rank_one_ends", r(0) == 1 && r(4) == 1,
          "ranks " + std::to_string(r(0)) + ", " + std::to_string(r(4)));
  if (r(0) != 1 || r(4) != 1) return rep;

  {
    std::vector<std::string> fails;
    for (int j = 0; j <= 4; ++j) {
      if (B.mu(0, j) != PolyMatrix::identity(R, r(j))) fails.push_back("left unit on M_" + std::to_string(j));
      if (B.mu(j, 0) != PolyMatrix::identity(R, r(j))) fails.push_back("right unit on M_" + std::to_string(j));
    }
    add_family(rep, "unit", fails);
  }

  {
    std::vector<std::string> fails;
    for (int i = 1; i <= 4; ++i)
      for (int j = i; i + j <= 4; ++j)
        for (std::size_t s = 0; s < r(i); ++s)
          for (std::size_t t = 0; t < r(j); ++t) {
            if (i == j && t < s) continue;
            for (std::size_t k = 0; k < r(i + j); ++k) {
              Poly lhs = B.mu(i, j)(k, s * r(j) + t);
              Poly rhs = B.mu(j, i)(k, t * r(i) + s);
              if ((i * j) % 2) rhs = -rhs;
              if (lhs != rhs) {
                fails.push_back(deg_label(i, j) + ":(" + std::to_string(s) + "," + std::to_string(t) + ")");
                break;
              }
            }
          }
    add_family(rep, "commutativity", fails);
  }

  {
    std::vector<std::string> fails;
    for (std::size_t s = 0; s < r(1); ++s)
      for (std::size_t k = 0; k < r(2); ++k)
        if (!B.mu(1, 1)(k, s * r(1) + s).is_zero()) {
          fails.push_back("b_" + std::to_string(s) + "^2");
          break;
        }
    add_family(rep, "odd_squares", fails);
  }

  {
    std::vector<std::string> fails;
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; i + j <= 3; ++j)
        for (int k = 1; i + j + k <= 4; ++k) {
          PolyMatrix lhs = B.mu(i + j, k) * kron(B.mu(i, j), PolyMatrix::identity(R, r(k)));
          PolyMatrix rhs = B.mu(i, j + k) * kron(PolyMatrix::identity(R, r(i)), B.mu(j, k));
          for (auto c : differing_columns(lhs, rhs))
            fails.push_back("(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                            "):(" + tensor_label(c, {r(i), r(j), r(k)}) + ")");
        }
    add_family(rep, "associativity", fails);
  }

  {
    std::vector<std::string> fails;
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; i + j <= 4; ++j) {
        PolyMatrix lhs = B.d(i + j) * B.mu(i, j);
        PolyMatrix rhs = B.mu(i - 1, j) * kron(B.d(i), PolyMatrix::identity(R, r(j)));
        PolyMatrix second = B.mu(i, j - 1) * kron(PolyMatrix::identity(R, r(i)), B.d(j));
        rhs = i % 2 ? rhs - second : rhs + second;
        for (auto c : differing_columns(lhs, rhs))
          fails.push_back(deg_label(i, j) + ":(" + tensor_label(c, {r(i), r(j)}) + ")");
      }
    add_family(rep, "leibniz", fails);
  }

  {
    std::vector<std::string> boundary, product;
    PolyMatrix m2 = B.d(2);
    for (std::size_t q = 0; q < r(2); ++q) {
      std::vector<Poly> bq(r(2), Poly(R));
      bq[q] = Poly::from_int(R, 1);
      std::vector<Poly> lhs = B.d(4).apply({B.sq2[q]});
      std::vector<Poly> rhs = multiply(B, 1, 2, m2.col(q), bq);
      if (lhs != rhs) boundary.push_back("b_" + std::to_string(q));
      Poly twice = B.sq2[q] + B.sq2[q];
      if (B.mu(2, 2)(0, q * r(2) + q) != twice) product.push_back("b_" + std::to_string(q));
    }
    add_family(rep, "divided_square_boundary", boundary);
    add_family(rep, "divided_square_product", product);
    if (B.sq2_autofilled) rep.add("divided_square_table", true, "auto-filled as (b*b)/2");
  }

  rep.add("orientation_unit", B.orientation.is_unit(), B.orientation.to_string());

  for (int i = 0; i <= 4; ++i) {
    std::string name = "poincare_duality_" + std::to_string(i);
    try {
      pairing_gram(B, i);
      rep.add(name, true);
    } catch (const Error& e) {
      rep.add(name, false, e.what());
    }
  }

  {
    std::vector<std::size_t> all = B.split11;
    all.insert(all.end(), B.split12.begin(), B.split12.end());
    std::sort(all.begin(), all.end());
    bool partition = all.size() == r(1) && std::adjacent_find(all.begin(), all.end()) == all.end();
    rep.add("split_partition", partition && B.split11.size() == 4,
            "M_{1,1} has " + std::to_string(B.split11.size()) + " of " + std::to_string(r(1)) + " indices");
  }

  if (ideal) {
    PolyMatrix m11 = B.d(1).select_cols(B.split11);
    std::vector<ModuleVector> g1, g2;
    for (std::size_t c = 0; c < m11.cols(); ++c) g1.push_back({m11(0, c)});
    for (const auto& p : *ideal) g2.push_back({p});
    GroebnerBasis G1(R, 1, g1), G2(R, 1, g2);
    std::vector<std::string> fails;
    for (const auto& v : g2)
      if (!G1.contains(v)) fails.push_back(v[0].to_string() + " not generated by M_{1,1}");
    for (const auto& v : g1)
      if (!G2.contains(v)) fails.push_back(v[0].to_string() + " outside the given ideal");
    add_family(rep, "split_generates_ideal", fails);
  }
  return rep;
}

}  // namespace dgmf
