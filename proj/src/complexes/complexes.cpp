#include "dgmf/complexes.hpp"

#include <algorithm>

#include "dgmf/errors.hpp"
#include "dgmf/groebner.hpp"

namespace dgmf {

FreeComplex::FreeComplex(RingPtr ring, std::vector<std::size_t> ranks, std::vector<PolyMatrix> diffs)
    : ring_(std::move(ring)), ranks_(std::move(ranks)), diffs_(std::move(diffs)) {
  if (ranks_.empty()) throw ShapeMismatch("complex needs at least one module");
  if (diffs_.size() + 1 != ranks_.size())
    throw ShapeMismatch("complex with " + std::to_string(ranks_.size()) + " modules needs " +
                        std::to_string(ranks_.size() - 1) + " differentials");
  for (std::size_t i = 1; i < ranks_.size(); ++i) {
    const PolyMatrix& d = diffs_[i - 1];
    if (d.rows() != ranks_[i - 1] || d.cols() != ranks_[i])
      throw ShapeMismatch("d_" + std::to_string(i) + " has shape " + d.shape_string() +
                          ", expected " + std::to_string(ranks_[i - 1]) + "x" +
                          std::to_string(ranks_[i]));
  }
}

std::size_t FreeComplex::rank(int i) const {
  if (i < 0 || i > length()) return 0;
  return ranks_[static_cast<std::size_t>(i)];
}

PolyMatrix FreeComplex::d(int i) const {
  if (i < 1 || i > length()) return PolyMatrix(ring_, rank(i - 1), rank(i));
  return diffs_[static_cast<std::size_t>(i - 1)];
}

ChainMap::ChainMap(FreeComplex source, FreeComplex target, std::vector<PolyMatrix> maps, int shift)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps)), shift_(shift) {
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    int deg = static_cast<int>(i);
    std::size_t r = target_.rank(deg + shift_), c = source_.rank(deg);
    if (maps_[i].rows() != r || maps_[i].cols() != c)
      throw ShapeMismatch("chain map component " + std::to_string(i) + " has shape " +
                          maps_[i].shape_string() + ", expected " + std::to_string(r) + "x" +
                          std::to_string(c));
  }
}

PolyMatrix ChainMap::map(int i) const {
  if (i >= 0 && static_cast<std::size_t>(i) < maps_.size()) return maps_[static_cast<std::size_t>(i)];
  return PolyMatrix(source_.ring(), target_.rank(i + shift_), source_.rank(i));
}

HomotopyPrescription zero_prescription(const ChainMap& c, int degree, std::vector<std::size_t> columns) {
  PolyMatrix v(c.source().ring(), c.target().rank(degree + 1), columns.size());
  return {degree, std::move(columns), std::move(v)};
}

HomotopyPrescription zero_prescription(const ChainMap& c, int degree) {
  std::vector<std::size_t> cols(c.source().rank(degree));
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return zero_prescription(c, degree, std::move(cols));
}

std::optional<int> complex_defect(const FreeComplex& C) {
  for (int i = 1; i < C.length(); ++i)
    if (!(C.d(i) * C.d(i + 1)).is_zero()) return i;
  return std::nullopt;
}

bool check_complex(const FreeComplex& C) { return !complex_defect(C); }

std::optional<int> chain_map_defect(const ChainMap& F) {
  int top = std::max(F.source().length(), F.target().length() - F.shift()) + 1;
  for (int i = 0; i <= top; ++i) {
    PolyMatrix lhs = F.target().d(i + F.shift()) * F.map(i);
    PolyMatrix rhs = F.map(i - 1) * F.source().d(i);
    if (lhs != rhs) return i;
  }
  return std::nullopt;
}

bool check_chain_map(const ChainMap& F) { return !chain_map_defect(F); }

PolyMatrix homotopy_residual(const ChainMap& c, const Homotopy& h, int i) {
  const RingPtr& R = c.source().ring();
  auto hmap = [&](int k) {
    if (k >= 0 && static_cast<std::size_t>(k) < h.maps.size()) return h.maps[static_cast<std::size_t>(k)];
    return PolyMatrix(R, c.target().rank(k + 1), c.source().rank(k));
  };
  return c.map(i) - hmap(i - 1) * c.source().d(i) - c.target().d(i + 1) * hmap(i);
}

Homotopy build_homotopy(const ChainMap& c, const std::vector<HomotopyPrescription>& prescribed) {
  if (c.shift() != 0) throw InputError("homotopies are built for degree-preserving maps only");
  const FreeComplex& B = c.source();
  const FreeComplex& D = c.target();
  const RingPtr& R = B.ring();
  Homotopy h;
  for (int i = 0; i <= B.length(); ++i) {
    const std::size_t ncols = B.rank(i);
    PolyMatrix prev = i > 0 ? h.maps.back() : PolyMatrix(R, D.rank(i), B.rank(i - 1));
    PolyMatrix target = c.map(i) - prev * B.d(i);

    PolyMatrix hi(R, D.rank(i + 1), ncols);
    std::vector<bool> fixed(ncols, false);
    for (const auto& p : prescribed) {
      if (p.degree != i) continue;
      if (p.value.rows() != hi.rows() || p.value.cols() != p.columns.size())
        throw ShapeMismatch("prescription for h_" + std::to_string(i) + " has wrong shape");
      for (std::size_t k = 0; k < p.columns.size(); ++k) {
        if (p.columns[k] >= ncols) throw ShapeMismatch("prescribed column out of range");
        fixed[p.columns[k]] = true;
        for (std::size_t r = 0; r < hi.rows(); ++r) hi(r, p.columns[k]) = p.value(r, k);
      }
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t k = 0; k < ncols; ++k)
      if (!fixed[k]) free_cols.push_back(k);

    if (!free_cols.empty()) {
      PolyMatrix want = target.select_cols(free_cols);
      if (hi.rows() == 0) {
        if (!want.is_zero())
          throw LiftFailed("degree " + std::to_string(i) + ": residual nonzero with empty target");
      } else {
        try {
          PolyMatrix sol = solve_lift(D.d(i + 1), want);
          for (std::size_t k = 0; k < free_cols.size(); ++k)
            for (std::size_t r = 0; r < hi.rows(); ++r) hi(r, free_cols[k]) = sol(r, k);
        } catch (const NotInImage& e) {
          throw LiftFailed("degree " + std::to_string(i) + ": " + e.what());
        }
      }
    }
    if (D.d(i + 1) * hi != target)
      throw LiftFailed("degree " + std::to_string(i) + ": prescribed homotopy columns are inconsistent");
    h.maps.push_back(std::move(hi));
  }
  for (int i = 0; i <= B.length() + 1; ++i)
    if (!homotopy_residual(c, h, i).is_zero())
      throw LiftFailed("homotopy identity fails in degree " + std::to_string(i));
  return h;
}

FreeComplex mapping_cone(const ChainMap& F) {
  if (F.shift() != 0) throw InputError("mapping cone needs a degree-preserving map");
  if (auto bad = chain_map_defect(F))
    throw NotAChainMap("not a chain map in degree " + std::to_string(*bad));
  const FreeComplex& C = F.source();
  const FreeComplex& D = F.target();
  const RingPtr& R = C.ring();
  int len = std::max(C.length() + 1, D.length());
  std::vector<std::size_t> ranks;
  for (int i = 0; i <= len; ++i) ranks.push_back(C.rank(i - 1) + D.rank(i));
  std::vector<PolyMatrix> diffs;
  for (int i = 1; i <= len; ++i) {
    BlockMatrix b(R, {C.rank(i - 2), D.rank(i - 1)}, {C.rank(i - 1), D.rank(i)});
    b.set(0, 0, C.d(i - 1));
    b.set(1, 0, F.map(i - 1));
    b.set(1, 1, -D.d(i));
    diffs.push_back(b.build());
  }
  return FreeComplex(R, std::move(ranks), std::move(diffs));
}

Poly reduce_mod_f(const Poly& p, const Poly& f) { return poly_divide(p, f).second; }

PolyMatrix reduce_mod_f(const PolyMatrix& A, const Poly& f) {
  PolyMatrix out(A.ring(), A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) out(i, j) = reduce_mod_f(A(i, j), f);
  return out;
}

}  // namespace dgmf
