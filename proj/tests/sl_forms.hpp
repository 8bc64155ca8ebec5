// Shared closed-form checker for the special-linear model family. The
// weight-one space of sl:n:i consists of matrices supported on two corner
// blocks: rows [0,i) x cols [i,n-i) (the "a" part, i x m) and rows [i,n-i) x
// cols [n-i,n) (the "b" part, m x i), m = n-2i. The extracted canonical basis
// is a set of matrix units in those blocks; decode_sl_layout recovers which
// slot each coordinate is, and sl_closed_forms_mismatch compares the
// extracted maps against their closed forms:
//   omega(x,y)  = (n-2i) (tr(b1 a2) - tr(a1 b2))
//   phi(x,y)    = (a2 b1 - a1 b2)/2                 acting (a,b) -> (Ca, bC)
//   delta(x,y)  = (-(a1 b2 + a2 b1)/2, b1 a2 + b2 a1)
//   delta0(x,y) = (-tr(a1 b2 + a2 b1)/(2i) E, b1 a2 + b2 a1)
// with (D1,D2) acting (a,b) -> (D1 a - a D2, D2 b - b D1).
// Helpers throw std::runtime_error / return a nonempty message rather than
// asserting, so both the unit tests and the acceptance runner can share them.
#ifndef SHORTSL2_TESTS_SL_FORMS_HPP
#define SHORTSL2_TESTS_SL_FORMS_HPP

#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "shortsl2/isotypic.hpp"
#include "shortsl2/models.hpp"
#include "shortsl2/sympjordan.hpp"

namespace shortsl2::testing {

struct SlSlot {
  int block;  // 0 = a part (i x m), 1 = b part (m x i)
  std::size_t r, c;
  bool operator<(const SlSlot& o) const {
    return std::tie(block, r, c) < std::tie(o.block, o.r, o.c);
  }
};

struct SlLayout {
  std::size_t n, i, m;
  std::vector<SlSlot> slots;  // J1 coordinate -> block slot
};

inline SlLayout decode_sl_layout(const ModelSpec& sp, const AmbientModel& amb,
                                 const IsotypicData& data) {
  auto bad = [](const std::string& why) -> std::runtime_error {
    return std::runtime_error("sl layout decode failed: " + why);
  };
  SlLayout lay{sp.n, sp.i, sp.n - 2 * sp.i, {}};
  if (data.m1 != 2 * lay.i * lay.m) throw bad("unexpected weight-one dimension");
  std::set<SlSlot> seen;
  for (std::size_t k = 0; k < data.m1; ++k) {
    ExactMatrix M = amb.matrix_of(data.g1_component[k]);
    std::size_t hits = 0;
    SlSlot slot{-1, 0, 0};
    for (std::size_t r = 0; r < M.rows(); ++r)
      for (std::size_t c = 0; c < M.cols(); ++c)
        if (M.at(r, c) != 0) {
          ++hits;
          if (M.at(r, c) != 1) throw bad("a basis entry is not a matrix unit");
          if (r < lay.i && c >= lay.i && c < lay.n - lay.i)
            slot = {0, r, c - lay.i};
          else if (r >= lay.i && r < lay.n - lay.i && c >= lay.n - lay.i)
            slot = {1, r - lay.i, c - (lay.n - lay.i)};
          else
            throw bad("a weight-one unit lies outside the two corner blocks");
        }
    if (hits != 1) throw bad("a basis vector is not a single matrix unit");
    if (!seen.insert(slot).second) throw bad("duplicate slot");
    lay.slots.push_back(slot);
  }
  return lay;
}

// J1 coordinates <-> the (a, b) block-matrix pair.
inline std::pair<ExactMatrix, ExactMatrix> sl_blocks(const SlLayout& lay, const Vec& x) {
  ExactMatrix A(lay.i, lay.m), B(lay.m, lay.i);
  for (std::size_t k = 0; k < lay.slots.size(); ++k) {
    const SlSlot& s = lay.slots[k];
    (s.block == 0 ? A : B).at(s.r, s.c) = x[k];
  }
  return {A, B};
}

inline Vec sl_coords(const SlLayout& lay, const ExactMatrix& A, const ExactMatrix& B) {
  Vec x(lay.slots.size(), Rational(0));
  for (std::size_t k = 0; k < lay.slots.size(); ++k) {
    const SlSlot& s = lay.slots[k];
    x[k] = (s.block == 0 ? A : B).at(s.r, s.c);
  }
  return x;
}

inline Vec sl_unit_vec(std::size_t dim, std::size_t k) {
  Vec v(dim, Rational(0));
  v[k] = 1;
  return v;
}

// Operator on J1 coordinates induced by (a,b) |-> (C a, b C), C an i x i
// matrix (the action of the degree-two component).
inline ExactMatrix sl_j2_operator(const SlLayout& lay, const ExactMatrix& C) {
  std::vector<Vec> cols;
  for (std::size_t k = 0; k < lay.slots.size(); ++k) {
    auto [A, B] = sl_blocks(lay, sl_unit_vec(lay.slots.size(), k));
    cols.push_back(sl_coords(lay, C.mul(A), B.mul(C)));
  }
  return ExactMatrix::from_cols(cols, lay.slots.size());
}

// Operator induced by (a,b) |-> (D1 a - a D2, D2 b - b D1), D1 i x i and
// D2 m x m (the action of the degree-zero component).
inline ExactMatrix sl_g0_operator(const SlLayout& lay, const ExactMatrix& D1,
                                  const ExactMatrix& D2) {
  std::vector<Vec> cols;
  for (std::size_t k = 0; k < lay.slots.size(); ++k) {
    auto [A, B] = sl_blocks(lay, sl_unit_vec(lay.slots.size(), k));
    cols.push_back(sl_coords(lay, D1.mul(A).sub(A.mul(D2)),
                             D2.mul(B).sub(B.mul(D1))));
  }
  return ExactMatrix::from_cols(cols, lay.slots.size());
}

// Compares the extracted omega/phi/delta/delta0 against the closed forms on
// every basis pair plus `samples` random pairs. Returns "" on full agreement,
// otherwise a description of the first mismatch.
inline std::string sl_closed_forms_mismatch(const ModelSpec& sp,
                                            const LieJordanStructure& s,
                                            const SlLayout& lay,
                                            const StructureMaps& maps, Rng& rng,
                                            int samples) {
  const std::size_t dim = s.space.dim;
  const Rational mass(static_cast<long long>(sp.n - 2 * sp.i));

  std::string fail;
  auto check_pair = [&](const Vec& x, const Vec& y, const char* which) -> bool {
    auto mismatch = [&](const char* map) {
      std::ostringstream os;
      os << map << " disagrees with its closed form on a " << which << " pair";
      fail = os.str();
      return false;
    };
    auto [A1, B1] = sl_blocks(lay, x);
    auto [A2, B2] = sl_blocks(lay, y);
    if (s.space.pair(x, y) != mass * (B1.mul(A2).trace() - A1.mul(B2).trace()))
      return mismatch("omega");

    ExactMatrix C = A2.mul(B1).sub(A1.mul(B2)).scaled(Rational(1, 2));
    if (!(maps.phi(x, y) == sl_j2_operator(lay, C))) return mismatch("phi");

    ExactMatrix D1 = A1.mul(B2).add(A2.mul(B1)).scaled(Rational(-1, 2));
    ExactMatrix D2 = B1.mul(A2).add(B2.mul(A1));
    if (!(maps.delta(x, y) == sl_g0_operator(lay, D1, D2)))
      return mismatch("delta");

    Rational tr0 = A1.mul(B2).add(A2.mul(B1)).trace() /
                   Rational(2 * static_cast<long long>(sp.i));
    ExactMatrix D01 = ExactMatrix::identity(sp.i).scaled(-tr0);
    if (!(maps.delta0_op(x, y) == sl_g0_operator(lay, D01, D2)))
      return mismatch("delta0");
    return true;
  };

  for (std::size_t p = 0; p < dim; ++p)
    for (std::size_t q = 0; q < dim; ++q)
      if (!check_pair(sl_unit_vec(dim, p), sl_unit_vec(dim, q), "basis")) return fail;
  for (int t = 0; t < samples; ++t)
    if (!check_pair(rng.vec(dim, 3, 2), rng.vec(dim, 3, 2), "random")) return fail;
  return "";
}

}  // namespace shortsl2::testing

#endif  // SHORTSL2_TESTS_SL_FORMS_HPP
