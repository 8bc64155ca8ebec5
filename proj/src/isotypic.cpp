#include "shortsl2/isotypic.hpp"

#include <string>
#include <utility>

#include "shortsl2/errors.hpp"
#include "shortsl2/rng.hpp"

namespace shortsl2 {

namespace {

std::vector<Vec> flatten_all(const std::vector<ExactMatrix>& ms) {
  std::vector<Vec> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(m.to_flat());
  return out;
}

ExactMatrix shifted(const ExactMatrix& m, int k) {
  ExactMatrix out = m;
  for (std::size_t i = 0; i < out.rows(); ++i) out.at(i, i) = out.at(i, i) - Rational(k);
  return out;
}

Vec lincomb_vec(const std::vector<Vec>& basis, const Vec& coords, std::size_t dim) {
  Vec out(dim, Rational(0));
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coords[i] != 0) out = vec_add(out, vec_scaled(basis[i], coords[i]));
  return out;
}

}  // namespace

Grading grade(const LieAlgebra& algebra, const Vec& h) {
  const std::size_t dim = algebra.dim();
  if (h.size() != dim)
    throw Error(ErrorKind::InvalidParameters, "h has the wrong length for the algebra");
  ExactMatrix m = algebra.ad(h);

  Grading g;
  std::size_t total = 0;
  for (int k = -2; k <= 2; ++k) {
    g.eigenspaces[static_cast<std::size_t>(k + 2)] = kernel(shifted(m, k));
    total += g.dim_at(k);
  }
  if (total == dim) return g;

  // Diagnose the shortfall: a Jordan block at one of our eigenvalues means h
  // is not semisimple; otherwise part of the spectrum lies outside -2..2.
  for (int k = -2; k <= 2; ++k) {
    ExactMatrix mk = shifted(m, k);
    if (kernel(mk.mul(mk)).size() != g.dim_at(k))
      throw Error(ErrorKind::NotSemisimpleElement,
                  "ad(h) has a nontrivial Jordan block at eigenvalue " + std::to_string(k));
  }
  throw Error(ErrorKind::NotShort,
              "ad(h) eigenspaces for -2..2 cover " + std::to_string(total) + " of " +
                  std::to_string(dim) + " dimensions");
}

bool is_sl2_triple(const LieAlgebra& algebra, const Sl2Triple& t) {
  const std::size_t dim = algebra.dim();
  if (t.e.size() != dim || t.h.size() != dim || t.f.size() != dim) return false;
  if (vec_is_zero(t.e) || vec_is_zero(t.h) || vec_is_zero(t.f)) return false;
  return algebra.bracket(t.e, t.f) == t.h &&
         algebra.bracket(t.h, t.e) == vec_scaled(t.e, Rational(2)) &&
         algebra.bracket(t.h, t.f) == vec_scaled(t.f, Rational(-2));
}

IsotypicData decompose(const LieAlgebra& algebra, const Sl2Triple& t) {
  if (!is_sl2_triple(algebra, t))
    throw Error(ErrorKind::InvalidParameters,
                "e, h, f do not satisfy the sl2 relations exactly");

  IsotypicData data;
  data.grading = grade(algebra, t.h);
  const Grading& g = data.grading;
  if (g.dim_at(1) != g.dim_at(-1) || g.dim_at(2) != g.dim_at(-2) ||
      g.dim_at(0) < g.dim_at(2))
    throw Error(ErrorKind::InvalidStructure, "grading dimensions are not symmetric");
  data.m2 = g.dim_at(2);
  data.m1 = g.dim_at(1);
  data.m0 = g.dim_at(0) - data.m2;

  // Trivial component: combinations of the level-0 basis killed by both ad(e)
  // and ad(f); the canonical kernel keeps the result reproducible.
  const std::vector<Vec>& b0 = g.at(0);
  const std::size_t dim = algebra.dim();
  ExactMatrix stacked(2 * dim, b0.size());
  for (std::size_t c = 0; c < b0.size(); ++c) {
    Vec be = algebra.bracket(t.e, b0[c]);
    Vec bf = algebra.bracket(t.f, b0[c]);
    for (std::size_t r = 0; r < dim; ++r) {
      stacked.at(r, c) = be[r];
      stacked.at(dim + r, c) = bf[r];
    }
  }
  for (const Vec& x : kernel(stacked))
    data.g0_component.push_back(lincomb_vec(b0, x, dim));
  if (data.g0_component.size() != data.m0)
    throw Error(ErrorKind::InvalidStructure,
                "trivial-component dimension does not match the multiplicity count");

  data.g1_component = g.at(1);
  data.g1_component.insert(data.g1_component.end(), g.at(-1).begin(), g.at(-1).end());

  data.g2_component = g.at(2);
  for (const Vec& w : g.at(2)) data.g2_component.push_back(algebra.bracket(w, t.f));
  data.g2_component.insert(data.g2_component.end(), g.at(-2).begin(), g.at(-2).end());
  return data;
}

LieJordanStructure extract(const LieAlgebra& algebra, const Sl2Triple& t) {
  IsotypicData data = decompose(algebra, t);
  {
    Rng rng;
    if (!is_simple(algebra, rng))
      throw Error(ErrorKind::NotSimple, "the algebra is not simple");
  }
  const std::vector<Vec>& v = data.grading.at(1);
  if (v.empty())
    throw Error(ErrorKind::NotShort, "the +1 eigenspace of ad(h) is zero");
  const std::size_t n1 = v.size();
  const std::size_t dim = algebra.dim();

  // u_j = [f, v_j] identifies the -1 level with J1 through the lowering map.
  std::vector<Vec> u;
  u.reserve(n1);
  for (const Vec& vj : v) u.push_back(algebra.bracket(t.f, vj));

  // Normalize the Killing form so the J2 block pairs as the operator trace;
  // the symplectic form is the normalized pairing of the +1 and -1 levels.
  ExactMatrix killing = killing_form(algebra);
  Rational pairing = vec_dot(t.e, killing.apply(t.f));
  if (pairing == 0)
    throw Error(ErrorKind::DegenerateForm, "the Killing pairing of e and f vanishes");
  Rational lambda = Rational(n1) / (Rational(2) * pairing);

  std::vector<Vec> ku;
  ku.reserve(n1);
  for (const Vec& uj : u) ku.push_back(killing.apply(uj));
  ExactMatrix omega(n1, n1);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j) omega.at(i, j) = lambda * vec_dot(v[i], ku[j]);
  SymplecticSpace space(n1, std::move(omega));

  // Operators on J1 are read columnwise: level-2 elements act by bracketing
  // with u_j (landing back in the +1 eigenspace), level-0 elements by
  // bracketing with v_j directly.
  SpanSolver vspan(v, dim);
  auto read_operator = [&](const Vec& x, const std::vector<Vec>& against) {
    ExactMatrix op(n1, n1);
    for (std::size_t j = 0; j < n1; ++j) {
      auto c = vspan.coords(algebra.bracket(x, against[j]));
      if (!c)
        throw Error(ErrorKind::InvalidStructure,
                    "a level-0 or level-2 bracket escaped the +1 eigenspace");
      for (std::size_t i = 0; i < n1; ++i) op.at(i, j) = (*c)[i];
    }
    return op;
  };

  const std::vector<Vec>& w = data.grading.at(2);
  std::vector<ExactMatrix> j2;
  j2.reserve(w.size());
  for (const Vec& wk : w) j2.push_back(read_operator(wk, u));

  SpanSolver wspan(w, dim);
  auto unit = wspan.coords(t.e);
  if (!unit)
    throw Error(ErrorKind::NonUnitalJ2, "e does not lie in the +2 eigenspace span");
  ExactMatrix eop(n1, n1);
  for (std::size_t k = 0; k < j2.size(); ++k)
    if ((*unit)[k] != 0) eop = eop.add(j2[k].scaled((*unit)[k]));
  if (!(eop == ExactMatrix::identity(n1)))
    throw Error(ErrorKind::NonUnitalJ2,
                "the identity operator is missing from the extracted J2");

  std::vector<ExactMatrix> g0;
  g0.reserve(data.g0_component.size());
  for (const Vec& dvec : data.g0_component) g0.push_back(read_operator(dvec, v));

  LieJordanStructure s{std::move(space), std::move(j2), std::move(g0),
                       std::move(*unit), {}};

  // delta0: the g0 part of [v_i, u_j] (the rest is the h-level of J2),
  // projected onto i0 in the direct sum g0 = i0 (+) [J2, J2].
  const std::size_t m2 = data.m2;
  const std::size_t n0 = data.g0_component.size();
  G0Split split = split_g0(s);
  if (split.i0.empty()) {
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = i; j < n1; ++j) s.delta0.push_back({i, j, {}});
    return s;
  }

  std::vector<Vec> level0;
  level0.reserve(m2 + n0);
  for (std::size_t k = 0; k < m2; ++k) level0.push_back(data.g2_component[m2 + k]);
  for (const Vec& dvec : data.g0_component) level0.push_back(dvec);
  SpanSolver zspan(level0, dim);

  std::vector<ExactMatrix> all = split.i0;
  all.insert(all.end(), split.der.begin(), split.der.end());
  SpanSolver opspan(flatten_all(all), n1 * n1);

  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = i; j < n1; ++j) {
      auto c = zspan.coords(algebra.bracket(v[i], u[j]));
      if (!c)
        throw Error(ErrorKind::InvalidStructure,
                    "a +1 by -1 bracket escaped the 0 eigenspace");
      ExactMatrix dop(n1, n1);
      for (std::size_t m = 0; m < n0; ++m)
        if ((*c)[m2 + m] != 0) dop = dop.add(s.g0_basis[m].scaled((*c)[m2 + m]));
      auto oc = opspan.coords(dop.to_flat());
      if (!oc)
        throw Error(ErrorKind::InvalidStructure,
                    "the g0 part of a bracket escaped span(i0, [J2, J2])");
      s.delta0.push_back(
          {i, j,
           Vec(oc->begin(), oc->begin() + static_cast<std::ptrdiff_t>(split.i0.size()))});
    }
  return s;
}

}  // namespace shortsl2
