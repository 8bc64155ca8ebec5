#include "shortsl2/lie.hpp"

#include <algorithm>
#include <sstream>

#include "shortsl2/errors.hpp"

namespace shortsl2 {

// ---- BasisLabel ----

BasisLabel BasisLabel::g0(std::size_t k) {
  BasisLabel l;
  l.kind = Kind::G0;
  l.index = k;
  return l;
}

BasisLabel BasisLabel::v1(int weight, std::size_t i) {
  BasisLabel l;
  l.kind = Kind::V1;
  l.weight = weight;
  l.index = i;
  return l;
}

BasisLabel BasisLabel::v2(char part, std::size_t k) {
  BasisLabel l;
  l.kind = Kind::V2;
  l.sl2_part = part;
  l.index = k;
  return l;
}

std::string BasisLabel::to_string() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::G0:
      out << "g0:" << index;
      break;
    case Kind::V1:
      out << "v1:" << (weight > 0 ? "+1" : "-1") << ":" << index;
      break;
    case Kind::V2:
      out << "v2:" << sl2_part << ":" << index;
      break;
  }
  return out.str();
}

bool BasisLabel::operator==(const BasisLabel& o) const {
  if (kind != o.kind || index != o.index) return false;
  if (kind == Kind::V1 && weight != o.weight) return false;
  if (kind == Kind::V2 && sl2_part != o.sl2_part) return false;
  return true;
}

// ---- LieAlgebra ----

namespace {

TermList normalized_terms(TermList terms, std::size_t dim) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  TermList out;
  for (auto& t : terms) {
    if (t.first >= dim)
      throw Error(ErrorKind::InvalidStructure, "bracket term index out of range");
    if (t.second == 0) continue;
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
      if (out.back().second == 0) out.pop_back();
    } else {
      out.push_back(std::move(t));
    }
  }
  return out;
}

const TermList* row_find(const std::vector<std::pair<std::size_t, TermList>>& row,
                         std::size_t j) {
  auto it = std::lower_bound(
      row.begin(), row.end(), j,
      [](const std::pair<std::size_t, TermList>& e, std::size_t v) { return e.first < v; });
  if (it == row.end() || it->first != j) return nullptr;
  return &it->second;
}

}  // namespace

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> labels,
                       BracketMap brackets,
                       std::optional<std::vector<BasisLabel>> structure_labels)
    : dim_(dim),
      labels_(std::move(labels)),
      structure_labels_(std::move(structure_labels)),
      rows_(dim) {
  if (dim_ == 0) throw Error(ErrorKind::InvalidStructure, "algebra dimension must be positive");
  if (labels_.size() != dim_)
    throw Error(ErrorKind::InvalidStructure, "label count does not match dimension");
  if (structure_labels_ && structure_labels_->size() != dim_)
    throw Error(ErrorKind::InvalidStructure, "structure label count does not match dimension");

  for (auto& [key, terms] : brackets) {
    if (key.first >= key.second)
      throw Error(ErrorKind::InvalidStructure, "bracket keys must have i < j");
    if (key.second >= dim_)
      throw Error(ErrorKind::InvalidStructure, "bracket key index out of range");
    TermList t = normalized_terms(std::move(terms), dim_);
    if (!t.empty()) brackets_[key] = std::move(t);
  }

  for (const auto& [key, terms] : brackets_) {
    rows_[key.first].emplace_back(key.second, terms);
    TermList neg;
    neg.reserve(terms.size());
    for (const auto& t : terms) neg.emplace_back(t.first, -t.second);
    rows_[key.second].emplace_back(key.first, std::move(neg));
  }
  for (auto& row : rows_)
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
}

const std::vector<std::pair<std::size_t, TermList>>& LieAlgebra::row(std::size_t i) const {
  if (i >= dim_) throw Error(ErrorKind::InvalidParameters, "basis index out of range");
  return rows_[i];
}

TermList LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_)
    throw Error(ErrorKind::InvalidParameters, "basis index out of range");
  const TermList* t = row_find(rows_[i], j);
  return t ? *t : TermList{};
}

Rational LieAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= dim_ || j >= dim_ || k >= dim_)
    throw Error(ErrorKind::InvalidParameters, "basis index out of range");
  const TermList* terms = row_find(rows_[i], j);
  if (!terms) return Rational(0);
  auto it = std::lower_bound(terms->begin(), terms->end(), k,
                             [](const Term& t, std::size_t v) { return t.first < v; });
  if (it == terms->end() || it->first != k) return Rational(0);
  return it->second;
}

Vec LieAlgebra::bracket_with_basis(std::size_t i, const Vec& y) const {
  if (i >= dim_ || y.size() != dim_)
    throw Error(ErrorKind::InvalidParameters, "bracket operand shape mismatch");
  Vec acc(dim_, Rational(0));
  for (const auto& [j, terms] : rows_[i]) {
    if (y[j] == 0) continue;
    for (const auto& t : terms) acc[t.first] += y[j] * t.second;
  }
  return acc;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw Error(ErrorKind::InvalidParameters, "bracket operand shape mismatch");
  Vec acc(dim_, Rational(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (const auto& [j, terms] : rows_[i]) {
      if (y[j] == 0) continue;
      Rational c = x[i] * y[j];
      for (const auto& t : terms) acc[t.first] += c * t.second;
    }
  }
  return acc;
}

ExactMatrix LieAlgebra::ad(const Vec& x) const {
  if (x.size() != dim_)
    throw Error(ErrorKind::InvalidParameters, "ad operand shape mismatch");
  ExactMatrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (const auto& [j, terms] : rows_[i])
      for (const auto& t : terms) m.at(t.first, j) += x[i] * t.second;
  }
  return m;
}

// ---- Jacobi verification ----

namespace {

struct JacobiScratch {
  Vec acc;
  std::vector<std::size_t> touched;
};

// Accumulates the Jacobi sum of the basis triple (a, b, c) and tests it for
// zero; on failure optionally copies the nonzero sum into *residual_out.
bool triple_passes(const LieAlgebra& algebra, std::size_t a, std::size_t b,
                   std::size_t c, JacobiScratch& s, Vec* residual_out) {
  const std::array<std::array<std::size_t, 3>, 3> cyclic = {{{a, b, c}, {b, c, a}, {c, a, b}}};
  for (const auto& t : cyclic) {
    const std::size_t x = t[0], y = t[1], z = t[2];
    const TermList* inner = row_find(algebra.row(y), z);
    if (!inner) continue;
    for (const auto& [m, c1] : *inner) {
      const TermList* outer = row_find(algebra.row(x), m);
      if (!outer) continue;
      for (const auto& [k, c2] : *outer) {
        s.acc[k] += c1 * c2;
        s.touched.push_back(k);
      }
    }
  }
  bool ok = true;
  for (std::size_t k : s.touched)
    if (s.acc[k] != 0) {
      ok = false;
      break;
    }
  if (!ok && residual_out) {
    residual_out->assign(algebra.dim(), Rational(0));
    for (std::size_t k : s.touched) (*residual_out)[k] = s.acc[k];
  }
  for (std::size_t k : s.touched) s.acc[k] = Rational(0);
  s.touched.clear();
  return ok;
}

}  // namespace

JacobiReport verify_jacobi_full(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  JacobiReport report;
  JacobiScratch scratch;
  scratch.acc.assign(n, Rational(0));
  for (std::size_t a = 0; a + 2 < n; ++a)
    for (std::size_t b = a + 1; b + 1 < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        ++report.checked;
        if (!triple_passes(algebra, a, b, c, scratch, &report.residual)) {
          report.passed = false;
          report.violation = {a, b, c};
          return report;
        }
      }
  return report;
}

JacobiReport verify_jacobi_sampled(const LieAlgebra& algebra, std::size_t samples,
                                   std::uint64_t seed) {
  const std::size_t n = algebra.dim();
  JacobiReport report;
  if (n < 3) {
    // No triples exist; the identity holds vacuously.
    return report;
  }
  Rng rng(seed);
  JacobiScratch scratch;
  scratch.acc.assign(n, Rational(0));
  for (std::size_t s = 0; s < samples; ++s) {
    std::size_t a, b, c;
    do {
      a = static_cast<std::size_t>(rng.int_in(0, static_cast<long long>(n) - 1));
      b = static_cast<std::size_t>(rng.int_in(0, static_cast<long long>(n) - 1));
      c = static_cast<std::size_t>(rng.int_in(0, static_cast<long long>(n) - 1));
    } while (a == b || b == c || a == c);
    std::array<std::size_t, 3> t = {a, b, c};
    std::sort(t.begin(), t.end());
    ++report.checked;
    if (!triple_passes(algebra, t[0], t[1], t[2], scratch, &report.residual)) {
      report.passed = false;
      report.violation = t;
      return report;
    }
  }
  return report;
}

JacobiReport verify_jacobi_touching(const LieAlgebra& algebra, std::size_t i,
                                    std::size_t j) {
  const std::size_t n = algebra.dim();
  if (i >= n || j >= n)
    throw Error(ErrorKind::InvalidParameters, "basis index out of range");
  JacobiReport report;
  JacobiScratch scratch;
  scratch.acc.assign(n, Rational(0));
  auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
    std::array<std::size_t, 3> t = {a, b, c};
    std::sort(t.begin(), t.end());
    ++report.checked;
    if (!triple_passes(algebra, t[0], t[1], t[2], scratch, &report.residual)) {
      report.passed = false;
      report.violation = t;
      return false;
    }
    return true;
  };
  for (std::size_t b = 0; b < n; ++b) {
    if (b == i) continue;
    for (std::size_t c = b + 1; c < n; ++c) {
      if (c == i) continue;
      if (!check(i, b, c)) return report;
    }
  }
  if (j == i) return report;
  for (std::size_t b = 0; b < n; ++b) {
    if (b == i || b == j) continue;
    for (std::size_t c = b + 1; c < n; ++c) {
      if (c == i || c == j) continue;
      if (!check(j, b, c)) return report;
    }
  }
  return report;
}

LieAlgebra perturbed(const LieAlgebra& algebra, std::size_t i, std::size_t j,
                     std::size_t k, const Rational& delta) {
  if (i >= j || j >= algebra.dim() || k >= algebra.dim())
    throw Error(ErrorKind::InvalidParameters, "perturbation indices out of range");
  BracketMap table = algebra.brackets();
  table[{i, j}].emplace_back(k, delta);
  return LieAlgebra(algebra.dim(), algebra.labels(), std::move(table));
}

// ---- Killing form, simplicity ----

ExactMatrix killing_form(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  ExactMatrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational s(0);
      // tr(ad x_i . ad x_j) = sum_l coefficient of x_l in [x_i, [x_j, x_l]].
      for (const auto& [l, terms] : algebra.row(j))
        for (const auto& [m, c] : terms) s += c * algebra.structure_constant(i, m, l);
      k.at(i, j) = s;
      k.at(j, i) = s;
    }
  return k;
}

bool is_simple(const LieAlgebra& algebra, Rng& rng) {
  if (rank(killing_form(algebra)) != algebra.dim()) return false;
  CommutantResult r = commutant_dimension(
      algebra.dim(), algebra.dim(),
      [&algebra](std::size_t g, const Vec& v) { return algebra.bracket_with_basis(g, v); },
      rng);
  return r.cyclic && r.dim == 1;
}

// ---- structure-to-algebra builder ----

namespace {

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Rational(0));
  v[i] = Rational(1);
  return v;
}

}  // namespace

LieAlgebra build_lie_algebra(const LieJordanStructure& s) {
  ValidationReport report = validate(s);
  if (!report.ok()) {
    for (const auto& item : report.items)
      if (item.fatal && !item.passed)
        throw Error(ErrorKind::InvalidStructure,
                    "structure validation failed at '" + item.name + "': " + item.witness);
  }
  StructureMaps maps(s);

  const std::size_t n0 = s.g0_basis.size();
  const std::size_t n1 = s.space.dim;
  const std::size_t n2 = s.j2_basis.size();
  const std::size_t off_p = n0;            // e_{+1} (x) J1 block
  const std::size_t off_m = n0 + n1;       // e_{-1} (x) J1 block
  const std::size_t off_e = n0 + 2 * n1;   // e (x) J2 block
  const std::size_t off_h = off_e + n2;    // h (x) J2 block
  const std::size_t off_f = off_e + 2 * n2;  // f (x) J2 block
  const std::size_t dim = n0 + 2 * n1 + 3 * n2;

  BracketMap table;
  auto add_block = [&table](std::size_t i, std::size_t j, std::size_t offset,
                            const Vec& coords, const Rational& scale) {
    TermList* terms = nullptr;
    for (std::size_t k = 0; k < coords.size(); ++k) {
      if (coords[k] == 0) continue;
      if (!terms) terms = &table[{i, j}];
      terms->emplace_back(offset + k, scale * coords[k]);
    }
  };

  // phi / delta coordinate tables over the J1 coordinate basis: phi is
  // antisymmetric, delta symmetric, so pairs i < j (resp. i <= j) suffice.
  std::vector<std::vector<Vec>> phi_c(n1, std::vector<Vec>(n1));
  std::vector<std::vector<Vec>> delta_c(n1, std::vector<Vec>(n1));
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = i; j < n1; ++j) {
      Vec a = unit_vec(n1, i), b = unit_vec(n1, j);
      if (j > i) phi_c[i][j] = maps.j2_coords(maps.phi(a, b));
      delta_c[i][j] = maps.g0_coords(maps.delta(a, b));
    }

  // g0 x g0 and g0 x V1 and g0 x V2.
  for (std::size_t l = 0; l < n0; ++l) {
    for (std::size_t m = l + 1; m < n0; ++m)
      add_block(l, m, 0, maps.g0_coords(commutator(s.g0_basis[l], s.g0_basis[m])),
                Rational(1));
    for (std::size_t i = 0; i < n1; ++i) {
      Vec col = s.g0_basis[l].col(i);
      add_block(l, off_p + i, off_p, col, Rational(1));
      add_block(l, off_m + i, off_m, col, Rational(1));
    }
    for (std::size_t k = 0; k < n2; ++k) {
      Vec c = maps.j2_coords(commutator(s.g0_basis[l], s.j2_basis[k]));
      add_block(l, off_e + k, off_e, c, Rational(1));
      add_block(l, off_h + k, off_h, c, Rational(1));
      add_block(l, off_f + k, off_f, c, Rational(1));
    }
  }

  // V1 x V1: [u (x) a, v (x) b] = S(u,v) (x) phi(a,b) + <u,v> delta(a,b),
  // with S(e1,e1) = -2e, S(e1,e-1) = h, S(e-1,e-1) = 2f, <e1,e-1> = 1.
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = i + 1; j < n1; ++j) {
      add_block(off_p + i, off_p + j, off_e, phi_c[i][j], Rational(-2));
      add_block(off_m + i, off_m + j, off_f, phi_c[i][j], Rational(2));
    }
    for (std::size_t j = 0; j < n1; ++j) {
      if (i < j)
        add_block(off_p + i, off_m + j, off_h, phi_c[i][j], Rational(1));
      else if (j < i)
        add_block(off_p + i, off_m + j, off_h, phi_c[j][i], Rational(-1));
      add_block(off_p + i, off_m + j, 0, delta_c[std::min(i, j)][std::max(i, j)],
                Rational(1));
    }
  }

  // V1 x V2, stored with the V1 index first: [u (x) a, X (x) A] = -Xu (x) Aa.
  for (std::size_t j = 0; j < n1; ++j)
    for (std::size_t k = 0; k < n2; ++k) {
      Vec col = s.j2_basis[k].col(j);  // A_k a_j
      add_block(off_p + j, off_h + k, off_p, col, Rational(-1));
      add_block(off_p + j, off_f + k, off_m, col, Rational(-1));
      add_block(off_m + j, off_e + k, off_p, col, Rational(-1));
      add_block(off_m + j, off_h + k, off_m, col, Rational(1));
    }

  // V2 x V2: [X (x) A, Y (x) B] = [X,Y] (x) (A o B) + (X,Y)/2 [A,B], with
  // [e,h] = -2e, [e,f] = h, [h,f] = -2f, (e,f) = 1, (h,h) = 2.
  std::vector<std::vector<Vec>> jp(n2, std::vector<Vec>(n2));
  std::vector<std::vector<Vec>> cm(n2, std::vector<Vec>(n2));
  for (std::size_t k = 0; k < n2; ++k)
    for (std::size_t l = k; l < n2; ++l) {
      jp[k][l] = maps.j2_coords(jordan_product(s.space, s.j2_basis[k], s.j2_basis[l]));
      jp[l][k] = jp[k][l];
      if (l > k) {
        cm[k][l] = maps.g0_coords(commutator(s.j2_basis[k], s.j2_basis[l]));
        cm[l][k] = vec_scaled(cm[k][l], Rational(-1));
      } else {
        cm[k][k] = Vec(n0, Rational(0));
      }
    }
  for (std::size_t k = 0; k < n2; ++k)
    for (std::size_t l = 0; l < n2; ++l) {
      add_block(off_e + k, off_h + l, off_e, jp[k][l], Rational(-2));
      add_block(off_e + k, off_f + l, off_h, jp[k][l], Rational(1));
      add_block(off_e + k, off_f + l, 0, cm[k][l], Rational(1, 2));
      add_block(off_h + k, off_f + l, off_f, jp[k][l], Rational(-2));
      if (k < l) add_block(off_h + k, off_h + l, 0, cm[k][l], Rational(1));
    }

  std::vector<BasisLabel> structure_labels;
  structure_labels.reserve(dim);
  for (std::size_t k = 0; k < n0; ++k) structure_labels.push_back(BasisLabel::g0(k));
  for (std::size_t i = 0; i < n1; ++i) structure_labels.push_back(BasisLabel::v1(+1, i));
  for (std::size_t i = 0; i < n1; ++i) structure_labels.push_back(BasisLabel::v1(-1, i));
  for (std::size_t k = 0; k < n2; ++k) structure_labels.push_back(BasisLabel::v2('e', k));
  for (std::size_t k = 0; k < n2; ++k) structure_labels.push_back(BasisLabel::v2('h', k));
  for (std::size_t k = 0; k < n2; ++k) structure_labels.push_back(BasisLabel::v2('f', k));
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (const auto& l : structure_labels) labels.push_back(l.to_string());

  return LieAlgebra(dim, std::move(labels), std::move(table), std::move(structure_labels));
}

// ---- transported triple and the normalized invariant form ----

Sl2Triple unit_triple(const LieAlgebra& algebra, const LieJordanStructure& s) {
  const std::size_t n0 = s.g0_basis.size();
  const std::size_t n1 = s.space.dim;
  const std::size_t n2 = s.j2_basis.size();
  const std::size_t dim = n0 + 2 * n1 + 3 * n2;
  if (!algebra.structure_labels())
    throw Error(ErrorKind::NotBuilt, "algebra carries no structure labels");
  if (algebra.dim() != dim)
    throw Error(ErrorKind::NotBuilt, "algebra dimension does not match the structure");
  const auto& labels = *algebra.structure_labels();
  std::size_t pos = 0;
  auto expect = [&](const BasisLabel& want) {
    if (!(labels[pos] == want))
      throw Error(ErrorKind::NotBuilt, "structure labels are not in canonical order");
    ++pos;
  };
  for (std::size_t k = 0; k < n0; ++k) expect(BasisLabel::g0(k));
  for (std::size_t i = 0; i < n1; ++i) expect(BasisLabel::v1(+1, i));
  for (std::size_t i = 0; i < n1; ++i) expect(BasisLabel::v1(-1, i));
  for (std::size_t k = 0; k < n2; ++k) expect(BasisLabel::v2('e', k));
  for (std::size_t k = 0; k < n2; ++k) expect(BasisLabel::v2('h', k));
  for (std::size_t k = 0; k < n2; ++k) expect(BasisLabel::v2('f', k));

  const std::size_t off_e = n0 + 2 * n1;
  Sl2Triple t;
  t.e.assign(dim, Rational(0));
  t.h.assign(dim, Rational(0));
  t.f.assign(dim, Rational(0));
  for (std::size_t k = 0; k < n2; ++k) {
    t.e[off_e + k] = s.unit[k];
    t.h[off_e + n2 + k] = s.unit[k];
    t.f[off_e + 2 * n2 + k] = s.unit[k];
  }
  return t;
}

ExactMatrix invariant_form(const LieAlgebra& algebra, const LieJordanStructure& s) {
  Sl2Triple t = unit_triple(algebra, s);
  ExactMatrix k = killing_form(algebra);
  Rational pairing = vec_dot(t.e, k.apply(t.f));
  if (pairing == 0)
    throw Error(ErrorKind::DegenerateForm,
                "Killing pairing of the transported sl2 pair vanishes");
  Rational lambda = Rational(s.space.dim) / (2 * pairing);
  return k.scaled(lambda);
}

}  // namespace shortsl2
