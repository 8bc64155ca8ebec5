#include "shortsl2/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace shortsl2 {

// ---- vector helpers ----

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scaled(const Vec& v, const Rational& c) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

void vec_add_scaled(Vec& acc, const Rational& c, const Vec& v) {
  assert(acc.size() == v.size());
  if (c == 0) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) acc[i] += c * v[i];
}

Rational vec_dot(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

// ---- ExactMatrix ----

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  ExactMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    assert(rows[r].size() == cols);
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

ExactMatrix ExactMatrix::from_cols(const std::vector<Vec>& cols, std::size_t rows) {
  ExactMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    assert(cols[c].size() == rows);
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

ExactMatrix ExactMatrix::from_flat(std::size_t rows, std::size_t cols, Vec flat) {
  assert(flat.size() == rows * cols);
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = flat[r * cols + c];
  return m;
}

ExactMatrix ExactMatrix::mul(const ExactMatrix& o) const {
  assert(cols_ == o.rows_);
  ExactMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (o.at(k, j) != 0) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

ExactMatrix ExactMatrix::add(const ExactMatrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  ExactMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

ExactMatrix ExactMatrix::sub(const ExactMatrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  ExactMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

ExactMatrix ExactMatrix::scaled(const Rational& c) const {
  ExactMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Rational ExactMatrix::trace() const {
  assert(rows_ == cols_);
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Vec ExactMatrix::apply(const Vec& v) const {
  assert(v.size() == cols_);
  Vec r(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) s += at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

Vec ExactMatrix::row(std::size_t r) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(r, j);
  return v;
}

Vec ExactMatrix::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) {
  return a.mul(b).sub(b.mul(a));
}

ExactMatrix jordan_sym(const ExactMatrix& a, const ExactMatrix& b) {
  return a.mul(b).add(b.mul(a)).scaled(Rational(1, 2));
}

// ---- elimination ----

RrefResult rref(ExactMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    // First row at or below `row` with a nonzero entry in this column.
    std::size_t sel = m.rows();
    for (std::size_t r = row; r < m.rows(); ++r)
      if (m.at(r, col) != 0) {
        sel = r;
        break;
      }
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(row, c));
    Rational inv = Rational(1) / m.at(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Rational f = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const ExactMatrix& m) { return rref(m).pivot_cols.size(); }

std::optional<Vec> solve(const ExactMatrix& a, const Vec& b) {
  assert(b.size() == a.rows());
  ExactMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  RrefResult rr = rref(std::move(aug));
  if (!rr.pivot_cols.empty() && rr.pivot_cols.back() == a.cols()) return std::nullopt;
  Vec x(a.cols(), Rational(0));
  for (std::size_t t = 0; t < rr.pivot_cols.size(); ++t)
    x[rr.pivot_cols[t]] = rr.m.at(t, a.cols());
  return x;
}

std::vector<Vec> kernel(const ExactMatrix& a) {
  RrefResult rr = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : rr.pivot_cols) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(a.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t t = 0; t < rr.pivot_cols.size(); ++t)
      v[rr.pivot_cols[t]] = -rr.m.at(t, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> orthogonal_complement(const ExactMatrix& form,
                                       const std::vector<Vec>& subspace) {
  assert(form.rows() == form.cols());
  if (rank(form) != form.rows())
    throw Error(ErrorKind::DegenerateForm,
                "bilinear form is singular on the ambient space");
  ExactMatrix m(subspace.size(), form.cols());
  for (std::size_t i = 0; i < subspace.size(); ++i) {
    Vec fs = form.apply(subspace[i]);  // row i: v |-> v^T F s_i, i.e. (F s_i)^T
    for (std::size_t c = 0; c < form.cols(); ++c) m.at(i, c) = fs[c];
  }
  return kernel(m);
}

std::vector<Vec> rref_basis(const std::vector<Vec>& vectors, std::size_t ambient_dim) {
  ExactMatrix m = ExactMatrix::from_rows(vectors, ambient_dim);
  RrefResult rr = rref(std::move(m));
  std::vector<Vec> basis;
  for (std::size_t t = 0; t < rr.pivot_cols.size(); ++t) basis.push_back(rr.m.row(t));
  return basis;
}

std::optional<ExactMatrix> invert(const ExactMatrix& m) {
  assert(m.rows() == m.cols());
  std::size_t n = m.rows();
  if (n == 0) return ExactMatrix(0, 0);
  ExactMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  RrefResult rr = rref(std::move(aug));
  if (rr.pivot_cols.size() < n || rr.pivot_cols[n - 1] != n - 1) return std::nullopt;
  ExactMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = rr.m.at(r, n + c);
  return inv;
}

// ---- SpanSolver ----

SpanSolver::SpanSolver(const std::vector<Vec>& columns, std::size_t ambient_dim)
    : amb_(ambient_dim), n_(columns.size()) {
  b_ = ExactMatrix::from_cols(columns, ambient_dim);
  // Independent rows of B = pivot columns of B^T under elimination.
  RrefResult rr = rref(b_.transpose());
  pivot_rows_ = rr.pivot_cols;
  if (pivot_rows_.size() != n_)
    throw Error(ErrorKind::InvalidStructure, "span basis is linearly dependent");
  ExactMatrix sq(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) sq.at(i, j) = b_.at(pivot_rows_[i], j);
  auto inv = invert(sq);
  assert(inv.has_value());  // rows were chosen independent
  inv_ = *inv;
}

std::optional<Vec> SpanSolver::coords(const Vec& v) const {
  assert(v.size() == amb_);
  if (n_ == 0) return vec_is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
  Vec rhs(n_);
  for (std::size_t i = 0; i < n_; ++i) rhs[i] = v[pivot_rows_[i]];
  Vec x = inv_.apply(rhs);
  // Full residual check: coordinates are only valid if v really is in the span.
  Vec bx = b_.apply(x);
  for (std::size_t r = 0; r < amb_; ++r)
    if (bx[r] != v[r]) return std::nullopt;
  return x;
}

// ---- IncrementalRref ----

Vec IncrementalRref::reduce(Vec v) const {
  assert(v.size() == cols_);
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    const Rational& c = v[pivots_[t]];
    if (c != 0) {
      Rational f = c;  // pivot entries are normalized to 1
      for (std::size_t j = pivots_[t]; j < cols_; ++j)
        if (rows_[t][j] != 0) v[j] -= f * rows_[t][j];
    }
  }
  return v;
}

bool IncrementalRref::add(Vec v) {
  v = reduce(std::move(v));
  std::size_t p = cols_;
  for (std::size_t j = 0; j < cols_; ++j)
    if (v[j] != 0) {
      p = j;
      break;
    }
  if (p == cols_) return false;
  Rational inv = Rational(1) / v[p];
  for (std::size_t j = p; j < cols_; ++j) v[j] *= inv;
  // Eliminate the new pivot column from existing rows to stay in RREF.
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    const Rational& c = rows_[t][p];
    if (c != 0) {
      Rational f = c;
      for (std::size_t j = p; j < cols_; ++j)
        if (v[j] != 0) rows_[t][j] -= f * v[j];
    }
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

// ---- commutant dimension ----

namespace {
// Apply a generator to every column of a dense matrix.
ExactMatrix apply_to_cols(const std::function<Vec(std::size_t, const Vec&)>& gen,
                          std::size_t i, const ExactMatrix& m) {
  std::vector<Vec> cols;
  cols.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(gen(i, m.col(c)));
  return ExactMatrix::from_cols(cols, m.rows());
}
}  // namespace

CommutantResult commutant_dimension(
    std::size_t module_dim, std::size_t n_gens,
    const std::function<Vec(std::size_t, const Vec&)>& apply_gen, Rng& rng) {
  const std::size_t m = module_dim;
  if (m == 0) return {true, 0};

  // Candidate start vectors: three random, then all-ones as a deterministic
  // fallback.
  std::vector<Vec> starts;
  for (int s = 0; s < 3; ++s) starts.push_back(rng.vec(m, 5, 3));
  starts.emplace_back(m, Rational(1));

  std::vector<Vec> w;                       // Krylov basis vectors, tree order
  std::vector<std::size_t> tree_gen, tree_parent;
  bool cyclic = false;
  for (const Vec& x0 : starts) {
    if (vec_is_zero(x0)) continue;
    w.clear();
    tree_gen.clear();
    tree_parent.clear();
    IncrementalRref span(m);
    span.add(x0);
    w.push_back(x0);
    tree_gen.push_back(0);
    tree_parent.push_back(0);  // unused for the root
    for (std::size_t l = 0; l < w.size() && w.size() < m; ++l) {
      for (std::size_t i = 0; i < n_gens && w.size() < m; ++i) {
        Vec y = apply_gen(i, w[l]);
        if (span.add(y)) {
          w.push_back(std::move(y));
          tree_gen.push_back(i);
          tree_parent.push_back(l);
        }
      }
    }
    if (w.size() == m) {
      cyclic = true;
      break;
    }
  }
  if (!cyclic) return {false, 0};

  auto winv = invert(ExactMatrix::from_cols(w, m));
  assert(winv.has_value());

  // M_t maps v = T(x0) to T(w_t): M_0 = I, M_t = G_{gen(t)} M_{parent(t)}.
  std::vector<ExactMatrix> word(m);
  word[0] = ExactMatrix::identity(m);
  for (std::size_t t = 1; t < m; ++t)
    word[t] = apply_to_cols(apply_gen, tree_gen[t], word[tree_parent[t]]);

  // Constraints: for all generators i and basis members w_l,
  //   ( sum_t c_t M_t - G_i M_l ) v = 0   where   c = W^{-1} (G_i w_l).
  IncrementalRref constraints(m);
  for (std::size_t l = 0; l < m; ++l) {
    for (std::size_t i = 0; i < n_gens; ++i) {
      if (constraints.rank() + 1 == m) return {true, 1};
      Vec y = apply_gen(i, w[l]);
      Vec c = winv->apply(y);
      ExactMatrix cmb(m, m);
      for (std::size_t t = 0; t < m; ++t)
        if (c[t] != 0) cmb = cmb.add(word[t].scaled(c[t]));
      cmb = cmb.sub(apply_to_cols(apply_gen, i, word[l]));
      for (std::size_t r = 0; r < m; ++r) constraints.add(cmb.row(r));
    }
  }
  return {true, m - constraints.rank()};
}

}  // namespace shortsl2
