// Exact dense linear algebra over the rationals: matrices, deterministic
// reduced row echelon form (first nonzero pivot in column order), solving,
// kernels, orthogonal complements, span coordinatization, and the streaming
// commutant-dimension computation used by the simplicity tests.
//
// Everything is immutable-after-construction and pure; determinism matters
// because canonical kernel bases feed byte-stable serialization downstream.
#ifndef SHORTSL2_LINALG_HPP
#define SHORTSL2_LINALG_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "shortsl2/errors.hpp"
#include "shortsl2/rational.hpp"
#include "shortsl2/rng.hpp"

namespace shortsl2 {

using Vec = std::vector<Rational>;

// ---- vector helpers ----
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& v, const Rational& c);
void vec_add_scaled(Vec& acc, const Rational& c, const Vec& v);  // acc += c*v
Rational vec_dot(const Vec& a, const Vec& b);

class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static ExactMatrix from_cols(const std::vector<Vec>& cols, std::size_t rows);
  static ExactMatrix from_flat(std::size_t rows, std::size_t cols, Vec flat);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  ExactMatrix mul(const ExactMatrix& o) const;
  ExactMatrix add(const ExactMatrix& o) const;
  ExactMatrix sub(const ExactMatrix& o) const;
  ExactMatrix scaled(const Rational& c) const;
  ExactMatrix transpose() const;
  Rational trace() const;
  Vec apply(const Vec& v) const;       // matrix * column vector
  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  Vec to_flat() const { return a_; }   // row-major flattening
  bool is_zero() const;

  bool operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);   // AB - BA
ExactMatrix jordan_sym(const ExactMatrix& a, const ExactMatrix& b);   // (AB + BA)/2

struct RrefResult {
  ExactMatrix m;
  std::vector<std::size_t> pivot_cols;
};

// Deterministic reduced row echelon form: in column order, the first row with
// a nonzero entry becomes the pivot; pivots are normalized to 1 and
// eliminated above and below.
RrefResult rref(ExactMatrix m);

std::size_t rank(const ExactMatrix& m);

// Exact solution of A x = b, or nullopt when inconsistent. Free variables are
// set to zero, so the returned solution is deterministic.
std::optional<Vec> solve(const ExactMatrix& a, const Vec& b);

// Canonical kernel basis: one vector per free column (ascending), with a 1 in
// the free position. Vectors are linearly independent and A v = 0 exactly.
std::vector<Vec> kernel(const ExactMatrix& a);

// Basis of {v : form(v, s) = 0 for all s in subspace}, form(v, s) = v^T F s.
// Throws DegenerateForm when F is singular on the ambient space.
std::vector<Vec> orthogonal_complement(const ExactMatrix& form,
                                       const std::vector<Vec>& subspace);

// Canonical basis of the span of the given vectors: the nonzero rows of their
// RREF. Deterministic, so equal spans yield identical bases.
std::vector<Vec> rref_basis(const std::vector<Vec>& vectors, std::size_t ambient_dim);

std::optional<ExactMatrix> invert(const ExactMatrix& m);

// Coordinates within the span of a fixed list of linearly independent
// vectors. Construction precomputes an invertible pivot-row submatrix so each
// coords() call is a small multiply plus a full-residual check.
class SpanSolver {
 public:
  SpanSolver() = default;
  // Throws InvalidStructure if the columns are linearly dependent.
  SpanSolver(const std::vector<Vec>& columns, std::size_t ambient_dim);
  // Coordinates of v in the span, or nullopt when v lies outside it.
  std::optional<Vec> coords(const Vec& v) const;
  std::size_t dim() const { return n_; }

 private:
  std::size_t amb_ = 0, n_ = 0;
  ExactMatrix b_;
  std::vector<std::size_t> pivot_rows_;
  ExactMatrix inv_;
};

// Row-echelon accumulator over a fixed column count; rows are kept fully
// reduced (RREF) so rank queries and residuals are exact at every step.
class IncrementalRref {
 public:
  explicit IncrementalRref(std::size_t cols) : cols_(cols) {}
  // Returns true when v added a new pivot (i.e. was independent).
  bool add(Vec v);
  Vec reduce(Vec v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t cols_;
  std::vector<Vec> rows_;              // sorted by pivot column
  std::vector<std::size_t> pivots_;
};

// Dimension of {T : T G_i = G_i T for all generators} for a module the
// caller knows to be semisimple. Strategy: find a cyclic vector x0 (random
// then deterministic fallbacks), record a Krylov spanning tree, express any
// commuting T through v = T(x0), and stream the consistency constraints on v
// into an RREF with early exit once the solution space has dimension 1.
// If no start vector is cyclic, cyclic = false and (by semisimplicity of the
// module) the commutant has dimension >= 2.
struct CommutantResult {
  bool cyclic = false;
  std::size_t dim = 0;
};
CommutantResult commutant_dimension(
    std::size_t module_dim, std::size_t n_gens,
    const std::function<Vec(std::size_t, const Vec&)>& apply_gen, Rng& rng);

}  // namespace shortsl2

#endif  // SHORTSL2_LINALG_HPP
