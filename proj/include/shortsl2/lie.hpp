// Lie algebras with exact rational structure constants, stored as a sparse
// bracket table over a labeled basis. Provides the structure-to-algebra
// builder g = g0 (+) (C^2 (x) J1) (+) (sl2 (x) J2), exact Jacobi
// verification (full, sampled, and single-pair-touching), the Killing form,
// the simplicity test (Killing nondegeneracy + adjoint commutant dimension
// one), and the invariant form normalized so the induced form on J2 is the
// operator trace form.
#ifndef SHORTSL2_LIE_HPP
#define SHORTSL2_LIE_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shortsl2/linalg.hpp"
#include "shortsl2/rng.hpp"
#include "shortsl2/sympjordan.hpp"

namespace shortsl2 {

// Basis label attached by the structure-to-algebra builder: a g0 basis
// element, a weight-vector slot e_{+1}/e_{-1} tensor a J1 basis vector, or an
// sl2 basis element tensor a J2 basis operator.
struct BasisLabel {
  enum class Kind { G0, V1, V2 };
  Kind kind = Kind::G0;
  int weight = 0;        // V1 only: +1 or -1
  char sl2_part = 'e';   // V2 only: 'e', 'h' or 'f'
  std::size_t index = 0; // position in g0_basis / J1 basis / j2_basis

  static BasisLabel g0(std::size_t k);
  static BasisLabel v1(int weight, std::size_t i);
  static BasisLabel v2(char part, std::size_t k);
  std::string to_string() const;
  bool operator==(const BasisLabel& o) const;
};

using Term = std::pair<std::size_t, Rational>;  // (basis index, coefficient)
using TermList = std::vector<Term>;
// Canonical sparse bracket table: keys (i, j) with i < j only, term lists
// sorted by basis index with nonzero coefficients.
using BracketMap = std::map<std::pair<std::size_t, std::size_t>, TermList>;

class LieAlgebra {
 public:
  // Validates index ranges, sorts and merges terms, drops zeros. Throws
  // InvalidStructure on out-of-range indices or keys with i >= j.
  LieAlgebra(std::size_t dim, std::vector<std::string> labels, BracketMap brackets,
             std::optional<std::vector<BasisLabel>> structure_labels = std::nullopt);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const BracketMap& brackets() const { return brackets_; }
  const std::optional<std::vector<BasisLabel>>& structure_labels() const {
    return structure_labels_;
  }

  // [x_i, x_j] for any index order; the empty list when i == j.
  TermList bracket_basis(std::size_t i, std::size_t j) const;
  // Coefficient of x_k in [x_i, x_j].
  Rational structure_constant(std::size_t i, std::size_t j, std::size_t k) const;
  // [x_i, y] expanded over the basis.
  Vec bracket_with_basis(std::size_t i, const Vec& y) const;
  Vec bracket(const Vec& x, const Vec& y) const;
  ExactMatrix ad(const Vec& x) const;  // y -> [x, y]

  // Read-only adjacency row: the pairs (j, terms of [x_i, x_j]) for every j
  // with a nonzero bracket, sorted by j, signs materialized for both orders.
  const std::vector<std::pair<std::size_t, TermList>>& row(std::size_t i) const;

 private:
  std::size_t dim_;
  std::vector<std::string> labels_;
  BracketMap brackets_;
  std::optional<std::vector<BasisLabel>> structure_labels_;
  // Both-direction adjacency with signs materialized: rows_[i] is sorted by
  // neighbor j and holds the full term list of [x_i, x_j].
  std::vector<std::vector<std::pair<std::size_t, TermList>>> rows_;
};

struct Sl2Triple {
  Vec e, h, f;
};

struct JacobiReport {
  bool passed = true;
  std::size_t checked = 0;  // number of basis triples examined
  // First triple (i < j < k) whose Jacobi sum is nonzero, with the sum.
  std::optional<std::array<std::size_t, 3>> violation;
  Vec residual;
};

// Exact Jacobi check over all C(dim, 3) basis triples.
JacobiReport verify_jacobi_full(const LieAlgebra& algebra);
// Exact check on `samples` random triples drawn from the given seed.
JacobiReport verify_jacobi_sampled(const LieAlgebra& algebra, std::size_t samples,
                                   std::uint64_t seed);
// Exact check restricted to triples meeting {i, j}: complete for detecting a
// perturbation of the single bracket [x_i, x_j], since every Jacobi sum it
// can change involves x_i or x_j.
JacobiReport verify_jacobi_touching(const LieAlgebra& algebra, std::size_t i,
                                    std::size_t j);

// Copy of the algebra with the coefficient of x_k in [x_i, x_j] shifted by
// delta (i < j required). Structure labels are dropped: the result is a raw
// bracket table, not a built algebra.
LieAlgebra perturbed(const LieAlgebra& algebra, std::size_t i, std::size_t j,
                     std::size_t k, const Rational& delta);

// K(x_i, x_j) = tr(ad x_i . ad x_j).
ExactMatrix killing_form(const LieAlgebra& algebra);

// Killing form nondegenerate (semisimplicity) and adjoint commutant of
// dimension one (a single simple summand).
bool is_simple(const LieAlgebra& algebra, Rng& rng);

// Builds the algebra g0 (+) (C^2 (x) J1) (+) (sl2 (x) J2) over the basis
//   g0_0..g0_{n0-1},
//   e_{+1} (x) a_0.., e_{-1} (x) a_0..   (a_i the J1 coordinate basis),
//   e (x) A_0.., h (x) A_0.., f (x) A_0..,
// with brackets
//   [D, u (x) a]       = u (x) Da
//   [D, X (x) A]       = X (x) [D, A]
//   [u (x) a, v (x) b] = S(u,v) (x) phi(a,b) + <u,v> delta(a,b)
//   [X (x) A, v (x) b] = Xv (x) Ab
//   [X (x) A, Y (x) B] = [X,Y] (x) (A o B) + (X,Y)/2 [A, B].
// Throws InvalidStructure naming the first failed axiom when validate(S)
// does not pass.
LieAlgebra build_lie_algebra(const LieJordanStructure& s);

// The images (e (x) unit, h (x) unit, f (x) unit) inside a built algebra.
// Throws NotBuilt when the algebra has no structure labels or their shape
// does not match s.
Sl2Triple unit_triple(const LieAlgebra& algebra, const LieJordanStructure& s);

// lambda * K with the unique scalar making the induced form on J2 equal to
// tr(AB): lambda = (dim J1 / 2) / K(e (x) unit, f (x) unit). Throws NotBuilt
// as above, DegenerateForm when the normalizing pairing vanishes.
ExactMatrix invariant_form(const LieAlgebra& algebra, const LieJordanStructure& s);

}  // namespace shortsl2

#endif  // SHORTSL2_LIE_HPP
