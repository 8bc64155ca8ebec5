// Symplectic Lie-Jordan structures: a symplectic space J1, a unital Jordan
// algebra J2 of symmetric operators on it, a reductive algebra g0 of
// symplectic operators containing [J2, J2], and the delta0 table valued in
// the kernel ideal i0 (the trace-orthocomplement of [J2, J2] inside g0).
//
// The module provides the canonical rank-one maps phi_m / delta_m, the
// trace-orthogonal projections onto J2 and [J2, J2], the derived maps
// phi = pi2(phi_m) and delta = delta0 + pic(delta_m), the trilinear map F,
// Jordan simplicity, and the full structure validator.
#ifndef SHORTSL2_SYMPJORDAN_HPP
#define SHORTSL2_SYMPJORDAN_HPP

#include <string>
#include <vector>

#include "shortsl2/linalg.hpp"
#include "shortsl2/rng.hpp"

namespace shortsl2 {

// Even-dimensional space with a nondegenerate antisymmetric form
// <a, b> = a^T Omega b. Construction validates all of that.
struct SymplecticSpace {
  std::size_t dim;
  ExactMatrix omega;

  SymplecticSpace(std::size_t d, ExactMatrix om);
  // Omega = [[0, I], [-I, 0]] in n+n block form.
  static SymplecticSpace standard(std::size_t half);

  Rational pair(const Vec& a, const Vec& b) const;
};

// Membership tests: symmetric operators satisfy <Aa,b> = <a,Ab>, i.e.
// A^T Omega = Omega A; symplectic ones satisfy <Da,b> = -<a,Db>.
bool is_sym_operator(const ExactMatrix& m, const ExactMatrix& omega);
bool is_sp_operator(const ExactMatrix& m, const ExactMatrix& omega);

// R(a, b): c -> <c, a> b, as a matrix (equals -b a^T Omega).
ExactMatrix rank_one(const SymplecticSpace& sp, const Vec& a, const Vec& b);

// phi_m(a,b) = (R(b,a) - R(a,b))/2 in sym; delta_m(a,b) = (R(b,a) + R(a,b))/2
// in sp. Together R(b,a) = phi_m(a,b) + delta_m(a,b).
ExactMatrix phi_m(const SymplecticSpace& sp, const Vec& a, const Vec& b);
ExactMatrix delta_m(const SymplecticSpace& sp, const Vec& a, const Vec& b);

// A o B = (AB + BA)/2; throws NotSymmetric unless both inputs are in sym(J1).
ExactMatrix jordan_product(const SymplecticSpace& sp, const ExactMatrix& a,
                           const ExactMatrix& b);

// delta0 value on a pair of J1 basis indices, as coordinates over the i0
// basis produced by split_g0.
struct Delta0Entry {
  std::size_t i, j;  // i <= j
  Vec value;
};

struct LieJordanStructure {
  SymplecticSpace space;
  std::vector<ExactMatrix> j2_basis;
  std::vector<ExactMatrix> g0_basis;
  Vec unit;  // coordinates of the identity operator over j2_basis
  std::vector<Delta0Entry> delta0;
};

// g0 = i0 (+) [J2, J2]: der spans all pairwise commutators of j2_basis; i0 is
// its trace-orthocomplement inside g0. Both bases are canonical (RREF-derived)
// so equal structures split identically.
struct G0Split {
  std::vector<ExactMatrix> i0;
  std::vector<ExactMatrix> der;
};
G0Split split_g0(const LieJordanStructure& s);

// Precomputed projections and the bilinear-map tables of one structure.
// Construction throws InvalidStructure (dependent bases, bad shapes) or
// DegenerateRestriction (singular Gram matrix of J2, [J2,J2] or i0);
// validate() reports those conditions as failed items instead of throwing.
class StructureMaps {
 public:
  explicit StructureMaps(const LieJordanStructure& s);

  const LieJordanStructure& structure() const { return *s_; }
  const G0Split& split() const { return split_; }

  // Trace-orthogonal projections, as coordinates over j2_basis / der basis.
  Vec project_pi2(const ExactMatrix& m) const;
  Vec project_pic(const ExactMatrix& m) const;

  // The structure's maps on arbitrary J1 vectors (bilinear extensions).
  ExactMatrix phi(const Vec& a, const Vec& b) const;
  ExactMatrix delta(const Vec& a, const Vec& b) const;     // delta0 + delta_c
  ExactMatrix delta_c(const Vec& a, const Vec& b) const;   // pic(delta_m)
  ExactMatrix delta0_op(const Vec& a, const Vec& b) const; // embedded i0 part
  Vec delta0_coords(const Vec& a, const Vec& b) const;     // over the i0 basis

  // F(a,b,c) = delta(a,b)c + phi(b,c)a + phi(a,c)b, and
  // Fbar(a,b,c,d) = <F(a,b,c), d>.
  Vec compute_F(const Vec& a, const Vec& b, const Vec& c) const;
  Rational compute_Fbar(const Vec& a, const Vec& b, const Vec& c, const Vec& d) const;

  ExactMatrix unit_op() const;
  Vec j2_coords(const ExactMatrix& m) const;  // exact membership or throws
  Vec g0_coords(const ExactMatrix& m) const;  // exact membership or throws
  ExactMatrix embed_j2(const Vec& coords) const;
  ExactMatrix embed_g0(const Vec& coords) const;
  ExactMatrix embed_i0(const Vec& coords) const;

 private:
  const LieJordanStructure* s_;
  G0Split split_;
  SpanSolver j2_span_, g0_span_;
  ExactMatrix j2_gram_inv_, der_gram_inv_;
  // Dense bilinear tables on basis pairs.
  std::vector<std::vector<Vec>> d0_;            // i0 coordinates
  std::vector<std::vector<ExactMatrix>> dtab_;  // delta(e_i, e_j)
  std::vector<std::vector<ExactMatrix>> ptab_;  // phi(e_i, e_j)
};

// True iff the unital Jordan algebra spanned by j2_basis is simple: trace
// form nondegenerate and the commutant of all multiplication operators L_A
// has dimension 1.
bool jordan_is_simple(const LieJordanStructure& s, Rng& rng);

struct ValidationItem {
  std::string name;
  bool passed;
  std::string witness;  // empty when passed
  bool fatal;           // flags (non-fatal) don't affect ok()
};
struct ValidationReport {
  std::vector<ValidationItem> items;
  bool ok() const {
    for (const auto& it : items)
      if (it.fatal && !it.passed) return false;
    return true;
  }
};

// Checks every structure axiom in order, recording pass/fail plus a witness.
// The delta0 trace-pairing consistency item is reported as a non-fatal flag:
// the i0-part of the pairing depends on a normalization convention that
// genuine structures extracted from ambient algebras need not satisfy.
ValidationReport validate(const LieJordanStructure& s);

// The maximal structure on a 2n-dimensional space: J2 = sym(J1),
// g0 = sp(J1), delta0 = delta_m's i0 part (i0 = sp only when n = 1, else 0).
LieJordanStructure maximal_structure(std::size_t n);

}  // namespace shortsl2

#endif  // SHORTSL2_SYMPJORDAN_HPP
