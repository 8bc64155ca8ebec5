// The inverse direction: given a Lie algebra and an exact sl2 triple inside
// it, compute the integer grading by ad(h), the isotypic decomposition into
// multiplicities of the 1-, 2- and 3-dimensional irreducibles, and extract
// the symplectic Lie-Jordan structure (J1 with its form, the J2 operators,
// the g0 operators, and the delta0 table), completing the round trip with
// the builder in lie.hpp.
#ifndef SHORTSL2_ISOTYPIC_HPP
#define SHORTSL2_ISOTYPIC_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "shortsl2/lie.hpp"
#include "shortsl2/linalg.hpp"
#include "shortsl2/sympjordan.hpp"

namespace shortsl2 {

// Eigenspace bases of ad(h) for the eigenvalues -2..2, each the canonical
// (RREF-derived) kernel basis, so equal inputs grade identically.
struct Grading {
  std::array<std::vector<Vec>, 5> eigenspaces;

  const std::vector<Vec>& at(int k) const { return eigenspaces.at(static_cast<std::size_t>(k + 2)); }
  std::size_t dim_at(int k) const { return at(k).size(); }
};

// Grades the algebra by exact ad(h) eigenspaces. Throws NotSemisimpleElement
// when ad(h) has a nontrivial Jordan block at one of the eigenvalues -2..2,
// and NotShort when the eigenspaces do not fill the algebra (an eigenvalue
// outside -2..2, or a non-rational one).
Grading grade(const LieAlgebra& algebra, const Vec& h);

// Exact check of [e,f] = h, [h,e] = 2e, [h,f] = -2f.
bool is_sl2_triple(const LieAlgebra& algebra, const Sl2Triple& t);

struct IsotypicData {
  Grading grading;
  std::size_t m0 = 0, m1 = 0, m2 = 0;  // multiplicities of dims 1, 2, 3
  // Component bases: the trivial part (kernel of ad e and ad f inside g^0),
  // the weight-vector part (g^1 basis then g^-1 basis), and the sl2-tensor
  // part (g^2 basis, then its ad(f)-images at level 0, then g^-2 basis).
  std::vector<Vec> g0_component, g1_component, g2_component;
};

// Throws InvalidParameters when t is not an exact sl2 triple; grading errors
// propagate from grade().
IsotypicData decompose(const LieAlgebra& algebra, const Sl2Triple& t);

// Extracts the structure: J1 = g^1 with the symplectic form from the
// normalized invariant form, J2 operators read off brackets of g^2 with the
// ad(f)-images of the J1 basis, g0 operators from the trivial component, and
// delta0 from the g0-part of [g^1, g^-1] projected onto i0. Throws NotSimple
// when the algebra is not simple, NotShort when g^1 = 0, NonUnitalJ2 when
// the identity operator is missing from the extracted J2.
LieJordanStructure extract(const LieAlgebra& algebra, const Sl2Triple& t);

}  // namespace shortsl2

#endif  // SHORTSL2_ISOTYPIC_HPP
