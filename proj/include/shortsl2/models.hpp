// Catalog of explicit matrix models: six families of simple matrix Lie
// algebras (odd orthogonal algebras with a one-dimensional middle block, the
// three-block special linear family, odd and even orthogonal families, the
// even orthogonal spin family, and the symplectic family), each equipped
// with a distinguished block sl2 triple. The catalog structure of a model is
// obtained by extracting the symplectic Lie-Jordan structure from the
// ambient matrix algebra, and the commutator oracle replays the bracket
// table of the rebuilt graded algebra against direct matrix commutators.
#ifndef SHORTSL2_MODELS_HPP
#define SHORTSL2_MODELS_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "shortsl2/lie.hpp"
#include "shortsl2/linalg.hpp"
#include "shortsl2/sympjordan.hpp"

namespace shortsl2 {

enum class ModelFamily {
  Maximal,        // so_{4n+1}, corner blocks of size 2n, middle block 1x1
  Sl,             // sl_n with diagonal blocks (i, n-2i, i)
  SoOdd,          // so_{2n+1} with blocks (i, 2(n-i)+1, i), i even
  SoEvenVector,   // so_{2n} with blocks (i, 2(n-i), i), i even, i <= n-2
  SoEvenSpin,     // so_{2n} with blocks (n-1, 2, n-1), n odd
  Sp,             // sp_{2n} with blocks (i, 2(n-i), i), 1 <= i < n
};

struct ModelSpec {
  ModelFamily family = ModelFamily::Maximal;
  std::size_t n = 1;
  std::size_t i = 0;  // must stay 0 for Maximal and SoEvenSpin

  bool operator==(const ModelSpec& o) const {
    return family == o.family && n == o.n && i == o.i;
  }
};

// Throws InvalidParameters unless the parameters satisfy the family
// constraints listed next to ModelFamily (and i == 0 where i is unused).
void check_model(const ModelSpec& spec);

// Catalog-name round trip. Names: "maximal:n", "sl:n:i", "so-odd:n:i",
// "so-even:n:i", "so-even-spin:n", "sp:n:i". parse_model_name validates via
// check_model and throws InvalidParameters on any malformed or invalid name.
ModelSpec parse_model_name(const std::string& name);
std::string model_name(const ModelSpec& spec);

// The bundled model list exercised by the test suite and `models --list`:
// maximal:{1..3}, sl:4:1, sl:{5,6,7}:{1,2}, so-odd:{3,4,5}:2,
// so-even:{4,5,6}:2, so-even-spin:{3,5}, sp:{2..5}:{1..n-1}.
std::vector<ModelSpec> model_catalog();

// A matrix Lie algebra over its natural basis, together with the
// distinguished sl2 triple in basis coordinates and the dense matrix of
// every basis element (matrices are matrix_size x matrix_size).
struct AmbientModel {
  LieAlgebra algebra;
  Sl2Triple triple;
  std::size_t matrix_size = 0;
  std::vector<ExactMatrix> basis;

  // The dense matrix of an algebra element given by basis coordinates.
  ExactMatrix matrix_of(const Vec& coords) const;
};

// Builds the ambient matrix algebra with exact structure constants and the
// block triple e (upper-right corner), h (diagonal), f (lower-left corner).
// The triple is verified to be an exact sl2 triple before returning.
AmbientModel ambient_algebra(const ModelSpec& spec);

// The symplectic Lie-Jordan structure extracted from the ambient model.
LieJordanStructure catalog_structure(const ModelSpec& spec);

struct OracleReport {
  bool match = true;
  std::size_t pairs_checked = 0;
  // Basis index pairs (i < j) of the rebuilt graded algebra whose bracket
  // disagrees with the ambient matrix commutator.
  std::vector<std::pair<std::size_t, std::size_t>> mismatches;
};

// Rebuilds the graded algebra from the structure and compares every bracket
// against the ambient matrix commutators through the canonical basis
// correspondence (trivial-component basis, the canonical level-1 basis and
// its ad(f) images, and the level-2 basis with its sl2 orbit). Mismatches
// are reported as data. Throws InvalidParameters when the structure's
// component dimensions do not match the ambient decomposition.
OracleReport oracle_check(const ModelSpec& spec, const LieJordanStructure& s);
// Same check applied to catalog_structure(spec).
OracleReport oracle_check(const ModelSpec& spec);

}  // namespace shortsl2

#endif  // SHORTSL2_MODELS_HPP
