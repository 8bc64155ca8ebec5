// Root systems for all simple types, exact Chevalley-basis construction of
// the corresponding Lie algebras, enumeration of the diagram markings whose
// grading can carry a short structure, the existence decision for an sl2
// triple over a marking, and the classification driver that assembles the
// per-type tables.
#ifndef SHORTSL2_ROOTSYS_HPP
#define SHORTSL2_ROOTSYS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shortsl2/lie.hpp"
#include "shortsl2/linalg.hpp"
#include "shortsl2/rng.hpp"

namespace shortsl2 {

enum class SimpleType { A, B, C, D, E, F, G };

// Parses "A".."G" (or lowercase); anything else is InvalidType.
SimpleType parse_simple_type(const std::string& s);
std::string simple_type_name(SimpleType t);

struct RootSystem {
  SimpleType type;
  std::size_t rank;
  // Simple roots in ambient coordinates, in the node order used throughout
  // (the order in which highest-root coefficients are quoted per type; the
  // README documents the mapping to Bourbaki numbering).
  std::vector<Vec> simple_roots;
  ExactMatrix cartan_matrix;  // C[i][j] = <alpha_i, alpha_j^v>, integer entries
  // Positive roots as integer coefficient vectors over the simple roots,
  // ordered by height then lexicographically.
  std::vector<std::vector<int>> positive_roots;
  std::vector<int> highest_root;
  // Ambient coordinates of each positive root (same order).
  std::vector<Vec> positive_epsilon;
};

// Throws InvalidType for (type, rank) outside the simple families:
// A >= 1, B >= 2, C >= 2, D >= 3, E in {6,7,8}, F = 4, G = 2.
RootSystem build_root_system(SimpleType type, std::size_t rank);

// The Chevalley basis algebra: Cartan h_1..h_r, then e_alpha for positive
// roots in root order, then e_{-alpha} in the same order. All structure
// constants are integers; signs are fixed by the extraspecial-pair method so
// the construction is deterministic.
LieAlgebra chevalley_algebra(const RootSystem& rs);

struct Marking {
  std::vector<int> p;  // p_i = alpha_i(h) >= 0 with sum l_i p_i = 2
};

// All markings with sum l_i p_i = 2 that also put at least one root at
// value 1 (a nonzero weight-vector part). Ordered single-marked nodes first
// (by node), then double-marked pairs (lexicographically).
std::vector<Marking> enumerate_markings(const RootSystem& rs);

// The grading element: coordinates over the Cartan basis h_1..h_r of the h
// with alpha_i(h) = p_i, padded with zeros to full algebra coordinates.
Vec marking_element(const RootSystem& rs, const Marking& m);

// ad(h) weight of the positive root with the given coefficients.
int marking_value(const Marking& m, const std::vector<int>& coeffs);

// Node permutations preserving the Cartan matrix.
std::vector<std::vector<std::size_t>> diagram_automorphisms(const RootSystem& rs);

struct G2ModuleInfo {
  std::size_t g2_dim;  // number of roots at value 2
  // <alpha_max, alpha_j^v> for each zero-marked node j.
  std::vector<std::pair<std::size_t, int>> pairings;
};
G2ModuleInfo g2_module_info(const RootSystem& rs, const Marking& m);

struct Sl2Decision {
  bool exists;
  std::size_t generic_rank;  // max rank of D -> [D, e] over the trials
  std::optional<Sl2Triple> witness;
};

// Decides whether the marking's grading element embeds in an sl2 triple with
// e at level 2 and f at level -2: the structure exists iff the generic rank
// of g0~ -> g2, D -> [D, e] stays below dim g2, where g0~ is the
// Killing-orthogonal complement of h in g0. When it exists, a witness triple
// is constructed and verified exactly (WitnessNotFound if trials run out);
// when it does not, witness construction is attempted 100 more times as a
// cross-check and any success is reported as an inconsistency.
Sl2Decision sl2_exists(const LieAlgebra& algebra, const RootSystem& rs, const Marking& m,
                       std::size_t trials, Rng& rng);

struct ClassificationRow {
  Marking marking;
  bool exists = false;
  std::size_t g0_dim = 0;  // dim of the level-0 part minus dim of the level-2 part
  std::size_t j1_dim = 0;  // roots at value 1
  std::size_t j2_dim = 0;  // roots at value 2
  std::size_t g2_dim = 0;  // same count, kept explicit for the report
  std::optional<std::size_t> equivalent_to;  // earlier row index under a diagram automorphism
  std::optional<Sl2Triple> witness;
  std::optional<std::string> note;  // set when g0 has a center of positive dimension
};

struct ClassifyOptions {
  std::size_t trials = 20;
  std::uint64_t seed = kDefaultSeed;
};

std::vector<ClassificationRow> classify(SimpleType type, std::size_t rank,
                                        const ClassifyOptions& options = {});

}  // namespace shortsl2

#endif  // SHORTSL2_ROOTSYS_HPP
