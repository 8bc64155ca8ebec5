// Lie algebra construction and verification: bracket table bookkeeping,
// Jacobi checks, Killing form, simplicity, the structure-to-algebra builder
// cross-checked bracket-for-bracket against an independent 5x5 matrix
// realization of so5, and the normalized invariant form.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdlib>
#include <vector>

#include "shortsl2/errors.hpp"
#include "shortsl2/lie.hpp"
#include "shortsl2/linalg.hpp"
#include "shortsl2/rng.hpp"
#include "shortsl2/sympjordan.hpp"

using namespace shortsl2;

namespace {

Rational rat(long long n) { return Rational(n); }

// Standalone sl2 with basis (e, h, f): [e,h] = -2e, [e,f] = h, [h,f] = -2f.
LieAlgebra standalone_sl2() {
  BracketMap table;
  table[{0, 1}] = {{0, rat(-2)}};
  table[{0, 2}] = {{1, rat(1)}};
  table[{1, 2}] = {{2, rat(-2)}};
  return LieAlgebra(3, {"e", "h", "f"}, std::move(table));
}

LieAlgebra sl2_plus_sl2() {
  BracketMap table;
  for (std::size_t block : {std::size_t{0}, std::size_t{3}}) {
    table[{block + 0, block + 1}] = {{block + 0, rat(-2)}};
    table[{block + 0, block + 2}] = {{block + 1, rat(1)}};
    table[{block + 1, block + 2}] = {{block + 2, rat(-2)}};
  }
  return LieAlgebra(6, {"e1", "h1", "f1", "e2", "h2", "f2"}, std::move(table));
}

// 5x5 elementary matrix, 1-based indices.
ExactMatrix elem5(std::size_t r, std::size_t c) {
  ExactMatrix m(5, 5);
  m.at(r - 1, c - 1) = rat(1);
  return m;
}

// X(a,b) = E_ab - E_{6-b,6-a}: the standard spanning family of the matrices
// skew-symmetric about the side diagonal.
ExactMatrix so5_x(std::size_t a, std::size_t b) {
  return elem5(a, b).sub(elem5(6 - b, 6 - a));
}

// Transpose about the side diagonal: (M^s)(r, c) = M(6-c, 6-r), 1-based.
ExactMatrix side_transpose5(const ExactMatrix& m) {
  ExactMatrix out(5, 5);
  for (std::size_t r = 1; r <= 5; ++r)
    for (std::size_t c = 1; c <= 5; ++c) out.at(r - 1, c - 1) = m.at(5 - c, 5 - r);
  return out;
}

// The images of the ten basis elements of the built maximal n=1 algebra
// inside so5, in the builder's basis order
//   g0: D1 = diag(1,-1), D2 = E_01, D3 = E_10 (operators on J1 = C^2),
//   e1 (x) a0, e1 (x) a1, e-1 (x) a0, e-1 (x) a1,
//   e (x) I, h (x) I, f (x) I.
// An operator D in g0 maps to block-diag(D, 0, -D^s); the weight vectors fill
// the middle column/row; the sl2 triple fills the corner blocks.
std::vector<ExactMatrix> so5_images() {
  std::vector<ExactMatrix> img;
  img.push_back(so5_x(1, 1).sub(so5_x(2, 2)));              // D1
  img.push_back(so5_x(1, 2));                               // D2
  img.push_back(so5_x(2, 1));                               // D3
  img.push_back(so5_x(1, 3));                               // e1 (x) a0
  img.push_back(so5_x(2, 3));                               // e1 (x) a1
  img.push_back(so5_x(3, 2).scaled(rat(-1)));               // e-1 (x) a0
  img.push_back(so5_x(3, 1));                               // e-1 (x) a1
  img.push_back(so5_x(1, 4));                               // e (x) I
  img.push_back(so5_x(1, 1).add(so5_x(2, 2)));              // h (x) I
  img.push_back(so5_x(4, 1));                               // f (x) I
  return img;
}

TermList sorted_terms(std::vector<std::pair<std::size_t, long long>> raw) {
  TermList out;
  for (auto& [k, c] : raw) out.emplace_back(k, rat(c));
  return out;
}

}  // namespace

TEST_CASE("basis labels render canonically") {
  CHECK(BasisLabel::g0(3).to_string() == "g0:3");
  CHECK(BasisLabel::v1(+1, 2).to_string() == "v1:+1:2");
  CHECK(BasisLabel::v1(-1, 0).to_string() == "v1:-1:0");
  CHECK(BasisLabel::v2('e', 1).to_string() == "v2:e:1");
  CHECK(BasisLabel::v2('f', 4).to_string() == "v2:f:4");
  CHECK(BasisLabel::g0(1) == BasisLabel::g0(1));
  CHECK_FALSE(BasisLabel::v1(+1, 1) == BasisLabel::v1(-1, 1));
  CHECK_FALSE(BasisLabel::v2('e', 1) == BasisLabel::v2('h', 1));
}

TEST_CASE("bracket table normalization and lookups") {
  BracketMap table;
  // Duplicate terms merge; explicit zeros and cancelling pairs drop out.
  table[{0, 1}] = {{2, rat(1)}, {2, rat(2)}, {0, rat(0)}};
  table[{1, 2}] = {{0, rat(1)}, {0, rat(-1)}};
  LieAlgebra algebra(3, {"x", "y", "z"}, std::move(table));

  CHECK(algebra.brackets().size() == 1);
  CHECK(algebra.bracket_basis(0, 1) == sorted_terms({{2, 3}}));
  CHECK(algebra.bracket_basis(1, 0) == sorted_terms({{2, -3}}));
  CHECK(algebra.bracket_basis(1, 2).empty());
  CHECK(algebra.bracket_basis(1, 1).empty());
  CHECK(algebra.structure_constant(0, 1, 2) == rat(3));
  CHECK(algebra.structure_constant(1, 0, 2) == rat(-3));
  CHECK(algebra.structure_constant(0, 1, 0) == rat(0));

  // [x, z] = 0 here, and vector brackets expand bilinearly.
  Vec x = {rat(1), rat(2), rat(0)};
  Vec y = {rat(0), rat(1), rat(0)};
  Vec b = algebra.bracket(x, y);
  CHECK(b == Vec{rat(0), rat(0), rat(3)});
  CHECK(algebra.bracket_with_basis(0, y) == Vec{rat(0), rat(0), rat(3)});
  ExactMatrix ad_x = algebra.ad(x);
  CHECK(ad_x.apply(y) == b);

  CHECK_THROWS_AS(LieAlgebra(2, {"a", "b"}, BracketMap{{{1, 1}, {}}}), Error);
  CHECK_THROWS_AS(LieAlgebra(2, {"a", "b"}, BracketMap{{{0, 2}, {}}}), Error);
  CHECK_THROWS_AS(LieAlgebra(2, {"a"}, BracketMap{}), Error);
  BracketMap bad;
  bad[{0, 1}] = {{5, rat(1)}};
  CHECK_THROWS_AS(LieAlgebra(2, {"a", "b"}, std::move(bad)), Error);
}

TEST_CASE("standalone sl2: Jacobi, Killing determinant, simplicity") {
  LieAlgebra sl2 = standalone_sl2();
  JacobiReport jacobi = verify_jacobi_full(sl2);
  CHECK(jacobi.passed);
  CHECK(jacobi.checked == 1);

  ExactMatrix k = killing_form(sl2);
  ExactMatrix expected(3, 3);
  expected.at(0, 2) = rat(4);
  expected.at(2, 0) = rat(4);
  expected.at(1, 1) = rat(8);
  CHECK(k == expected);  // det = -128 in the basis (e, h, f)
  CHECK(rank(k) == 3);

  Rng rng;
  CHECK(is_simple(sl2, rng));
}

TEST_CASE("abelian algebras: vacuous Jacobi, zero Killing form, not simple") {
  LieAlgebra line(1, {"x"}, BracketMap{});
  JacobiReport jacobi = verify_jacobi_full(line);
  CHECK(jacobi.passed);
  CHECK(jacobi.checked == 0);
  CHECK(killing_form(line).is_zero());
  Rng rng;
  CHECK_FALSE(is_simple(line, rng));

  LieAlgebra plane(3, {"x", "y", "z"}, BracketMap{});
  CHECK(verify_jacobi_full(plane).passed);
  CHECK(killing_form(plane).is_zero());
}

TEST_CASE("direct sum of two sl2 copies: semisimple but not simple") {
  LieAlgebra sum = sl2_plus_sl2();
  CHECK(verify_jacobi_full(sum).passed);
  CHECK(rank(killing_form(sum)) == 6);

  Rng rng;
  CommutantResult commutant = commutant_dimension(
      6, 6, [&sum](std::size_t g, const Vec& v) { return sum.bracket_with_basis(g, v); },
      rng);
  CHECK(commutant.cyclic);
  CHECK(commutant.dim == 2);
  CHECK_FALSE(is_simple(sum, rng));
}

TEST_CASE("built maximal n=1 algebra: dimensions, labels, pinned brackets") {
  LieJordanStructure s = maximal_structure(1);
  LieAlgebra algebra = build_lie_algebra(s);
  CHECK(algebra.dim() == 10);
  REQUIRE(algebra.structure_labels().has_value());
  CHECK(algebra.labels()[0] == "g0:0");
  CHECK(algebra.labels()[3] == "v1:+1:0");
  CHECK(algebra.labels()[5] == "v1:-1:0");
  CHECK(algebra.labels()[7] == "v2:e:0");
  CHECK(algebra.labels()[8] == "v2:h:0");
  CHECK(algebra.labels()[9] == "v2:f:0");

  // Hand-computed brackets: the g0 basis is D1 = diag(1,-1), D2 = E01,
  // D3 = E10; phi(a0,a1) = I/2, delta(a0,a0) = -D2, delta(a0,a1) = D1/2,
  // delta(a1,a1) = D3.
  CHECK(algebra.bracket_basis(0, 1) == sorted_terms({{1, 2}}));     // [D1,D2] = 2 D2
  CHECK(algebra.bracket_basis(1, 2) == sorted_terms({{0, 1}}));     // [D2,D3] = D1
  CHECK(algebra.bracket_basis(3, 4) == sorted_terms({{7, -1}}));    // -2e (x) phi
  CHECK(algebra.bracket_basis(3, 5) == sorted_terms({{1, -1}}));    // delta(a0,a0)
  TermList mixed = algebra.bracket_basis(3, 6);
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0].first == 0);
  CHECK(mixed[0].second == Rational(1, 2));
  CHECK(mixed[1].first == 8);
  CHECK(mixed[1].second == Rational(1, 2));
  CHECK(algebra.bracket_basis(5, 6) == sorted_terms({{9, 1}}));     // 2f (x) phi
  CHECK(algebra.bracket_basis(7, 8) == sorted_terms({{7, -2}}));    // [e,h] part
  CHECK(algebra.bracket_basis(7, 9) == sorted_terms({{8, 1}}));     // [e,f] part
  CHECK(algebra.bracket_basis(8, 9) == sorted_terms({{9, -2}}));    // [h,f] part
  CHECK(algebra.bracket_basis(0, 3) == sorted_terms({{3, 1}}));     // D1 a0 = a0
  CHECK(algebra.bracket_basis(1, 4) == sorted_terms({{3, 1}}));     // D2 a1 = a0
  CHECK(algebra.bracket_basis(0, 7).empty());                       // [D, I] = 0

  JacobiReport jacobi = verify_jacobi_full(algebra);
  CHECK(jacobi.passed);
  CHECK(jacobi.checked == 120);
  CHECK(rank(killing_form(algebra)) == 10);
  Rng rng;
  CHECK(is_simple(algebra, rng));
}

TEST_CASE("built maximal n=1 algebra matches so5 matrix commutators") {
  LieJordanStructure s = maximal_structure(1);
  LieAlgebra algebra = build_lie_algebra(s);
  std::vector<ExactMatrix> img = so5_images();
  REQUIRE(img.size() == 10);

  // Every image lies in so5 (skew about the side diagonal), and the ten
  // images are linearly independent.
  std::vector<Vec> flats;
  for (const auto& m : img) {
    CHECK(side_transpose5(m) == m.scaled(rat(-1)));
    flats.push_back(m.to_flat());
  }
  CHECK(rref_basis(flats, 25).size() == 10);

  // Bracket-for-bracket: the matrix commutator of the images equals the
  // image of the built bracket, for all 45 pairs.
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = i + 1; j < 10; ++j) {
      ExactMatrix lhs = commutator(img[i], img[j]);
      ExactMatrix rhs(5, 5);
      for (const auto& [k, c] : algebra.bracket_basis(i, j)) rhs = rhs.add(img[k].scaled(c));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("transported sl2 triple satisfies the bracket relations") {
  for (std::size_t n : {std::size_t{1}, std::size_t{2}}) {
    LieJordanStructure s = maximal_structure(n);
    LieAlgebra algebra = build_lie_algebra(s);
    Sl2Triple t = unit_triple(algebra, s);
    CHECK(algebra.bracket(t.e, t.f) == t.h);
    CHECK(algebra.bracket(t.h, t.e) == vec_scaled(t.e, rat(2)));
    CHECK(algebra.bracket(t.h, t.f) == vec_scaled(t.f, rat(-2)));
  }
}

TEST_CASE("built maximal n=2 algebra: Jacobi, simplicity, grading closure") {
  LieJordanStructure s = maximal_structure(2);
  LieAlgebra algebra = build_lie_algebra(s);
  const std::size_t n0 = s.g0_basis.size(), n1 = s.space.dim, n2 = s.j2_basis.size();
  CHECK(n0 == 10);
  CHECK(n1 == 4);
  CHECK(n2 == 6);
  CHECK(algebra.dim() == 36);  // = dim so9

  JacobiReport jacobi = verify_jacobi_full(algebra);
  CHECK(jacobi.passed);
  CHECK(jacobi.checked == 7140);
  CHECK(rank(killing_form(algebra)) == 36);
  Rng rng;
  CHECK(is_simple(algebra, rng));

  // Index ranges of the even part g0 (+) (sl2 (x) J2) and the odd part
  // C^2 (x) J1 in the builder's basis order.
  auto is_even = [&](std::size_t k) { return k < n0 || k >= n0 + 2 * n1; };
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    for (std::size_t j = i + 1; j < algebra.dim(); ++j) {
      bool ei = is_even(i), ej = is_even(j);
      for (const auto& [k, c] : algebra.bracket_basis(i, j)) {
        (void)c;
        if (ei && ej) CHECK(is_even(k));        // even part is a subalgebra
        else if (!ei && !ej) CHECK(is_even(k)); // [odd, odd] lands in even
        else CHECK_FALSE(is_even(k));           // [even, odd] stays odd
      }
    }

  // The even part acts faithfully on the odd part: the restriction of ad to
  // the odd block has full rank over the even generators.
  std::vector<Vec> restricted;
  for (std::size_t g = 0; g < algebra.dim(); ++g) {
    if (!is_even(g)) continue;
    Vec flat;
    flat.reserve(4 * n1 * n1);
    for (std::size_t col = n0; col < n0 + 2 * n1; ++col) {
      TermList terms = algebra.bracket_basis(g, col);
      Vec dense(algebra.dim(), rat(0));
      for (const auto& [k, c] : terms) dense[k] = c;
      for (std::size_t r = n0; r < n0 + 2 * n1; ++r) flat.push_back(dense[r]);
    }
    restricted.push_back(std::move(flat));
  }
  CHECK(restricted.size() == n0 + 3 * n2);
  CHECK(rref_basis(restricted, 4 * n1 * n1).size() == n0 + 3 * n2);
}

TEST_CASE("invariant form normalizes the induced J2 form to the trace form") {
  for (std::size_t n : {std::size_t{1}, std::size_t{2}}) {
    LieJordanStructure s = maximal_structure(n);
    LieAlgebra algebra = build_lie_algebra(s);
    ExactMatrix form = invariant_form(algebra, s);
    Sl2Triple t = unit_triple(algebra, s);

    // The normalizing pairing itself: lambda K(e (x) I, f (x) I) = dim J1 / 2.
    CHECK(vec_dot(t.e, form.apply(t.f)) == Rational(s.space.dim) / 2);

    // Induced form on J2 via (X (x) A, Y (x) B) = (X,Y)/2 beta(A,B) with
    // (e,f) = 1: beta(A_k, A_l) = 2 lambda K(e (x) A_k, f (x) A_l) = tr(A_k A_l).
    const std::size_t n0 = s.g0_basis.size(), n1 = s.space.dim, n2 = s.j2_basis.size();
    const std::size_t off_e = n0 + 2 * n1, off_f = off_e + 2 * n2;
    for (std::size_t k = 0; k < n2; ++k)
      for (std::size_t l = 0; l < n2; ++l) {
        Rational beta = 2 * form.at(off_e + k, off_f + l);
        CHECK(beta == s.j2_basis[k].mul(s.j2_basis[l]).trace());
      }

    // Isotypic components are pairwise orthogonal under the Killing form.
    ExactMatrix k_form = killing_form(algebra);
    auto block = [&](std::size_t idx) {
      if (idx < n0) return 0;
      if (idx < n0 + 2 * n1) return 1;
      return 2;
    };
    for (std::size_t i = 0; i < algebra.dim(); ++i)
      for (std::size_t j = 0; j < algebra.dim(); ++j)
        if (block(i) != block(j)) CHECK(k_form.at(i, j) == 0);
  }
}

TEST_CASE("invariant form and unit triple require a built algebra") {
  LieAlgebra sl2 = standalone_sl2();
  LieJordanStructure s = maximal_structure(1);
  CHECK_THROWS_AS(unit_triple(sl2, s), Error);
  CHECK_THROWS_AS(invariant_form(sl2, s), Error);
  try {
    unit_triple(sl2, s);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotBuilt);
  }

  // A built algebra paired with the wrong structure is also rejected.
  LieAlgebra algebra = build_lie_algebra(s);
  CHECK_THROWS_AS(unit_triple(algebra, maximal_structure(2)), Error);
}

TEST_CASE("perturbing one structure constant breaks the Jacobi identity") {
  LieJordanStructure s = maximal_structure(1);
  LieAlgebra algebra = build_lie_algebra(s);

  // Deterministic example: bump [v1:+1:0, v1:-1:0] by +1 along g0:0.
  LieAlgebra broken = perturbed(algebra, 3, 5, 0, rat(1));
  JacobiReport full = verify_jacobi_full(broken);
  CHECK_FALSE(full.passed);
  REQUIRE(full.violation.has_value());
  JacobiReport touching = verify_jacobi_touching(broken, 3, 5);
  CHECK_FALSE(touching.passed);

  // Random single-constant perturbations: every one of 100 must be detected
  // by the restricted scan (complete for a single perturbed pair).
  Rng rng;
  std::size_t detected = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t i = static_cast<std::size_t>(rng.int_in(0, 9));
    std::size_t j = static_cast<std::size_t>(rng.int_in(0, 9));
    while (j == i) j = static_cast<std::size_t>(rng.int_in(0, 9));
    if (j < i) std::swap(i, j);
    std::size_t k = static_cast<std::size_t>(rng.int_in(0, 9));
    LieAlgebra mutant = perturbed(algebra, i, j, k, rat(1));
    if (!verify_jacobi_touching(mutant, i, j).passed) ++detected;
  }
  CHECK(detected >= 99);

  CHECK_THROWS_AS(perturbed(algebra, 5, 3, 0, rat(1)), Error);
  CHECK_THROWS_AS(perturbed(algebra, 3, 3, 0, rat(1)), Error);
}

TEST_CASE("sampled Jacobi verification agrees on clean algebras") {
  LieJordanStructure s = maximal_structure(2);
  LieAlgebra algebra = build_lie_algebra(s);
  JacobiReport sampled = verify_jacobi_sampled(algebra, 500, kDefaultSeed);
  CHECK(sampled.passed);
  CHECK(sampled.checked == 500);

  LieAlgebra line(1, {"x"}, BracketMap{});
  CHECK(verify_jacobi_sampled(line, 100, kDefaultSeed).passed);
}

TEST_CASE("builder rejects structures that fail validation") {
  LieJordanStructure s = maximal_structure(1);
  s.unit = Vec{rat(0)};  // breaks unit-is-identity
  CHECK_THROWS_AS(build_lie_algebra(s), Error);
  try {
    build_lie_algebra(s);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidStructure);
  }
}
