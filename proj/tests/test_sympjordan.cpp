// Symplectic Lie-Jordan structures: canonical maps, projections, splitting,
// simplicity, the validator, and the full identity suite on maximal
// structures.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "identity_suite.hpp"
#include "shortsl2/sympjordan.hpp"

using namespace shortsl2;

namespace {

ExactMatrix mat(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<Vec> r;
  std::size_t cols = 0;
  for (const auto& row : rows) {
    Vec v;
    for (long long x : row) v.emplace_back(x);
    r.push_back(std::move(v));
    cols = r.back().size();
  }
  return ExactMatrix::from_rows(r, cols);
}

Vec rvec(std::initializer_list<long long> xs) {
  Vec v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

const ValidationItem* find_item(const ValidationReport& r, const std::string& name) {
  for (const auto& it : r.items)
    if (it.name == name) return &it;
  return nullptr;
}

// gl_2 as a Jordan algebra of symmetric operators on the standard 4-dim
// space: C acts as [[C, 0], [0, C^T]].
LieJordanStructure gl2_structure() {
  auto embed = [](const ExactMatrix& c) {
    ExactMatrix m(4, 4);
    for (std::size_t p = 0; p < 2; ++p)
      for (std::size_t q = 0; q < 2; ++q) {
        m.at(p, q) = c.at(p, q);
        m.at(2 + q, 2 + p) = c.at(p, q);
      }
    return m;
  };
  std::vector<ExactMatrix> j2;
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t q = 0; q < 2; ++q) {
      ExactMatrix e(2, 2);
      e.at(p, q) = 1;
      j2.push_back(embed(e));
    }
  LieJordanStructure s{SymplecticSpace::standard(2), std::move(j2), {}, {}, {}};
  s.unit = rvec({1, 0, 0, 1});
  return s;
}

}  // namespace

TEST_CASE("SymplecticSpace construction validates its invariants") {
  CHECK_THROWS_AS(SymplecticSpace(0, ExactMatrix(0, 0)), Error);
  CHECK_THROWS_AS(SymplecticSpace(3, ExactMatrix(3, 3)), Error);   // odd
  CHECK_THROWS_AS(SymplecticSpace(2, ExactMatrix(2, 2)), Error);   // degenerate
  CHECK_THROWS_AS(SymplecticSpace(2, ExactMatrix::identity(2)), Error);  // not antisym

  SymplecticSpace sp = SymplecticSpace::standard(2);
  CHECK(sp.dim == 4);
  CHECK(sp.pair(rvec({1, 0, 0, 0}), rvec({0, 0, 1, 0})) == 1);
  CHECK(sp.pair(rvec({0, 0, 1, 0}), rvec({1, 0, 0, 0})) == -1);
}

TEST_CASE("rank_one: pinned examples and adjoint rule") {
  SymplecticSpace sp = SymplecticSpace::standard(1);
  CHECK(rank_one(sp, rvec({0, 0}), rvec({1, 2})).is_zero());
  CHECK(rank_one(sp, rvec({1, 0}), rvec({0, 1})) == mat({{0, 0}, {0, -1}}));

  Rng rng;
  for (int t = 0; t < 100; ++t) {
    SymplecticSpace s4 = SymplecticSpace::standard(2);
    Vec a = rng.vec(4), b = rng.vec(4);
    if (vec_is_zero(a) || vec_is_zero(b)) continue;
    CHECK(rank(rank_one(s4, a, b)) == 1);
    // R(a,b)c = <c,a> b on a random probe.
    Vec c = rng.vec(4);
    CHECK(rank_one(s4, a, b).apply(c) == vec_scaled(b, s4.pair(c, a)));
    // Adjoint rule: <R(a,b)c, d> = -<c, R(b,a)d>.
    Vec d = rng.vec(4);
    CHECK(s4.pair(rank_one(s4, a, b).apply(c), d) ==
          -s4.pair(c, rank_one(s4, b, a).apply(d)));
  }
}

TEST_CASE("phi_m / delta_m: pinned examples, memberships, decomposition") {
  SymplecticSpace sp = SymplecticSpace::standard(1);
  Vec e1 = rvec({1, 0}), e2 = rvec({0, 1});
  CHECK(phi_m(sp, e1, e2) == ExactMatrix::identity(2).scaled(Rational(1, 2)));
  CHECK(delta_m(sp, e1, e2) == mat({{1, 0}, {0, -1}}).scaled(Rational(1, 2)));

  Rng rng;
  SymplecticSpace s4 = SymplecticSpace::standard(2);
  for (int t = 0; t < 100; ++t) {
    Vec a = rng.vec(4), b = rng.vec(4);
    CHECK(phi_m(s4, a, a).is_zero());
    CHECK(delta_m(s4, a, a) == rank_one(s4, a, a));
    CHECK(is_sym_operator(phi_m(s4, a, b), s4.omega));
    CHECK(is_sp_operator(delta_m(s4, a, b), s4.omega));
    CHECK(rank_one(s4, b, a) == phi_m(s4, a, b).add(delta_m(s4, a, b)));
  }
}

TEST_CASE("jordan_product: unit, commutativity, membership error") {
  SymplecticSpace s4 = SymplecticSpace::standard(2);
  LieJordanStructure maximal = maximal_structure(2);
  Rng rng;
  ExactMatrix id = ExactMatrix::identity(4);
  for (int t = 0; t < 100; ++t) {
    ExactMatrix a = testing::random_member(maximal.j2_basis, 4, rng);
    ExactMatrix b = testing::random_member(maximal.j2_basis, 4, rng);
    CHECK(jordan_product(s4, id, a) == a);
    CHECK(jordan_product(s4, a, b) == jordan_product(s4, b, a));
  }

  // The classic anticommuting pair: (AB + BA)/2 = 0 as a formula. These
  // operators are not Omega-symmetric, so jordan_product itself must reject
  // them with NotSymmetric.
  SymplecticSpace s2 = SymplecticSpace::standard(1);
  ExactMatrix a = mat({{1, 0}, {0, -1}}), b = mat({{0, 1}, {1, 0}});
  CHECK(jordan_sym(a, b).is_zero());
  CHECK_THROWS_AS(jordan_product(s2, a, b), Error);
  try {
    jordan_product(s2, a, b);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSymmetric);
  }
}

TEST_CASE("projections: fixed points, scalar case, maximal case") {
  // J2 = scalars only (maximal n=1): projection of any symmetric operator is
  // (tr M / dim) * identity.
  LieJordanStructure m1 = maximal_structure(1);
  StructureMaps maps1(m1);
  CHECK(m1.j2_basis.size() == 1);
  ExactMatrix m = ExactMatrix::identity(2).scaled(Rational(7, 3));
  Vec coords = maps1.project_pi2(m);
  CHECK(maps1.embed_j2(coords) == ExactMatrix::identity(2).scaled(m.trace() / 2));

  // Maximal structure: sym and sp elements are their own projections.
  LieJordanStructure m2 = maximal_structure(2);
  StructureMaps maps2(m2);
  Rng rng;
  for (int t = 0; t < 50; ++t) {
    ExactMatrix a = testing::random_member(m2.j2_basis, 4, rng);
    CHECK(maps2.embed_j2(maps2.project_pi2(a)) == a);
    // delta_m is symplectic, and for the maximal structure [J2,J2] = sp.
    Vec x = rng.vec(4), y = rng.vec(4);
    ExactMatrix d = delta_m(m2.space, x, y);
    ExactMatrix back(4, 4);
    Vec c = maps2.project_pic(d);
    for (std::size_t k = 0; k < c.size(); ++k)
      back = back.add(maps2.split().der[k].scaled(c[k]));
    CHECK(back == d);
  }
}

TEST_CASE("phi and delta: antisymmetry in phi, maximal equals canonical") {
  LieJordanStructure m2 = maximal_structure(2);
  StructureMaps maps(m2);
  Rng rng;
  for (int t = 0; t < 100; ++t) {
    Vec a = rng.vec(4);
    CHECK(maps.phi(a, a).is_zero());
  }
  auto suite2 = testing::run_maximal_suite(m2, rng);
  INFO(suite2.summary());
  CHECK(suite2.ok());
  LieJordanStructure m1 = maximal_structure(1);
  auto suite1 = testing::run_maximal_suite(m1, rng);
  INFO(suite1.summary());
  CHECK(suite1.ok());
}

TEST_CASE("split_g0: maximal cases and kernel property") {
  // n = 1: J2 is scalar, so [J2,J2] = 0 and i0 is all of sp_2.
  LieJordanStructure m1 = maximal_structure(1);
  G0Split s1 = split_g0(m1);
  CHECK(s1.der.empty());
  CHECK(s1.i0.size() == 3);

  // n = 2: [J2,J2] is all of sp_4 (dimension 10) and i0 = 0.
  LieJordanStructure m2 = maximal_structure(2);
  G0Split s2 = split_g0(m2);
  CHECK(s2.der.size() == 10);
  CHECK(s2.i0.empty());

  // Kernel property: i0 commutes with every J2 element.
  for (const auto& d : s1.i0)
    for (const auto& a : m1.j2_basis) CHECK(commutator(d, a).is_zero());
}

TEST_CASE("jordan_is_simple: scalars, gl_2, and a split pair of ideals") {
  Rng rng;
  CHECK(jordan_is_simple(maximal_structure(1), rng));
  CHECK(jordan_is_simple(maximal_structure(2), rng));
  CHECK(jordan_is_simple(gl2_structure(), rng));

  // Two complementary diagonal idempotents: a direct sum of two ideals.
  LieJordanStructure split_pair{SymplecticSpace::standard(2),
                                {mat({{1, 0, 0, 0},
                                      {0, 0, 0, 0},
                                      {0, 0, 1, 0},
                                      {0, 0, 0, 0}}),
                                 mat({{0, 0, 0, 0},
                                      {0, 1, 0, 0},
                                      {0, 0, 0, 0},
                                      {0, 0, 0, 1}})},
                                {},
                                rvec({1, 1}),
                                {}};
  CHECK_FALSE(jordan_is_simple(split_pair, rng));
}

TEST_CASE("validate: maximal structures all-pass including the pairing flag") {
  for (std::size_t n : {std::size_t(1), std::size_t(2)}) {
    ValidationReport r = validate(maximal_structure(n));
    CHECK(r.ok());
    for (const auto& it : r.items) {
      INFO("item ", it.name, " witness ", it.witness);
      CHECK(it.passed);
    }
    CHECK(find_item(r, "delta0-trace-pairing") != nullptr);
    CHECK_FALSE(find_item(r, "delta0-trace-pairing")->fatal);
  }
}

TEST_CASE("validate: perturbed delta0 is rejected") {
  LieJordanStructure s = maximal_structure(1);
  REQUIRE(!s.delta0.empty());
  // Scale one basis-pair value; F-symmetry or equivariance must break.
  for (auto& e : s.delta0)
    if (e.i == 0 && e.j == 1)
      for (auto& x : e.value) x *= 2;
  ValidationReport r = validate(s);
  CHECK_FALSE(r.ok());
  const auto* fsym = find_item(r, "F-symmetric");
  const auto* equi = find_item(r, "delta0-equivariant");
  bool broke = (fsym && !fsym->passed) || (equi && !equi->passed);
  CHECK(broke);
}

TEST_CASE("validate: missing unit is a unit-axiom failure") {
  LieJordanStructure s = maximal_structure(2);
  s.unit.assign(s.unit.size(), Rational(0));  // identity no longer represented
  ValidationReport r = validate(s);
  CHECK_FALSE(r.ok());
  const auto* unit = find_item(r, "unit-is-identity");
  REQUIRE(unit != nullptr);
  CHECK_FALSE(unit->passed);
  // Everything structural around it still passes.
  CHECK(find_item(r, "jordan-closed")->passed);
  CHECK(find_item(r, "F-symmetric")->passed);
}

TEST_CASE("validate: non-symplectic g0 operator is flagged") {
  LieJordanStructure s = maximal_structure(1);
  s.g0_basis[0] = ExactMatrix::identity(2);  // not in sp
  ValidationReport r = validate(s);
  CHECK_FALSE(r.ok());
  const auto* item = find_item(r, "g0-in-sp");
  REQUIRE(item != nullptr);
  CHECK_FALSE(item->passed);
  CHECK(item->witness == "g0[0]");
}

TEST_CASE("identity suite on maximal structures") {
  Rng rng;
  auto s1 = testing::run_identity_suite(maximal_structure(1), rng, 100);
  INFO(s1.summary());
  CHECK(s1.ok());
  auto s2 = testing::run_identity_suite(maximal_structure(2), rng, 100);
  INFO(s2.summary());
  CHECK(s2.ok());
}

TEST_CASE("gl_2 structure passes everything except having no g0") {
  // gl2_structure has an empty g0 basis: validate must reject der-in-g0
  // (commutators of J2 land outside the empty span) but accept the Jordan
  // axioms.
  LieJordanStructure s = gl2_structure();
  ValidationReport r = validate(s);
  const auto* closed = find_item(r, "jordan-closed");
  REQUIRE(closed != nullptr);
  CHECK(closed->passed);
  const auto* der = find_item(r, "der-in-g0");
  REQUIRE(der != nullptr);
  CHECK_FALSE(der->passed);
  const auto* unit = find_item(r, "unit-is-identity");
  REQUIRE(unit != nullptr);
  CHECK(unit->passed);
}
