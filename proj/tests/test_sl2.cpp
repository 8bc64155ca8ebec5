// Fixed sl2 ingredients: pinned basis examples and the full identity suite
// for the forms and the map S, randomized with a fixed seed plus exhaustive
// checks on the standard basis.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "shortsl2/sl2.hpp"

using namespace shortsl2;

namespace {

Vec2 v2(long long a, long long b) { return {Rational(a), Rational(b)}; }

// Standard-basis vectors and operators for the exhaustive passes.
std::vector<Vec2> basis_vectors() { return {basis_e1(), basis_em1()}; }
std::vector<Sl2Op> basis_ops() { return {sl2_e(), sl2_h(), sl2_f()}; }

Vec2 vec2_lincomb(const Rational& a, const Vec2& u, const Rational& b, const Vec2& v) {
  return {a * u[0] + b * v[0], a * u[1] + b * v[1]};
}

bool vec2_eq(const Vec2& a, const Vec2& b) { return a[0] == b[0] && a[1] == b[1]; }

// One full pass of the identity suite on a given (u, v, w, X, Y) tuple.
void check_identities(const Vec2& u, const Vec2& v, const Vec2& w, const Sl2Op& x,
                      const Sl2Op& y) {
  // (a) <Xu, v> = -<u, Xv>
  CHECK(skew2(apply_op(x.m, u), v) == -skew2(u, apply_op(x.m, v)));
  // (c) (X, S(u,v)) = 2<Xu, v>
  CHECK(trace_form(x, s_map(u, v)) == 2 * skew2(apply_op(x.m, u), v));
  // (d) <u,v>w + <v,w>u + <w,u>v = 0
  Vec2 d = vec2_lincomb(skew2(u, v), w, skew2(v, w), u);
  d = vec2_lincomb(Rational(1), d, skew2(w, u), v);
  CHECK(vec2_eq(d, v2(0, 0)));
  // (e) u(x)v* - v(x)u* = <u,v> id
  CHECK(outer(u, v).sub(outer(v, u)) ==
        ExactMatrix::identity(2).scaled(skew2(u, v)));
  // (f) [X, S(u,v)] = 2(S(u, Xv) + <u,v>X)
  CHECK(commutator(x.m, s_map(u, v).m) ==
        s_map(u, apply_op(x.m, v)).m.add(x.m.scaled(skew2(u, v))).scaled(Rational(2)));
  // (g) S(Xu, v) - S(u, Xv) = 2<u,v>X
  CHECK(s_map(apply_op(x.m, u), v).m.sub(s_map(u, apply_op(x.m, v)).m) ==
        x.m.scaled(2 * skew2(u, v)));
  // (XY + YX)w = (X,Y)w
  Vec2 lhs = apply_op(x.m.mul(y.m).add(y.m.mul(x.m)), w);
  Vec2 rhs = {trace_form(x, y) * w[0], trace_form(x, y) * w[1]};
  CHECK(vec2_eq(lhs, rhs));
  // S is symmetric and traceless by construction.
  CHECK(s_map(u, v) == s_map(v, u));
  CHECK(s_map(u, v).m.trace() == 0);
}

}  // namespace

TEST_CASE("pinned examples: skew2") {
  CHECK(skew2(v2(1, 0), v2(0, 1)) == 1);
  Vec2 u = v2(5, -3);
  CHECK(skew2(u, u) == 0);
  CHECK(skew2(v2(2, 3), v2(1, 1)) == -1);
}

TEST_CASE("pinned examples: trace form on the standard basis") {
  CHECK(trace_form(sl2_h(), sl2_h()) == 2);
  CHECK(trace_form(sl2_e(), sl2_f()) == 1);
  CHECK(trace_form(sl2_e(), sl2_e()) == 0);
  CHECK(trace_form(sl2_f(), sl2_f()) == 0);
  CHECK(trace_form(sl2_e(), sl2_h()) == 0);
  CHECK(trace_form(sl2_f(), sl2_h()) == 0);
}

TEST_CASE("pinned examples: bracket relations and s_map on the basis") {
  CHECK(sl2_bracket(sl2_e(), sl2_f()) == sl2_h());
  CHECK(sl2_bracket(sl2_h(), sl2_e()) == Sl2Op(sl2_e().m.scaled(Rational(2))));
  CHECK(sl2_bracket(sl2_h(), sl2_f()) == Sl2Op(sl2_f().m.scaled(Rational(-2))));

  CHECK(s_map(basis_e1(), basis_em1()) == sl2_h());
  CHECK(s_map(basis_e1(), basis_e1()) == Sl2Op(sl2_e().m.scaled(Rational(-2))));
  CHECK(s_map(basis_em1(), basis_em1()) == Sl2Op(sl2_f().m.scaled(Rational(2))));
}

TEST_CASE("h acts on e1, em1 with weights +1, -1") {
  CHECK(vec2_eq(apply_op(sl2_h().m, basis_e1()), basis_e1()));
  CHECK(vec2_eq(apply_op(sl2_h().m, basis_em1()), v2(0, -1)));
  CHECK(vec2_eq(apply_op(sl2_e().m, basis_em1()), basis_e1()));
  CHECK(vec2_eq(apply_op(sl2_f().m, basis_e1()), basis_em1()));
}

TEST_CASE("Sl2Op validates tracelessness") {
  ExactMatrix bad = ExactMatrix::identity(2);
  CHECK_THROWS_AS(Sl2Op(std::move(bad)), Error);
}

TEST_CASE("identity suite: exhaustive over the standard basis") {
  for (const auto& u : basis_vectors())
    for (const auto& v : basis_vectors())
      for (const auto& w : basis_vectors())
        for (const auto& x : basis_ops())
          for (const auto& y : basis_ops()) check_identities(u, v, w, x, y);
}

TEST_CASE("identity suite: 120 random samples, fixed seed") {
  Rng rng;
  for (int t = 0; t < 120; ++t) {
    check_identities(random_vec2(rng), random_vec2(rng), random_vec2(rng),
                     random_sl2op(rng), random_sl2op(rng));
  }
}

TEST_CASE("outer matches its defining action and trace") {
  Rng rng;
  for (int t = 0; t < 100; ++t) {
    Vec2 u = random_vec2(rng), v = random_vec2(rng), w = random_vec2(rng);
    Vec2 got = apply_op(outer(u, v), w);
    Vec2 want = {skew2(w, v) * u[0], skew2(w, v) * u[1]};
    CHECK(vec2_eq(got, want));
    CHECK(outer(u, v).trace() == skew2(u, v));
    // S(u,v) = u(x)v* + v(x)u* as operators.
    CHECK(outer(u, v).add(outer(v, u)) == s_map(u, v).m);
  }
}
