// The fixed 2- and 3-dimensional sl2 ingredients: the invariant skew form on
// column vectors, the trace form on traceless operators, and the symmetric
// equivariant map S from pairs of vectors to operators. Sign conventions are
// pinned once here: e = [[0,1],[0,0]], f = [[0,0],[1,0]], h = diag(1,-1),
// e1 = (1,0), em1 = (0,1), so that [e,f] = h and S(e1,em1) = h.
#ifndef SHORTSL2_SL2_HPP
#define SHORTSL2_SL2_HPP

#include <array>

#include "shortsl2/linalg.hpp"
#include "shortsl2/rng.hpp"

namespace shortsl2 {

using Vec2 = std::array<Rational, 2>;

// A traceless 2x2 operator; construction validates the trace invariant.
struct Sl2Op {
  ExactMatrix m;
  Sl2Op() : m(2, 2) {}
  explicit Sl2Op(ExactMatrix mm);
  bool operator==(const Sl2Op& o) const { return m == o.m; }
};

// <u, v> = det of the 2x2 matrix with columns u, v.
Rational skew2(const Vec2& u, const Vec2& v);

// (X, Y) = tr(XY).
Rational trace_form(const Sl2Op& x, const Sl2Op& y);

// S(u,v) is the traceless operator with S(u,v)w = <w,u>v + <w,v>u.
Sl2Op s_map(const Vec2& u, const Vec2& v);

// u (x) v*: the rank-<=1 operator w -> <w,v>u (not traceless in general).
ExactMatrix outer(const Vec2& u, const Vec2& v);

Vec2 apply_op(const ExactMatrix& x, const Vec2& u);
Sl2Op sl2_bracket(const Sl2Op& x, const Sl2Op& y);

// Fixed basis elements.
Sl2Op sl2_e();
Sl2Op sl2_f();
Sl2Op sl2_h();
Vec2 basis_e1();
Vec2 basis_em1();

// Random sampling for property tests.
Vec2 random_vec2(Rng& rng);
Sl2Op random_sl2op(Rng& rng);

}  // namespace shortsl2

#endif  // SHORTSL2_SL2_HPP
