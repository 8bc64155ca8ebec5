#include "shortsl2/sl2.hpp"

namespace shortsl2 {

Sl2Op::Sl2Op(ExactMatrix mm) : m(std::move(mm)) {
  if (m.rows() != 2 || m.cols() != 2 || m.trace() != 0)
    throw Error(ErrorKind::InvalidStructure, "sl2 operator must be 2x2 traceless");
}

Rational skew2(const Vec2& u, const Vec2& v) { return u[0] * v[1] - u[1] * v[0]; }

Rational trace_form(const Sl2Op& x, const Sl2Op& y) { return x.m.mul(y.m).trace(); }

Sl2Op s_map(const Vec2& u, const Vec2& v) {
  // Columns are the images of e1 and em1: <e1,u> = u[1], <em1,u> = -u[0].
  ExactMatrix m(2, 2);
  for (int r = 0; r < 2; ++r) {
    m.at(r, 0) = u[1] * v[r] + v[1] * u[r];
    m.at(r, 1) = -(u[0] * v[r] + v[0] * u[r]);
  }
  return Sl2Op(std::move(m));
}

ExactMatrix outer(const Vec2& u, const Vec2& v) {
  ExactMatrix m(2, 2);
  for (int r = 0; r < 2; ++r) {
    m.at(r, 0) = v[1] * u[r];
    m.at(r, 1) = -v[0] * u[r];
  }
  return m;
}

Vec2 apply_op(const ExactMatrix& x, const Vec2& u) {
  return {x.at(0, 0) * u[0] + x.at(0, 1) * u[1],
          x.at(1, 0) * u[0] + x.at(1, 1) * u[1]};
}

Sl2Op sl2_bracket(const Sl2Op& x, const Sl2Op& y) {
  return Sl2Op(commutator(x.m, y.m));
}

Sl2Op sl2_e() {
  ExactMatrix m(2, 2);
  m.at(0, 1) = 1;
  return Sl2Op(std::move(m));
}

Sl2Op sl2_f() {
  ExactMatrix m(2, 2);
  m.at(1, 0) = 1;
  return Sl2Op(std::move(m));
}

Sl2Op sl2_h() {
  ExactMatrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(1, 1) = -1;
  return Sl2Op(std::move(m));
}

Vec2 basis_e1() { return {Rational(1), Rational(0)}; }
Vec2 basis_em1() { return {Rational(0), Rational(1)}; }

Vec2 random_vec2(Rng& rng) { return {rng.rational(), rng.rational()}; }

Sl2Op random_sl2op(Rng& rng) {
  ExactMatrix m(2, 2);
  m.at(0, 0) = rng.rational();
  m.at(0, 1) = rng.rational();
  m.at(1, 0) = rng.rational();
  m.at(1, 1) = -m.at(0, 0);
  return Sl2Op(std::move(m));
}

}  // namespace shortsl2
