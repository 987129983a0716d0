#pragma once

// The invariant polynomials as evaluators on tuples: the four generators of
// C[2V]^G, the eleven generators f1..f11 of C[3V]^G, the relative invariant
// f̃11, the cubic-form coefficient map chi, the V1-only polynomial P, and the
// 5-alternating trace form on the associative matrix models.

#include <array>
#include <vector>

#include "jinv/jordan.hpp"
#include "jinv/mat3.hpp"
#include "jinv/models.hpp"

namespace jinv {

// (f(x,x,x), f(y,y,y), f(x,x,y), f(y,y,x))
template <class S>
std::array<S, 4> gens_p2(const Herm<S>& x, const Herm<S>& y) {
  Herm<S> cx = cross(x, x), cy = cross(y, y);
  return {inner(cx, x), inner(cy, y), inner(cx, y), inner(cy, x)};
}

// f1  = f(x,x,x)  f2 = f(y,y,y)  f3 = f(z,z,z)
// f4  = f(x,x,y)  f5 = f(x,x,z)  f6 = f(y,y,x)
// f7  = f(y,y,z)  f8 = f(z,z,x)  f9 = f(z,z,y)
// f10 = f(x,y,z)  f11 = f(x×x, y×y, z×z)
template <class S>
std::array<S, 11> gens_p3(const Herm<S>& x, const Herm<S>& y, const Herm<S>& z) {
  Herm<S> cx = cross(x, x), cy = cross(y, y), cz = cross(z, z);
  return {inner(cx, x),          inner(cy, y), inner(cz, z), inner(cx, y),
          inner(cx, z),          inner(cy, x), inner(cy, z), inner(cz, x),
          inner(cz, y),          inner(cross(x, y), z),
          inner(cross(cx, cy), cz)};
}

// f̃11 = f11 - (2/3)(f4 f9 + f5 f7 + f6 f8) + (2/3) f10^2; a relative
// invariant of the GL(3) mixing action with character det(g)^2.
template <class S>
S f11_tilde_from(const std::array<S, 11>& v) {
  S two_thirds = S(2) / S(3);
  return v[10] - two_thirds * (v[3] * v[8] + v[4] * v[6] + v[5] * v[7]) +
         two_thirds * (v[9] * v[9]);
}

template <class S>
S f11_tilde(const Herm<S>& x, const Herm<S>& y, const Herm<S>& z) {
  return f11_tilde_from(gens_p3(x, y, z));
}

// Coefficients of det(a x + b y) (p = 2, lex a^3, a^2 b, a b^2, b^3) or of
// det(a x + b y + c z) (p = 3, lex a^3, a^2b, a^2c, ab^2, abc, ac^2, b^3,
// b^2c, bc^2, c^3). det(ax+by) = a^3 det x + b^3 det y + (a^2 b/2) f(x,x,y)
// + (a b^2/2) f(y,y,x) fixes the normalization.
template <class S>
struct CubicFormCoeffs {
  int p = 2;
  std::vector<S> c;
};

template <class S>
CubicFormCoeffs<S> chi2(const Herm<S>& x, const Herm<S>& y) {
  auto v = gens_p2(x, y);
  S h = half_of<S>();
  S sixth = S(1) / S(6);
  return {2, {sixth * v[0], h * v[2], h * v[3], sixth * v[1]}};
}

template <class S>
CubicFormCoeffs<S> chi3(const Herm<S>& x, const Herm<S>& y, const Herm<S>& z) {
  auto v = gens_p3(x, y, z);
  S h = half_of<S>();
  S sixth = S(1) / S(6);
  return {3,
          {sixth * v[0], h * v[3], h * v[4], h * v[5], v[9], h * v[7],
           sixth * v[1], h * v[6], h * v[8], sixth * v[2]}};
}

template <class S>
S eval_cubic_form(const CubicFormCoeffs<S>& f, const S& a, const S& b, const S& c) {
  if (f.p == 2) {
    return f.c[0] * a * a * a + f.c[1] * a * a * b + f.c[2] * a * b * b +
           f.c[3] * b * b * b;
  }
  return f.c[0] * a * a * a + f.c[1] * a * a * b + f.c[2] * a * a * c +
         f.c[3] * a * b * b + f.c[4] * a * b * c + f.c[5] * a * c * c +
         f.c[6] * b * b * b + f.c[7] * b * b * c + f.c[8] * b * c * c +
         f.c[9] * c * c * c;
}

// Substitution action on a ternary cubic: coefficients of F((a,b,c) · g),
// used as the classical-side oracle for chi(gl3_mix(g, t)).
template <class S>
CubicFormCoeffs<S> cubic_substitute(const CubicFormCoeffs<S>& f, const Mat3<S>& g);

// P(x,y,z) = tr(n(x) z n(y) x n(z) y) on the Mat(3) model, n = adjugate.
// G_o-invariant but not G-invariant.
template <class S>
S p_invariant(const Mat3<S>& x, const Mat3<S>& y, const Mat3<S>& z) {
  Mat3<S> m = mat3_adjugate(x) * z * mat3_adjugate(y) * x * mat3_adjugate(z) * y;
  return mat3_trace(m);
}

// sum over S5 of sign(sigma) tr(x_{s1} ... x_{s5}), computed by recursive
// first-factor expansion of the standard polynomial (the brute-force
// 120-term sum lives in the tests as the independent oracle).
template <class M>
M standard_poly(const std::vector<M>& xs, std::vector<int> idx) {
  if (idx.size() == 1) return xs[idx[0]];
  std::vector<int> rest(idx.size() - 1);
  M acc;
  bool first = true;
  for (size_t t = 0; t < idx.size(); ++t) {
    for (size_t k = 0, m = 0; k < idx.size(); ++k)
      if (k != t) rest[m++] = idx[k];
    M term = xs[idx[t]] * standard_poly(xs, rest);
    if (t % 2 == 1) term = -term;
    acc = first ? term : acc + term;
    first = false;
  }
  return acc;
}

// V1: five arbitrary 3x3 matrices, ordinary trace.
GaussRat alt5_v1(const std::vector<Mat3<GaussRat>>& xs);
// V2 (and the measured V0 restriction): five Hermitian elements, reduced trace.
GaussRat alt5_herm(const std::vector<HermQ>& xs);

}  // namespace jinv
