#pragma once

// The rank-3 Jordan algebras V = H3(F_C): 3x3 Hermitian matrices over a
// complexified composition algebra, with the Jordan product
// x∙y = (xy + yx)/2.  An element is stored as
//
//       [ d0   p̄    q̄  ]
//   x = [ p    d1   r  ]          p, q, r in F_C
//       [ q    r̄    d2 ]
//
// which fixes the coordinate layout (d0,d1,d2, p, q, r), n = 3 + 3*dim F.
// Everything is generic over the scalar type: exact Gaussian rationals for
// identities, dual numbers for directional derivatives, complex doubles for
// the numeric realization solvers.

#include <array>
#include <vector>

#include "jinv/comp.hpp"
#include "jinv/mat3.hpp"
#include "jinv/rng.hpp"

namespace jinv {

template <class S>
S half_of() {
  return S(1) / S(2);
}

template <class S>
struct Herm {
  AlgebraId alg = AlgebraId::R;
  std::array<S, 3> d{};
  std::array<Comp<S>, 3> off{};  // p, q, r

  Herm() = default;
  explicit Herm(AlgebraId a) : alg(a) {
    off = {Comp<S>(a), Comp<S>(a), Comp<S>(a)};
  }

  static Herm zero(AlgebraId a) { return Herm(a); }

  static Herm identity(AlgebraId a) {
    Herm x(a);
    x.d = {S(1), S(1), S(1)};
    return x;
  }

  static Herm diag(AlgebraId a, S x1, S x2, S x3) {
    Herm x(a);
    x.d = {std::move(x1), std::move(x2), std::move(x3)};
    return x;
  }

  // e_k, k in {0,1,2}: the complete system of orthogonal primitive idempotents.
  static Herm idem(AlgebraId a, int k) {
    Herm x(a);
    x.d[k] = S(1);
    return x;
  }

  // Peirce element (u)_{ij}: ij = 0 -> (u)_12 (slot p), 1 -> (u)_13 (q),
  // 2 -> (u)_23 (r).
  static Herm peirce_elem(AlgebraId a, int slot, const Comp<S>& u) {
    Herm x(a);
    x.off[slot] = u.promoted(a);
    return x;
  }

  int dim_f() const { return comp_dim(alg); }
  int coord_dim() const { return 3 + 3 * dim_f(); }

  bool is_zero() const {
    return d[0] == S(0) && d[1] == S(0) && d[2] == S(0) && off[0].is_zero() &&
           off[1].is_zero() && off[2].is_zero();
  }

  Herm promoted(AlgebraId a) const {
    Herm x = *this;
    x.alg = promote(alg, a);
    for (auto& u : x.off) u = u.promoted(a);
    return x;
  }

  Herm operator-() const {
    Herm x(alg);
    for (int i = 0; i < 3; ++i) {
      x.d[i] = -d[i];
      x.off[i] = -off[i];
    }
    return x;
  }
  friend Herm operator+(const Herm& a, const Herm& b) {
    Herm x(promote(a.alg, b.alg));
    for (int i = 0; i < 3; ++i) {
      x.d[i] = a.d[i] + b.d[i];
      x.off[i] = a.off[i] + b.off[i];
    }
    return x;
  }
  friend Herm operator-(const Herm& a, const Herm& b) { return a + (-b); }
  friend Herm operator*(const S& s, const Herm& a) {
    Herm x(a.alg);
    for (int i = 0; i < 3; ++i) {
      x.d[i] = s * a.d[i];
      x.off[i] = s * a.off[i];
    }
    return x;
  }
  friend bool operator==(const Herm& a, const Herm& b) {
    return a.d[0] == b.d[0] && a.d[1] == b.d[1] && a.d[2] == b.d[2] &&
           a.off[0] == b.off[0] && a.off[1] == b.off[1] && a.off[2] == b.off[2];
  }
};

template <class S>
Mat3<Comp<S>> to_matrix(const Herm<S>& x) {
  Mat3<Comp<S>> m;
  const Comp<S>&p = x.off[0], &q = x.off[1], &r = x.off[2];
  for (int i = 0; i < 3; ++i) m.at(i, i) = Comp<S>(x.alg, x.d[i]);
  m.at(1, 0) = p;
  m.at(0, 1) = conj(p);
  m.at(2, 0) = q;
  m.at(0, 2) = conj(q);
  m.at(1, 2) = r;
  m.at(2, 1) = conj(r);
  return m;
}

template <class S>
Herm<S> from_matrix(AlgebraId a, const Mat3<Comp<S>>& m) {
  Herm<S> x(a);
  for (int i = 0; i < 3; ++i) x.d[i] = re(m.at(i, i));
  x.off[0] = m.at(1, 0);
  x.off[1] = m.at(2, 0);
  x.off[2] = m.at(1, 2);
  return x;
}

template <class S>
bool is_hermitian(const Mat3<Comp<S>>& m) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!(m.at(i, j) == conj(m.at(j, i)))) return false;
  return true;
}

// x∙y = (xy + yx)/2.  The symmetrized product of Hermitian matrices is again
// Hermitian entrywise even over the octonions, because the conjugation
// reverses products of two factors.
template <class S>
Herm<S> jmul(const Herm<S>& x, const Herm<S>& y) {
  AlgebraId a = promote(x.alg, y.alg);
  auto mx = to_matrix(x.promoted(a));
  auto my = to_matrix(y.promoted(a));
  Mat3<Comp<S>> s = mx * my + my * mx;
  S h = half_of<S>();
  for (auto& e : s.m) e = h * e;
  return from_matrix(a, s);
}

template <class S>
S trace(const Herm<S>& x) {
  return x.d[0] + x.d[1] + x.d[2];
}

// <x,y> = tr(x∙y); symmetric, bilinear, associative.
template <class S>
S inner(const Herm<S>& x, const Herm<S>& y) {
  S s = x.d[0] * y.d[0] + x.d[1] * y.d[1] + x.d[2] * y.d[2];
  for (int k = 0; k < 3; ++k) {
    const Comp<S>&u = x.off[k], &v = y.off[k];
    int dmin = u.dim() < v.dim() ? u.dim() : v.dim();
    S t(0);
    for (int i = 0; i < dmin; ++i) t += u.c[i] * v.c[i];
    s += t + t;
  }
  return s;
}

// det x = d0 d1 d2 - (d0 r r̄ + d1 q q̄ + d2 p p̄) + 2 Re((p q̄) r̄)
template <class S>
S det(const Herm<S>& x) {
  const Comp<S>&p = x.off[0], &q = x.off[1], &r = x.off[2];
  S s = x.d[0] * x.d[1] * x.d[2];
  s -= x.d[0] * cnorm(r) + x.d[1] * cnorm(q) + x.d[2] * cnorm(p);
  S t = re(cmul(cmul(p, conj(q)), conj(r)));
  s += t + t;
  return s;
}

// The adjoint n(x), via Cayley–Hamilton:
//   n(x) = x∙x - tr(x) x + sigma(x) e,  sigma = (tr(x)^2 - tr(x∙x))/2,
// so that x∙n(x) = det(x) e and x^{-1} = n(x)/det(x).
template <class S>
Herm<S> sharp(const Herm<S>& x) {
  Herm<S> xx = jmul(x, x);
  S t = trace(x);
  S sigma = half_of<S>() * (t * t - trace(xx));
  Herm<S> out = xx - t * x;
  for (int i = 0; i < 3; ++i) out.d[i] += sigma;
  return out;
}

// x×y = n(x+y) - n(x) - n(y), computed bilinearly; cross(x,x) = 2 n(x).
template <class S>
Herm<S> cross(const Herm<S>& x, const Herm<S>& y) {
  S tx = trace(x), ty = trace(y);
  Herm<S> out = jmul(x, y);
  out = out + out - tx * y - ty * x;
  S sigma = tx * ty - inner(x, y);
  for (int i = 0; i < 3; ++i) out.d[i] += sigma;
  return out;
}

// f(x,y,z) = <x×y, z>: the full polarization of det, f(x,x,x) = 6 det x.
template <class S>
S trilinear_f(const Herm<S>& x, const Herm<S>& y, const Herm<S>& z) {
  return inner(cross(x, y), z);
}

template <class S>
Herm<S> inverse(const Herm<S>& x) {
  S dt = det(x);
  if (dt == S(0)) throw SingularElement("det = 0, element not invertible");
  return (S(1) / dt) * sharp(x);
}

// Peirce decomposition relative to e1, e2, e3: for this matrix model the
// V_ij components are exactly the p/q/r slots.
template <class S>
struct PeirceParts {
  AlgebraId alg;
  std::array<S, 3> diag;
  Comp<S> v12, v13, v23;
};

template <class S>
PeirceParts<S> peirce(const Herm<S>& x) {
  return {x.alg, x.d, x.off[0], x.off[1], x.off[2]};
}

template <class S>
Herm<S> assemble(const PeirceParts<S>& parts) {
  Herm<S> x(parts.alg);
  x.d = parts.diag;
  x.off = {parts.v12.promoted(parts.alg), parts.v13.promoted(parts.alg),
           parts.v23.promoted(parts.alg)};
  return x;
}

// ---- coordinates ----------------------------------------------------------

inline int coord_dim(AlgebraId a) { return 3 + 3 * comp_dim(a); }

template <class S>
std::vector<S> to_coords(const Herm<S>& x) {
  std::vector<S> v;
  v.reserve(x.coord_dim());
  for (int i = 0; i < 3; ++i) v.push_back(x.d[i]);
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < x.dim_f(); ++i) v.push_back(x.off[k].c[i]);
  return v;
}

template <class S>
Herm<S> from_coords(AlgebraId a, const std::vector<S>& v) {
  Herm<S> x(a);
  int m = comp_dim(a);
  for (int i = 0; i < 3; ++i) x.d[i] = v[i];
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < m; ++i) x.off[k].c[i] = v[3 + k * m + i];
  return x;
}

// k-th coordinate basis element b_k of V.
template <class S>
Herm<S> coord_basis(AlgebraId a, int k) {
  std::vector<S> v(coord_dim(a), S(0));
  v[k] = S(1);
  return from_coords(a, v);
}

std::string coord_name(AlgebraId a, int k);  // "d1".."d3", "p0".., "q0".., "r0"..

// ---- randomness ------------------------------------------------------------

inline Comp<GaussRat> random_comp(Rng& rng, AlgebraId a, long height) {
  Comp<GaussRat> u(a);
  for (int i = 0; i < u.dim(); ++i) u.c[i] = random_scalar(rng, height);
  return u;
}

inline Herm<GaussRat> random_herm(Rng& rng, AlgebraId a, long height) {
  Herm<GaussRat> x(a);
  for (int i = 0; i < 3; ++i) x.d[i] = random_scalar(rng, height);
  for (int k = 0; k < 3; ++k) x.off[k] = random_comp(rng, a, height);
  return x;
}

using HermQ = Herm<GaussRat>;
using CompQ = Comp<GaussRat>;

}  // namespace jinv
