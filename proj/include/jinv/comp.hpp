#pragma once

// Complexified composition algebras F_C for F in {R, C, H, O}, as algebras
// over the Gaussian rationals: coefficient vectors on the basis
// f_0 = 1, f_1, ..., f_7 with the Cayley multiplication table. The smaller
// algebras sit inside the octonions as upper-left restrictions, so the
// inclusion chain R ⊂ C ⊂ H ⊂ O is a zero-padding embed.
//
// Note the complexification: coefficients are themselves complex (Gaussian
// rational) numbers, conjugation negates the f_1..f_7 coefficients and does
// NOT touch the coefficient field, and the norm form is not definite.

#include <array>
#include <cstdint>
#include <string>

#include "jinv/errors.hpp"
#include "jinv/rational.hpp"

namespace jinv {

enum class AlgebraId : std::uint8_t { R = 0, C = 1, H = 2, O = 3 };

inline int comp_dim(AlgebraId a) { return 1 << static_cast<int>(a); }

inline AlgebraId promote(AlgebraId a, AlgebraId b) { return a < b ? b : a; }

inline const char* algebra_name(AlgebraId a) {
  switch (a) {
    case AlgebraId::R: return "R";
    case AlgebraId::C: return "C";
    case AlgebraId::H: return "H";
    case AlgebraId::O: return "O";
  }
  return "?";
}

// V0..V3 are the Jordan algebras over the four coefficient algebras; the CLI
// talks in terms of V-names.
inline const char* model_name(AlgebraId a) {
  switch (a) {
    case AlgebraId::R: return "V0";
    case AlgebraId::C: return "V1";
    case AlgebraId::H: return "V2";
    case AlgebraId::O: return "V3";
  }
  return "?";
}

AlgebraId algebra_from_string(const std::string& s);  // accepts "R".."O" and "V0".."V3"

// Frozen basis products: f_i * f_j = cayley_sign(i,j) * f_{cayley_index(i,j)}.
// Generated once from the doubling relations f_3 = f_1 f_2, f_5 = f_1 f_4,
// f_6 = f_2 f_4, f_7 = f_3 f_4 plus f_i^2 = -1 and anticommutativity.
int cayley_sign(int i, int j);
int cayley_index(int i, int j);

template <class S>
struct Comp {
  AlgebraId alg = AlgebraId::R;
  std::array<S, 8> c{};

  Comp() = default;
  explicit Comp(AlgebraId a) : alg(a) {}
  Comp(AlgebraId a, S scalar) : alg(a) { c[0] = std::move(scalar); }

  static Comp zero(AlgebraId a) { return Comp(a); }
  static Comp one(AlgebraId a) { return Comp(a, S(1)); }
  static Comp basis(AlgebraId a, int k) {
    Comp u(a);
    if (k < 0 || k >= comp_dim(a)) throw BadIndex("basis index out of range");
    u.c[k] = S(1);
    return u;
  }

  int dim() const { return comp_dim(alg); }

  bool is_zero() const {
    for (int i = 0; i < dim(); ++i)
      if (!(c[i] == S(0))) return false;
    return true;
  }

  Comp promoted(AlgebraId a) const {  // zero-padding embed
    Comp u = *this;
    u.alg = promote(alg, a);
    return u;
  }

  Comp operator-() const {
    Comp u(alg);
    for (int i = 0; i < dim(); ++i) u.c[i] = -c[i];
    return u;
  }

  friend Comp operator+(const Comp& a, const Comp& b) {
    Comp u(promote(a.alg, b.alg));
    for (int i = 0; i < u.dim(); ++i) u.c[i] = a.c[i] + b.c[i];
    return u;
  }
  friend Comp operator-(const Comp& a, const Comp& b) {
    Comp u(promote(a.alg, b.alg));
    for (int i = 0; i < u.dim(); ++i) u.c[i] = a.c[i] - b.c[i];
    return u;
  }
  friend Comp operator*(const S& s, const Comp& a) {
    Comp u(a.alg);
    for (int i = 0; i < a.dim(); ++i) u.c[i] = s * a.c[i];
    return u;
  }
  Comp& operator+=(const Comp& o) {
    *this = *this + o;
    return *this;
  }
  friend bool operator==(const Comp& a, const Comp& b) {
    for (int i = 0; i < 8; ++i)
      if (!(a.c[i] == b.c[i])) return false;
    return true;
  }
};

// Bilinear Cayley product; auto-promotes along the inclusion chain.
template <class S>
Comp<S> cmul(const Comp<S>& u, const Comp<S>& v) {
  Comp<S> out(promote(u.alg, v.alg));
  int du = u.dim(), dv = v.dim();
  for (int i = 0; i < du; ++i) {
    if (u.c[i] == S(0)) continue;
    for (int j = 0; j < dv; ++j) {
      if (v.c[j] == S(0)) continue;
      S term = u.c[i] * v.c[j];
      if (cayley_sign(i, j) < 0) term = -term;
      out.c[cayley_index(i, j)] += term;
    }
  }
  return out;
}

template <class S>
Comp<S> operator*(const Comp<S>& u, const Comp<S>& v) {
  return cmul(u, v);
}

template <class S>
Comp<S> conj(const Comp<S>& u) {
  Comp<S> v = u;
  for (int i = 1; i < u.dim(); ++i) v.c[i] = -v.c[i];
  return v;
}

template <class S>
S re(const Comp<S>& u) {
  return u.c[0];
}

template <class S>
Comp<S> im(const Comp<S>& u) {  // u - re(u)*1
  Comp<S> v = u;
  v.c[0] = S(0);
  return v;
}

// u * conj(u) collapsed to its scalar component: sum of squared coefficients.
// Not definite (coefficients are complex); satisfies cnorm(uv) = cnorm(u)cnorm(v).
template <class S>
S cnorm(const Comp<S>& u) {
  S n(0);
  for (int i = 0; i < u.dim(); ++i) n += u.c[i] * u.c[i];
  return n;
}

}  // namespace jinv
