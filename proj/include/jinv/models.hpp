#pragma once

// Concrete matrix models and exact finite group actions:
//   V0 = Sym(3):      g.X = g X g^t,            g in SL3
//   V1 = Mat(3):      (g1,g2).X = g1 X g2^{-1}, plus the outer flag X -> X^t
//   V2 = H3(H_C):     g.X = g X conj(g)^t,      g built from elementaries
// Group elements are words in elementary matrices I + lambda E_ij, so
// inverses and determinants stay exact; V3 has no finite rational model here
// and is covered at the Lie-algebra level only.

#include <vector>

#include "jinv/jordan.hpp"
#include "jinv/rng.hpp"

namespace jinv {

struct GroupToken {
  enum class Kind { Elem, ElemRight, Transpose };
  Kind kind = Kind::Elem;
  int i = 0, j = 0;   // 1-based row/col of the elementary E_ij
  CompQ lambda;       // scalar (dim 1/2) or quaternion entry

  GroupToken inverse() const {
    GroupToken t = *this;
    if (kind != Kind::Transpose) t.lambda = -t.lambda;
    return t;
  }
};

// det(I + lambda E_ij) = 1 for i != j; the exact inverse is I - lambda E_ij.
GroupToken elementary(int i, int j, const CompQ& lambda);
GroupToken elementary_right(int i, int j, const CompQ& lambda);  // V1 second factor
GroupToken transpose_token();

struct GroupWord {
  AlgebraId model = AlgebraId::R;  // which V_i the word acts on
  std::vector<GroupToken> toks;

  GroupWord inverse() const {
    GroupWord w{model, {}};
    w.toks.reserve(toks.size());
    for (auto it = toks.rbegin(); it != toks.rend(); ++it) w.toks.push_back(it->inverse());
    return w;
  }
};

// Determinant-preserving action in the intrinsic H3 coordinates. For V1 the
// action is transported through split_iso.
HermQ act(const GroupWord& w, const HermQ& x);

// V1 matrix-model action on Mat(3).
Mat3<GaussRat> act_mat(const GroupWord& w, const Mat3<GaussRat>& x);

// Random words for invariance tests: `len` elementary tokens with small
// rational (or quaternion) parameters. inner_only skips the V1 outer flag.
GroupWord random_word(Rng& rng, AlgebraId model, int len, long height,
                      bool inner_only = true);

// ---- split model of V1 ------------------------------------------------------
//
// C_C is split by the idempotents (1 ± i f_1)/2, which identifies H3(C_C)
// with Mat(3): x = X eps_+ + X^t eps_-. The map is linear, bijective and
// takes det to the classical determinant.

template <class S>
S scalar_unit_i();  // sqrt(-1) in the coefficient field

template <>
inline GaussRat scalar_unit_i<GaussRat>() {
  return GaussRat::unit_i();
}

template <class S>
Mat3<S> split_iso(const Herm<S>& x) {
  if (x.alg != AlgebraId::C) throw WrongAlgebra("split_iso needs algebra C (V1)");
  const S ui = scalar_unit_i<S>();
  Mat3<S> m;
  for (int k = 0; k < 3; ++k) m.at(k, k) = x.d[k];
  // off[k] = u0 + u1 f1 placed at (lo,hi): X_{lo,hi} = u0 - i u1 opposite
  // X_{hi,lo} = u0 + i u1, with (lo,hi) = (2,1), (3,1), (2,3).
  const int lo[3] = {1, 2, 1}, hi[3] = {0, 0, 2};
  for (int k = 0; k < 3; ++k) {
    const S& u0 = x.off[k].c[0];
    const S& u1 = x.off[k].c[1];
    m.at(lo[k], hi[k]) = u0 - ui * u1;
    m.at(hi[k], lo[k]) = u0 + ui * u1;
  }
  return m;
}

template <class S>
Herm<S> split_iso_inv(const Mat3<S>& m) {
  const S ui = scalar_unit_i<S>();
  const S h = half_of<S>();
  Herm<S> x(AlgebraId::C);
  for (int k = 0; k < 3; ++k) x.d[k] = m.at(k, k);
  const int lo[3] = {1, 2, 1}, hi[3] = {0, 0, 2};
  for (int k = 0; k < 3; ++k) {
    const S& a = m.at(lo[k], hi[k]);
    const S& b = m.at(hi[k], lo[k]);
    x.off[k].alg = AlgebraId::C;
    x.off[k].c[0] = h * (a + b);
    x.off[k].c[1] = h * (ui * (a - b));
  }
  return x;
}

// ---- GL(3) mixing action on triples -----------------------------------------

// (x,y,z) -> (g11 x + g12 y + g13 z, g21 x + ..., g31 x + ...); the relative
// invariance law f̃11(g.t) = det(g)^2 f̃11(t) pins this row convention down.
template <class S>
std::vector<Herm<S>> gl3_mix(const Mat3<S>& g, const std::vector<Herm<S>>& t) {
  if (mat3_det(g) == S(0)) throw SingularMatrix("gl3_mix needs invertible g");
  std::vector<Herm<S>> out;
  out.reserve(3);
  for (int i = 0; i < 3; ++i) {
    Herm<S> s = g.at(i, 0) * t[0] + g.at(i, 1) * t[1] + g.at(i, 2) * t[2];
    out.push_back(std::move(s));
  }
  return out;
}

Mat3<GaussRat> random_invertible_mat3(Rng& rng, long height);

}  // namespace jinv
