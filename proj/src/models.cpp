#include "jinv/models.hpp"

namespace jinv {

namespace {

void check_elem_index(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3) throw BadIndex("elementary index out of range");
  if (i == j) throw BadIndex("elementary needs i != j");
}

Mat3<CompQ> elem_matrix(AlgebraId a, const GroupToken& t) {
  Mat3<CompQ> g;
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < 3; ++l) g.at(k, l) = CompQ::zero(a);
    g.at(k, k) = CompQ::one(a);
  }
  g.at(t.i - 1, t.j - 1) = t.lambda.promoted(a);
  return g;
}

Mat3<GaussRat> elem_matrix_scalar(const GroupToken& t) {
  Mat3<GaussRat> g = mat3_identity<GaussRat>();
  if (!im(t.lambda).is_zero()) throw ModelMismatch("scalar model needs scalar lambda");
  g.at(t.i - 1, t.j - 1) = t.lambda.c[0];
  return g;
}

}  // namespace

GroupToken elementary(int i, int j, const CompQ& lambda) {
  check_elem_index(i, j);
  return {GroupToken::Kind::Elem, i, j, lambda};
}

GroupToken elementary_right(int i, int j, const CompQ& lambda) {
  check_elem_index(i, j);
  return {GroupToken::Kind::ElemRight, i, j, lambda};
}

GroupToken transpose_token() { return {GroupToken::Kind::Transpose, 0, 0, CompQ()}; }

Mat3<GaussRat> act_mat(const GroupWord& w, const Mat3<GaussRat>& x) {
  if (w.model != AlgebraId::C) throw ModelMismatch("matrix-model action is V1 only");
  Mat3<GaussRat> r = x;
  for (auto it = w.toks.rbegin(); it != w.toks.rend(); ++it) {
    switch (it->kind) {
      case GroupToken::Kind::Elem:  // left factor: X -> g X
        r = elem_matrix_scalar(*it) * r;
        break;
      case GroupToken::Kind::ElemRight: {  // X -> X g^{-1}
        GroupToken inv = it->inverse();
        r = r * elem_matrix_scalar(inv);
        break;
      }
      case GroupToken::Kind::Transpose:
        r = r.transposed();
        break;
    }
  }
  return r;
}

HermQ act(const GroupWord& w, const HermQ& x) {
  if (w.model != x.alg) throw ModelMismatch("group word model does not match element");
  switch (w.model) {
    case AlgebraId::R: {
      // g.X = g X g^t on symmetric matrices
      Mat3<CompQ> m = to_matrix(x);
      for (auto it = w.toks.rbegin(); it != w.toks.rend(); ++it) {
        if (it->kind != GroupToken::Kind::Elem)
          throw ModelMismatch("V0 words are left elementaries only");
        Mat3<CompQ> g = elem_matrix(AlgebraId::R, *it);
        m = g * m * g.transposed();
      }
      return from_matrix(AlgebraId::R, m);
    }
    case AlgebraId::C:
      return split_iso_inv(act_mat(w, split_iso(x)));
    case AlgebraId::H: {
      // g.X = g X conj(g)^t
      Mat3<CompQ> m = to_matrix(x);
      for (auto it = w.toks.rbegin(); it != w.toks.rend(); ++it) {
        if (it->kind != GroupToken::Kind::Elem)
          throw ModelMismatch("V2 words are left elementaries only");
        Mat3<CompQ> g = elem_matrix(AlgebraId::H, *it);
        m = g * m * conj_transposed(g);
      }
      return from_matrix(AlgebraId::H, m);
    }
    case AlgebraId::O:
      throw ModelMismatch("V3 has no finite rational group model; use the Lie level");
  }
  throw ModelMismatch("unreachable");
}

GroupWord random_word(Rng& rng, AlgebraId model, int len, long height, bool inner_only) {
  GroupWord w{model, {}};
  w.toks.reserve(len);
  for (int k = 0; k < len; ++k) {
    int i = static_cast<int>(rng.range(1, 3));
    int j = static_cast<int>(rng.range(1, 3));
    if (i == j) j = (j % 3) + 1;
    CompQ lambda;
    if (model == AlgebraId::H) {
      lambda = random_comp(rng, AlgebraId::H, height);
    } else {
      lambda = CompQ(model, random_scalar(rng, height));
    }
    if (model == AlgebraId::C) {
      int pick = static_cast<int>(rng.below(inner_only ? 2 : 3));
      if (pick == 2) {
        w.toks.push_back(transpose_token());
        continue;
      }
      w.toks.push_back(pick == 0 ? elementary(i, j, lambda)
                                 : elementary_right(i, j, lambda));
    } else {
      w.toks.push_back(elementary(i, j, lambda));
    }
  }
  return w;
}

Mat3<GaussRat> random_invertible_mat3(Rng& rng, long height) {
  for (int tries = 0; tries < 64; ++tries) {
    Mat3<GaussRat> g;
    for (int k = 0; k < 9; ++k) g.m[k] = random_scalar(rng, height);
    if (!mat3_det(g).is_zero()) return g;
  }
  throw Error("failed to draw an invertible matrix");
}

}  // namespace jinv
