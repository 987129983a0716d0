#pragma once

// 3x3 matrices over an arbitrary ring element type (scalars or composition
// algebra elements). The entry type only needs +, -, *.

#include <array>

#include "jinv/comp.hpp"

namespace jinv {

template <class T>
struct Mat3 {
  std::array<T, 9> m{};

  T& at(int i, int j) { return m[3 * i + j]; }
  const T& at(int i, int j) const { return m[3 * i + j]; }

  static Mat3 from(const T& proto_zero, const T& proto_one) {
    Mat3 e;
    for (auto& x : e.m) x = proto_zero;
    e.at(0, 0) = e.at(1, 1) = e.at(2, 2) = proto_one;
    return e;
  }

  Mat3 operator-() const {
    Mat3 r;
    for (int k = 0; k < 9; ++k) r.m[k] = -m[k];
    return r;
  }
  friend Mat3 operator+(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int k = 0; k < 9; ++k) r.m[k] = a.m[k] + b.m[k];
    return r;
  }
  friend Mat3 operator-(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int k = 0; k < 9; ++k) r.m[k] = a.m[k] - b.m[k];
    return r;
  }
  friend Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        T s = a.at(i, 0) * b.at(0, j);
        s += a.at(i, 1) * b.at(1, j);
        s += a.at(i, 2) * b.at(2, j);
        r.at(i, j) = std::move(s);
      }
    return r;
  }
  friend bool operator==(const Mat3& a, const Mat3& b) { return a.m == b.m; }

  Mat3 transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.at(i, j) = at(j, i);
    return r;
  }

  friend Mat3 operator*(const T& s, const Mat3& a) {
    Mat3 r;
    for (int k = 0; k < 9; ++k) r.m[k] = s * a.m[k];
    return r;
  }
};

template <class S>
Mat3<S> mat3_identity() {
  return Mat3<S>::from(S(0), S(1));
}

template <class S>
S mat3_trace(const Mat3<S>& a) {
  return a.at(0, 0) + a.at(1, 1) + a.at(2, 2);
}

template <class S>
S mat3_det(const Mat3<S>& a) {
  return a.at(0, 0) * (a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1)) -
         a.at(0, 1) * (a.at(1, 0) * a.at(2, 2) - a.at(1, 2) * a.at(2, 0)) +
         a.at(0, 2) * (a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0));
}

// Classical adjugate: a * adj(a) = det(a) * I.
template <class S>
Mat3<S> mat3_adjugate(const Mat3<S>& a) {
  Mat3<S> r;
  r.at(0, 0) = a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1);
  r.at(0, 1) = a.at(0, 2) * a.at(2, 1) - a.at(0, 1) * a.at(2, 2);
  r.at(0, 2) = a.at(0, 1) * a.at(1, 2) - a.at(0, 2) * a.at(1, 1);
  r.at(1, 0) = a.at(1, 2) * a.at(2, 0) - a.at(1, 0) * a.at(2, 2);
  r.at(1, 1) = a.at(0, 0) * a.at(2, 2) - a.at(0, 2) * a.at(2, 0);
  r.at(1, 2) = a.at(0, 2) * a.at(1, 0) - a.at(0, 0) * a.at(1, 2);
  r.at(2, 0) = a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0);
  r.at(2, 1) = a.at(0, 1) * a.at(2, 0) - a.at(0, 0) * a.at(2, 1);
  r.at(2, 2) = a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0);
  return r;
}

// Conjugate transpose for matrices over a composition algebra.
template <class S>
Mat3<Comp<S>> conj_transposed(const Mat3<Comp<S>>& a) {
  Mat3<Comp<S>> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.at(i, j) = conj(a.at(j, i));
  return r;
}

// Reduced trace: sum of scalar parts of the diagonal.
template <class S>
S reduced_trace(const Mat3<Comp<S>>& a) {
  return re(a.at(0, 0)) + re(a.at(1, 1)) + re(a.at(2, 2));
}

}  // namespace jinv
