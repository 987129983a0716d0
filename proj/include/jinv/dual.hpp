#pragma once

// First-order dual numbers over the Gaussian rationals: value + eps*derivative
// with eps^2 = 0. Lifting a polynomial map through Dual and reading the eps
// part gives its exact directional derivative; all the infinitesimal
// invariance checks run on these.

#include "jinv/rational.hpp"

namespace jinv {

struct Dual {
  GaussRat value, derivative;

  Dual() = default;
  Dual(long n) : value(n) {}  // NOLINT: implicit lift of constants
  Dual(GaussRat v) : value(std::move(v)) {}
  Dual(GaussRat v, GaussRat d) : value(std::move(v)), derivative(std::move(d)) {}

  bool is_zero() const { return value.is_zero() && derivative.is_zero(); }

  Dual operator-() const { return {-value, -derivative}; }

  Dual& operator+=(const Dual& o) {
    value += o.value;
    derivative += o.derivative;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    value -= o.value;
    derivative -= o.derivative;
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    derivative = value * o.derivative + derivative * o.value;
    value *= o.value;
    return *this;
  }
  Dual& operator/=(const Dual& o) {
    // (a + eps b)/(c + eps d) = a/c + eps (b/c - a d/c^2); needs c != 0
    GaussRat v = value / o.value;
    derivative = derivative / o.value - v * o.derivative / o.value;
    value = std::move(v);
    return *this;
  }

  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend Dual operator/(Dual a, const Dual& b) { return a /= b; }
  friend bool operator==(const Dual& a, const Dual& b) {
    return a.value == b.value && a.derivative == b.derivative;
  }
  friend bool operator!=(const Dual& a, const Dual& b) { return !(a == b); }
};

}  // namespace jinv
