#pragma once

// Exact scalars. Rat is an arbitrary-precision rational kept in canonical
// form (reduced, positive denominator); GaussRat is a + b*i with rational
// a, b — the base field for every exact computation in this project.
// Nothing here ever rounds.

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "jinv/errors.hpp"

namespace jinv {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// "p/q", with "/q" omitted when q == 1.
inline std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw ParseError("bad rational: '" + s + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

struct GaussRat {
  Rat re, im;

  GaussRat() = default;
  GaussRat(long n) : re(n), im(0) {}  // NOLINT: implicit from integers is intended
  GaussRat(Rat r) : re(std::move(r)), im(0) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat unit_i() { return GaussRat(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussRat conj() const { return {re, -im}; }
  Rat norm() const { return re * re + im * im; }

  GaussRat operator-() const { return {-re, -im}; }

  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    if (im == 0 && o.im == 0) {  // common all-real fast path
      re *= o.re;
      return *this;
    }
    Rat r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) {
    if (o.is_zero()) throw Error("division by zero GaussRat");
    if (im == 0 && o.im == 0) {
      re /= o.re;
      return *this;
    }
    Rat n = o.norm();
    Rat r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = std::move(r);
    return *this;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  GaussRat inverse() const {
    if (is_zero()) throw Error("inverse of zero GaussRat");
    Rat n = norm();
    return {re / n, -im / n};
  }

  // size proxy used by pivot heuristics
  size_t bits() const {
    return mpz_sizeinbase(re.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(re.get_den().get_mpz_t(), 2) +
           mpz_sizeinbase(im.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(im.get_den().get_mpz_t(), 2);
  }

  std::string str() const {
    if (im == 0) return rat_str(re);
    return rat_str(re) + (sgn(im) < 0 ? "-" : "+") + rat_str(abs(im)) + "i";
  }
};

inline GaussRat grat(long n, long d = 1) { return GaussRat(rat(n, d)); }

}  // namespace jinv
