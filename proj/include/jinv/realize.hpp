#pragma once

// Machine-precision constructive solvers for the surjectivity arguments:
// produce tuples whose cubic form det(a x + b y + c z) (and, for V1, whose
// f̃11 value) hit prescribed targets. This is the only non-exact code in the
// project: results are accepted on recomputed residuals and never feed back
// into exact checks.

#include <array>
#include <complex>
#include <vector>

#include "jinv/invariants.hpp"
#include "jinv/models.hpp"

namespace jinv {

using CD = std::complex<double>;

template <>
inline CD scalar_unit_i<CD>() {
  return CD(0.0, 1.0);
}

inline CD zeta3() { return CD(-0.5, std::sqrt(3.0) / 2.0); }  // exp(2 pi i / 3)

struct RealizationResult {
  AlgebraId alg = AlgebraId::R;
  std::vector<Herm<CD>> tuple;
  double residual = 0.0;
  int branch = 0;      // deterministic index of the root/sign branch used
  CD lambda{}, mu{};   // target parameters where applicable
  std::vector<CD> target;  // target cubic-form coefficients (echo)
};

// All roots of c0 z^3 + c1 z^2 + c2 z + c3 (degree may degenerate), Newton
// polished, deterministically ordered.
std::vector<CD> poly_roots(const std::array<CD, 4>& c);

// Diagonal pair (x, y) with det(a x + b y) = P(a, b)/lambda, built from the
// factorization P = lambda b^{3-N} prod (a - alpha_i b).
RealizationResult realize_binary_cubic(const std::array<CD, 4>& coeffs, AlgebraId a,
                                       double tolerance = 1e-9);

// (e, e1 + z e2 + z^2 e3, z) in V0 with det(ax+by+cz) = a^3+b^3+c^3+lambda abc.
RealizationResult realize_fermat_v0(CD lambda, double tolerance = 1e-9);

// V1 triple hitting the same cubic AND f̃11 = mu.
RealizationResult realize_with_mu_v1(CD lambda, CD mu, double tolerance = 1e-9);

}  // namespace jinv
