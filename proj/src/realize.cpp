#include "jinv/realize.hpp"

#include <algorithm>
#include <cmath>

namespace jinv {

namespace {

bool nonzero(const CD& z) { return std::abs(z) > 1e-14; }

CD eval_poly(const std::array<CD, 4>& c, const CD& z) {
  return ((c[0] * z + c[1]) * z + c[2]) * z + c[3];
}

void newton_polish(const std::array<CD, 4>& c, CD& z) {
  for (int it = 0; it < 4; ++it) {
    CD f = eval_poly(c, z);
    CD df = (3.0 * c[0] * z + 2.0 * c[1]) * z + c[2];
    if (!nonzero(df)) return;
    z -= f / df;
  }
}

void sort_roots(std::vector<CD>& r) {
  std::sort(r.begin(), r.end(), [](const CD& a, const CD& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

}  // namespace

std::vector<CD> poly_roots(const std::array<CD, 4>& c) {
  std::vector<CD> roots;
  if (nonzero(c[0])) {
    // depressed cubic via Cardano
    CD a = c[1] / c[0], b = c[2] / c[0], d = c[3] / c[0];
    CD p = b - a * a / 3.0;
    CD q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + d;
    CD disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    CD u = std::pow(-q / 2.0 + disc, 1.0 / 3.0);
    if (!nonzero(u)) u = std::pow(-q / 2.0 - disc, 1.0 / 3.0);
    CD w = zeta3();
    for (int k = 0; k < 3; ++k) {
      CD uk = u * std::pow(w, k);
      CD zk = nonzero(uk) ? uk - p / (3.0 * uk) : CD(0.0);
      zk -= a / 3.0;
      newton_polish(c, zk);
      roots.push_back(zk);
    }
  } else if (nonzero(c[1])) {
    CD disc = std::sqrt(c[2] * c[2] - 4.0 * c[1] * c[3]);
    roots.push_back((-c[2] + disc) / (2.0 * c[1]));
    roots.push_back((-c[2] - disc) / (2.0 * c[1]));
    for (auto& z : roots) newton_polish(c, z);
  } else if (nonzero(c[2])) {
    roots.push_back(-c[3] / c[2]);
  }
  sort_roots(roots);
  return roots;
}

namespace {

std::vector<CD> target_fermat(const CD& lambda) {
  std::vector<CD> t(10, CD(0.0));
  t[0] = t[6] = t[9] = 1.0;  // a^3, b^3, c^3
  t[4] = lambda;             // abc
  return t;
}

double residual_chi3(const std::vector<Herm<CD>>& tuple, const std::vector<CD>& target) {
  auto coeffs = chi3(tuple[0], tuple[1], tuple[2]);
  double r = 0.0;
  for (int k = 0; k < 10; ++k) r = std::max(r, std::abs(coeffs.c[k] - target[k]));
  return r;
}

}  // namespace

RealizationResult realize_binary_cubic(const std::array<CD, 4>& coeffs, AlgebraId a,
                                       double tolerance) {
  bool all_zero = true;
  for (const auto& c : coeffs) all_zero = all_zero && !nonzero(c);
  if (all_zero) throw DegenerateForm("realize_binary_cubic: P = 0");

  // P = lambda b^{3-N} prod_{i<=N} (a - alpha_i b), N = degree in a.
  int n_deg = 3;
  while (n_deg > 0 && !nonzero(coeffs[3 - n_deg])) --n_deg;
  CD lambda = coeffs[3 - n_deg];

  std::vector<CD> alphas;
  if (n_deg > 0) {
    // roots of the degree-N polynomial P(t, 1)/lambda
    std::array<CD, 4> mono{};
    for (int k = 0; k <= n_deg; ++k) mono[3 - n_deg + k] = coeffs[3 - n_deg + k];
    alphas = poly_roots(mono);
  }

  RealizationResult res;
  res.alg = a;
  res.lambda = lambda;
  Herm<CD> x(a), y(a);
  for (int i = 0; i < n_deg; ++i) {
    x.d[i] = CD(1.0);
    y.d[i] = -alphas[i];
  }
  for (int i = n_deg; i < 3; ++i) y.d[i] = CD(1.0);
  res.tuple = {x, y};

  auto coeffs2 = chi2(x, y);
  res.target.assign(4, CD(0.0));
  for (int k = 0; k < 4; ++k) res.target[k] = coeffs[k] / lambda;
  for (int k = 0; k < 4; ++k)
    res.residual = std::max(res.residual, std::abs(coeffs2.c[k] - res.target[k]));
  if (res.residual > tolerance)
    throw SolverFailure("realize_binary_cubic residual above tolerance");
  return res;
}

RealizationResult realize_fermat_v0(CD lambda, double tolerance) {
  CD z = zeta3(), z2 = z * z;
  auto target = target_fermat(lambda);

  Herm<CD> x = Herm<CD>::identity(AlgebraId::R);
  Herm<CD> y = Herm<CD>::diag(AlgebraId::R, CD(1.0), z, z2);

  RealizationResult best;
  best.residual = 1e300;
  int branch = 0;
  // sign s fixes p q r = s r^3; the cubic is s 2 r^3 + lambda r^2 = 1 + lambda^3/27
  for (int s : {+1, -1}) {
    std::array<CD, 4> cubic{CD(2.0 * s), lambda, CD(0.0),
                            -(CD(1.0) + lambda * lambda * lambda / 27.0)};
    for (const CD& r : poly_roots(cubic)) {
      for (int sigma : {+1, -1}) {
        // p^2 = z^2 r^2, q^2 = z r^2, p q r = s r^3
        CD p = static_cast<double>(sigma) * z * r;
        CD q = static_cast<double>(sigma * s) * z2 * r;
        Herm<CD> zz(AlgebraId::R);
        zz.d = {-lambda / 3.0, -lambda / 3.0 * z2, -lambda / 3.0 * z};
        zz.off[0] = Comp<CD>(AlgebraId::R, p);
        zz.off[1] = Comp<CD>(AlgebraId::R, q);
        zz.off[2] = Comp<CD>(AlgebraId::R, r);
        std::vector<Herm<CD>> tuple = {x, y, zz};
        double resid = residual_chi3(tuple, target);
        if (resid < best.residual) {
          best.residual = resid;
          best.tuple = tuple;
          best.branch = branch;
        }
        if (best.residual <= tolerance) break;
        ++branch;
      }
      if (best.residual <= tolerance) break;
    }
    if (best.residual <= tolerance) break;
  }
  if (best.residual > tolerance)
    throw SolverFailure("realize_fermat_v0: no branch within tolerance");
  best.alg = AlgebraId::R;
  best.lambda = lambda;
  best.target = target;
  return best;
}

RealizationResult realize_with_mu_v1(CD lambda, CD mu, double tolerance) {
  CD z = zeta3(), z2 = z * z;
  auto target = target_fermat(lambda);

  // Derived constraint values (see the Cramer systems): with the diagonal
  // (-lambda/3)(1, z^2, z) and f̃11 = mu,
  //   z12 z21 = z^2 K, z13 z31 = z K, z23 z32 = K,  K = lambda^2/12 + mu/24,
  //   z12 z23 z31 + z21 z13 z32 = S = 1 + lambda^3/27 - lambda K,
  // and the two cyclic products are the roots of T^2 - S T + K^3 = 0.
  CD K = lambda * lambda / 12.0 + mu / 24.0;
  CD S = CD(1.0) + lambda * lambda * lambda / 27.0 - lambda * K;

  Mat3<CD> zm;
  zm.at(0, 0) = -lambda / 3.0;
  zm.at(1, 1) = -lambda / 3.0 * z2;
  zm.at(2, 2) = -lambda / 3.0 * z;

  Mat3<CD> xm = mat3_identity<CD>();
  Mat3<CD> ym;
  ym.at(0, 0) = 1.0;
  ym.at(1, 1) = z;
  ym.at(2, 2) = z2;

  std::vector<CD> t_branches;
  if (nonzero(K)) {
    CD disc = std::sqrt(S * S - 4.0 * K * K * K);
    t_branches = {(S + disc) / 2.0, (S - disc) / 2.0};
  } else {
    t_branches = {S};  // degenerate: all pair products vanish
  }

  RealizationResult best;
  best.residual = 1e300;
  for (size_t branch = 0; branch < t_branches.size(); ++branch) {
    const CD& T = t_branches[branch];
    Mat3<CD> m = zm;
    m.at(0, 1) = 1.0;          // z12
    m.at(1, 2) = 1.0;          // z23
    m.at(2, 0) = T;            // z31
    if (nonzero(K)) {
      m.at(1, 0) = z2 * K;     // z21
      m.at(2, 1) = K;          // z32
      m.at(0, 2) = z * K / T;  // z13 (T != 0 since T T' = K^3 != 0)
    }
    std::vector<Herm<CD>> tuple = {split_iso_inv(xm), split_iso_inv(ym),
                                   split_iso_inv(m)};
    double resid = residual_chi3(tuple, target);
    resid = std::max(resid,
                     std::abs(f11_tilde(tuple[0], tuple[1], tuple[2]) - mu));
    if (resid < best.residual) {
      best.residual = resid;
      best.tuple = tuple;
      best.branch = static_cast<int>(branch);
    }
    if (best.residual <= tolerance) break;
  }
  if (best.residual > tolerance)
    throw SolverFailure("realize_with_mu_v1: no branch within tolerance");
  best.alg = AlgebraId::C;
  best.lambda = lambda;
  best.mu = mu;
  best.target = target;
  return best;
}

}  // namespace jinv
