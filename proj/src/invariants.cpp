#include "jinv/invariants.hpp"

namespace jinv {

namespace {

// Exponents of the degree-3 monomials in lex order over (a, b, c).
constexpr int kTernary[10][3] = {{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0},
                                 {1, 1, 1}, {1, 0, 2}, {0, 3, 0}, {0, 2, 1},
                                 {0, 1, 2}, {0, 0, 3}};

}  // namespace

template <class S>
CubicFormCoeffs<S> cubic_substitute(const CubicFormCoeffs<S>& f, const Mat3<S>& g) {
  // (a,b,c) -> (a,b,c) g, i.e. a' = a g00 + b g10 + c g20 etc.; expand each
  // monomial of f into the new coefficients by brute-force trinomial products.
  if (f.p != 3) throw Error("cubic_substitute expects a ternary form");
  CubicFormCoeffs<S> out{3, std::vector<S>(10, S(0))};
  auto index_of = [](int ea, int eb, int ec) {
    for (int k = 0; k < 10; ++k)
      if (kTernary[k][0] == ea && kTernary[k][1] == eb && kTernary[k][2] == ec)
        return k;
    return -1;
  };
  for (int mono = 0; mono < 10; ++mono) {
    if (f.c[mono] == S(0)) continue;
    // list the three linear factors of this monomial (with multiplicity)
    int vars[3], vi = 0;
    for (int v = 0; v < 3; ++v)
      for (int e = 0; e < kTernary[mono][v]; ++e) vars[vi++] = v;
    // each factor var v substitutes to sum_w (w-th variable) * g.at(w, v)
    for (int w0 = 0; w0 < 3; ++w0)
      for (int w1 = 0; w1 < 3; ++w1)
        for (int w2 = 0; w2 < 3; ++w2) {
          int e[3] = {0, 0, 0};
          ++e[w0];
          ++e[w1];
          ++e[w2];
          S coeff = f.c[mono] * g.at(w0, vars[0]) * g.at(w1, vars[1]) *
                    g.at(w2, vars[2]);
          out.c[index_of(e[0], e[1], e[2])] += coeff;
        }
  }
  return out;
}

template CubicFormCoeffs<GaussRat> cubic_substitute(const CubicFormCoeffs<GaussRat>&,
                                                    const Mat3<GaussRat>&);

GaussRat alt5_v1(const std::vector<Mat3<GaussRat>>& xs) {
  std::vector<int> idx = {0, 1, 2, 3, 4};
  return mat3_trace(standard_poly(xs, idx));
}

GaussRat alt5_herm(const std::vector<HermQ>& xs) {
  std::vector<Mat3<CompQ>> ms;
  ms.reserve(xs.size());
  for (const auto& x : xs) ms.push_back(to_matrix(x));
  std::vector<int> idx = {0, 1, 2, 3, 4};
  return reduced_trace(standard_poly(ms, idx));
}

}  // namespace jinv
