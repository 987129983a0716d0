#pragma once

// The Lie algebra of G = {g in GL(V) : det(g x) = det x}.  For these cubic
// Jordan algebras it is spanned by multiplication operators L(a) with
// tr a = 0 together with the inner derivations [L(x), L(y)]; the basis is
// built by exact greedy rank growth and its dimension is certified twice:
// once by the rank of the stacked operator coordinates and once as the kernel
// dimension of the linearized condition f(Tx, x, x) = 0.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jinv/dual.hpp"
#include "jinv/jordan.hpp"
#include "jinv/matrix.hpp"

namespace jinv {

// Exact n x n linear operator on the coordinates of V, n in {6, 9, 15, 27}.
struct LinOp {
  AlgebraId alg = AlgebraId::R;
  int n = 0;
  std::vector<GaussRat> a;  // row-major
  std::string label;

  LinOp() = default;
  LinOp(AlgebraId algebra, std::string lbl)
      : alg(algebra), n(coord_dim(algebra)), a(static_cast<size_t>(n) * n), label(std::move(lbl)) {}

  static LinOp identity(AlgebraId algebra);

  GaussRat& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const GaussRat& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  bool is_zero() const;

  std::vector<GaussRat> apply(const std::vector<GaussRat>& v) const;
  HermQ apply(const HermQ& x) const;

  LinOp compose(const LinOp& o) const;     // this ∘ o, i.e. matrix product
  LinOp commutator(const LinOp& o) const;  // [this, o]
  LinOp transposed() const;
  LinOp scaled(const GaussRat& s) const;

  friend LinOp operator+(const LinOp& x, const LinOp& y);
  friend LinOp operator-(const LinOp& x, const LinOp& y);

  SparseRow flattened() const;  // row of length n*n, for rank bookkeeping
};

// Jordan multiplication operator x -> a∙x in the fixed coordinate basis.
LinOp lmul_op(const HermQ& a);

struct LieBasis {
  AlgebraId alg;
  std::vector<LinOp> ops;
  int dim = 0;
};

// Cached basis of Lie(G): L(b) over a trace-zero basis, then commutators
// [L(b_i), L(b_j)] added greedily while the exact rank grows.
const LieBasis& lie_basis(AlgebraId a);

// Coordinate basis elements b_0..b_{n-1} of V, cached.
const std::vector<HermQ>& coord_basis_list(AlgebraId a);

// f(b_a, b_b, b_c) on coordinate basis triples, cached (fully symmetric).
const GaussRat& f_basis(AlgebraId a, int i, int j, int k);

// Gram matrix of <,> on the coordinate basis (computed, then used for
// operator adjoints). Dense n x n.
const std::vector<std::vector<GaussRat>>& gram_matrix(AlgebraId a);

// Adjoint T' with <T x, y> = <x, T' y>, i.e. T' = G^{-1} T^t G.
LinOp inner_adjoint(const LinOp& t);

// dim { T in End(V) : f(T b_i, b_j, b_k) symmetrized = 0 for all i<=j<=k },
// an exact kernel dimension of a C(n+2,3) x n^2 sparse system.
int det_annihilator_dim(AlgebraId a);
ExactMatrix det_annihilator_matrix(AlgebraId a);

// ---- infinitesimal checks ---------------------------------------------------

using DualEvaluator = std::function<Dual(std::span<const Herm<Dual>>)>;

struct InvarianceResult {
  bool pass = true;
  // On failure: the offending tuple plus the nonzero derivative.
  std::optional<std::vector<HermQ>> witness;
  std::optional<GaussRat> derivative_value;
};

// Checks that the eps-part of evaluator(x_1 + eps T x_1, ..., x_p + eps T x_p)
// vanishes at `points` random tuples. Exact; failure is a result, not an error.
InvarianceResult directional_invariance(const DualEvaluator& evaluator, int p,
                                        const LinOp& t, int points, Rng& rng,
                                        long height);

// Infinitesimal form of the equivariance n(g.x) = (g^{-1})' n(x):
// cross(x, Tx) = -T' n(x) at random points.
InvarianceResult sharp_equivariance_check(const LinOp& t, int points, Rng& rng,
                                          long height);

// Lift with directional perturbation: x + eps v.
Herm<Dual> lift_dir(const HermQ& x, const HermQ& v);
Herm<Dual> lift_const(const HermQ& x);

}  // namespace jinv
