#pragma once

// Exact dimensions of spaces of degree-d invariants, computed by linearizing
// the Lie-algebra action on polynomial coefficients; evaluation-rank
// computation for products of known invariants; the Poincaré series oracle.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "jinv/lie.hpp"
#include "jinv/matrix.hpp"

namespace jinv {

// All monomials of one total degree in n_vars variables, deterministic
// (lexicographic) order; size C(n_vars + degree - 1, degree).
struct MonomialBasis {
  int n_vars = 0;
  int degree = 0;
  std::vector<std::vector<std::uint8_t>> monomials;

  MonomialBasis() = default;
  MonomialBasis(int n_vars, int degree);

  int size() const { return static_cast<int>(monomials.size()); }
  int index_of(const std::vector<std::uint8_t>& expo) const;
};

Int binomial(long n, long k);

// Number of degree-d monomials in n variables, as a big integer (for cap checks).
Int monomial_count(int n_vars, int degree);

// Matrix of the derivation sum_k (T x_k) . d/dx_k on the degree-d coefficient
// space of p copies; columns and rows indexed by MonomialBasis(n*p, degree).
// Throws SizeOverflow past `cap` monomials.
ExactMatrix lie_action_matrix(const LinOp& t, int copies, int degree, int cap);

enum class GroupVariant { G, Go };

// dim of the joint kernel of the Lie-algebra action on degree-d coefficients
// (plus, for V1 with variant G, the outer transpose substitution constraint).
// For the connected cases (V0, V2, V3) the two variants coincide.
int invariant_dimension(AlgebraId a, int copies, int degree, GroupVariant variant,
                        int cap);

struct NamedInvariant {
  std::string name;
  int degree = 3;
  std::function<GaussRat(const std::vector<HermQ>&)> eval;
};

// The f1..f11 family on 3 copies, or the four p=2 generators on 2 copies.
std::vector<NamedInvariant> invariant_family_p3();
std::vector<NamedInvariant> invariant_family_p2();

// Exact rank of the evaluation matrix of all weighted-degree-`degree`
// monomials in the given invariants at n_points random tuples.
int product_rank(AlgebraId a, int copies, const std::vector<NamedInvariant>& invs,
                 int degree, int n_points, std::uint64_t seed, long height);

// Coefficient vector of f(x_i, x_j, x_k) (copy indices) as a degree-3
// polynomial on p copies, in MonomialBasis(n*p, 3) indexing.
std::vector<GaussRat> f_coeff_vector(AlgebraId a, int copies, int ci, int cj, int ck);

// Power-series coefficients of (1 + t^9) / ((1 - t^3)^10 (1 - t^6)) up to
// max_degree inclusive; degrees 0, 3, 6, 9 give 1, 10, 56, 231.
std::vector<Int> poincare_coeffs(int max_degree);

}  // namespace jinv
