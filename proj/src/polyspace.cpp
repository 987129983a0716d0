#include "jinv/polyspace.hpp"

#include <algorithm>
#include <map>

#include "jinv/invariants.hpp"

namespace jinv {

namespace {

void gen_monomials(int n_vars, int degree, std::vector<std::uint8_t>& cur,
                   std::vector<std::vector<std::uint8_t>>& out) {
  size_t pos = cur.size();
  if (pos + 1 == static_cast<size_t>(n_vars)) {
    cur.push_back(static_cast<std::uint8_t>(degree));
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {  // descending lex
    cur.push_back(static_cast<std::uint8_t>(e));
    gen_monomials(n_vars, degree - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

MonomialBasis::MonomialBasis(int n, int d) : n_vars(n), degree(d) {
  std::vector<std::uint8_t> cur;
  gen_monomials(n, d, cur, monomials);
}

int MonomialBasis::index_of(const std::vector<std::uint8_t>& expo) const {
  auto it = std::lower_bound(monomials.begin(), monomials.end(), expo,
                             [](const auto& a, const auto& b) { return a > b; });
  if (it == monomials.end() || *it != expo) throw BadIndex("monomial not in basis");
  return static_cast<int>(it - monomials.begin());
}

Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int monomial_count(int n_vars, int degree) {
  return binomial(n_vars + degree - 1, degree);
}

ExactMatrix lie_action_matrix(const LinOp& t, int copies, int degree, int cap) {
  int n = t.n;
  int total_vars = n * copies;
  if (monomial_count(total_vars, degree) > cap)
    throw SizeOverflow("monomial basis exceeds cap");
  MonomialBasis basis(total_vars, degree);
  int size = basis.size();

  std::vector<SparseRow> rows(size);
  std::vector<std::uint8_t> expo;
  for (int col = 0; col < size; ++col) {
    expo = basis.monomials[col];
    for (int v = 0; v < total_vars; ++v) {
      if (expo[v] == 0) continue;
      int c = v % n, copy = v / n;
      GaussRat mult(static_cast<long>(expo[v]));
      for (int w = 0; w < n; ++w) {
        const GaussRat& tv = t.at(c, w);
        if (tv.is_zero()) continue;
        int vw = copy * n + w;
        --expo[v];
        ++expo[vw];
        int row = basis.index_of(expo);
        ++expo[v];
        --expo[vw];
        rows[row].emplace_back(col, mult * tv);
      }
    }
  }
  ExactMatrix m(size, size);
  for (int r = 0; r < size; ++r) m.set_row(r, std::move(rows[r]));
  return m;
}

namespace {

void gen_compositions(int degree, int parts, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) + 1 == parts) {
    cur.push_back(degree);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur.push_back(e);
    gen_compositions(degree - e, parts, cur, out);
    cur.pop_back();
  }
}

// Outer (transpose) substitution for V1 in H3(C_C) coordinates: negate the
// f1 component of p, q, r; a monomial is scaled by (-1)^(odd coords).
int outer_sign(const std::vector<std::uint8_t>& expo, int n, int copies) {
  int odd = 0;
  for (int copy = 0; copy < copies; ++copy)
    for (int c : {4, 6, 8}) odd += expo[copy * n + c];
  return odd % 2 == 0 ? 1 : -1;
}

}  // namespace

int invariant_dimension(AlgebraId a, int copies, int degree, GroupVariant variant,
                        int cap) {
  int n = coord_dim(a);
  if (monomial_count(n * copies, degree) > cap)
    throw SizeOverflow("monomial basis exceeds cap");
  const auto& gens = lie_basis(a).ops;
  int n_gens = static_cast<int>(gens.size());
  bool outer = variant == GroupVariant::G && a == AlgebraId::C;

  // The action preserves the multidegree across copies, so the kernel splits
  // into blocks indexed by compositions of the degree.
  std::vector<std::vector<int>> comps;
  {
    std::vector<int> cur;
    gen_compositions(degree, copies, cur, comps);
  }
  std::map<int, MonomialBasis> per_degree;
  for (int d = 0; d <= degree; ++d) per_degree.emplace(d, MonomialBasis(n, d));

  int total = 0;
  for (const auto& comp : comps) {
    long block = 1;
    for (int k = 0; k < copies; ++k) block *= per_degree[comp[k]].size();

    // rank of the stacked action equals the rank of its transpose, which has
    // only `block` rows: one per source monomial, columns indexed by
    // (generator, image monomial) pairs plus the outer constraint block.
    ExactMatrix m(0, n_gens * static_cast<int>(block) + static_cast<int>(block));
    std::vector<int> radix(copies), idx(copies);
    for (int k = 0; k < copies; ++k) radix[k] = per_degree[comp[k]].size();

    std::vector<std::uint8_t> full;  // concatenated exponents, for outer_sign
    for (long src = 0; src < block; ++src) {
      long rest = src;
      for (int k = copies - 1; k >= 0; --k) {
        idx[k] = static_cast<int>(rest % radix[k]);
        rest /= radix[k];
      }
      SparseRow row;
      for (int g = 0; g < n_gens; ++g) {
        const LinOp& t = gens[g];
        for (int k = 0; k < copies; ++k) {
          const MonomialBasis& bk = per_degree[comp[k]];
          std::vector<std::uint8_t> expo = bk.monomials[idx[k]];
          for (int c = 0; c < n; ++c) {
            if (expo[c] == 0) continue;
            GaussRat mult(static_cast<long>(expo[c]));
            for (int w = 0; w < n; ++w) {
              const GaussRat& tv = t.at(c, w);
              if (tv.is_zero()) continue;
              --expo[c];
              ++expo[w];
              int target_k = bk.index_of(expo);
              ++expo[c];
              --expo[w];
              long target = 0;
              for (int kk = 0; kk < copies; ++kk)
                target = target * radix[kk] + (kk == k ? target_k : idx[kk]);
              row.emplace_back(g * static_cast<int>(block) + static_cast<int>(target),
                               mult * tv);
            }
          }
        }
      }
      if (outer) {
        full.clear();
        for (int k = 0; k < copies; ++k) {
          const auto& e = per_degree[comp[k]].monomials[idx[k]];
          full.insert(full.end(), e.begin(), e.end());
        }
        if (outer_sign(full, n, copies) < 0)
          row.emplace_back(n_gens * static_cast<int>(block) + static_cast<int>(src),
                           GaussRat(1));
      }
      m.append_row(std::move(row));
    }
    total += static_cast<int>(block) - m.rank();
  }
  return total;
}

std::vector<NamedInvariant> invariant_family_p3() {
  std::vector<NamedInvariant> fam;
  const char* names[11] = {"f1", "f2", "f3", "f4",  "f5", "f6",
                           "f7", "f8", "f9", "f10", "f11"};
  for (int i = 0; i < 11; ++i) {
    fam.push_back({names[i], i == 10 ? 6 : 3, [i](const std::vector<HermQ>& t) {
                     return gens_p3(t[0], t[1], t[2])[i];
                   }});
  }
  return fam;
}

std::vector<NamedInvariant> invariant_family_p2() {
  std::vector<NamedInvariant> fam;
  const char* names[4] = {"g1", "g2", "g3", "g4"};
  for (int i = 0; i < 4; ++i) {
    fam.push_back({names[i], 3, [i](const std::vector<HermQ>& t) {
                     return gens_p2(t[0], t[1])[i];
                   }});
  }
  return fam;
}

namespace {

void gen_weighted(const std::vector<NamedInvariant>& invs, size_t at, int remaining,
                  std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (at == invs.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (int e = 0; e * invs[at].degree <= remaining; ++e) {
    cur.push_back(e);
    gen_weighted(invs, at + 1, remaining - e * invs[at].degree, cur, out);
    cur.pop_back();
  }
}

}  // namespace

int product_rank(AlgebraId a, int copies, const std::vector<NamedInvariant>& invs,
                 int degree, int n_points, std::uint64_t seed, long height) {
  std::vector<std::vector<int>> candidates;
  {
    std::vector<int> cur;
    gen_weighted(invs, 0, degree, cur, candidates);
  }
  if (n_points < static_cast<int>(candidates.size()))
    throw Error("product_rank needs n_points >= number of candidate products");

  Rng rng(seed);
  ExactMatrix m(0, static_cast<int>(candidates.size()));
  for (int pt = 0; pt < n_points; ++pt) {
    std::vector<HermQ> tuple;
    for (int k = 0; k < copies; ++k) tuple.push_back(random_herm(rng, a, height));
    std::vector<GaussRat> vals;
    vals.reserve(invs.size());
    for (const auto& inv : invs) vals.push_back(inv.eval(tuple));
    SparseRow row;
    for (size_t c = 0; c < candidates.size(); ++c) {
      GaussRat prod(1);
      for (size_t i = 0; i < invs.size(); ++i)
        for (int e = 0; e < candidates[c][i]; ++e) prod *= vals[i];
      if (!prod.is_zero()) row.emplace_back(static_cast<int>(c), std::move(prod));
    }
    m.append_row(std::move(row));
  }
  return m.rank();
}

std::vector<GaussRat> f_coeff_vector(AlgebraId a, int copies, int ci, int cj, int ck) {
  int n = coord_dim(a);
  MonomialBasis basis(n * copies, 3);
  std::vector<GaussRat> out(basis.size());
  std::vector<std::uint8_t> expo(static_cast<size_t>(n) * copies);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const GaussRat& v = f_basis(a, x, y, z);
        if (v.is_zero()) continue;
        std::fill(expo.begin(), expo.end(), 0);
        ++expo[ci * n + x];
        ++expo[cj * n + y];
        ++expo[ck * n + z];
        out[basis.index_of(expo)] += v;
      }
  return out;
}

std::vector<Int> poincare_coeffs(int max_degree) {
  int m = max_degree + 1;
  // denominator (1 - t^3)^10 (1 - t^6), expanded exactly
  std::vector<Int> den(1, 1);
  auto mul_by = [&](int shift, long sign_coeff) {
    std::vector<Int> next(den.size() + shift, 0);
    for (size_t i = 0; i < den.size(); ++i) {
      next[i] += den[i];
      next[i + shift] += sign_coeff * den[i];
    }
    den = std::move(next);
  };
  for (int k = 0; k < 10; ++k) mul_by(3, -1);
  mul_by(6, -1);
  den.resize(std::max<size_t>(den.size(), m), 0);

  std::vector<Int> num(m, 0);
  num[0] = 1;
  if (max_degree >= 9) num[9] = 1;

  std::vector<Int> c(m, 0);
  for (int k = 0; k < m; ++k) {
    Int s = num[k];
    for (int j = 1; j <= k; ++j)
      if (j < static_cast<int>(den.size())) s -= den[j] * c[k - j];
    c[k] = s;  // den[0] == 1
  }
  return c;
}

}  // namespace jinv
