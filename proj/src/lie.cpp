#include "jinv/lie.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace jinv {

std::string coord_name(AlgebraId a, int k) {
  int m = comp_dim(a);
  if (k < 3) return "d" + std::to_string(k + 1);
  int slot = (k - 3) / m, i = (k - 3) % m;
  const char* s = slot == 0 ? "p" : slot == 1 ? "q" : "r";
  return s + std::to_string(i);
}

LinOp LinOp::identity(AlgebraId algebra) {
  LinOp t(algebra, "id");
  for (int i = 0; i < t.n; ++i) t.at(i, i) = GaussRat(1);
  return t;
}

bool LinOp::is_zero() const {
  for (const auto& v : a)
    if (!v.is_zero()) return false;
  return true;
}

std::vector<GaussRat> LinOp::apply(const std::vector<GaussRat>& v) const {
  std::vector<GaussRat> out(n);
  for (int i = 0; i < n; ++i) {
    GaussRat s;
    for (int j = 0; j < n; ++j) {
      const GaussRat& x = at(i, j);
      if (!x.is_zero()) s += x * v[j];
    }
    out[i] = std::move(s);
  }
  return out;
}

HermQ LinOp::apply(const HermQ& x) const {
  return from_coords(alg, apply(to_coords(x)));
}

LinOp LinOp::compose(const LinOp& o) const {
  LinOp r(alg, label + "∘" + o.label);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const GaussRat& v = at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const GaussRat& w = o.at(k, j);
        if (!w.is_zero()) r.at(i, j) += v * w;
      }
    }
  return r;
}

LinOp LinOp::commutator(const LinOp& o) const {
  LinOp r = compose(o) - o.compose(*this);
  r.label = "[" + label + "," + o.label + "]";
  return r;
}

LinOp LinOp::transposed() const {
  LinOp r(alg, label + "^t");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = at(j, i);
  return r;
}

LinOp LinOp::scaled(const GaussRat& s) const {
  LinOp r = *this;
  for (auto& v : r.a) v *= s;
  return r;
}

LinOp operator+(const LinOp& x, const LinOp& y) {
  LinOp r = x;
  for (size_t k = 0; k < r.a.size(); ++k) r.a[k] += y.a[k];
  return r;
}

LinOp operator-(const LinOp& x, const LinOp& y) {
  LinOp r = x;
  for (size_t k = 0; k < r.a.size(); ++k) r.a[k] -= y.a[k];
  return r;
}

SparseRow LinOp::flattened() const {
  SparseRow row;
  for (size_t k = 0; k < a.size(); ++k)
    if (!a[k].is_zero()) row.emplace_back(static_cast<int>(k), a[k]);
  return row;
}

LinOp lmul_op(const HermQ& a) {
  LinOp t(a.alg, "L(?)");
  const auto& basis = coord_basis_list(a.alg);
  for (int j = 0; j < t.n; ++j) {
    auto col = to_coords(jmul(a, basis[j]));
    for (int i = 0; i < t.n; ++i)
      if (!col[i].is_zero()) t.at(i, j) = std::move(col[i]);
  }
  return t;
}

// ---- cached per-algebra structures ------------------------------------------

namespace {

// Builders call each other (gram needs the basis list, the f cube needs the
// gram matrix, ...), so the guard must be re-entrant.
template <class T>
const T& cached(AlgebraId a, std::map<AlgebraId, T>& store, std::recursive_mutex& mu,
                T (*build)(AlgebraId)) {
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = store.find(a);
  if (it == store.end()) it = store.emplace(a, build(a)).first;
  return it->second;
}

std::vector<HermQ> build_basis_list(AlgebraId a) {
  std::vector<HermQ> b;
  int n = coord_dim(a);
  b.reserve(n);
  for (int k = 0; k < n; ++k) b.push_back(coord_basis<GaussRat>(a, k));
  return b;
}

std::vector<std::vector<GaussRat>> build_gram(AlgebraId a) {
  const auto& basis = coord_basis_list(a);
  int n = coord_dim(a);
  std::vector<std::vector<GaussRat>> g(n, std::vector<GaussRat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      g[i][j] = inner(basis[i], basis[j]);
      g[j][i] = g[i][j];
      // Adjoints and the f cube exploit diagonality; verify it here instead
      // of assuming it.
      if (i != j && !g[i][j].is_zero())
        throw Error("Gram matrix not diagonal on the coordinate basis");
      if (i == j && g[i][j].is_zero())
        throw Error("degenerate Gram entry");
    }
  return g;
}

struct FCube {
  int n = 0;
  std::vector<GaussRat> f;  // n^3, fully symmetric
  const GaussRat& at(int i, int j, int k) const {
    return f[(static_cast<size_t>(i) * n + j) * n + k];
  }
};

FCube build_fcube(AlgebraId a) {
  const auto& basis = coord_basis_list(a);
  const auto& gram = gram_matrix(a);
  int n = coord_dim(a);
  FCube cube;
  cube.n = n;
  cube.f.assign(static_cast<size_t>(n) * n * n, GaussRat());
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      auto cv = to_coords(cross(basis[i], basis[j]));
      for (int k = 0; k < n; ++k) {
        // <cross(b_i, b_j), b_k> = gram[k][k] * coords(cross)[k]; the Gram
        // matrix is diagonal on this basis (asserted by tests).
        GaussRat v = gram[k][k] * cv[k];
        if (v.is_zero()) continue;
        int idx[3] = {i, j, k};
        std::sort(idx, idx + 3);
        // write all distinct permutations
        int perms[6][3] = {{idx[0], idx[1], idx[2]}, {idx[0], idx[2], idx[1]},
                           {idx[1], idx[0], idx[2]}, {idx[1], idx[2], idx[0]},
                           {idx[2], idx[0], idx[1]}, {idx[2], idx[1], idx[0]}};
        for (auto& p : perms)
          cube.f[(static_cast<size_t>(p[0]) * n + p[1]) * n + p[2]] = v;
      }
    }
  }
  return cube;
}

std::recursive_mutex g_mu;
std::map<AlgebraId, std::vector<HermQ>> g_basis;
std::map<AlgebraId, std::vector<std::vector<GaussRat>>> g_gram;
std::map<AlgebraId, FCube> g_fcube;
std::map<AlgebraId, LieBasis> g_lie;

const FCube& fcube(AlgebraId a) { return cached(a, g_fcube, g_mu, build_fcube); }

LieBasis build_lie_basis(AlgebraId a) {
  const auto& basis = coord_basis_list(a);
  int n = coord_dim(a);
  LieBasis lb{a, {}, 0};
  RowEliminator elim(n * n);

  auto try_add = [&](LinOp op) {
    if (op.is_zero()) return;
    if (elim.insert(op.flattened())) lb.ops.push_back(std::move(op));
  };

  // L(a) over a trace-zero basis: d1 - d2, d2 - d3, and every off-diagonal
  // coordinate direction.
  {
    HermQ h12 = basis[0] - basis[1];
    HermQ h23 = basis[1] - basis[2];
    LinOp t = lmul_op(h12);
    t.label = "L(d1-d2)";
    try_add(std::move(t));
    t = lmul_op(h23);
    t.label = "L(d2-d3)";
    try_add(std::move(t));
  }
  for (int k = 3; k < n; ++k) {
    LinOp t = lmul_op(basis[k]);
    t.label = "L(" + coord_name(a, k) + ")";
    try_add(std::move(t));
  }

  // Inner derivations [L(b_i), L(b_j)], greedily while independent.
  std::vector<LinOp> lops;
  lops.reserve(n);
  for (int k = 0; k < n; ++k) lops.push_back(lmul_op(basis[k]));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      LinOp d = lops[i].commutator(lops[j]);
      d.label = "[L(" + coord_name(a, i) + "),L(" + coord_name(a, j) + ")]";
      try_add(std::move(d));
    }

  lb.dim = elim.rank();
  return lb;
}

}  // namespace

const std::vector<HermQ>& coord_basis_list(AlgebraId a) {
  return cached(a, g_basis, g_mu, build_basis_list);
}

const std::vector<std::vector<GaussRat>>& gram_matrix(AlgebraId a) {
  return cached(a, g_gram, g_mu, build_gram);
}

const GaussRat& f_basis(AlgebraId a, int i, int j, int k) {
  return fcube(a).at(i, j, k);
}

const LieBasis& lie_basis(AlgebraId a) { return cached(a, g_lie, g_mu, build_lie_basis); }

LinOp inner_adjoint(const LinOp& t) {
  const auto& gram = gram_matrix(t.alg);
  // G is diagonal here, so G^{-1} T^t G has entries g_j/g_i * T_ji.
  LinOp r(t.alg, t.label + "'");
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j) {
      const GaussRat& v = t.at(j, i);
      if (!v.is_zero()) r.at(i, j) = v * gram[j][j] / gram[i][i];
    }
  return r;
}

ExactMatrix det_annihilator_matrix(AlgebraId a) {
  const FCube& cube = fcube(a);
  int n = cube.n;
  // support(j,k) = { m : f(m, j, k) != 0 }
  std::vector<std::vector<int>> support(static_cast<size_t>(n) * n);
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k) {
      std::vector<int> s;
      for (int m = 0; m < n; ++m)
        if (!cube.at(m, j, k).is_zero()) s.push_back(m);
      support[static_cast<size_t>(j) * n + k] = s;
      support[static_cast<size_t>(k) * n + j] = std::move(s);
    }

  auto sup = [&](int j, int k) -> const std::vector<int>& {
    return support[static_cast<size_t>(j) * n + k];
  };

  ExactMatrix m(0, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) {
        SparseRow row;
        for (int mm : sup(j, k)) row.emplace_back(mm * n + i, cube.at(mm, j, k));
        for (int mm : sup(i, k)) row.emplace_back(mm * n + j, cube.at(mm, i, k));
        for (int mm : sup(i, j)) row.emplace_back(mm * n + k, cube.at(mm, i, j));
        m.append_row(std::move(row));
      }
  return m;
}

int det_annihilator_dim(AlgebraId a) { return det_annihilator_matrix(a).kernel_dim(); }

// ---- infinitesimal checks ---------------------------------------------------

Herm<Dual> lift_dir(const HermQ& x, const HermQ& v) {
  Herm<Dual> out(x.alg);
  for (int i = 0; i < 3; ++i) {
    out.d[i] = Dual(x.d[i], v.d[i]);
    for (int c = 0; c < comp_dim(x.alg); ++c)
      out.off[i].c[c] = Dual(x.off[i].c[c], v.off[i].c[c]);
    out.off[i].alg = x.alg;
  }
  return out;
}

Herm<Dual> lift_const(const HermQ& x) { return lift_dir(x, HermQ::zero(x.alg)); }

InvarianceResult directional_invariance(const DualEvaluator& evaluator, int p,
                                        const LinOp& t, int points, Rng& rng,
                                        long height) {
  for (int pt = 0; pt < points; ++pt) {
    std::vector<HermQ> tuple;
    std::vector<Herm<Dual>> lifted;
    tuple.reserve(p);
    lifted.reserve(p);
    for (int k = 0; k < p; ++k) {
      HermQ x = random_herm(rng, t.alg, height);
      lifted.push_back(lift_dir(x, t.apply(x)));
      tuple.push_back(std::move(x));
    }
    Dual val = evaluator(lifted);
    if (!val.derivative.is_zero()) {
      return {false, std::move(tuple), std::move(val.derivative)};
    }
  }
  return {};
}

InvarianceResult sharp_equivariance_check(const LinOp& t, int points, Rng& rng,
                                          long height) {
  LinOp adj = inner_adjoint(t);
  for (int pt = 0; pt < points; ++pt) {
    HermQ x = random_herm(rng, t.alg, height);
    HermQ lhs = cross(x, t.apply(x));
    HermQ rhs = -adj.apply(sharp(x));
    if (!(lhs == rhs)) {
      return {false, std::vector<HermQ>{std::move(x)}, std::nullopt};
    }
  }
  return {};
}

}  // namespace jinv
