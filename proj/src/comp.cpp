#include "jinv/comp.hpp"

namespace jinv {

AlgebraId algebra_from_string(const std::string& s) {
  if (s == "R" || s == "V0") return AlgebraId::R;
  if (s == "C" || s == "V1") return AlgebraId::C;
  if (s == "H" || s == "V2") return AlgebraId::H;
  if (s == "O" || s == "V3") return AlgebraId::O;
  throw ParseError("unknown algebra '" + s + "' (expected R/C/H/O or V0..V3)");
}

namespace {

struct Table {
  int sign[8][8];
  int index[8][8];
};

// Cayley–Dickson doubling on basis elements, with the product convention
// (a + b*l)(c + d*l) = (ac - conj(d) b) + (d a + b conj(c)) l.  Each doubling
// step takes the span of f_0..f_{n-1} to f_0..f_{2n-1} with l = f_n, which
// reproduces exactly the relations f_3 = f_1 f_2, f_5 = f_1 f_4, f_6 = f_2 f_4,
// f_7 = f_3 f_4 together with f_i^2 = -1 and f_i f_j = -f_j f_i.
Table build_table() {
  Table t{};
  t.sign[0][0] = 1;
  t.index[0][0] = 0;
  for (int n = 1; n < 8; n *= 2) {
    Table next{};
    for (int i = 0; i < 2 * n; ++i) {
      for (int j = 0; j < 2 * n; ++j) {
        int s, k;
        if (i < n && j < n) {  // a*c
          s = t.sign[i][j];
          k = t.index[i][j];
        } else if (i < n) {  // a*(d l) = (d a) l
          s = t.sign[j - n][i];
          k = t.index[j - n][i] + n;
        } else if (j < n) {  // (b l)*c = (b conj(c)) l
          s = t.sign[i - n][j];
          if (j > 0) s = -s;
          k = t.index[i - n][j] + n;
        } else {  // (b l)*(d l) = -(conj(d) b)
          s = -t.sign[j - n][i - n];
          if (j - n > 0) s = -s;
          k = t.index[j - n][i - n];
        }
        next.sign[i][j] = s;
        next.index[i][j] = k;
      }
    }
    for (int i = 0; i < 2 * n; ++i)
      for (int j = 0; j < 2 * n; ++j) {
        t.sign[i][j] = next.sign[i][j];
        t.index[i][j] = next.index[i][j];
      }
  }
  return t;
}

const Table& table() {
  static const Table t = build_table();
  return t;
}

}  // namespace

int cayley_sign(int i, int j) { return table().sign[i][j]; }
int cayley_index(int i, int j) { return table().index[i][j]; }

}  // namespace jinv
