#include "galmck/intmat.hpp"

#include <cmath>
#include <cstdlib>

namespace galmck::intmat {

Mat identity(int n) {
  Mat m(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mul(const Mat& a, const Mat& b) {
  int n = a.size(), k = b.size(), m = b[0].size();
  Mat r(n, std::vector<long>(m, 0));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

std::vector<long> mul_vec(const Mat& a, const std::vector<long>& v) {
  std::vector<long> r(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

Mat transpose(const Mat& a) {
  Mat r(a[0].size(), std::vector<long>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
  return r;
}

long det(Mat a) {
  // fraction-free Gaussian elimination (Bareiss), fits in long for our sizes
  int n = a.size();
  long prev = 1, sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) { p = i; break; }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Mat inv_unimodular(const Mat& a) {
  int n = a.size();
  // integer Gauss-Jordan using that det = +-1
  std::vector<std::vector<double>> dummy;
  (void)dummy;
  // augment and run exact rational-free elimination via adjugate through SNF
  // simpler: solve with Smith form
  Smith s = smith_normal_form(a);
  for (int i = 0; i < n; ++i)
    if (std::abs(s.D[i][i]) != 1) throw Error("matrix is not unimodular");
  // U A V = D => A^{-1} = V D^{-1} U
  Mat Dinv = identity(n);
  for (int i = 0; i < n; ++i) Dinv[i][i] = s.D[i][i];
  return mul(s.V, mul(Dinv, s.U));
}

Smith smith_normal_form(Mat a) {
  int n = a.size();
  Mat U = identity(n), V = identity(n);
  auto row_op = [&](int i, int j, long c) {  // row_i += c * row_j
    for (int k = 0; k < n; ++k) {
      a[i][k] += c * a[j][k];
      U[i][k] += c * U[j][k];
    }
  };
  auto col_op = [&](int i, int j, long c) {  // col_i += c * col_j
    for (int k = 0; k < n; ++k) {
      a[k][i] += c * a[k][j];
      V[k][i] += c * V[k][j];
    }
  };
  auto row_swap = [&](int i, int j) { std::swap(a[i], a[j]); std::swap(U[i], U[j]); };
  auto col_swap = [&](int i, int j) {
    for (int k = 0; k < n; ++k) { std::swap(a[k][i], a[k][j]); std::swap(V[k][i], V[k][j]); }
  };
  auto row_neg = [&](int i) {
    for (int k = 0; k < n; ++k) { a[i][k] = -a[i][k]; U[i][k] = -U[i][k]; }
  };

  for (int t = 0; t < n; ++t) {
    while (true) {
      // find pivot: smallest nonzero |entry| in submatrix
      int pi = -1, pj = -1;
      long best = 0;
      for (int i = t; i < n; ++i)
        for (int j = t; j < n; ++j)
          if (a[i][j] != 0 && (pi < 0 || std::abs(a[i][j]) < best)) {
            best = std::abs(a[i][j]);
            pi = i; pj = j;
          }
      if (pi < 0) break;  // all zero
      if (pi != t) row_swap(t, pi);
      if (pj != t) col_swap(t, pj);
      if (a[t][t] < 0) row_neg(t);
      bool clean = true;
      for (int i = t + 1; i < n; ++i)
        if (a[i][t] != 0) { row_op(i, t, -(a[i][t] / a[t][t])); if (a[i][t]) clean = false; }
      for (int j = t + 1; j < n; ++j)
        if (a[t][j] != 0) { col_op(j, t, -(a[t][j] / a[t][t])); if (a[t][j]) clean = false; }
      if (!clean) continue;
      bool zeroed = true;
      for (int i = t + 1; i < n && zeroed; ++i) zeroed = a[i][t] == 0;
      for (int j = t + 1; j < n && zeroed; ++j) zeroed = a[t][j] == 0;
      if (!zeroed) continue;
      // divisibility: a[t][t] must divide everything below-right
      bool ok = true;
      for (int i = t + 1; i < n && ok; ++i)
        for (int j = t + 1; j < n && ok; ++j)
          if (a[i][j] % a[t][t] != 0) {
            row_op(t, i, 1);  // bring offending row up, restart pivot loop
            ok = false;
          }
      if (ok) break;
    }
  }
  return Smith{U, V, a};
}

}  // namespace galmck::intmat
