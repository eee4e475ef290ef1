#include "linalg.hpp"

#include <algorithm>

namespace sfc {

MatZ MatZ::identity(int n) {
  MatZ m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatZ MatZ::scalar(int n, const Int& d) {
  MatZ m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = d;
  return m;
}

MatZ MatZ::transpose() const {
  MatZ t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  return t;
}

MatZ MatZ::mul(const MatZ& o) const {
  check(cols == o.rows, ErrCode::Internal, "MatZ::mul shape");
  MatZ r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Int& x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

MatZ MatZ::vstack(const MatZ& o) const {
  check(cols == o.cols || rows == 0 || o.rows == 0, ErrCode::Internal, "vstack shape");
  if (rows == 0) return o;
  if (o.rows == 0) return *this;
  MatZ r(rows + o.rows, cols);
  std::copy(a.begin(), a.end(), r.a.begin());
  std::copy(o.a.begin(), o.a.end(), r.a.begin() + a.size());
  return r;
}

std::vector<Int> MatZ::row(int i) const {
  return std::vector<Int>(a.begin() + size_t(i) * cols, a.begin() + size_t(i + 1) * cols);
}

void MatZ::set_row(int i, const std::vector<Int>& v) {
  check(int(v.size()) == cols, ErrCode::Internal, "set_row size");
  std::copy(v.begin(), v.end(), a.begin() + size_t(i) * cols);
}

bool MatZ::is_zero_row(int i) const {
  for (int j = 0; j < cols; ++j)
    if ((*this)(i, j) != 0) return false;
  return true;
}

MatQ MatQ::identity(int n) {
  MatQ m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatQ MatQ::from(const MatZ& m) {
  MatQ r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(m.a[i]);
  return r;
}

MatQ MatQ::mul(const MatQ& o) const {
  check(cols == o.rows, ErrCode::Internal, "MatQ::mul shape");
  MatQ r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Rat& x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

void MatQ::split(MatZ& n, Int& d) const {
  d = 1;
  for (const Rat& x : a) d = lcm(d, x.get_den());
  n = MatZ(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) {
    Rat s = a[i] * d;
    n.a[i] = s.get_num();
  }
}

std::vector<Int> mul_vec(const std::vector<Int>& v, const MatZ& m) {
  check(int(v.size()) == m.rows, ErrCode::Internal, "mul_vec shape");
  std::vector<Int> r(m.cols);
  for (int i = 0; i < m.rows; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < m.cols; ++j) r[j] += v[i] * m(i, j);
  }
  return r;
}

std::vector<Rat> mul_vec(const std::vector<Rat>& v, const MatQ& m) {
  check(int(v.size()) == m.rows, ErrCode::Internal, "mul_vec shape");
  std::vector<Rat> r(m.cols);
  for (int i = 0; i < m.rows; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < m.cols; ++j) r[j] += v[i] * m(i, j);
  }
  return r;
}

namespace {

void row_sub(MatZ& m, int i, int t, const Int& q) {
  if (q == 0) return;
  for (int j = 0; j < m.cols; ++j) m(i, j) -= q * m(t, j);
}

void row_swap(MatZ& m, int i, int t) {
  if (i == t) return;
  for (int j = 0; j < m.cols; ++j) std::swap(m(i, j), m(t, j));
}

void row_neg(MatZ& m, int i) {
  for (int j = 0; j < m.cols; ++j) m(i, j) = -m(i, j);
}

// Core row-HNF, in place, optionally tracking the transform.
int hnf_inplace(MatZ& m, MatZ* u) {
  int r = 0;
  for (int j = 0; j < m.cols && r < m.rows; ++j) {
    // Euclidean elimination in column j among rows >= r.
    while (true) {
      int piv = -1;
      for (int i = r; i < m.rows; ++i) {
        if (m(i, j) == 0) continue;
        if (piv < 0 || abs(m(i, j)) < abs(m(piv, j))) piv = i;
      }
      if (piv < 0) break;
      row_swap(m, r, piv);
      if (u) row_swap(*u, r, piv);
      bool clean = true;
      for (int i = r + 1; i < m.rows; ++i) {
        if (m(i, j) == 0) continue;
        Int q = fdiv(m(i, j), m(r, j));
        row_sub(m, i, r, q);
        if (u) row_sub(*u, i, r, q);
        if (m(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (m(r, j) == 0) continue;
    if (m(r, j) < 0) {
      row_neg(m, r);
      if (u) row_neg(*u, r);
    }
    for (int i = 0; i < r; ++i) {
      Int q = fdiv(m(i, j), m(r, j));
      row_sub(m, i, r, q);
      if (u) row_sub(*u, i, r, q);
    }
    ++r;
  }
  return r;
}

}  // namespace

MatZ hnf(const MatZ& m) {
  MatZ h = m;
  int rank = hnf_inplace(h, nullptr);
  MatZ out(rank, m.cols);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < m.cols; ++j) out(i, j) = h(i, j);
  return out;
}

void hnf_transform(const MatZ& m, MatZ& h, MatZ& u, int& rank) {
  h = m;
  u = MatZ::identity(m.rows);
  rank = hnf_inplace(h, &u);
}

MatZ kernel_z(const MatZ& m) {
  MatZ h, u;
  int rank;
  hnf_transform(m, h, u, rank);
  MatZ k(m.rows - rank, m.rows);
  for (int i = rank; i < m.rows; ++i)
    for (int j = 0; j < m.rows; ++j) k(i - rank, j) = u(i, j);
  return hnf(k);
}

namespace {

void col_sub(MatZ& m, int j, int t, const Int& q) {
  if (q == 0) return;
  for (int i = 0; i < m.rows; ++i) m(i, j) -= q * m(i, t);
}

void col_swap(MatZ& m, int j, int t) {
  if (j == t) return;
  for (int i = 0; i < m.rows; ++i) std::swap(m(i, j), m(i, t));
}

}  // namespace

void snf(const MatZ& m, MatZ& d, MatZ& u, MatZ& v) {
  d = m;
  u = MatZ::identity(m.rows);
  v = MatZ::identity(m.cols);
  int n = std::min(m.rows, m.cols);
  int t = 0;
  while (t < n) {
    // locate minimal nonzero entry in the trailing block
    int bi = -1, bj = -1;
    for (int i = t; i < d.rows; ++i)
      for (int j = t; j < d.cols; ++j)
        if (d(i, j) != 0 && (bi < 0 || abs(d(i, j)) < abs(d(bi, bj)))) bi = i, bj = j;
    if (bi < 0) break;
    row_swap(d, t, bi);
    row_swap(u, t, bi);
    col_swap(d, t, bj);
    col_swap(v, t, bj);
    bool again = true;
    while (again) {
      again = false;
      for (int i = t + 1; i < d.rows; ++i) {
        if (d(i, t) == 0) continue;
        Int q = fdiv(d(i, t), d(t, t));
        row_sub(d, i, t, q);
        row_sub(u, i, t, q);
        if (d(i, t) != 0) {
          row_swap(d, i, t);
          row_swap(u, i, t);
          again = true;
        }
      }
      for (int j = t + 1; j < d.cols; ++j) {
        if (d(t, j) == 0) continue;
        Int q = fdiv(d(t, j), d(t, t));
        col_sub(d, j, t, q);
        col_sub(v, j, t, q);
        if (d(t, j) != 0) {
          col_swap(d, j, t);
          col_swap(v, j, t);
          again = true;
        }
      }
    }
    if (d(t, t) < 0) {
      row_neg(d, t);
      row_neg(u, t);
    }
    ++t;
  }
  // enforce the divisibility chain
  bool fixed = false;
  while (!fixed) {
    fixed = true;
    for (int i = 0; i + 1 < t; ++i) {
      if (d(i, i) != 0 && d(i + 1, i + 1) % d(i, i) != 0) {
        // fold d(i+1,i+1) into column i and re-diagonalise the 2x2 block
        col_sub(d, i, i + 1, Int(-1));
        col_sub(v, i, i + 1, Int(-1));
        Int a = d(i, i), b = d(i + 1, i);
        Int s, w;
        Int g = gcdext(a, b, s, w);
        // row ops: r_i := s*r_i + w*r_{i+1}; r_{i+1} := (b/g)*r_i - (a/g)*r_{i+1} (unimodular pair)
        Int bg = b / g, ag = a / g;
        for (int j = 0; j < d.cols; ++j) {
          Int x = d(i, j), y = d(i + 1, j);
          d(i, j) = s * x + w * y;
          d(i + 1, j) = bg * x - ag * y;
        }
        for (int j = 0; j < u.cols; ++j) {
          Int x = u(i, j), y = u(i + 1, j);
          u(i, j) = s * x + w * y;
          u(i + 1, j) = bg * x - ag * y;
        }
        // clear the remaining off-diagonal entries of the block
        Int q = fdiv(d(i, i + 1), d(i, i));
        col_sub(d, i + 1, i, q);
        col_sub(v, i + 1, i, q);
        if (d(i + 1, i + 1) < 0) {
          row_neg(d, i + 1);
          row_neg(u, i + 1);
        }
        fixed = false;
      }
    }
  }
}

Int det(const MatZ& m) {
  check(m.rows == m.cols, ErrCode::Internal, "det: square required");
  int n = m.rows;
  if (n == 0) return 1;
  MatZ w = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (w(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      row_swap(w, k, piv);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        w(i, j) = w(k, k) * w(i, j) - w(i, k) * w(k, j);
        w(i, j) /= prev;
      }
    prev = w(k, k);
  }
  return sign > 0 ? w(n - 1, n - 1) : -w(n - 1, n - 1);
}

Rat det(const MatQ& m) {
  MatZ n;
  Int d;
  m.split(n, d);
  Rat r(det(n));
  Rat dd(d);
  Rat scale = 1;
  for (int i = 0; i < m.rows; ++i) scale *= dd;
  return r / scale;
}

MatQ inverse(const MatQ& m) {
  check(m.rows == m.cols, ErrCode::Internal, "inverse: square required");
  int n = m.rows;
  MatQ w = m, inv = MatQ::identity(n);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (w(i, k) != 0) {
        piv = i;
        break;
      }
    check(piv >= 0, ErrCode::RankDeficient, "inverse: singular matrix");
    for (int j = 0; j < n; ++j) {
      std::swap(w(k, j), w(piv, j));
      std::swap(inv(k, j), inv(piv, j));
    }
    Rat p = w(k, k);
    for (int j = 0; j < n; ++j) {
      w(k, j) /= p;
      inv(k, j) /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || w(i, k) == 0) continue;
      Rat q = w(i, k);
      for (int j = 0; j < n; ++j) {
        w(i, j) -= q * w(k, j);
        inv(i, j) -= q * inv(k, j);
      }
    }
  }
  return inv;
}

std::vector<Rat> solve_right(const MatQ& m, const std::vector<Rat>& b) {
  MatQ inv = inverse(m);
  return mul_vec(b, inv);
}

bool solve_integral(const MatZ& m, const std::vector<Int>& b, std::vector<Int>& x) {
  MatZ h, u;
  int rank;
  hnf_transform(m, h, u, rank);
  // y*h = b by forward substitution over pivot columns
  std::vector<Int> y(m.rows), rem = b;
  for (int i = 0; i < rank; ++i) {
    int p = 0;
    while (p < h.cols && h(i, p) == 0) ++p;
    check(p < h.cols, ErrCode::Internal, "solve_integral: bad HNF");
    if (rem[p] % h(i, p) != 0) return false;
    Int q = rem[p] / h(i, p);
    y[i] = q;
    if (q != 0)
      for (int j = 0; j < h.cols; ++j) rem[j] -= q * h(i, j);
  }
  for (int j = 0; j < h.cols; ++j)
    if (rem[j] != 0) return false;
  x = mul_vec(y, u);
  return true;
}

int rank_q(const MatQ& m) {
  MatQ w = m;
  int r = 0;
  for (int j = 0; j < w.cols && r < w.rows; ++j) {
    int piv = -1;
    for (int i = r; i < w.rows; ++i)
      if (w(i, j) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int k = 0; k < w.cols; ++k) std::swap(w(r, k), w(piv, k));
    for (int i = r + 1; i < w.rows; ++i) {
      if (w(i, j) == 0) continue;
      Rat q = w(i, j) / w(r, j);
      for (int k = j; k < w.cols; ++k) w(i, k) -= q * w(r, k);
    }
    ++r;
  }
  return r;
}

}  // namespace sfc
