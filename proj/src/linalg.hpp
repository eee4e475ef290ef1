#pragma once

#include "ints.hpp"

namespace sfc {

// Dense row-major matrices over Z and Q. Row convention throughout: lattices
// and linear maps act on row vectors, v -> v*M.
struct MatZ {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  MatZ() = default;
  MatZ(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
  static MatZ identity(int n);
  static MatZ scalar(int n, const Int& d);

  Int& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
  const Int& operator()(int i, int j) const { return a[size_t(i) * cols + j]; }

  bool operator==(const MatZ& o) const = default;

  MatZ transpose() const;
  MatZ mul(const MatZ& o) const;
  MatZ vstack(const MatZ& o) const;
  std::vector<Int> row(int i) const;
  void set_row(int i, const std::vector<Int>& v);
  bool is_zero_row(int i) const;
};

struct MatQ {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  MatQ() = default;
  MatQ(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
  static MatQ identity(int n);
  static MatQ from(const MatZ& m);

  Rat& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
  const Rat& operator()(int i, int j) const { return a[size_t(i) * cols + j]; }

  MatQ mul(const MatQ& o) const;
  // common denominator d and integer matrix n with this = n/d
  void split(MatZ& n, Int& d) const;
};

std::vector<Int> mul_vec(const std::vector<Int>& v, const MatZ& m);
std::vector<Rat> mul_vec(const std::vector<Rat>& v, const MatQ& m);

// Row Hermite normal form. Returns H with the same row span as m, zero rows
// removed, pivots positive, entries above each pivot reduced into [0, pivot).
MatZ hnf(const MatZ& m);

// HNF together with a unimodular U (rows x rows) with U*m = [H; 0].
// H keeps its zero rows here so that U lines up; rank returned separately.
void hnf_transform(const MatZ& m, MatZ& h, MatZ& u, int& rank);

// Basis (rows) of { v : v*m = 0 } over Z.
MatZ kernel_z(const MatZ& m);

// Smith normal form: u*m*v = d diagonal, d_i | d_{i+1}; u, v unimodular.
void snf(const MatZ& m, MatZ& d, MatZ& u, MatZ& v);

Int det(const MatZ& m);
Rat det(const MatQ& m);

MatQ inverse(const MatQ& m);

// Solve x*m = b over Q (m square nonsingular).
std::vector<Rat> solve_right(const MatQ& m, const std::vector<Rat>& b);

// Solve x*m = b with x integral, m full row rank (rows <= cols); returns
// false if no integral solution exists.
bool solve_integral(const MatZ& m, const std::vector<Int>& b, std::vector<Int>& x);

// rank over Q
int rank_q(const MatQ& m);

}  // namespace sfc
