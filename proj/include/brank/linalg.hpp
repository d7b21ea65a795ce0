#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "brank/rational.hpp"

namespace brank {

struct Vector {
  std::vector<Rational> e;

  Vector() = default;
  explicit Vector(int dim) : e(dim) {}
  Vector(std::initializer_list<Rational> xs) : e(xs) {}

  int dim() const { return static_cast<int>(e.size()); }
  Rational& operator[](int i) { return e[i]; }
  const Rational& operator[](int i) const { return e[i]; }
  bool is_zero() const;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Rational& s);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Rational& s, Vector a) { return a *= s; }
  friend bool operator==(const Vector& a, const Vector& b) { return a.e == b.e; }

  static Vector unit(int dim, int i);
  static Vector zero(int dim) { return Vector(dim); }
};

Rational dot(const Vector& a, const Vector& b);

struct Matrix {
  int rows = 0, cols = 0;
  std::vector<Rational> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Rational& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  Vector row(int r) const;
  void set_row(int r, const Vector& v);

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vector>& rs);
};

Matrix operator*(const Matrix& x, const Matrix& y);
Matrix operator-(const Matrix& x, const Matrix& y);
Matrix transpose(const Matrix& m);

// Exact rank by fraction-free (Bareiss) elimination on a denominator-cleared
// integer copy; avoids the coefficient blowup of plain rational pivoting.
int matrix_rank(const Matrix& m);

Rational det(const Matrix& m);

// Returns nullopt when m is singular.
std::optional<Matrix> inverse(const Matrix& m);

// Reduced row echelon form over the rationals.
Matrix rref(const Matrix& m);

// Basis of { x : m x = 0 }.
std::vector<Vector> kernel_basis(const Matrix& m);

// One nonzero dependency among the given vectors (sum lambda_i v_i = 0),
// or nullopt if they are independent. Deterministic.
std::optional<std::vector<Rational>> linear_dependency(const std::vector<Vector>& vs);

// Canonical basis (rref rows) of a span; equal spans give equal output.
std::vector<Vector> span_basis(const std::vector<Vector>& vs);

bool in_span(const std::vector<Vector>& vs, const Vector& v);
bool same_span(const std::vector<Vector>& xs, const std::vector<Vector>& ys);

int span_dim(const std::vector<Vector>& vs);

}  // namespace brank
