#pragma once

#include <array>
#include <vector>

#include "brank/linalg.hpp"

namespace brank {

enum class Factor { A, B, C };

using Dims = std::array<int, 3>;

// Dense order-3 tensor over the rationals, entry (i,j,k) at ((i*db)+j)*dc+k.
// Every tensor in scope has side <= 16, so dense storage throughout.
struct Tensor3 {
  int da = 0, db = 0, dc = 0;
  std::vector<Rational> e;

  Tensor3() = default;
  Tensor3(int a, int b, int c)
      : da(a), db(b), dc(c), e(static_cast<size_t>(a) * b * c) {}
  explicit Tensor3(Dims d) : Tensor3(d[0], d[1], d[2]) {}

  Dims dims() const { return {da, db, dc}; }
  Rational& at(int i, int j, int k) {
    return e[(static_cast<size_t>(i) * db + j) * dc + k];
  }
  const Rational& at(int i, int j, int k) const {
    return e[(static_cast<size_t>(i) * db + j) * dc + k];
  }

  bool is_zero() const;

  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  Tensor3& operator*=(const Rational& s);
  friend Tensor3 operator+(Tensor3 x, const Tensor3& y) { return x += y; }
  friend Tensor3 operator-(Tensor3 x, const Tensor3& y) { return x -= y; }
  friend Tensor3 operator*(const Rational& s, Tensor3 x) { return x *= s; }
  friend bool operator==(const Tensor3& x, const Tensor3& y) {
    return x.da == y.da && x.db == y.db && x.dc == y.dc && x.e == y.e;
  }

  // The tensor flattened to a vector of length da*db*dc (same index order).
  Vector as_vector() const;
};

// coeff * a (x) b (x) c
struct Rank1Term {
  Rational coeff;
  Vector a, b, c;
};

Tensor3 rank1(const Rational& coeff, const Vector& a, const Vector& b, const Vector& c);

// Sum of the given decomposable terms. Throws on a dimension mismatch.
Tensor3 tensor_from_terms(const std::vector<Rank1Term>& terms, Dims dims);

// The n^2 x n^2 x n^2 matrix multiplication tensor: entry 1 at
// ((i,j),(j,k),(k,i)) in row-major index pairs. The third factor carries the
// transpose-output pairing, which makes the tensor cyclically symmetric.
Tensor3 mmult_tensor(int n);

// T as a map from the chosen factor's dual into the product of the others:
// factor A gives a da x (db*dc) matrix, etc.
Matrix flattening(const Tensor3& t, Factor f);

// Triple of exact flattening ranks (rA, rB, rC).
std::array<int, 3> multilinear_rank(const Tensor3& t);

// Plug `dual` into the chosen slot; the result maps the free slots' duals.
// Factor B: M[i][k] = sum_j T(i,j,k) dual[j], and cyclically.
Matrix contract(const Tensor3& t, const Vector& dual, Factor f);

// Contract two slots at once, leaving a vector in the remaining factor.
Vector contract2(const Tensor3& t, const Vector& dual1, Factor f1,
                 const Vector& dual2, Factor f2);

// Apply invertible changes of basis per factor: T'(i,j,k) = sum ma(i,p) mb(j,q) mc(k,r) T(p,q,r).
Tensor3 change_basis(const Tensor3& t, const Matrix& ma, const Matrix& mb, const Matrix& mc);

}  // namespace brank
