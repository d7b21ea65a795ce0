#include "brank/linalg.hpp"

#include <stdexcept>

namespace brank {

bool Vector::is_zero() const {
  for (const auto& x : e)
    if (x != 0) return false;
  return true;
}

Vector& Vector::operator+=(const Vector& o) {
  if (dim() != o.dim()) throw std::invalid_argument("vector dim mismatch");
  for (int i = 0; i < dim(); ++i) e[i] += o.e[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  if (dim() != o.dim()) throw std::invalid_argument("vector dim mismatch");
  for (int i = 0; i < dim(); ++i) e[i] -= o.e[i];
  return *this;
}

Vector& Vector::operator*=(const Rational& s) {
  for (auto& x : e) x *= s;
  return *this;
}

Vector Vector::unit(int dim, int i) {
  Vector v(dim);
  v[i] = 1;
  return v;
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("vector dim mismatch");
  Rational s = 0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Vector Matrix::row(int r) const {
  Vector v(cols);
  for (int c = 0; c < cols; ++c) v[c] = at(r, c);
  return v;
}

void Matrix::set_row(int r, const Vector& v) {
  for (int c = 0; c < cols; ++c) at(r, c) = v[c];
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rs) {
  if (rs.empty()) return Matrix(0, 0);
  Matrix m(static_cast<int>(rs.size()), rs[0].dim());
  for (int r = 0; r < m.rows; ++r) {
    if (rs[r].dim() != m.cols) throw std::invalid_argument("ragged rows");
    m.set_row(r, rs[r]);
  }
  return m;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
  Matrix z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j) z.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return z;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("matrix shape mismatch");
  Matrix z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
  return z;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols, m.rows);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
  return t;
}

int matrix_rank(const Matrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  // clear denominators row by row; row scaling preserves rank
  std::vector<std::vector<mpz_class>> z(m.rows, std::vector<mpz_class>(m.cols));
  for (int r = 0; r < m.rows; ++r) {
    mpz_class l = 1;
    for (int c = 0; c < m.cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).get_den().get_mpz_t());
    for (int c = 0; c < m.cols; ++c) {
      Rational q = m.at(r, c) * Rational(l);
      z[r][c] = q.get_num();
    }
  }
  // Bareiss elimination with pivot search
  int rank = 0;
  mpz_class prev = 1;
  int pr = 0;
  for (int pc = 0; pc < m.cols && pr < m.rows; ++pc) {
    int piv = -1;
    for (int r = pr; r < m.rows; ++r)
      if (z[r][pc] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(z[piv], z[pr]);
    for (int r = pr + 1; r < m.rows; ++r) {
      for (int c = pc + 1; c < m.cols; ++c) {
        mpz_class t = z[pr][pc] * z[r][c] - z[r][pc] * z[pr][c];
        mpz_divexact(z[r][c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      z[r][pc] = 0;
    }
    prev = z[pr][pc];
    ++pr;
    ++rank;
  }
  return rank;
}

Rational det(const Matrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("det of non-square matrix");
  int n = m.rows;
  Matrix w = m;
  Rational d = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (w.at(r, c) != 0) { piv = r; break; }
    if (piv < 0) return Rational(0);
    if (piv != c) {
      for (int k = 0; k < n; ++k) std::swap(w.at(piv, k), w.at(c, k));
      d = -d;
    }
    d *= w.at(c, c);
    Rational inv = 1 / w.at(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (w.at(r, c) == 0) continue;
      Rational f = w.at(r, c) * inv;
      for (int k = c; k < n; ++k) w.at(r, k) -= f * w.at(c, k);
    }
  }
  return d;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square matrix");
  int n = m.rows;
  Matrix w = m, inv = Matrix::identity(n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (w.at(r, c) != 0) { piv = r; break; }
    if (piv < 0) return std::nullopt;
    if (piv != c)
      for (int k = 0; k < n; ++k) {
        std::swap(w.at(piv, k), w.at(c, k));
        std::swap(inv.at(piv, k), inv.at(c, k));
      }
    Rational f = 1 / w.at(c, c);
    for (int k = 0; k < n; ++k) { w.at(c, k) *= f; inv.at(c, k) *= f; }
    for (int r = 0; r < n; ++r) {
      if (r == c || w.at(r, c) == 0) continue;
      Rational g = w.at(r, c);
      for (int k = 0; k < n; ++k) {
        w.at(r, k) -= g * w.at(c, k);
        inv.at(r, k) -= g * inv.at(c, k);
      }
    }
  }
  return inv;
}

Matrix rref(const Matrix& m) {
  Matrix w = m;
  int pr = 0;
  for (int pc = 0; pc < w.cols && pr < w.rows; ++pc) {
    int piv = -1;
    for (int r = pr; r < w.rows; ++r)
      if (w.at(r, pc) != 0) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != pr)
      for (int k = 0; k < w.cols; ++k) std::swap(w.at(piv, k), w.at(pr, k));
    Rational f = 1 / w.at(pr, pc);
    for (int k = pc; k < w.cols; ++k) w.at(pr, k) *= f;
    for (int r = 0; r < w.rows; ++r) {
      if (r == pr || w.at(r, pc) == 0) continue;
      Rational g = w.at(r, pc);
      for (int k = pc; k < w.cols; ++k) w.at(r, k) -= g * w.at(pr, k);
    }
    ++pr;
  }
  return w;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  Matrix r = rref(m);
  std::vector<int> pivot_col;  // pivot column of each nonzero row
  std::vector<bool> is_pivot(m.cols, false);
  for (int row = 0; row < r.rows; ++row) {
    int pc = -1;
    for (int c = 0; c < r.cols; ++c)
      if (r.at(row, c) != 0) { pc = c; break; }
    if (pc < 0) break;
    pivot_col.push_back(pc);
    is_pivot[pc] = true;
  }
  std::vector<Vector> basis;
  for (int fc = 0; fc < m.cols; ++fc) {
    if (is_pivot[fc]) continue;
    Vector v(m.cols);
    v[fc] = 1;
    for (size_t row = 0; row < pivot_col.size(); ++row)
      v[pivot_col[row]] = -r.at(static_cast<int>(row), fc);
    basis.push_back(v);
  }
  return basis;
}

std::optional<std::vector<Rational>> linear_dependency(const std::vector<Vector>& vs) {
  if (vs.empty()) return std::nullopt;
  int n = vs[0].dim(), k = static_cast<int>(vs.size());
  Matrix m(n, k);  // columns are the vectors
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < n; ++r) m.at(r, c) = vs[c][r];
  auto ker = kernel_basis(m);
  if (ker.empty()) return std::nullopt;
  return ker.front().e;
}

std::vector<Vector> span_basis(const std::vector<Vector>& vs) {
  if (vs.empty()) return {};
  Matrix r = rref(Matrix::from_rows(vs));
  std::vector<Vector> basis;
  for (int row = 0; row < r.rows; ++row) {
    Vector v = r.row(row);
    if (!v.is_zero()) basis.push_back(v);
  }
  return basis;
}

int span_dim(const std::vector<Vector>& vs) {
  if (vs.empty()) return 0;
  return matrix_rank(Matrix::from_rows(vs));
}

bool in_span(const std::vector<Vector>& vs, const Vector& v) {
  if (v.is_zero()) return true;
  if (vs.empty()) return false;
  std::vector<Vector> aug = vs;
  aug.push_back(v);
  return matrix_rank(Matrix::from_rows(aug)) == matrix_rank(Matrix::from_rows(vs));
}

bool same_span(const std::vector<Vector>& xs, const std::vector<Vector>& ys) {
  return span_basis(xs) == span_basis(ys);
}

}  // namespace brank
