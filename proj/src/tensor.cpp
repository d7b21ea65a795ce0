#include "brank/tensor.hpp"

#include <stdexcept>

namespace brank {

bool Tensor3::is_zero() const {
  for (const auto& x : e)
    if (x != 0) return false;
  return true;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  if (dims() != o.dims()) throw std::invalid_argument("tensor dim mismatch");
  for (size_t i = 0; i < e.size(); ++i) e[i] += o.e[i];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  if (dims() != o.dims()) throw std::invalid_argument("tensor dim mismatch");
  for (size_t i = 0; i < e.size(); ++i) e[i] -= o.e[i];
  return *this;
}

Tensor3& Tensor3::operator*=(const Rational& s) {
  for (auto& x : e) x *= s;
  return *this;
}

Vector Tensor3::as_vector() const {
  Vector v(static_cast<int>(e.size()));
  v.e = e;
  return v;
}

Tensor3 rank1(const Rational& coeff, const Vector& a, const Vector& b, const Vector& c) {
  Tensor3 t(a.dim(), b.dim(), c.dim());
  if (coeff == 0) return t;
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i] == 0) continue;
    Rational ca = coeff * a[i];
    for (int j = 0; j < b.dim(); ++j) {
      if (b[j] == 0) continue;
      Rational cab = ca * b[j];
      for (int k = 0; k < c.dim(); ++k)
        if (c[k] != 0) t.at(i, j, k) += cab * c[k];
    }
  }
  return t;
}

Tensor3 tensor_from_terms(const std::vector<Rank1Term>& terms, Dims dims) {
  Tensor3 t(dims);
  for (const auto& term : terms) {
    if (term.a.dim() != dims[0] || term.b.dim() != dims[1] || term.c.dim() != dims[2])
      throw std::invalid_argument("rank-1 term inconsistent with requested dims");
    t += rank1(term.coeff, term.a, term.b, term.c);
  }
  return t;
}

Tensor3 mmult_tensor(int n) {
  if (n < 1) throw std::invalid_argument("mmult_tensor needs n >= 1");
  Tensor3 t(n * n, n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        t.at(i * n + j, j * n + k, k * n + i) = 1;
  return t;
}

Matrix flattening(const Tensor3& t, Factor f) {
  switch (f) {
    case Factor::A: {
      Matrix m(t.da, t.db * t.dc);
      for (int i = 0; i < t.da; ++i)
        for (int j = 0; j < t.db; ++j)
          for (int k = 0; k < t.dc; ++k) m.at(i, j * t.dc + k) = t.at(i, j, k);
      return m;
    }
    case Factor::B: {
      Matrix m(t.db, t.da * t.dc);
      for (int i = 0; i < t.da; ++i)
        for (int j = 0; j < t.db; ++j)
          for (int k = 0; k < t.dc; ++k) m.at(j, i * t.dc + k) = t.at(i, j, k);
      return m;
    }
    case Factor::C: {
      Matrix m(t.dc, t.da * t.db);
      for (int i = 0; i < t.da; ++i)
        for (int j = 0; j < t.db; ++j)
          for (int k = 0; k < t.dc; ++k) m.at(k, i * t.db + j) = t.at(i, j, k);
      return m;
    }
  }
  throw std::logic_error("unreachable");
}

std::array<int, 3> multilinear_rank(const Tensor3& t) {
  return {matrix_rank(flattening(t, Factor::A)),
          matrix_rank(flattening(t, Factor::B)),
          matrix_rank(flattening(t, Factor::C))};
}

Matrix contract(const Tensor3& t, const Vector& dual, Factor f) {
  switch (f) {
    case Factor::A: {
      if (dual.dim() != t.da) throw std::invalid_argument("dual dim mismatch");
      Matrix m(t.db, t.dc);
      for (int i = 0; i < t.da; ++i) {
        if (dual[i] == 0) continue;
        for (int j = 0; j < t.db; ++j)
          for (int k = 0; k < t.dc; ++k) m.at(j, k) += dual[i] * t.at(i, j, k);
      }
      return m;
    }
    case Factor::B: {
      if (dual.dim() != t.db) throw std::invalid_argument("dual dim mismatch");
      Matrix m(t.da, t.dc);
      for (int j = 0; j < t.db; ++j) {
        if (dual[j] == 0) continue;
        for (int i = 0; i < t.da; ++i)
          for (int k = 0; k < t.dc; ++k) m.at(i, k) += dual[j] * t.at(i, j, k);
      }
      return m;
    }
    case Factor::C: {
      if (dual.dim() != t.dc) throw std::invalid_argument("dual dim mismatch");
      Matrix m(t.da, t.db);
      for (int k = 0; k < t.dc; ++k) {
        if (dual[k] == 0) continue;
        for (int i = 0; i < t.da; ++i)
          for (int j = 0; j < t.db; ++j) m.at(i, j) += dual[k] * t.at(i, j, k);
      }
      return m;
    }
  }
  throw std::logic_error("unreachable");
}

Vector contract2(const Tensor3& t, const Vector& dual1, Factor f1,
                 const Vector& dual2, Factor f2) {
  if (f1 == f2) throw std::invalid_argument("contract2 needs distinct factors");
  Matrix m = contract(t, dual1, f1);
  // m is indexed by the two factors other than f1, in (A,B,C) order
  bool f2_first;
  if (f1 == Factor::A) f2_first = (f2 == Factor::B);
  else if (f1 == Factor::B) f2_first = (f2 == Factor::A);
  else f2_first = (f2 == Factor::A);
  if (f2_first) {
    if (dual2.dim() != m.rows) throw std::invalid_argument("dual dim mismatch");
    Vector v(m.cols);
    for (int r = 0; r < m.rows; ++r)
      for (int c = 0; c < m.cols; ++c) v[c] += dual2[r] * m.at(r, c);
    return v;
  }
  if (dual2.dim() != m.cols) throw std::invalid_argument("dual dim mismatch");
  Vector v(m.rows);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) v[r] += dual2[c] * m.at(r, c);
  return v;
}

Tensor3 change_basis(const Tensor3& t, const Matrix& ma, const Matrix& mb, const Matrix& mc) {
  if (ma.cols != t.da || mb.cols != t.db || mc.cols != t.dc)
    throw std::invalid_argument("basis change shape mismatch");
  Tensor3 r(ma.rows, mb.rows, mc.rows);
  for (int p = 0; p < t.da; ++p)
    for (int q = 0; q < t.db; ++q)
      for (int s = 0; s < t.dc; ++s) {
        const Rational& v = t.at(p, q, s);
        if (v == 0) continue;
        for (int i = 0; i < r.da; ++i) {
          if (ma.at(i, p) == 0) continue;
          Rational vi = v * ma.at(i, p);
          for (int j = 0; j < r.db; ++j) {
            if (mb.at(j, q) == 0) continue;
            Rational vij = vi * mb.at(j, q);
            for (int k = 0; k < r.dc; ++k)
              if (mc.at(k, s) != 0) r.at(i, j, k) += vij * mc.at(k, s);
          }
        }
      }
  return r;
}

}  // namespace brank
