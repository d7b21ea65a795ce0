#include "brank/segre.hpp"

#include <stdexcept>

namespace brank {

SegrePoint::SegrePoint(Vector a_, Vector b_, Vector c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (a.is_zero() || b.is_zero() || c.is_zero())
    throw std::invalid_argument("Segre point needs nonzero factors");
}

TangentData::TangentData(SegrePoint base_, Vector a2_, Vector b2_, Vector c2_)
    : base(std::move(base_)), a2(std::move(a2_)), b2(std::move(b2_)), c2(std::move(c2_)) {
  if (a2.dim() != base.a.dim() || b2.dim() != base.b.dim() || c2.dim() != base.c.dim())
    throw std::invalid_argument("tangent data dims do not match base");
}

Tensor3 TangentData::tensor() const {
  Tensor3 t = rank1(Rational(1), a2, base.b, base.c);
  t += rank1(Rational(1), base.a, b2, base.c);
  t += rank1(Rational(1), base.a, base.b, c2);
  return t;
}

namespace {
void require_same_base(const TangentData& v, const TangentData& w) {
  if (!(v.base == w.base))
    throw std::invalid_argument("tangent vectors live at different base points");
}
}  // namespace

Tensor3 second_fundamental_form(const TangentData& v, const TangentData& w) {
  require_same_base(v, w);
  const SegrePoint& p = v.base;
  Tensor3 t = rank1(Rational(1), p.a, v.b2, w.c2);
  t += rank1(Rational(1), p.a, w.b2, v.c2);
  t += rank1(Rational(1), v.a2, p.b, w.c2);
  t += rank1(Rational(1), w.a2, p.b, v.c2);
  t += rank1(Rational(1), v.a2, w.b2, p.c);
  t += rank1(Rational(1), w.a2, v.b2, p.c);
  return t;
}

Tensor3 third_fundamental_form(const TangentData& u, const TangentData& v,
                               const TangentData& w) {
  require_same_base(u, v);
  require_same_base(u, w);
  Tensor3 t = rank1(Rational(1), u.a2, v.b2, w.c2);
  t += rank1(Rational(1), u.a2, w.b2, v.c2);
  t += rank1(Rational(1), v.a2, u.b2, w.c2);
  t += rank1(Rational(1), w.a2, u.b2, v.c2);
  t += rank1(Rational(1), v.a2, w.b2, u.c2);
  t += rank1(Rational(1), w.a2, v.b2, u.c2);
  return t;
}

CurveJet curve_jet(const SegrePoint& base, const std::vector<TangentData>& ys,
                   int k, JetConvention conv) {
  if (static_cast<int>(ys.size()) != k)
    throw std::invalid_argument("curve_jet needs exactly k tangent data");
  for (const auto& y : ys)
    if (!(y.base == base))
      throw std::invalid_argument("tangent data at a different base point");

  CurveJet jet;
  jet.order = k;
  jet.x.reserve(k + 1);
  jet.x.push_back(base.tensor());
  const bool taylor = (conv == JetConvention::taylor);
  for (int m = 1; m <= k; ++m) {
    Tensor3 xm = ys[m - 1].tensor();
    // partitions m = i + j, i <= j
    for (int i = 1; 2 * i <= m; ++i) {
      int j = m - i;
      Tensor3 f = second_fundamental_form(ys[i - 1], ys[j - 1]);
      if (taylor && i == j) f *= rat(1, 2);
      xm += f;
    }
    // partitions m = i + j + l, i <= j <= l
    for (int i = 1; 3 * i <= m; ++i)
      for (int j = i; i + 2 * j <= m; ++j) {
        int l = m - i - j;
        if (l < j) continue;
        Tensor3 f = third_fundamental_form(ys[i - 1], ys[j - 1], ys[l - 1]);
        if (taylor) {
          if (i == j && j == l) f *= rat(1, 6);
          else if (i == j || j == l) f *= rat(1, 2);
        }
        xm += f;
      }
    jet.x.push_back(std::move(xm));
  }
  return jet;
}

Tensor3 tangential_point(const CurveJet& jet) {
  Tensor3 t = jet.x.front();
  for (size_t i = 1; i < jet.x.size(); ++i) t += jet.x[i];
  return t;
}

Vector VectorPoly::eval(const Rational& t) const {
  Vector v(c.front().dim());
  Rational p = 1;
  for (const auto& coeff : c) {
    v += p * coeff;
    p *= t;
  }
  return v;
}

CurveJet product_curve_jet(const VectorPoly& a, const VectorPoly& b,
                           const VectorPoly& c, int order) {
  int full = a.degree() + b.degree() + c.degree();
  if (order < 0) order = full;
  CurveJet jet;
  jet.order = order;
  Dims d = {a.c.front().dim(), b.c.front().dim(), c.c.front().dim()};
  jet.x.assign(order + 1, Tensor3(d));
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j)
      for (int k = 0; k <= c.degree(); ++k) {
        int m = i + j + k;
        if (m > order) continue;
        jet.x[m] += rank1(Rational(1), a.c[i], b.c[j], c.c[k]);
      }
  return jet;
}

CurveJet reparametrize(const CurveJet& jet, const Rational& s) {
  CurveJet out = jet;
  Rational p = 1;
  for (int m = 1; m <= out.order; ++m) {
    p *= s;
    out.x[m] *= p;
  }
  return out;
}

Tensor3 eval_jet(const CurveJet& jet, const Rational& t) {
  Tensor3 v(jet.dims());
  Rational p = 1;
  for (int m = 0; m <= jet.order; ++m) {
    v += p * jet.x[m];
    p *= t;
  }
  return v;
}

namespace {
// dual vector picking out the first nonzero coordinate, normalized to 1
Vector adapted_dual(const Vector& v) {
  for (int i = 0; i < v.dim(); ++i)
    if (v[i] != 0) {
      Vector d(v.dim());
      d[i] = 1 / v[i];
      return d;
    }
  throw std::invalid_argument("zero vector has no adapted dual");
}
}  // namespace

std::optional<std::vector<TangentData>> extract_jet_data(const CurveJet& jet,
                                                         const SegrePoint& base,
                                                         JetConvention conv) {
  if (!(jet.x.front() == base.tensor())) return std::nullopt;
  Vector da = adapted_dual(base.a), db = adapted_dual(base.b), dc = adapted_dual(base.c);
  std::vector<TangentData> ys;
  for (int m = 1; m <= jet.order; ++m) {
    // residual = x_m minus all fundamental-form terms built from lower data,
    // obtained by extending the recovered data with a zero y_m
    Tensor3 res = jet.x[m];
    std::vector<TangentData> ext = ys;
    ext.emplace_back(base, Vector::zero(base.a.dim()), Vector::zero(base.b.dim()),
                     Vector::zero(base.c.dim()));
    res -= curve_jet(base, ext, m, conv).x[m];
    // Split in adapted coordinates. For a genuine tangent tensor the three
    // contractions agree on the shared scale S; normalizing alpha and beta
    // against the base directions leaves gamma carrying any base component.
    Vector gamma = contract2(res, da, Factor::A, db, Factor::B);
    Vector alpha = contract2(res, db, Factor::B, dc, Factor::C);
    Vector beta = contract2(res, da, Factor::A, dc, Factor::C);
    Rational s = dot(dc, gamma);
    alpha -= s * base.a;
    beta -= s * base.b;
    TangentData y(base, alpha, beta, gamma);
    if (!(y.tensor() == res)) return std::nullopt;  // not of tangent shape
    ys.push_back(std::move(y));
  }
  return ys;
}

}  // namespace brank
