#pragma once

#include <optional>
#include <vector>

#include "brank/tensor.hpp"

namespace brank {

// A point a (x) b (x) c of the cone over the Segre variety; all factors nonzero.
struct SegrePoint {
  Vector a, b, c;
  SegrePoint() = default;
  SegrePoint(Vector a_, Vector b_, Vector c_);
  Tensor3 tensor() const { return rank1(Rational(1), a, b, c); }
  Dims dims() const { return {a.dim(), b.dim(), c.dim()}; }
  friend bool operator==(const SegrePoint& x, const SegrePoint& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }
};

// Tangent direction at `base`, recorded by its data triple (a2, b2, c2):
// the tangent tensor is a2 b c + a b2 c + a b c2. Some (not all) of the data
// vectors may be zero.
struct TangentData {
  SegrePoint base;
  Vector a2, b2, c2;
  TangentData() = default;
  TangentData(SegrePoint base_, Vector a2_, Vector b2_, Vector c2_);
  Tensor3 tensor() const;
};

// II(v,w) = a1 b2 c3 + a1 b3 c2 + a2 b1 c3 + a3 b1 c2 + a2 b3 c1 + a3 b2 c1,
// with (a2,b2,c2) the data of v and (a3,b3,c3) the data of w.
Tensor3 second_fundamental_form(const TangentData& v, const TangentData& w);

// III(u,v,w) = a4 b2 c3 + a4 b3 c2 + a2 b4 c3 + a3 b4 c2 + a2 b3 c4 + a3 b2 c4,
// the full symmetrization over the three data triples.
Tensor3 third_fundamental_form(const TangentData& u, const TangentData& v,
                               const TangentData& w);

// Truncated expansion x0 + t x1 + ... + t^k x_k of a curve in tensor space;
// x0 is decomposable for jets of curves on the Segre cone.
struct CurveJet {
  int order = 0;
  std::vector<Tensor3> x;  // size order+1
  Dims dims() const { return x.front().dims(); }
};

// Which partition-sum weights to use when assembling jet coefficients.
//   lemma_literal: each F_j summand enters with coefficient 1. This matches
//     the printed component normal forms (their constants 2 and 6 come from
//     evaluating the symmetric forms on repeated arguments).
//   taylor: each summand enters with 1/prod(multiplicities!), which is what
//     an honest product curve a(t) (x) b(t) (x) c(t) satisfies exactly.
enum class JetConvention { lemma_literal, taylor };

// x_k = sum over partitions of k into 2 or 3 parts of F_j(y_parts) + y_k,
// with F2 = II, F3 = III and all higher forms zero. ys.size() == k.
CurveJet curve_jet(const SegrePoint& base, const std::vector<TangentData>& ys,
                   int k, JetConvention conv = JetConvention::lemma_literal);

// Sum of all jet coefficients x0 + x1 + ... + x_k.
Tensor3 tangential_point(const CurveJet& jet);

// Polynomial vector a0 + t a1 + ... ; coefficient per degree.
struct VectorPoly {
  std::vector<Vector> c;
  int degree() const { return static_cast<int>(c.size()) - 1; }
  Vector eval(const Rational& t) const;
};

// Exact expansion of a(t) (x) b(t) (x) c(t), truncated at `order`
// (default: full degree). Stays rank one for every t by construction.
CurveJet product_curve_jet(const VectorPoly& a, const VectorPoly& b,
                           const VectorPoly& c, int order = -1);

// Jet of t -> x(s t): multiplies x_k by s^k.
CurveJet reparametrize(const CurveJet& jet, const Rational& s);

// Evaluate the jet polynomial at a parameter value.
Tensor3 eval_jet(const CurveJet& jet, const Rational& t);

// Recover tangent data y_1..y_k from jet coefficients under the given
// convention, using duals adapted to the base point to split off the tangent
// part. Returns nullopt when some residual x_k - (partition sums) is not a
// tangent tensor, i.e. the coefficients do not have the required shape.
std::optional<std::vector<TangentData>> extract_jet_data(const CurveJet& jet,
                                                         const SegrePoint& base,
                                                         JetConvention conv);

}  // namespace brank
