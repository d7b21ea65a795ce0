#pragma once

#include <vector>

#include "brank/segre.hpp"

namespace brank {

// First nonvanishing Taylor term of x_1(t) ^ ... ^ x_r(t), as a point of the
// Grassmannian: the t-power where it appears and a basis of the r-plane it
// spans. `degenerate` is set when every coefficient through the truncation
// bound (the sum of the jet orders) vanishes.
struct LimitPlaneResult {
  int vanishing_order = -1;
  std::vector<Tensor3> plane_basis;
  bool degenerate = false;
  Dims dims{0, 0, 0};
};

// Exact computation over Q[t]: rows are reduced until their lowest-order
// coefficient vectors are independent; row replacements only rescale the
// wedge, so the reported order and plane are those of the wedge itself.
LimitPlaneResult wedge_taylor_first_term(const std::vector<CurveJet>& curves);

// Exact membership of p in the span of the plane basis.
bool plane_contains(const LimitPlaneResult& plane, const Tensor3& p);

}  // namespace brank
