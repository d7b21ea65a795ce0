#include "brank/wedge.hpp"

#include <stdexcept>

namespace brank {

namespace {

// polynomial row: coefficient vector per degree, truncated at max_deg
struct PolyRow {
  std::vector<Vector> c;
  int valuation(int max_deg) const {
    for (int d = 0; d <= max_deg && d < static_cast<int>(c.size()); ++d)
      if (!c[d].is_zero()) return d;
    return -1;
  }
};

}  // namespace

LimitPlaneResult wedge_taylor_first_term(const std::vector<CurveJet>& curves) {
  if (curves.empty()) throw std::invalid_argument("need at least one curve");
  Dims d = curves.front().dims();
  for (const auto& c : curves)
    if (c.dims() != d) throw std::invalid_argument("curves in inconsistent ambient spaces");

  int max_deg = 0;
  for (const auto& c : curves) max_deg += c.order;
  const int n = d[0] * d[1] * d[2];
  const int r = static_cast<int>(curves.size());

  std::vector<PolyRow> rows(r);
  for (int i = 0; i < r; ++i) {
    rows[i].c.assign(max_deg + 1, Vector::zero(n));
    for (int m = 0; m <= curves[i].order && m <= max_deg; ++m)
      rows[i].c[m] = curves[i].x[m].as_vector();
  }

  LimitPlaneResult out;
  out.dims = d;
  while (true) {
    std::vector<int> val(r);
    long long total = 0;
    for (int i = 0; i < r; ++i) {
      val[i] = rows[i].valuation(max_deg);
      if (val[i] < 0) {  // row vanished to truncation depth
        out.degenerate = true;
        return out;
      }
      total += val[i];
    }
    if (total > max_deg) {
      out.degenerate = true;
      return out;
    }
    std::vector<Vector> leading(r);
    for (int i = 0; i < r; ++i) leading[i] = rows[i].c[val[i]];
    auto dep = linear_dependency(leading);
    if (!dep) {
      out.vanishing_order = static_cast<int>(total);
      out.plane_basis.reserve(r);
      for (int i = 0; i < r; ++i) {
        Tensor3 t(d);
        t.e = leading[i].e;
        out.plane_basis.push_back(std::move(t));
      }
      return out;
    }
    // replace the involved row of highest valuation (ties: highest index);
    // this rescales the wedge by a nonzero constant and raises the valuation
    int j = -1;
    for (int i = 0; i < r; ++i)
      if ((*dep)[i] != 0 && (j < 0 || val[i] > val[j] || (val[i] == val[j] && i > j))) j = i;
    PolyRow next;
    next.c.assign(max_deg + 1, Vector::zero(n));
    for (int i = 0; i < r; ++i) {
      const Rational& lam = (*dep)[i];
      if (lam == 0) continue;
      int shift = val[j] - val[i];
      for (int deg = val[i]; deg + shift <= max_deg && deg < static_cast<int>(rows[i].c.size()); ++deg)
        next.c[deg + shift] += lam * rows[i].c[deg];
    }
    rows[j] = std::move(next);
  }
}

bool plane_contains(const LimitPlaneResult& plane, const Tensor3& p) {
  if (plane.degenerate) return false;
  std::vector<Vector> vs;
  vs.reserve(plane.plane_basis.size());
  for (const auto& t : plane.plane_basis) vs.push_back(t.as_vector());
  return in_span(vs, p.as_vector());
}

}  // namespace brank
