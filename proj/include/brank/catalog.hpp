#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "brank/wedge.hpp"

namespace brank {

// The sixteen components of sigma_6 \ sigma_5 for the triple Segre product:
// fourteen standard ones (joins of secant and tangential pieces) and the two
// exceptional two-point configurations.
enum class ComponentId {
  S6_0,        // six honest points
  J_S4_T2,     // J(sigma_4, tau_2)
  J_S3_T3,     // J(sigma_3, tau_3)
  J_T3_T3,     // J(tau_3, tau_3)
  J_S2_T2_T2,  // J(sigma_2, tau_2, tau_2)
  J_T2_T2_T2,  // J(tau_2, tau_2, tau_2)
  J_S2_T4,     // J(sigma_2, tau_4)
  J_T2_T4,     // J(tau_2, tau_4)
  J_X_T2_T3,   // J(X, tau_2, tau_3)
  J_X_T5,      // J(X, tau_5)
  J_X_T5P,     // J(X, tau_5')
  T6,          // tau_6
  T6P,         // tau_6'
  T6PP,        // tau_6''
  EX1,         // five curves to p, one to q in T_p X, second-order collision
  EX2,         // four curves to p, two to q in T_p X
};

inline constexpr int kComponentCount = 16;

const std::vector<ComponentId>& all_components();
std::string component_name(ComponentId id);
ComponentId component_from_name(const std::string& name);

// Free vectors instantiating a component's normal form: seven per factor
// (index 0 is the paper-style index 1; the seventh triple is used by EX1
// only). Repetitions and zeros are allowed by the type; genericity is not.
struct ComponentSpec {
  ComponentId id;
  Dims dims{4, 4, 4};
  std::vector<Vector> a, b, c;  // size 7 each

  const Vector& va(int i) const { return a[i - 1]; }  // 1-based accessors
  const Vector& vb(int i) const { return b[i - 1]; }
  const Vector& vc(int i) const { return c[i - 1]; }
};

// The displayed normal form of the component, with its printed constants.
// Throws on inconsistent dims or wrong vector counts.
Tensor3 normal_form(const ComponentSpec& spec);

// Deterministic random instantiation with small integer entries in [-9, 9].
std::pair<ComponentSpec, Tensor3> sample(ComponentId id, uint64_t seed, Dims dims);

// Six rank-1-valued curve jets whose wedge limit plane contains
// normal_form(spec): join components split into groups limiting to distinct
// points, EX1/EX2 use two limit points with q tangent to the Segre at p.
std::vector<CurveJet> witness_curves(const ComponentSpec& spec);

struct MembershipCertificate {
  bool ok = false;
  LimitPlaneResult plane;
  std::string note;  // set when the construction degenerates
};

// Runs the full check: builds witness curves, takes the wedge limit plane,
// and tests exact containment of the normal form.
MembershipCertificate certify_membership(const ComponentSpec& spec);

}  // namespace brank
