#pragma once

#include <vector>

#include "apollo/vec.hpp"

namespace apollo {

/**
 * The bilinear form J on the tangent-sphere basis: 1's along the diagonal,
 * -1's off the diagonal.  Signature (rho-1, 1): eigenvalue 2 on the sum-zero
 * subspace, eigenvalue 2-rho on (1,...,1).
 *
 * The closed form  u (.) v = 2*sum(u_i v_i) - sum(u)*sum(v)  is the fast path;
 * apply() evaluates u^t J v literally and exists as the independent route.
 */
struct BilinearForm {
  int rho;

  explicit BilinearForm(int r) : rho(r) {}

  Int entry(int i, int j) const { return i == j ? 1 : -1; }
  std::vector<Vec> matrix() const;

  // u^t J v by explicit matrix evaluation.
  Int apply(const Vec& u, const Vec& v) const;

  // J^{-1} = (1/2)(I + (1/(2-rho)) * ones*ones^t), verified by inverse_check().
  std::vector<RVec> inverse() const;
  bool inverse_check() const;  // J * J^{-1} == I exactly
};

// Lorentz product via the closed form. Throws on dimension mismatch.
Int dot(const Vec& u, const Vec& v);
Rat dot(const RVec& u, const RVec& v);
Rat dot(const RVec& u, const Vec& v);
inline Rat dot(const Vec& u, const RVec& v) { return dot(v, u); }

// x - 2*((n.x)/(n.n))*n.  Requires n (.) n > 0.
RVec reflect(const Vec& n, const Vec& x);
RVec reflect(const Vec& n, const RVec& x);

// The -1 map centered at P in the perspective E:
//   2*((P.x)E + (E.x)P)/(P.E) - x.
// Requires P, E isotropic and P (.) E != 0.
RVec phi_map(const Vec& P, const Vec& E, const Vec& x);
RVec phi_map(const Vec& P, const Vec& E, const RVec& x);

// -(n.E)/sqrt(n.n); exact only when n (.) n is a perfect square, else throws.
Rat curvature(const Vec& n, const Vec& E);

// (n.E)^2/(n.n), total for every wall with positive self-product.
Rat curvature_squared(const Vec& n, const Vec& E);

// Center of the sphere H_{m,E}: inversion sends the point at infinity to the
// center, so this is reflect(m, E).  Throws when m (.) E == 0 (curvature 0:
// the center is at infinity, which signals descent termination).
RVec center(const Vec& m, const Vec& E);
Vec center_ray(const Vec& m, const Vec& E);  // canonical primitive representative

// Squared Euclidean distance in the perspective E:
//   -2 A.B / ((A.E)(B.E)).
// A, B isotropic, neither on the ray of E.  The scale depends on the chosen
// representative of E: doubling E halves distances.
Rat euclid_dist2(const Vec& A, const Vec& B, const Vec& E);

// Midpoint of AB in the perspective E: normalize against E, average, and
// correct back onto the isotropic cone.  Returns the canonical primitive ray.
Vec midpoint(const Vec& A, const Vec& B, const Vec& E);

}  // namespace apollo
