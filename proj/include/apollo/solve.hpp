#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apollo/lorentz.hpp"

namespace apollo {

/**
 * Exact element of Q(sqrt(d)): value = a + b*sqrt(d), with d a fixed
 * nonnegative integer radicand.  Enough field arithmetic for sign tests and
 * distance comparisons; d == 0 or b == 0 degenerates to a rational.
 */
struct QuadExt {
  Rat a, b;
  Int d;

  QuadExt() : a(0), b(0), d(0) {}
  QuadExt(Rat a_, Rat b_, Int d_) : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {}
  static QuadExt rational(Rat r) { return QuadExt(std::move(r), Rat(0), Int(0)); }

  bool is_rational() const { return sign(b) == 0 || sign(d) == 0; }
  Rat rational_value() const;

  QuadExt operator+(const QuadExt& o) const;
  QuadExt operator-(const QuadExt& o) const;
  QuadExt operator*(const QuadExt& o) const;
  QuadExt inverse() const;

  int sgn() const;  // exact sign of a + b*sqrt(d)
  std::string str() const;
};

// A ray with coordinates in Q(sqrt(d)): u + v*sqrt(d) componentwise.
// Rational when v vanishes (or d = 0); lattice() then clears to the canonical
// primitive integer representative.
struct QuadVec {
  RVec u, v;
  Int d;

  int rho() const { return (int)u.size(); }
  bool is_rational() const;
  Vec lattice() const;

  QuadExt dot_with(const Vec& w) const;        // this (.) w
  QuadExt dot_self() const;                    // this (.) this
  void normalize_future();                     // flip sign so (.) D < 0
  std::string str() const;
};

/**
 * Integer basis of { x in span : wall (.) x = 0 for every wall }.
 * An empty span means the full space of dimension rho.  Basis vectors are
 * primitive integer vectors; exact rational elimination underneath.
 */
std::vector<Vec> lattice_kernel(const std::vector<Vec>& walls, const std::vector<Vec>& span, int rho);

/**
 * The second isotropic ray of a 2-dimensional solution space that already
 * contains the isotropic ray `known`.
 *
 * Writing the space as span{known, w}, isotropy of a*known + b*w forces
 * a = -(w.w)/(2 known.w) * b, so the second ray is rational, hence a lattice
 * ray.  Returned canonical (primitive, sum > 0).  Throws if the solution
 * space is not 2-dimensional, does not contain `known`, the pencil is
 * degenerate (known.w == 0), or the second ray coincides with `known`.
 */
Vec isotropic_on_plane(const std::vector<Vec>& span, const std::vector<Vec>& walls, const Vec& known);

/**
 * Both isotropic rays (0, 1 or 2) of the pencil spanned by two independent
 * vectors.  Rays live in Q(sqrt(disc)); disc < 0 means no real intersection.
 */
std::vector<QuadVec> isotropic_rays_in_pencil(const Vec& b1, const Vec& b2);

}  // namespace apollo
