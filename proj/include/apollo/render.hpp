#pragma once

#include <string>
#include <vector>

#include "apollo/packing.hpp"

namespace apollo {

/**
 * Euclidean chart on the perspective E: origin at the isotropic ray F,
 * axes an orthonormalized basis of {x : x.E = x.F = 0} (positive definite
 * there).  chart() of an isotropic ray reproduces euclid_dist2 to double
 * precision.  Floating point lives here and nowhere else.
 */
struct EuclideanChart {
  int rho = 0;
  Vec E, F;
  std::vector<std::vector<double>> basis;  // rho-2 (or rho-3 for a slice) rows of length rho

  std::vector<double> chart(const RVec& ray) const;
  std::vector<double> chart(const Vec& ray) const;
  double dot_d(const std::vector<double>& u, const Vec& v) const;
};

// Chart with F = e_1 + e_rho, the tangency point of e_1 and e_rho.
EuclideanChart make_chart(int rho, const Vec& E);

// Two-dimensional chart on the cross-section plane x_{rho-1} = x_rho
// (origin at the tangency of e_1 and e_2); used for the rho = 5 figure.
EuclideanChart make_slice_chart(int rho, const Vec& E);

struct CircleDatum {
  std::vector<double> center;  // circle center, or a point on the line when curvature 0
  double radius = 0;
  int curvature_sign = 0;              // 0 marks a line datum
  std::vector<double> line_normal;     // unit normal for line data
  double line_offset = 0;              // line: normal . x = offset
  Int exact_curvature;
};

CircleDatum sphere_to_datum(const SphereRecord& rec, const EuclideanChart& chart);

// Cross-section circle of the sphere by the plane v (only spheres that
// meet the plane transversally: (m.v)^2 < (m.m)(v.v), tested exactly).
bool slice_datum(const SphereRecord& rec, const Vec& plane, const EuclideanChart& chart, CircleDatum& out);

// Deterministic SVG: elements sorted by curvature then center, viewBox from
// the data extent with a 5% margin, stroke width 0.5% of the extent.
std::string emit_svg(const std::vector<CircleDatum>& data);
void write_file(const std::string& path, const std::string& content);

}  // namespace apollo
