#include "apollo/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace apollo {

namespace {

double jdot_d(const std::vector<double>& u, const std::vector<double>& v) {
  double s = 0, su = 0, sv = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    s += u[i] * v[i];
    su += u[i];
    sv += v[i];
  }
  return 2 * s - su * sv;
}

std::vector<double> to_d(const RVec& v) {
  std::vector<double> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i].get_d();
  return r;
}

std::vector<double> to_d(const Vec& v) {
  std::vector<double> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i].get_d();
  return r;
}

EuclideanChart chart_from_orthogonality(int rho, const Vec& E, const Vec& F, const std::vector<Vec>& extra) {
  if (dot(E, E) != 0) throw Error("make_chart: E must be isotropic");
  if (dot(F, F) != 0 || dot(E, F) == 0) throw Error("make_chart: F must be isotropic with E.F != 0");
  std::vector<Vec> walls = {E, F};
  for (const Vec& w : extra) walls.push_back(w);
  std::vector<Vec> raw = lattice_kernel(walls, {}, rho);

  EuclideanChart ch;
  ch.rho = rho;
  ch.E = E;
  ch.F = F;
  // Gram-Schmidt under the form, which is positive definite orthogonal to
  // the hyperbolic plane spanned by E and F.
  std::vector<std::vector<double>> ortho;
  for (const Vec& b : raw) {
    std::vector<double> v = to_d(b);
    for (const auto& u : ortho) {
      double c = jdot_d(v, u);
      for (size_t i = 0; i < v.size(); ++i) v[i] -= c * u[i];
    }
    double n2 = jdot_d(v, v);
    if (n2 <= 0) throw Error("make_chart: basis not positive definite (degenerate input)");
    double inv = 1.0 / std::sqrt(n2);
    for (double& x : v) x *= inv;
    ortho.push_back(std::move(v));
  }
  ch.basis = std::move(ortho);
  return ch;
}

}  // namespace

std::vector<double> EuclideanChart::chart(const RVec& ray) const {
  Rat re = dot(ray, E);
  if (sign(re) == 0) throw Error("chart: ray at infinity");
  RVec norm = scaled(ray, Rat(-1) / re);
  std::vector<double> nd = to_d(norm);
  std::vector<double> out(basis.size());
  for (size_t j = 0; j < basis.size(); ++j) out[j] = jdot_d(nd, basis[j]);
  return out;
}

std::vector<double> EuclideanChart::chart(const Vec& ray) const { return chart(to_rvec(ray)); }

double EuclideanChart::dot_d(const std::vector<double>& u, const Vec& v) const { return jdot_d(u, to_d(v)); }

EuclideanChart make_chart(int rho, const Vec& E) {
  return chart_from_orthogonality(rho, E, add(unit(rho, 0), unit(rho, rho - 1)), {});
}

EuclideanChart make_slice_chart(int rho, const Vec& E) {
  Vec plane = sub(unit(rho, rho - 2), unit(rho, rho - 1));
  return chart_from_orthogonality(rho, E, add(unit(rho, 0), unit(rho, 1)), {plane});
}

namespace {

CircleDatum datum_from_plane_vector(const RVec& m, const Rat& self, const EuclideanChart& chart) {
  CircleDatum d;
  Rat me = dot(m, chart.E);
  d.exact_curvature = 0;  // exact only for unit records; callers overwrite
  if (sign(me) != 0) {
    // curvature = -m.E / |m| in chart units
    double k = Rat(-me).get_d() / std::sqrt(self.get_d());
    d.curvature_sign = k > 0 ? 1 : -1;
    d.radius = 1.0 / std::abs(k);
    Rat coef = Rat(-2) * me / self;
    RVec center(m.size());
    for (size_t i = 0; i < m.size(); ++i) center[i] = Rat(chart.E[i]) + coef * m[i];
    d.center = chart.chart(center);
    return d;
  }
  d.curvature_sign = 0;
  std::vector<double> md = to_d(m);
  d.line_normal.resize(chart.basis.size());
  double norm = 0;
  for (size_t j = 0; j < chart.basis.size(); ++j) {
    d.line_normal[j] = jdot_d(md, chart.basis[j]);
    norm += d.line_normal[j] * d.line_normal[j];
  }
  norm = std::sqrt(norm);
  if (norm == 0) throw Error("sphere_to_datum: degenerate line");
  Rat fe = dot(chart.F, chart.E);
  Rat mf = dot(m, chart.F);
  double offset = -Rat(mf / -fe).get_d();
  for (double& x : d.line_normal) x /= norm;
  d.line_offset = offset / norm;
  // A point on the line, for deterministic ordering.
  d.center.assign(chart.basis.size(), 0.0);
  for (size_t j = 0; j < chart.basis.size(); ++j) d.center[j] = d.line_normal[j] * d.line_offset;
  return d;
}

}  // namespace

CircleDatum sphere_to_datum(const SphereRecord& rec, const EuclideanChart& chart) {
  if (dot(rec.m, rec.m) != 1) throw Error("sphere_to_datum: record must have unit self-product");
  CircleDatum d = datum_from_plane_vector(to_rvec(rec.m), Rat(1), chart);
  d.exact_curvature = rec.curvature;
  return d;
}

bool slice_datum(const SphereRecord& rec, const Vec& plane, const EuclideanChart& chart, CircleDatum& out) {
  Int mv = dot(rec.m, plane);
  Int vv = dot(plane, plane);
  if (mv * mv >= vv) return false;  // misses or touches the section plane
  Rat coef = make_rat(-mv, vv);
  RVec mproj = to_rvec(rec.m);
  for (size_t i = 0; i < mproj.size(); ++i) mproj[i] += coef * Rat(plane[i]);
  Rat self = dot(mproj, mproj);
  out = datum_from_plane_vector(mproj, self, chart);
  out.exact_curvature = rec.curvature;
  return true;
}

std::string emit_svg(const std::vector<CircleDatum>& data) {
  if (data.empty()) throw Error("emit_svg: no data");
  for (const CircleDatum& d : data)
    if (d.center.size() != 2) throw Error("emit_svg: need a 2-dimensional chart");

  std::vector<const CircleDatum*> order;
  for (const CircleDatum& d : data) order.push_back(&d);
  std::sort(order.begin(), order.end(), [](const CircleDatum* a, const CircleDatum* b) {
    if (a->exact_curvature != b->exact_curvature) return a->exact_curvature < b->exact_curvature;
    if (a->center[0] != b->center[0]) return a->center[0] < b->center[0];
    return a->center[1] < b->center[1];
  });

  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  bool any_circle = false;
  for (const CircleDatum& d : data) {
    if (d.curvature_sign == 0) continue;
    any_circle = true;
    xmin = std::min(xmin, d.center[0] - d.radius);
    xmax = std::max(xmax, d.center[0] + d.radius);
    ymin = std::min(ymin, d.center[1] - d.radius);
    ymax = std::max(ymax, d.center[1] + d.radius);
  }
  if (!any_circle) {
    xmin = ymin = -1;
    xmax = ymax = 1;
  }
  double w = xmax - xmin, h = ymax - ymin;
  double extent = std::max(w, h);
  if (extent <= 0) extent = 1;
  double margin = 0.05 * extent;
  double stroke = 0.005 * extent;
  xmin -= margin;
  ymin -= margin;
  w += 2 * margin;
  h += 2 * margin;

  char buf[256];
  std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"%.6f %.6f %.6f %.6f\">\n", xmin, ymin, w, h);
  svg += buf;
  for (const CircleDatum* d : order) {
    if (d->curvature_sign != 0) {
      std::snprintf(buf, sizeof buf,
                    "  <circle cx=\"%.9f\" cy=\"%.9f\" r=\"%.9f\" fill=\"none\" stroke=\"black\" "
                    "stroke-width=\"%.6f\"/>\n",
                    d->center[0], d->center[1], d->radius, stroke);
      svg += buf;
    } else {
      // Segment through the box along the line normal.x = offset.
      double px = d->line_normal[0] * d->line_offset, py = d->line_normal[1] * d->line_offset;
      double dx = -d->line_normal[1], dy = d->line_normal[0];
      double L = 2 * (w + h);
      std::snprintf(buf, sizeof buf,
                    "  <line x1=\"%.9f\" y1=\"%.9f\" x2=\"%.9f\" y2=\"%.9f\" stroke=\"black\" "
                    "stroke-width=\"%.6f\"/>\n",
                    px - L * dx, py - L * dy, px + L * dx, py + L * dy, stroke);
      svg += buf;
    }
  }
  svg += "</svg>\n";
  return svg;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << content;
  if (!out.good()) throw Error("write failed: " + path);
}

}  // namespace apollo
