#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "apollo/render.hpp"

using namespace apollo;

namespace {

double dist(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

// Isotropic sample points: centers of enumerated spheres plus sphere-pair
// tangency points.
std::vector<Vec> isotropic_samples(const GeneratorSet& g, const std::vector<SphereRecord>& recs, size_t want) {
  std::vector<Vec> pts;
  for (const SphereRecord& r : recs) {
    if (pts.size() >= want) break;
    if (sign(r.curvature) != 0) pts.push_back(center_ray(r.m, g.strip_E));
  }
  for (size_t i = 0; i < recs.size() && pts.size() < want; ++i)
    for (size_t j = i + 1; j < recs.size() && pts.size() < want; ++j)
      if (dot(recs[i].m, recs[j].m) == -1) {
        // Tangency point of two touching spheres: m + m' scaled into the cone.
        Vec t = add(recs[i].m, recs[j].m);
        if (dot(t, t) == 0 && sign(dot(t, g.strip_E)) != 0) pts.push_back(canonical_ray(t));
      }
  return pts;
}

}  // namespace

TEST_CASE("chart reproduces the exact metric") {
  GeneratorSet g = build_group(4);
  EnumerateResult er = enumerate_orbit(g, g.strip_E, 40);
  EuclideanChart chart = make_chart(4, g.strip_E);
  REQUIRE(chart.basis.size() == 2);
  std::vector<Vec> pts = isotropic_samples(g, er.records, 60);
  REQUIRE(pts.size() >= 30);
  size_t pairs = 0;
  for (size_t i = 0; i < pts.size() && pairs < 120; ++i)
    for (size_t j = i + 1; j < pts.size() && pairs < 120; ++j, ++pairs) {
      double exact = std::sqrt(euclid_dist2(pts[i], pts[j], g.strip_E).get_d());
      double chartd = dist(chart.chart(pts[i]), chart.chart(pts[j]));
      if (exact > 0) CHECK(std::abs(chartd - exact) / exact < 1e-9);
    }
}

TEST_CASE("strip planes map to parallel lines, spheres to circles") {
  GeneratorSet g = build_group(4);
  EuclideanChart chart = make_chart(4, g.strip_E);

  SphereRecord e3{unit(4, 2), 0, 0, 0};
  SphereRecord e4{unit(4, 3), 0, 0, 0};
  CircleDatum d3 = sphere_to_datum(e3, chart);
  CircleDatum d4 = sphere_to_datum(e4, chart);
  CHECK(d3.curvature_sign == 0);
  CHECK(d4.curvature_sign == 0);
  double cross = d3.line_normal[0] * d4.line_normal[1] - d3.line_normal[1] * d4.line_normal[0];
  CHECK(std::abs(cross) < 1e-12);  // parallel
  // The strip has width 1 in this normalization.
  double align = d3.line_normal[0] * d4.line_normal[1 - 1] + d3.line_normal[1] * d4.line_normal[1];
  double width = align > 0 ? std::abs(d3.line_offset - d4.line_offset) : std::abs(d3.line_offset + d4.line_offset);
  CHECK(std::abs(width - 1.0) < 1e-9);

  SphereRecord e1{unit(4, 0), 2, 0, 0};
  CircleDatum d1 = sphere_to_datum(e1, chart);
  CHECK(d1.curvature_sign == 1);
  CHECK(std::abs(d1.radius - 0.5) < 1e-12);
  // Tangent to both strip lines.
  for (const CircleDatum* line : {&d3, &d4}) {
    double signed_dist = line->line_normal[0] * d1.center[0] + line->line_normal[1] * d1.center[1] -
                         line->line_offset;
    CHECK(std::abs(std::abs(signed_dist) - d1.radius) < 1e-9);
  }
}

TEST_CASE("exact tangencies hold numerically in chart coordinates") {
  GeneratorSet g = build_group(4);
  EnumerateResult er = enumerate_orbit(g, g.strip_E, 100);
  EuclideanChart chart = make_chart(4, g.strip_E);
  std::vector<CircleDatum> data;
  for (const SphereRecord& r : er.records) data.push_back(sphere_to_datum(r, chart));
  size_t checked = 0;
  for (size_t i = 0; i < er.records.size(); ++i)
    for (size_t j = i + 1; j < er.records.size(); ++j) {
      if (dot(er.records[i].m, er.records[j].m) != -1) continue;
      ++checked;
      const CircleDatum &a = data[i], &b = data[j];
      double resid;
      if (a.curvature_sign != 0 && b.curvature_sign != 0) {
        double d = dist(a.center, b.center);
        resid = std::abs(d - (a.radius + b.radius));
      } else if (a.curvature_sign == 0 && b.curvature_sign == 0) {
        double cross = a.line_normal[0] * b.line_normal[1] - a.line_normal[1] * b.line_normal[0];
        resid = std::abs(cross);
      } else {
        const CircleDatum& line = a.curvature_sign == 0 ? a : b;
        const CircleDatum& circ = a.curvature_sign == 0 ? b : a;
        double sd = line.line_normal[0] * circ.center[0] + line.line_normal[1] * circ.center[1] -
                    line.line_offset;
        resid = std::abs(std::abs(sd) - circ.radius);
      }
      CHECK(resid < 1e-9);
    }
  CHECK(checked > 100);
}

TEST_CASE("svg output") {
  GeneratorSet g = build_group(4);
  EnumerateResult er = enumerate_orbit(g, g.strip_E, 40);
  EuclideanChart chart = make_chart(4, g.strip_E);
  std::vector<CircleDatum> data;
  for (const SphereRecord& r : er.records) data.push_back(sphere_to_datum(r, chart));
  std::string svg = emit_svg(data);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<circle") != std::string::npos);
  CHECK(svg.find("<line") != std::string::npos);
  CHECK(emit_svg(data) == svg);  // deterministic
  CHECK_THROWS_AS(emit_svg({}), Error);
}

TEST_CASE("cross-section of the rho = 5 packing") {
  GeneratorSet g = build_group(5);
  EnumerateResult er = enumerate_orbit(g, g.strip_E, 12);
  EuclideanChart chart = make_slice_chart(5, g.strip_E);
  REQUIRE(chart.basis.size() == 2);
  Vec plane = sub(unit(5, 3), unit(5, 4));  // v45
  std::vector<CircleDatum> data;
  size_t skipped = 0;
  for (const SphereRecord& r : er.records) {
    CircleDatum d;
    if (slice_datum(r, plane, chart, d))
      data.push_back(d);
    else
      ++skipped;
  }
  CHECK(data.size() > 10);
  CHECK(skipped > 0);  // spheres missing the plane are excluded exactly
  // The two bounding planes e4, e5 do not cut the section plane.
  SphereRecord e4{unit(5, 3), 0, 0, 0};
  CircleDatum dummy;
  CHECK_FALSE(slice_datum(e4, plane, chart, dummy));
  std::string svg = emit_svg(data);
  CHECK(svg.find("<circle") != std::string::npos);
}
