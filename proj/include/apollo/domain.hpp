#pragma once

#include <string>
#include <utility>
#include <vector>

#include "apollo/solve.hpp"

namespace apollo {

struct Face {
  enum class Kind { Reflection, PhiWall };

  std::string label;  // F1..F14
  std::string role;   // transposition | u-face | base | dome | phi-wall
  Vec vector;
  Kind kind = Kind::Reflection;
};

struct CheckResult {
  enum class Verdict { Pass, Fail, PaperDiscrepancy };

  std::string name;
  std::string value;  // exact sign or value computed
  Verdict verdict = Verdict::Pass;

  static const char* verdict_name(Verdict v);
};

/**
 * Per-rho bundle: the face system, prism vertices, special points and the
 * full verification checklist.  rho <= 8 has rho+1 faces; rho = 9 has 12
 * (two of them walls for the point-reflection maps); rho = 10 has 14.
 */
struct DomainCase {
  int rho = 0;
  Vec E;
  std::vector<Face> faces;
  std::vector<Vec> Q, Qprime;
  std::vector<std::pair<std::string, Vec>> special_points;
  std::vector<CheckResult> checks;

  bool passed() const;  // no Fail; PaperDiscrepancy entries do not fail a run
  std::string to_json() const;
  std::string to_text() const;
};

// Face system for 4 <= rho <= 10.  Walls F_1..F_{rho-3} are the adjacent
// transpositions, F_{rho-2} is the u-face (u = e_1 - e_{rho-2} + E),
// F_{rho-1} = v_{rho-1,rho}, F_rho = e_rho, F_{rho+1} the dome v_{1,rho-1}.
// rho = 9 appends the two phi walls; rho = 10 appends the extra reflection
// dome and the two phi walls.
std::vector<Face> build_faces(int rho);

// Strip perspective point at infinity, E = e_{rho-1} + e_rho.
Vec strip_perspective(int rho);

// Prism vertices: Q_i solves all wall equations but the i-th on the face
// v_{rho-1,rho}; Q_i' likewise on the face e_rho.  i = 1..rho-2.
void solve_vertices(int rho, const std::vector<Face>& faces, std::vector<Vec>& Q, std::vector<Vec>& Qprime);

// Exact sign of face.vector (.) V.
int vertex_side(const Face& face, const Vec& V);

// Intersection of the segment/line AB (in the perspective E) with a dome or
// wall.  When the face passes through E the pencil contains E and the unique
// other isotropic ray is returned; otherwise of the up-to-two intersection
// rays the one nearer `near` is returned.  Rays can be quadratic-irrational;
// sign checks against them stay exact via QuadExt.
QuadVec edge_dome_point(const Vec& A, const Vec& B, const Face& face, const Vec& E, const Vec& near);

// Exact squared distance between a pencil ray and a lattice ray.
QuadExt quad_dist2(const QuadVec& P, const Vec& X, const Vec& E);

// Covered-edge criterion: solve P in span{A,B,E} with d1.P = d2.P = 0 and
// pass iff P (.) P >= 0 (the two bounding spheres meet above the segment;
// P.P = 0 means they touch on it, which still covers).
CheckResult edge_covered(const Vec& A, const Vec& B, const Vec& E, const Face& d1, const Face& d2,
                         const std::string& name);

// Same for a 2-dimensional edge spanned by three vertices and three spheres.
CheckResult face2_covered(const Vec& A, const Vec& B, const Vec& C, const Vec& E, const Face& d1, const Face& d2,
                          const Face& d3, const std::string& name);

// Full per-rho checklist.
DomainCase run_case(int rho);

}  // namespace apollo
