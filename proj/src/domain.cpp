#include "apollo/domain.hpp"

#include <algorithm>
#include <set>

#include "apollo/isometry.hpp"
#include "json.hpp"

namespace apollo {

const char* CheckResult::verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::PaperDiscrepancy: return "paper-discrepancy";
  }
  return "?";
}

Vec strip_perspective(int rho) { return add(unit(rho, rho - 2), unit(rho, rho - 1)); }

namespace {

void require_rho(int rho) {
  if (rho < 4 || rho > 10) throw Error("rho out of range [4,10]: " + std::to_string(rho));
}

Vec transposition(int rho, int i, int j) {  // e_{i+1} - e_{j+1}, 0-based
  return sub(unit(rho, i), unit(rho, j));
}

}  // namespace

std::vector<Face> build_faces(int rho) {
  require_rho(rho);
  const Vec E = strip_perspective(rho);
  std::vector<Face> faces;

  // Adjacent transpositions, oriented so the interior point Q_1+3E sits in
  // H^- (the prism has x_1 >= x_2 >= ... >= x_{rho-2}).
  for (int i = 0; i + 1 <= rho - 3; ++i) {
    Face f;
    f.label = "F" + std::to_string(i + 1);
    f.role = "transposition";
    f.vector = transposition(rho, i + 1, i);  // e_{i+2} - e_{i+1}
    faces.push_back(std::move(f));
  }

  // u = e_1 - e_{rho-2} + E, whose halved functional gives the last prism
  // wall equation x_2 + ... + x_{rho-3} + 2 x_{rho-2} = 0.
  {
    Face f;
    f.label = "F" + std::to_string(rho - 2);
    f.role = "u-face";
    f.vector = add(sub(unit(rho, 0), unit(rho, rho - 3)), E);
    // -(1/2) u (.) x must be exactly that linear form; check the coefficients.
    for (int k = 0; k < rho; ++k) {
      Int coef = -(2 * f.vector[k] - 2) / 2;  // -(J u)_k / 2 with sum(u) = 2
      Int expect = (k >= 1 && k <= rho - 4) ? 1 : (k == rho - 3 ? 2 : 0);
      if (coef != expect) throw Error("build_faces: u-face equation mismatch at coordinate " + std::to_string(k + 1));
    }
    faces.push_back(std::move(f));
  }

  {
    Face f;
    f.label = "F" + std::to_string(rho - 1);
    f.role = "transposition";
    f.vector = transposition(rho, rho - 2, rho - 1);  // v_{rho-1,rho}
    faces.push_back(std::move(f));
  }
  {
    Face f;
    f.label = "F" + std::to_string(rho);
    f.role = "base";
    f.vector = unit(rho, rho - 1);  // e_rho
    faces.push_back(std::move(f));
  }
  {
    Face f;
    f.label = "F" + std::to_string(rho + 1);
    f.role = "dome";
    f.vector = transposition(rho, 0, rho - 2);  // v_{1,rho-1}
    faces.push_back(std::move(f));
  }

  if (rho == 9) {
    Face w1;
    w1.label = "F11";
    w1.role = "phi-wall";
    w1.kind = Face::Kind::PhiWall;
    w1.vector = parse_vec("1,1,1,1,-6,1,1,1,1");
    faces.push_back(std::move(w1));
    Face w2;
    w2.label = "F12";
    w2.role = "phi-wall";
    w2.kind = Face::Kind::PhiWall;
    w2.vector = parse_vec("3,3,3,3,3,-4,-4,3,3");
    faces.push_back(std::move(w2));
  } else if (rho == 10) {
    Face d2;
    d2.label = "F12";
    d2.role = "dome";
    d2.vector = parse_vec("1,1,1,1,1,-1,-1,-1,1,1");
    faces.push_back(std::move(d2));
    Face w1;
    w1.label = "F13";
    w1.role = "phi-wall";
    w1.kind = Face::Kind::PhiWall;
    w1.vector = parse_vec("1,1,1,1,-3,-3,1,1,1,1");
    faces.push_back(std::move(w1));
    Face w2;
    w2.label = "F14";
    w2.role = "phi-wall";
    w2.kind = Face::Kind::PhiWall;
    w2.vector = parse_vec("3,3,3,3,3,3,-5,-5,3,3");
    faces.push_back(std::move(w2));
  }
  return faces;
}

void solve_vertices(int rho, const std::vector<Face>& faces, std::vector<Vec>& Q, std::vector<Vec>& Qprime) {
  const Vec E = strip_perspective(rho);
  Q.clear();
  Qprime.clear();
  for (int omit = 0; omit < rho - 2; ++omit) {
    for (bool primed : {false, true}) {
      std::vector<Vec> walls;
      for (int j = 0; j < rho - 2; ++j)
        if (j != omit) walls.push_back(faces[j].vector);
      walls.push_back(primed ? faces[rho - 1].vector : faces[rho - 2].vector);
      Vec v = isotropic_on_plane({}, walls, E);
      (primed ? Qprime : Q).push_back(std::move(v));
    }
  }
}

int vertex_side(const Face& face, const Vec& V) { return sign(dot(face.vector, V)); }

QuadExt quad_dist2(const QuadVec& P, const Vec& X, const Vec& E) {
  QuadExt pe = P.dot_with(E);
  if (pe.sgn() == 0) throw Error("quad_dist2: ray on E");
  Int xe = dot(X, E);
  if (sign(xe) == 0) throw Error("quad_dist2: X on E");
  QuadExt num = P.dot_with(X) * QuadExt::rational(Rat(-2));
  QuadExt den = pe * QuadExt::rational(Rat(xe));
  return num * den.inverse();
}

QuadVec edge_dome_point(const Vec& A, const Vec& B, const Face& face, const Vec& E, const Vec& near) {
  int rho = (int)A.size();
  std::vector<Vec> pencil = lattice_kernel({face.vector}, {A, B, E}, rho);
  if (pencil.size() != 2)
    throw Error("edge_dome_point: pencil dimension " + std::to_string(pencil.size()) + ", need 2");
  std::vector<QuadVec> rays = isotropic_rays_in_pencil(pencil[0], pencil[1]);
  if (rays.empty()) throw Error("edge_dome_point: segment does not cross " + face.label);

  if (dot(face.vector, E) == 0) {
    // Wall through E: the pencil contains E; answer is the unique other ray.
    for (QuadVec& r : rays) {
      if (!r.is_rational()) continue;
      Vec lat = r.lattice();
      if (!std::equal(lat.begin(), lat.end(), canonical_ray(E).begin())) return r;
    }
    throw Error("edge_dome_point: no ray besides E on wall " + face.label);
  }
  if (rays.size() == 1) return rays[0];
  QuadExt d0 = quad_dist2(rays[0], near, E);
  QuadExt d1 = quad_dist2(rays[1], near, E);
  return ((d1 - d0).sgn() >= 0) ? rays[0] : rays[1];
}

namespace {

// Radical vector of the bounding spheres inside the vertical subspace over
// the cell: P spans the kernel of the sphere conditions there.  A timelike
// or isotropic P is a common point of the spheres over the cell, which
// together with per-vertex coverage covers it (walk from the common point
// through any cell point to the boundary; convexity of each ball finishes).
// A spacelike P with no ball containing every vertex leaves a gap.
Int radical_self_product(const std::vector<Vec>& span, const std::vector<Vec>& conditions, int rho,
                         const std::string& name) {
  std::vector<Vec> k = lattice_kernel(conditions, span, rho);
  if (k.size() != 1) throw Error(name + ": kernel dimension " + std::to_string(k.size()) + ", need 1");
  return dot(k[0], k[0]);
}

CheckResult covered_result(const std::string& name, const Int& pp, bool vertex_sides_ok, bool nested) {
  CheckResult c;
  c.name = name;
  c.value = "P.P=" + pp.get_str() + (nested ? " (one sphere holds every vertex)" : "");
  bool covered = vertex_sides_ok && (sign(pp) <= 0 || nested);
  c.verdict = covered ? CheckResult::Verdict::Pass : CheckResult::Verdict::Fail;
  return c;
}

}  // namespace

CheckResult edge_covered(const Vec& A, const Vec& B, const Vec& E, const Face& d1, const Face& d2,
                         const std::string& name) {
  bool ok = sign(dot(d1.vector, A)) >= 0 && sign(dot(d2.vector, B)) >= 0;
  if (d1.vector == d2.vector) {
    CheckResult c;
    c.name = name;
    c.value = "single sphere";
    c.verdict = ok ? CheckResult::Verdict::Pass : CheckResult::Verdict::Fail;
    return c;
  }
  Int pp = radical_self_product({A, B, E}, {d1.vector, d2.vector}, (int)A.size(), name);
  bool nested = (sign(dot(d1.vector, B)) >= 0) || (sign(dot(d2.vector, A)) >= 0);
  return covered_result(name, pp, ok, nested);
}

CheckResult face2_covered(const Vec& A, const Vec& B, const Vec& C, const Vec& E, const Face& d1, const Face& d2,
                          const Face& d3, const std::string& name) {
  bool ok = sign(dot(d1.vector, A)) >= 0 && sign(dot(d2.vector, B)) >= 0 && sign(dot(d3.vector, C)) >= 0;
  Int pp = radical_self_product({A, B, C, E}, {d1.vector, d2.vector, d3.vector}, (int)A.size(), name);
  bool nested = false;
  for (const Face* d : {&d1, &d2, &d3})
    nested = nested || (sign(dot(d->vector, A)) >= 0 && sign(dot(d->vector, B)) >= 0 && sign(dot(d->vector, C)) >= 0);
  return covered_result(name, pp, ok, nested);
}

// --------------------------------------------------------------------------

namespace {

struct Checker {
  std::vector<CheckResult>& out;

  void expect(const std::string& name, const Int& value, int expected_sign, bool allow_zero = false) {
    CheckResult c;
    c.name = name;
    c.value = value.get_str();
    int s = sign(value);
    bool ok = (s == expected_sign) || (allow_zero && s == 0);
    c.verdict = ok ? CheckResult::Verdict::Pass : CheckResult::Verdict::Fail;
    out.push_back(std::move(c));
  }

  void expect_zero(const std::string& name, const Int& value) {
    CheckResult c;
    c.name = name;
    c.value = value.get_str();
    c.verdict = sign(value) == 0 ? CheckResult::Verdict::Pass : CheckResult::Verdict::Fail;
    out.push_back(std::move(c));
  }

  void expect_true(const std::string& name, bool ok, const std::string& value) {
    CheckResult c;
    c.name = name;
    c.value = value;
    c.verdict = ok ? CheckResult::Verdict::Pass : CheckResult::Verdict::Fail;
    out.push_back(std::move(c));
  }

  void discrepancy(const std::string& name, const std::string& value) {
    CheckResult c;
    c.name = name;
    c.value = value;
    c.verdict = CheckResult::Verdict::PaperDiscrepancy;
    out.push_back(std::move(c));
  }
};

std::string vertex_name(int i, bool primed) { return "Q" + std::to_string(i + 1) + (primed ? "'" : ""); }

}  // namespace

DomainCase run_case(int rho) {
  require_rho(rho);
  DomainCase cs;
  cs.rho = rho;
  cs.E = strip_perspective(rho);
  cs.faces = build_faces(rho);
  Checker ck{cs.checks};
  const Vec& E = cs.E;
  const Vec D = all_ones(rho);

  size_t expected_faces = rho <= 8 ? (size_t)rho + 1 : (rho == 9 ? 12 : 14);
  ck.expect_true("face count", cs.faces.size() == expected_faces, std::to_string(cs.faces.size()));

  // Self-products: 4 on the generic faces, 1 on the base, positive on walls.
  for (size_t i = 0; i < cs.faces.size(); ++i) {
    const Face& f = cs.faces[i];
    Int sp = dot(f.vector, f.vector);
    bool ok;
    if (f.role == "base")
      ok = sp == 1;
    else if (f.kind == Face::Kind::PhiWall)
      ok = sign(sp) > 0;
    else
      ok = sp == 4;
    ck.expect_true("self-product " + f.label, ok, sp.get_str());
  }

  // E lies on every prism wall and on the base face.
  for (int j = 0; j < rho; ++j) ck.expect_zero("E on " + cs.faces[j].label, dot(cs.faces[j].vector, E));

  // The wall system (1)..(rho-2) plus F_{rho-1} has solution space exactly
  // the ray of E; dropping one equation makes the pencils the vertex solver
  // needs.
  {
    std::vector<Vec> walls;
    for (int j = 0; j < rho - 1; ++j) walls.push_back(cs.faces[j].vector);
    std::vector<Vec> k = lattice_kernel(walls, {}, rho);
    bool ok = k.size() == 1 && canonical_ray(k[0]) == canonical_ray(E);
    ck.expect_true("wall system solves to the ray of E", ok, "dim=" + std::to_string(k.size()));
  }

  solve_vertices(rho, cs.faces, cs.Q, cs.Qprime);
  for (int i = 0; i < rho - 2; ++i) {
    ck.expect_zero("isotropy " + vertex_name(i, false), dot(cs.Q[i], cs.Q[i]));
    ck.expect_zero("isotropy " + vertex_name(i, true), dot(cs.Qprime[i], cs.Qprime[i]));
    ck.expect(vertex_name(i, false) + " (.) D", dot(cs.Q[i], D), -1);
    ck.expect(vertex_name(i, true) + " (.) D", dot(cs.Qprime[i], D), -1);
  }

  // Orientation: the interior point Q_1 + 3E lies in H^- of every face.
  const Vec hbase = add(cs.Q[0], scaled(E, 3));
  for (const Face& f : cs.faces)
    ck.expect("interior point vs " + f.label, dot(f.vector, hbase), -1, /*allow_zero=*/true);

  const Face& dome = cs.faces[rho];  // F_{rho+1} for rho<=8, F10/F11 for 9/10
  ck.expect("dome excludes E", dot(dome.vector, E), -1);

  auto all_vertices = [&] {
    std::vector<std::pair<std::string, const Vec*>> vs;
    for (int i = 0; i < rho - 2; ++i) {
      vs.emplace_back(vertex_name(i, false), &cs.Q[i]);
      vs.emplace_back(vertex_name(i, true), &cs.Qprime[i]);
    }
    return vs;
  }();

  if (rho <= 8) {
    std::vector<std::string> on_dome;
    for (auto& [name, v] : all_vertices) {
      Int s = dot(dome.vector, *v);
      ck.expect("dome covers " + name, s, +1, /*allow_zero=*/true);
      if (sign(s) == 0) on_dome.push_back(name);
    }
    if (rho <= 7) {
      ck.expect_true("single cusp at E (no vertex on the dome)", on_dome.empty(),
                     std::to_string(on_dome.size()) + " on dome");
    } else {
      ck.expect_true("second cusp: exactly Q4 on the dome", on_dome == std::vector<std::string>{"Q4"},
                     on_dome.empty() ? "none" : on_dome[0]);
    }
    return cs;
  }

  if (rho == 9) {
    const Face& wall1 = cs.faces[10];  // F11
    const Face& wall2 = cs.faces[11];  // F12
    const Vec& Q4 = cs.Q[3];
    const Vec& Q5 = cs.Q[4];

    // Dome covers every prism vertex except Q4 and Q5.
    for (auto& [name, v] : all_vertices) {
      Int s = dot(dome.vector, *v);
      if (name == "Q4" || name == "Q5")
        ck.expect("dome side of " + name + " (outside)", s, -1);
      else
        ck.expect("dome covers " + name, s, +1);
    }

    Vec P1 = midpoint(Q4, Q5, E);
    cs.special_points.emplace_back("P1", P1);
    ck.discrepancy("P1 printed with 8 entries in the source; derived value used", to_string(P1));
    ck.expect_zero("P1 isotropic", dot(P1, P1));
    ck.expect_zero("P1 on F10", dot(dome.vector, P1));

    ck.expect_zero("F11 wall through E", dot(wall1.vector, E));
    ck.discrepancy("source claims n1 (.) Q4 = 0; computed value differs", dot(wall1.vector, Q4).get_str());
    ck.expect_zero("n1 (.) P1", dot(wall1.vector, P1));

    // F11 slices the prism: Q1, Q1' on it; 2,3,4 side positive; 5,6,7 negative.
    for (auto& [name, v] : all_vertices) {
      Int s = dot(wall1.vector, *v);
      if (name == "Q1" || name == "Q1'")
        ck.expect_zero("F11 through " + name, s);
      else if (name[1] == '2' || name[1] == '3' || name[1] == '4')
        ck.expect("F11 side of " + name + " (+)", s, +1);
      else
        ck.expect("F11 side of " + name + " (-)", s, -1);
    }

    // Dome crossings on the edges at Q4 and at Q5; sign checks stay exact in
    // Q(sqrt(d)) when the crossing is irrational.
    auto crossings = [&](int corner, const Face& wall, const char* tag) {
      const Vec& C = corner == 3 ? Q4 : Q5;
      ck.expect(std::string(tag) + " side of Q" + std::to_string(corner + 1) + " (+)", dot(wall.vector, C), +1);
      for (int i = 0; i < 7; ++i) {
        const Vec& other = (i == corner) ? cs.Qprime[corner] : cs.Q[i];
        QuadVec P = edge_dome_point(C, other, dome, E, C);
        std::string pname =
            "P" + std::to_string(corner + 1) + std::to_string(i + 1);
        QuadExt side = P.dot_with(wall.vector);
        CheckResult c;
        c.name = std::string(tag) + " covers " + pname;
        c.value = side.str();
        c.verdict = side.sgn() >= 0 ? CheckResult::Verdict::Pass : CheckResult::Verdict::Fail;
        cs.checks.push_back(std::move(c));
        if ((corner == 3 && i == 4) || (corner == 4 && i == 3)) {
          // The segment Q4Q5 is tangent to the dome exactly at P1.
          ck.expect_true(pname + " equals P1", P.is_rational() && P.lattice() == P1,
                         P.is_rational() ? to_string(P.lattice()) : P.str());
        }
      }
    };
    crossings(3, wall1, "F11");
    ck.expect("F12 dome excludes E", dot(wall2.vector, E), -1);
    crossings(4, wall2, "F12");

    Vec P2 = parse_vec("1,1,1,1,2,-1,-2,1,2");
    cs.special_points.emplace_back("P2", P2);
    ck.expect_zero("P2 isotropic", dot(P2, P2));
    ck.expect("P2 (.) D", dot(P2, D), -1);
    Vec fvec = parse_vec("2,2,2,2,2,-2,-3,2,2");
    cs.special_points.emplace_back("f", fvec);
    ck.expect_true("f has unit self-product", dot(fvec, fvec) == 1, dot(fvec, fvec).get_str());
    ck.expect("f (.) D", dot(fvec, D), -1);

    for (const auto& [Pname, Pvec] : {std::pair<const char*, Vec>{"phi(P1,E)", E}, {"phi(P1,P2)", P2}}) {
      try {
        Isometry phi = phi_matrix(P1, Pvec, Pname);
        ck.expect_true(std::string(Pname) + " integral involution preserving the form",
                       phi.preserves_form() && phi.is_involution() && phi.preserves_future(), "ok");
      } catch (const NonIntegral& e) {
        ck.expect_true(std::string(Pname) + " integral involution preserving the form", false, e.what());
      }
    }
    return cs;
  }

  // rho == 10
  const Face& dome2 = cs.faces[11];  // F12, reflection dome
  const Face& wall1 = cs.faces[12];  // F13
  const Face& wall2 = cs.faces[13];  // F14
  const Vec& Q4 = cs.Q[3];
  const Vec& Q5 = cs.Q[4];
  const Vec& Q6 = cs.Q[5];

  // F11 covers every prism vertex except Q4, Q5, Q6; Q5' lies on it (as do
  // Q3 and Q7, whose boundary contact still counts as covered).
  for (auto& [name, v] : all_vertices) {
    Int s = dot(dome.vector, *v);
    if (name == "Q4" || name == "Q5" || name == "Q6")
      ck.expect("F11 side of " + name + " (outside)", s, -1);
    else if (name == "Q5'")
      ck.expect_zero("Q5' on F11", s);
    else
      ck.expect("F11 covers " + name, s, +1, /*allow_zero=*/true);
  }

  try {
    Isometry rn = reflection_matrix(dome2.vector, "F12");
    ck.expect_true("R_n integral involution preserving the form",
                   rn.preserves_form() && rn.is_involution() && rn.preserves_future(), "ok");
  } catch (const NonIntegral& e) {
    ck.expect_true("R_n integral involution preserving the form", false, e.what());
  }
  ck.expect_true("H_n centered at Q5", center_ray(dome2.vector, E) == canonical_ray(Q5),
                 to_string(center_ray(dome2.vector, E)));
  ck.expect_zero("H_n through Q5'", dot(dome2.vector, cs.Qprime[4]));

  Vec P1 = midpoint(Q4, Q6, E);
  cs.special_points.emplace_back("P1", P1);
  ck.expect_true("P1 matches the printed vector", P1 == parse_vec("1,1,1,1,0,0,-1,-1,1,1"), to_string(P1));
  ck.expect_zero("P1 on F11", dot(dome.vector, P1));
  ck.expect_zero("P1 on F12", dot(dome2.vector, P1));

  ck.expect_zero("F13 wall through E", dot(wall1.vector, E));
  ck.expect_zero("F13 wall through P1", dot(wall1.vector, P1));
  ck.expect_zero("F13 perpendicular to H_{e10}", dot(wall1.vector, unit(rho, 9)));
  ck.expect_zero("F13 perpendicular to H_{v9,10}", dot(wall1.vector, transposition(rho, 8, 9)));

  for (auto& [name, v] : all_vertices) {
    Int s = dot(wall1.vector, *v);
    if (name == "Q1" || name == "Q1'" || name == "Q5" || name == "Q5'")
      ck.expect_zero("F13 through " + name, s);
    else if (name[1] == '2' || name[1] == '3' || name[1] == '4')
      ck.expect("F13 side of " + name + " (+, lopped off)", s, +1);
    else
      ck.expect("F13 side of " + name + " (-)", s, -1);
  }

  // The wall F13 meets the lines QiQj (and their primes) in lattice points.
  std::vector<std::pair<std::string, Vec>> pij, pijp;
  for (int i : {5, 6, 7}) {    // Q6, Q7, Q8
    for (int j : {1, 2, 3}) {  // Q2, Q3, Q4
      std::string nm = "P" + std::to_string(i + 1) + std::to_string(j + 1);
      QuadVec P = edge_dome_point(cs.Q[i], cs.Q[j], wall1, E, cs.Q[i]);
      QuadVec Pp = edge_dome_point(cs.Qprime[i], cs.Qprime[j], wall1, E, cs.Qprime[i]);
      ck.expect_true(nm + " lattice point on F13", P.is_rational(), P.str());
      ck.expect_true(nm + "' lattice point on F13", Pp.is_rational(), Pp.str());
      pij.emplace_back(nm, P.lattice());
      pijp.emplace_back(nm + "'", Pp.lattice());
    }
  }
  // Prism structure: unprimed crossings stay on F9, primed ones on F10.
  for (auto& [nm, P] : pij) ck.expect_zero(nm + " on F9", dot(cs.faces[rho - 2].vector, P));
  for (auto& [nm, P] : pijp) ck.expect_zero(nm + " on F10", dot(cs.faces[rho - 1].vector, P));

  // Vertex coverage for the sliced prism: F11 covers everything except Q5
  // (covered by F12) and Q6 (covered by F14).
  std::vector<std::pair<std::string, Vec>> fe_vertices;
  for (const char* nm : {"Q1", "Q5", "Q6", "Q7", "Q8"}) {
    int idx = nm[1] - '1';
    fe_vertices.emplace_back(nm, cs.Q[idx]);
    fe_vertices.emplace_back(std::string(nm) + "'", cs.Qprime[idx]);
  }
  for (auto& pr : pij) fe_vertices.push_back(pr);
  for (auto& pr : pijp) fe_vertices.push_back(pr);
  ck.expect_true("sliced prism has 28 vertices", fe_vertices.size() == 28, std::to_string(fe_vertices.size()));
  for (auto& [name, v] : fe_vertices) {
    if (name == "Q5")
      ck.expect("F12 covers Q5", dot(dome2.vector, v), +1);
    else if (name == "Q6")
      ck.expect("F14 covers Q6", dot(wall2.vector, v), +1);
    else
      ck.expect("F11 covers vertex " + name, dot(dome.vector, v), +1, /*allow_zero=*/true);
  }

  // S: top-of-prism vertices covered by F11 (fixed list, then cross-checked).
  std::vector<std::pair<std::string, Vec>> S;
  S.emplace_back("Q1", cs.Q[0]);
  S.emplace_back("Q7", cs.Q[6]);
  S.emplace_back("Q8", cs.Q[7]);
  for (auto& pr : pij) S.push_back(pr);
  for (auto& [name, v] : S) ck.expect("S member " + name + " covered by F11", dot(dome.vector, v), +1, true);

  ck.discrepancy(
      "printed coverage rule says P.P >= 0 covers; the crossing-sphere radical is timelike, so covered cells "
      "carry P.P <= 0 (verdicts below use the ball-coverage semantics)",
      "example edge Q5,Q1: P.P=-192");

  auto named_edge = [&](const std::string& a, const std::string& b) { return "edge " + a + b; };
  {
    std::vector<std::pair<std::string, Vec>> targets = S;
    targets.emplace_back("Q5'", cs.Qprime[4]);
    for (auto& [name, v] : targets)
      cs.checks.push_back(edge_covered(Q5, v, E, dome2, dome, named_edge("Q5,", name) + " covered by F12,F11"));
  }
  {
    std::vector<std::pair<std::string, Vec>> targets = S;
    targets.emplace_back("Q6'", cs.Qprime[5]);
    for (auto& [name, v] : targets)
      cs.checks.push_back(edge_covered(Q6, v, E, wall2, dome, named_edge("Q6,", name) + " covered by F14,F11"));
  }
  cs.checks.push_back(edge_covered(Q5, Q6, E, dome2, wall2, "edge Q5,Q6 covered by F12,F14"));
  {
    std::vector<std::pair<std::string, Vec>> targets = S;
    targets.emplace_back("Q5'", cs.Qprime[4]);
    targets.emplace_back("Q6'", cs.Qprime[5]);
    for (auto& [name, v] : targets)
      cs.checks.push_back(
          face2_covered(Q5, Q6, v, E, dome2, wall2, dome, "2-face Q5,Q6," + name + " covered by F12,F14,F11"));
  }

  Vec P2 = parse_vec("1,1,1,1,2,2,-1,-3,1,3");
  cs.special_points.emplace_back("P2", P2);
  ck.expect_zero("P2 isotropic", dot(P2, P2));
  ck.expect("P2 (.) D", dot(P2, D), -1);
  Vec fvec = parse_vec("1,1,1,1,1,1,-1,-2,1,1");
  cs.special_points.emplace_back("f", fvec);
  ck.expect_true("f has unit self-product", dot(fvec, fvec) == 1, dot(fvec, fvec).get_str());
  ck.expect("f (.) D", dot(fvec, D), -1);

  for (const auto& [Pname, Pvec] : {std::pair<const char*, Vec>{"phi(P1,E)", E}, {"phi(P1,P2)", P2}}) {
    try {
      Isometry phi = phi_matrix(P1, Pvec, Pname);
      ck.expect_true(std::string(Pname) + " integral involution preserving the form",
                     phi.preserves_form() && phi.is_involution() && phi.preserves_future(), "ok");
    } catch (const NonIntegral& e) {
      ck.expect_true(std::string(Pname) + " integral involution preserving the form", false, e.what());
    }
  }
  return cs;
}

bool DomainCase::passed() const {
  for (const CheckResult& c : checks)
    if (c.verdict == CheckResult::Verdict::Fail) return false;
  return true;
}

std::string DomainCase::to_json() const {
  nlohmann::json j;
  j["rho"] = rho;
  j["perspective"] = to_string(E);
  j["faces"] = nlohmann::json::array();
  for (const Face& f : faces)
    j["faces"].push_back({{"label", f.label},
                          {"role", f.role},
                          {"vector", to_string(f.vector)},
                          {"self_product", dot(f.vector, f.vector).get_str()}});
  j["vertices"]["Q"] = nlohmann::json::array();
  j["vertices"]["Qprime"] = nlohmann::json::array();
  for (const Vec& v : Q) j["vertices"]["Q"].push_back(to_string(v));
  for (const Vec& v : Qprime) j["vertices"]["Qprime"].push_back(to_string(v));
  j["special_points"] = nlohmann::json::object();
  for (auto& [k, v] : special_points) j["special_points"][k] = to_string(v);
  j["checks"] = nlohmann::json::array();
  for (const CheckResult& c : checks)
    j["checks"].push_back({{"name", c.name}, {"value", c.value}, {"verdict", CheckResult::verdict_name(c.verdict)}});
  j["passed"] = passed();
  return j.dump(2);
}

std::string DomainCase::to_text() const {
  std::string out = "fundamental domain, rho = " + std::to_string(rho) + "\n";
  out += "perspective E = " + to_string(E) + "\n\nfaces:\n";
  for (const Face& f : faces)
    out += "  " + f.label + " [" + f.role + "] " + to_string(f.vector) +
           "  (self-product " + dot(f.vector, f.vector).get_str() + ")\n";
  out += "\nvertices:\n";
  for (size_t i = 0; i < Q.size(); ++i)
    out += "  Q" + std::to_string(i + 1) + "  = " + to_string(Q[i]) + "\n  Q" + std::to_string(i + 1) +
           "' = " + to_string(Qprime[i]) + "\n";
  if (!special_points.empty()) {
    out += "\nspecial points:\n";
    for (auto& [k, v] : special_points) out += "  " + k + " = " + to_string(v) + "\n";
  }
  out += "\nchecks:\n";
  for (const CheckResult& c : checks) {
    out += "  [" + std::string(CheckResult::verdict_name(c.verdict)) + "] " + c.name + " = " + c.value + "\n";
  }
  out += passed() ? "\nall checks passed\n" : "\nFAILURES PRESENT\n";
  return out;
}

}  // namespace apollo
