#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "apollo/domain.hpp"
#include "apollo/isometry.hpp"

using namespace apollo;

namespace {

std::map<std::string, CheckResult> by_name(const DomainCase& cs) {
  std::map<std::string, CheckResult> m;
  for (const CheckResult& c : cs.checks) m[c.name] = c;
  return m;
}

}  // namespace

TEST_CASE("face systems") {
  for (int rho = 4; rho <= 8; ++rho) CHECK(build_faces(rho).size() == (size_t)rho + 1);
  CHECK(build_faces(9).size() == 12);
  CHECK(build_faces(10).size() == 14);
  CHECK_THROWS_AS(build_faces(3), Error);
  CHECK_THROWS_AS(build_faces(11), Error);

  // u reproduces the printed vectors for small rho.
  auto f5 = build_faces(5);
  CHECK(f5[2].vector == parse_vec("1,0,-1,1,1"));
  auto f4 = build_faces(4);
  CHECK(f4[1].vector == parse_vec("1,-1,1,1"));  // s2

  // Self-products: 4 on generic faces, 1 on the base face.
  for (int rho = 4; rho <= 10; ++rho) {
    auto faces = build_faces(rho);
    for (int i = 0; i < rho + 1; ++i) {
      Int sp = dot(faces[i].vector, faces[i].vector);
      if (faces[i].role == "base")
        CHECK(sp == 1);
      else
        CHECK(sp == 4);
    }
    // Reflection faces give integral reflections.
    for (const Face& f : faces)
      if (f.kind == Face::Kind::Reflection) CHECK(reflection_matrix(f.vector).preserves_form());
  }
}

TEST_CASE("viete mirrors are non-integral from rho = 6 on") {
  // Mirror orthogonal to every basis sphere but the third.
  for (int rho : {6, 7}) {
    Vec s(rho, 1);
    s[2] = -(rho - 3);
    for (int k = 0; k < rho; ++k)
      if (k != 2) CHECK(dot(s, unit(rho, k)) == 0);
    CHECK_THROWS_AS(reflection_matrix(s), NonIntegral);
  }
  // Integral for rho = 4 and 5.
  CHECK(reflection_matrix(parse_vec("1,-1,1,1")).preserves_form());
  CHECK(reflection_matrix(parse_vec("1,1,-2,1,1")).is_involution());
}

TEST_CASE("printed vertex tables") {
  // rho = 5
  std::vector<Vec> Q, Qp;
  solve_vertices(5, build_faces(5), Q, Qp);
  CHECK(Q[0] == parse_vec("4,0,0,1,1"));
  CHECK(Q[1] == parse_vec("8,8,-4,3,3"));
  CHECK(Q[2] == parse_vec("4,4,4,-1,-1"));
  CHECK(Qp[0] == parse_vec("1,0,0,0,1"));
  CHECK(Qp[1] == parse_vec("2,2,-1,0,3"));
  CHECK(Qp[2] == parse_vec("1,1,1,-1,2"));

  // rho = 9
  solve_vertices(9, build_faces(9), Q, Qp);
  const char* q9[] = {"4,0,0,0,0,0,0,1,1",
                      "24,24,-4,-4,-4,-4,-4,15,15",
                      "20,20,20,-8,-8,-8,-8,19,19",
                      "16,16,16,16,-12,-12,-12,19,19",
                      "12,12,12,12,12,-16,-16,15,15",
                      "8,8,8,8,8,8,-20,7,7",
                      "4,4,4,4,4,4,4,-5,-5"};
  const char* q9p[] = {"1,0,0,0,0,0,0,0,1",
                       "6,6,-1,-1,-1,-1,-1,2,9",
                       "5,5,5,-2,-2,-2,-2,3,10",
                       "4,4,4,4,-3,-3,-3,3,10",
                       "3,3,3,3,3,-4,-4,2,9",
                       "2,2,2,2,2,2,-5,0,7",
                       "1,1,1,1,1,1,1,-3,4"};
  REQUIRE(Q.size() == 7);
  for (int i = 0; i < 7; ++i) {
    CHECK(Q[i] == parse_vec(q9[i]));
    CHECK(Qp[i] == parse_vec(q9p[i]));
  }
}

TEST_CASE("run_case passes for every rho") {
  for (int rho = 4; rho <= 10; ++rho) {
    DomainCase cs = run_case(rho);
    INFO("rho = ", rho);
    for (const CheckResult& c : cs.checks) {
      INFO(c.name, " = ", c.value);
      CHECK(c.verdict != CheckResult::Verdict::Fail);
    }
    CHECK(cs.passed());
  }
}

TEST_CASE("checklist is deterministic") {
  DomainCase a = run_case(9), b = run_case(9);
  REQUIRE(a.checks.size() == b.checks.size());
  for (size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].value == b.checks[i].value);
    CHECK(a.checks[i].verdict == b.checks[i].verdict);
  }
  CHECK(a.to_json() == b.to_json());
}

TEST_CASE("rho = 8 records the second cusp") {
  DomainCase cs = run_case(8);
  auto m = by_name(cs);
  REQUIRE(m.count("second cusp: exactly Q4 on the dome"));
  CHECK(m["second cusp: exactly Q4 on the dome"].verdict == CheckResult::Verdict::Pass);
  // Q4 = (1,1,1,1,-1,-1,1,1) sits on the dome.
  CHECK(cs.Q[3] == parse_vec("1,1,1,1,-1,-1,1,1"));
  CHECK(dot(cs.faces[8].vector, cs.Q[3]) == 0);
}

TEST_CASE("rho = 7 has a single cusp") {
  DomainCase cs = run_case(7);
  auto m = by_name(cs);
  REQUIRE(m.count("single cusp at E (no vertex on the dome)"));
  CHECK(m["single cusp at E (no vertex on the dome)"].verdict == CheckResult::Verdict::Pass);
}

TEST_CASE("rho = 9 discrepancies are reported, not hidden") {
  DomainCase cs = run_case(9);
  int discrepancies = 0;
  bool has_q4_entry = false, has_p1_entry = false;
  for (const CheckResult& c : cs.checks) {
    if (c.verdict == CheckResult::Verdict::PaperDiscrepancy) {
      ++discrepancies;
      if (c.name.find("n1 (.) Q4") != std::string::npos) {
        has_q4_entry = true;
        CHECK(c.value == "168");
      }
      if (c.name.find("8 entries") != std::string::npos) {
        has_p1_entry = true;
        CHECK(c.value == "1,1,1,1,0,-1,-1,1,1");
      }
    }
  }
  CHECK(discrepancies == 2);
  CHECK(has_q4_entry);
  CHECK(has_p1_entry);
  // And the accompanying exact passes.
  auto m = by_name(cs);
  CHECK(m["n1 (.) P1"].value == "0");
  CHECK(m["n1 (.) P1"].verdict == CheckResult::Verdict::Pass);
  CHECK(cs.passed());  // discrepancies do not fail the run
}

TEST_CASE("edge_dome_point: tangency, symmetry, wall case") {
  DomainCase cs = run_case(9);
  const Face& dome = cs.faces[9];
  Vec E = cs.E;
  QuadVec p45 = edge_dome_point(cs.Q[3], cs.Q[4], dome, E, cs.Q[3]);
  QuadVec p54 = edge_dome_point(cs.Q[4], cs.Q[3], dome, E, cs.Q[3]);
  REQUIRE(p45.is_rational());
  CHECK(p45.lattice() == parse_vec("1,1,1,1,0,-1,-1,1,1"));
  CHECK(p54.lattice() == p45.lattice());

  // Irrational crossing satisfies its defining equations exactly.
  QuadVec p41 = edge_dome_point(cs.Q[3], cs.Q[0], dome, E, cs.Q[3]);
  CHECK_FALSE(p41.is_rational());
  CHECK(p41.dot_self().sgn() == 0);
  CHECK(p41.dot_with(dome.vector).sgn() == 0);
  // Swapping the endpoints returns the same ray: identical signs against
  // the wall functionals (signs are scale-invariant).
  QuadVec p41b = edge_dome_point(cs.Q[0], cs.Q[3], dome, E, cs.Q[3]);
  CHECK(p41b.dot_self().sgn() == 0);
  CHECK(p41.dot_with(cs.faces[10].vector).sgn() == p41b.dot_with(cs.faces[10].vector).sgn());
  CHECK(p41.dot_with(cs.faces[11].vector).sgn() == p41b.dot_with(cs.faces[11].vector).sgn());
  CHECK(p41.dot_with(unit(9, 8)).sgn() == p41b.dot_with(unit(9, 8)).sgn());

  // rho = 10 wall case: the pencil contains E, the answer is the other ray.
  DomainCase cs10 = run_case(10);
  const Face& wall = cs10.faces[12];
  QuadVec p62 = edge_dome_point(cs10.Q[5], cs10.Q[1], wall, cs10.E, cs10.Q[5]);
  REQUIRE(p62.is_rational());
  Vec v = p62.lattice();
  CHECK(dot(v, v) == 0);
  CHECK(dot(v, wall.vector) == 0);
  CHECK(v != canonical_ray(cs10.E));
}

TEST_CASE("edge and 2-face coverage checks") {
  DomainCase cs = run_case(10);
  const Face& f11 = cs.faces[10];
  const Face& f12 = cs.faces[11];
  const Face& f14 = cs.faces[13];
  Vec E = cs.E;
  CheckResult c = edge_covered(cs.Q[4], cs.Qprime[4], E, f12, f11, "edge Q5,Q5'");
  CHECK(c.verdict == CheckResult::Verdict::Pass);
  c = edge_covered(cs.Q[4], cs.Q[5], E, f12, f14, "edge Q5,Q6");
  CHECK(c.verdict == CheckResult::Verdict::Pass);
  c = face2_covered(cs.Q[4], cs.Q[5], cs.Q[0], E, f12, f14, f11, "2-face Q5,Q6,Q1");
  CHECK(c.verdict == CheckResult::Verdict::Pass);
  // Degenerate input: repeated vertex collapses the kernel.
  CHECK_THROWS_AS(face2_covered(cs.Q[4], cs.Q[4], cs.Q[0], E, f12, f14, f11, "degenerate"), Error);
}

TEST_CASE("vertex_side matches the printed fact for F10 at rho = 9") {
  DomainCase cs = run_case(9);
  const Face& dome = cs.faces[9];
  CHECK(vertex_side(dome, cs.Q[3]) < 0);
  CHECK(vertex_side(dome, cs.Q[0]) > 0);
  Vec P1;
  for (auto& [k, v] : cs.special_points)
    if (k == "P1") P1 = v;
  CHECK(vertex_side(dome, P1) == 0);
}
