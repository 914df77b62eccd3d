#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "apollo/solve.hpp"

using namespace apollo;

TEST_CASE("QuadExt sign and arithmetic") {
  // 3 - 2*sqrt(2) > 0, 2 - 2*sqrt(2) < 0, 2 - sqrt(4) = 0
  CHECK(QuadExt(Rat(3), Rat(-2), Int(2)).sgn() == 1);
  CHECK(QuadExt(Rat(2), Rat(-2), Int(2)).sgn() == -1);
  CHECK(QuadExt(Rat(2), Rat(-1), Int(4)).sgn() == 0);
  QuadExt x(Rat(1), Rat(1), Int(5));
  QuadExt inv = x.inverse();
  QuadExt prod = x * inv;
  CHECK(prod.is_rational());
  CHECK(prod.rational_value() == 1);
}

TEST_CASE("lattice kernel basics") {
  // { x : x1 = x2 = x3 = 0 } in rho = 5 via the wall functionals.
  int rho = 5;
  std::vector<Vec> walls = {unit(rho, 0), unit(rho, 1), unit(rho, 2)};
  // e_i functionals are not coordinate functionals; use transposition walls instead.
  walls = {sub(unit(rho, 0), unit(rho, 1)), sub(unit(rho, 1), unit(rho, 2))};
  std::vector<Vec> k = lattice_kernel(walls, {}, rho);
  CHECK(k.size() == 3);
  for (const Vec& b : k)
    for (const Vec& w : walls) CHECK(dot(w, b) == 0);
}

TEST_CASE("isotropic_on_plane reproduces printed vertices") {
  // rho = 9, omit the fourth wall equation.
  int rho = 9;
  Vec E = add(unit(rho, 7), unit(rho, 8));
  std::vector<Vec> walls;
  for (int i = 0; i + 1 <= rho - 3; ++i)
    if (i != 3) walls.push_back(sub(unit(rho, i), unit(rho, i + 1)));
  walls.push_back(add(sub(unit(rho, 0), unit(rho, rho - 3)), E));        // u
  walls.push_back(sub(unit(rho, rho - 2), unit(rho, rho - 1)));          // v_{8,9}
  Vec Q4 = isotropic_on_plane({}, walls, E);
  CHECK(Q4 == parse_vec("16,16,16,16,-12,-12,-12,19,19"));
  CHECK(dot(Q4, Q4) == 0);
  CHECK(sign(dot(Q4, all_ones(rho))) < 0);

  // rho = 5, omit the first equation, prime-side face e_5.
  rho = 5;
  Vec E5 = add(unit(rho, 3), unit(rho, 4));
  std::vector<Vec> walls5 = {sub(unit(rho, 1), unit(rho, 2)),                 // (2)
                             add(sub(unit(rho, 0), unit(rho, 2)), E5),        // (3) = u
                             unit(rho, 4)};                                   // e_5
  Vec Q1p = isotropic_on_plane({}, walls5, E5);
  CHECK(Q1p == parse_vec("1,0,0,0,1"));
}

TEST_CASE("isotropic_on_plane error paths") {
  int rho = 5;
  Vec E = add(unit(rho, 3), unit(rho, 4));
  // Too few walls: solution space dimension 3.
  std::vector<Vec> walls = {sub(unit(rho, 0), unit(rho, 1))};
  CHECK_THROWS_AS(isotropic_on_plane({}, walls, E), Error);
  // known not isotropic
  CHECK_THROWS_AS(isotropic_on_plane({}, walls, unit(rho, 0)), Error);
}

TEST_CASE("pencil rays: rational, tangent, and irrational cases") {
  int rho = 9;
  Vec E = add(unit(rho, 7), unit(rho, 8));
  Vec Q4 = parse_vec("16,16,16,16,-12,-12,-12,19,19");
  Vec Q5 = parse_vec("12,12,12,12,12,-16,-16,15,15");
  Vec Q1 = parse_vec("4,0,0,0,0,0,0,1,1");
  Vec dome = sub(unit(rho, 0), unit(rho, 7));  // v_{1,8}

  // Q4Q5 touches the dome at one rational ray (the midpoint).
  std::vector<Vec> pencil = lattice_kernel({dome}, {Q4, Q5, E}, rho);
  REQUIRE(pencil.size() == 2);
  auto rays = isotropic_rays_in_pencil(pencil[0], pencil[1]);
  REQUIRE(rays.size() == 1);
  CHECK(rays[0].is_rational());
  CHECK(rays[0].lattice() == parse_vec("1,1,1,1,0,-1,-1,1,1"));

  // Q4Q1 crosses the dome at two conjugate irrational rays.
  pencil = lattice_kernel({dome}, {Q4, Q1, E}, rho);
  REQUIRE(pencil.size() == 2);
  rays = isotropic_rays_in_pencil(pencil[0], pencil[1]);
  REQUIRE(rays.size() == 2);
  for (const QuadVec& r : rays) {
    CHECK_FALSE(r.is_rational());
    CHECK(r.dot_self().sgn() == 0);
    CHECK(r.dot_with(dome).sgn() == 0);
    CHECK(r.dot_with(all_ones(rho)).sgn() < 0);
  }
}
